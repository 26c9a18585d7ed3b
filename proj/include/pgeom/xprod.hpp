#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "pgeom/errors.hpp"
#include "pgeom/hcoords.hpp"

namespace pgeom {

using Vec3 = std::array<double, 3>;
using Vec4 = std::array<double, 4>;
using Vec5 = std::array<double, 5>;

/// The six 2x2 column sub-determinants d_ij (i<j) of the 2x4 matrix with
/// rows x1, x2: Pluecker coordinates of the line through the two points.
/// All-zero <=> the generating points are projectively equal.
/// Constraint: d12*d34 - d13*d24 + d14*d23 = 0 (Grassmann-Pluecker).
struct PluckerLine {
    double d12 = 0, d13 = 0, d14 = 0, d23 = 0, d24 = 0, d34 = 0;

    constexpr std::array<double, 6> tuple() const noexcept {
        return {d12, d13, d14, d23, d24, d34};
    }
};

/// The ten 3x3 column sub-determinants d_ijk (i<j<k) of the 3x5 matrix with
/// rows a, b, c; building blocks of the 5D product's matrix form.
struct SubDet3Set {
    double d123 = 0, d124 = 0, d125 = 0, d134 = 0, d135 = 0,
           d145 = 0, d234 = 0, d235 = 0, d245 = 0, d345 = 0;
};

template <std::size_t N>
constexpr double dot(const std::array<double, N>& u, const std::array<double, N>& v) {
    double s = 0.0;
    for (std::size_t i = 0; i < N; ++i) s += u[i] * v[i];
    return s;
}

/// Cross products as formal determinants with a symbolic basis first row,
/// expanded along that row (cofactor signs +,-,... alternating); each minor
/// is expanded along its last operand row so that the *_matrix twins below
/// perform the identical IEEE operation sequence (bitwise-equal results).
Vec3 cross3(const Vec3& a, const Vec3& b);
Vec4 cross4(const Vec4& a, const Vec4& b, const Vec4& c);
Vec5 cross5(const Vec5& a, const Vec5& b, const Vec5& c, const Vec5& d);

/// The same products computed via the antisymmetric sub-determinant matrix
/// applied to the last operand, including the global (-1)^(n+1) factor
/// (-1 for n = 4, +1 for n = 5). Bitwise-equal to the cofactor forms for
/// generic inputs under this project's fixed evaluation order.
Vec3 cross3_matrix(const Vec3& a, const Vec3& b);
Vec4 cross4_matrix(const Vec4& a, const Vec4& b, const Vec4& c);
Vec5 cross5_matrix(const Vec5& a, const Vec5& b, const Vec5& c, const Vec5& d);

/// The ten d_ijk of rows (a, b, c), each expanded along the a-row:
/// d_ijk = a_i*(b_j c_k - b_k c_j) - a_j*(b_i c_k - b_k c_i) + a_k*(b_i c_j - b_j c_i).
SubDet3Set subdets3(const Vec5& a, const Vec5& b, const Vec5& c);

/// Line through two homogeneous points as Pluecker coordinates.
/// Throws degenerate_line_error when all six sub-determinants are zero
/// (points projectively equal).
PluckerLine plucker_from_points(const HPoint3& x1, const HPoint3& x2);

/// Left side of the Grassmann-Pluecker relation (0 for a valid line).
double grassmann_plucker(const PluckerLine& L);

/// Structure-of-arrays batch forms. Every output element is computed by the
/// scalar path (element-identical, deterministic regardless of batching).
/// All spans of one call must share the same length.
using SoaView3 = std::array<std::span<const double>, 3>;
using SoaView4 = std::array<std::span<const double>, 4>;
using SoaView5 = std::array<std::span<const double>, 5>;
using SoaOut3 = std::array<std::span<double>, 3>;
using SoaOut4 = std::array<std::span<double>, 4>;
using SoaOut5 = std::array<std::span<double>, 5>;

void cross3_batch(const SoaView3& a, const SoaView3& b, const SoaOut3& out);
void cross4_batch(const SoaView4& a, const SoaView4& b, const SoaView4& c, const SoaOut4& out);
void cross5_batch(const SoaView5& a, const SoaView5& b, const SoaView5& c, const SoaView5& d,
                  const SoaOut5& out);

} // namespace pgeom
