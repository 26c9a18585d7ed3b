#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "pgeom/errors.hpp"

namespace pgeom {

/// Point of the projective plane, [x, y, w]; w = 0 is an ideal point
/// (a direction). Components are expected finite and not all zero.
struct HPoint2 {
    double x = 0, y = 0, w = 0;

    constexpr bool is_ideal() const noexcept { return w == 0.0; }
    constexpr std::array<double, 3> tuple() const noexcept { return {x, y, w}; }
};

/// Line a·x + b·y + c·w = 0. (a,b) = (0,0), c != 0 is the line at infinity.
struct HLine2 {
    double a = 0, b = 0, c = 0;

    constexpr bool is_ideal_line() const noexcept { return a == 0.0 && b == 0.0; }
    constexpr std::array<double, 3> tuple() const noexcept { return {a, b, c}; }
};

/// Point of projective 3-space, [x, y, z, w].
struct HPoint3 {
    double x = 0, y = 0, z = 0, w = 0;

    constexpr bool is_ideal() const noexcept { return w == 0.0; }
    constexpr std::array<double, 4> tuple() const noexcept { return {x, y, z, w}; }
};

/// Plane a·x + b·y + c·z + d·w = 0; (a,b,c) is the normal, d the offset.
struct HPlane {
    double a = 0, b = 0, c = 0, d = 0;

    constexpr std::array<double, 3> normal() const noexcept { return {a, b, c}; }
    constexpr std::array<double, 4> tuple() const noexcept { return {a, b, c, d}; }
};

/// Homogeneous tuple (3..6 components) with a separated base-2 exponent:
/// represented value is tuple() * 2^exp2(), componentwise. Scaling is always
/// an exact power of two, so mantissas are bit-identical to the input (except
/// components more than ~2^1074 below the max, which underflow).
class ScaledValue {
public:
    ScaledValue(std::span<const double> tuple, int exp2);

    std::span<const double> tuple() const noexcept { return {buf_.data(), size_}; }
    int exp2() const noexcept { return exp2_; }

    /// Materializes tuple * 2^exp2 (may overflow back; intended for tests).
    std::array<double, 6> value() const noexcept;
    std::size_t size() const noexcept { return size_; }

private:
    std::array<double, 6> buf_{};
    std::size_t size_ = 0;
    int exp2_ = 0;
};

/// The kernel's only division site: (x/w, y/w).
/// Throws ideal_point_error when w = 0.
std::array<double, 2> to_euclidean(const HPoint2& p);

/// 3D counterpart: (x/w, y/w, z/w). Throws ideal_point_error when w = 0.
std::array<double, 3> to_euclidean(const HPoint3& p);

/// Embeds a Euclidean point with w = 1.
HPoint2 from_euclidean(double X, double Y);
HPoint3 from_euclidean(double X, double Y, double Z);

/// True iff u = xi * v for some xi != 0, within rel_tol componentwise.
/// Both tuples are normalized to unit max magnitude with the first nonzero
/// component made positive; after that the max magnitude is exactly 1, so
/// componentwise absolute difference *is* the error relative to the tuple
/// scale. Exact (tol = 0) for power-of-two-related tuples.
/// Throws degenerate_input_error when either tuple is all-zero,
/// std::invalid_argument on length mismatch.
bool projectively_equal(std::span<const double> u, std::span<const double> v, double rel_tol);

/// Rescales by 2^-e, e = ilogb(max |component|), leaving the max magnitude
/// in [1,2) (subset of the documented [0.5,2) band). Mantissas preserved.
/// Throws degenerate_input_error for the all-zero tuple.
ScaledValue normalize_exponents(std::span<const double> t);

} // namespace pgeom
