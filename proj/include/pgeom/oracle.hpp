#pragma once

#include <array>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pgeom/hcoords.hpp"

namespace pgeom::oracle {

/// Arbitrary-precision integer fraction, always in lowest terms with a
/// positive denominator (invariants maintained by the backing type and
/// asserted in tests). Constructing one from a double is exact.
using Rational = boost::multiprecision::cpp_rational;
using RVec = std::vector<Rational>;

/// Cramer's-rule solvers (the division-based Euclidean reference path).
/// Throw singular_matrix_error when det(A) is exactly zero.
std::array<double, 2> cramer2(const std::array<std::array<double, 2>, 2>& A,
                              const std::array<double, 2>& b);
std::array<double, 3> cramer3(const std::array<std::array<double, 3>, 3>& A,
                              const std::array<double, 3>& b);

/// Partial-pivoting Gaussian elimination, 4x4 (linear-solve reference for
/// the tetrahedral barycentric system).
std::array<double, 4> gauss_solve4(std::array<std::array<double, 4>, 4> A,
                                   std::array<double, 4> b);

/// Classic Euclidean two-plane intersection: point X0 and direction s.
struct EuclidLine {
    std::array<double, 3> X0{};
    std::array<double, 3> s{};
};

/// Textbook division-based closed form for the intersection line of two
/// planes, self-validated per call: if the resulting point's residual on
/// either plane exceeds tolerance, the point is recomputed by cramer3 on
/// {r1, r2, [s;0]} and the fallback counter bumps.
/// Throws parallel_planes_error when the 3x3 determinant is exactly zero.
EuclidLine euclid_two_planes(const HPlane& r1, const HPlane& r2);

/// "direct-form" while no call has ever needed the Cramer fallback,
/// "cramer3-fallback" otherwise. Tests pin the direct form as validated.
const char* validated_euclid_two_planes_variant();
std::size_t euclid_two_planes_fallback_count();

/// Exact determinant of a square rational matrix (Laplace recursion along
/// the first column — deliberately a different expansion structure from the
/// floating kernel, so agreement tests check the formulas, not the code).
Rational exact_det(const std::vector<RVec>& M);

/// Exact (n-1)-operand cross product in n dimensions: component i is the
/// signed minor obtained by deleting column i, signs +,-,... alternating.
RVec exact_cross(const std::vector<RVec>& rows);

/// Exact Gaussian elimination over rationals.
/// Throws singular_matrix_error on a singular system.
RVec exact_solve(std::vector<RVec> A, RVec b);

/// Exact-rational mirror of a kernel operation. op_name is one of:
/// cross3, cross4, cross5, meet_lines, join_points, plane_from_points,
/// meet_three_planes, meet_two_planes (returns x0 tuple followed by s),
/// bary_triangle, bary_tetrahedron, lerp_rational (t passed as a 1-tuple).
/// Throws the kernel's structured errors on degenerate inputs and
/// std::invalid_argument for unknown names or arity mismatches.
RVec exact_mirror(std::string_view op_name, const std::vector<RVec>& args);

/// |computed - exact| / max(|exact|, floor), evaluated in exact arithmetic
/// and converted to double at the end (metric helper for tests/bench).
double rel_error_vs_exact(double computed, const Rational& exact, const Rational& floor_mag);

} // namespace pgeom::oracle
