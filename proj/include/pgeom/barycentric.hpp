#pragma once

#include <array>

#include "pgeom/hcoords.hpp"
#include "pgeom/xprod.hpp"

namespace pgeom {

/// Projective barycentric tuple xi for a triangle, plus the w components of
/// the generating vertices/query needed for the affine readout when the
/// inputs do not share a common w (they default to 1 for bare tuples).
struct ProjBary3 {
    double xi1 = 0, xi2 = 0, xi3 = 0, xiw = 0;
    double w1 = 1, w2 = 1, w3 = 1, w0 = 1;

    constexpr std::array<double, 4> tuple() const noexcept { return {xi1, xi2, xi3, xiw}; }
};

/// Tetrahedron counterpart.
struct ProjBary4 {
    double xi1 = 0, xi2 = 0, xi3 = 0, xi4 = 0, xiw = 0;
    double w1 = 1, w2 = 1, w3 = 1, w4 = 1, w0 = 1;

    constexpr std::array<double, 5> tuple() const noexcept { return {xi1, xi2, xi3, xi4, xiw}; }
};

/// xi = cross4 of the coordinate rows (x-row, y-row, w-row), each row holding
/// the three vertex components followed by the query component. No division.
/// Throws degenerate_triangle_error when xi is all-zero or xi_w = 0
/// (projectively collinear vertices).
ProjBary3 bary_triangle(const HPoint2& x1, const HPoint2& x2, const HPoint2& x3,
                        const HPoint2& x0);

/// xi = cross5 of the coordinate rows (x, y, z, w).
/// Throws degenerate_tetrahedron_error when xi is all-zero.
ProjBary4 bary_tetrahedron(const HPoint3& x1, const HPoint3& x2, const HPoint3& x3,
                           const HPoint3& x4, const HPoint3& x0);

/// lambda_i = -xi_i / xi_w. These solve the vertex-combination system
/// lambda_1*x1 + lambda_2*x2 + lambda_3*x3 = x0 on homogeneous components;
/// they are the affine barycentric weights (sum 1) exactly when all inputs
/// share one w. Throws degenerate_query_error when xi_w = 0.
std::array<double, 3> bary_to_euclidean(const ProjBary3& xi);
std::array<double, 4> bary_to_euclidean(const ProjBary4& xi);

/// Affine weights of the *Euclidean* points for arbitrary per-vertex w:
/// mu_i = -xi_i*w_i / (xi_w*w_0). Sum is 1 identically and the tuple is
/// invariant under rescaling any vertex/query tuple (division deferred to
/// this single readout). Equals bary_to_euclidean when all w are equal.
/// Throws degenerate_query_error when xi_w*w_0 = 0.
std::array<double, 3> euclidean_weights(const ProjBary3& xi);
std::array<double, 4> euclidean_weights(const ProjBary4& xi);

/// True iff every affine weight is >= 0 (query inside or on the boundary of
/// the simplex). Division-free sign test with an exact-zero boundary; callers
/// wanting tolerant classification apply their own slack to the weights.
bool inside_or_on_boundary(const ProjBary3& xi);
bool inside_or_on_boundary(const ProjBary4& xi);

} // namespace pgeom
