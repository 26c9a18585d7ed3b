#pragma once

#include "pgeom/hcoords.hpp"
#include "pgeom/xprod.hpp"

namespace pgeom {

/// Line of 3-space as point + direction: X(t) = Euclidean(origin_point) + s*t.
/// origin_point is homogeneous (kept division-free); its Euclidean image is
/// the line point closest to the coordinate origin.
struct ParametricLine3 {
    HPoint3 origin_point;
    Vec3 direction{};
};

/// Intersection point of two lines; w = 0 <=> distinct parallel lines.
/// Throws degenerate_input_error when the output is all-zero (same line).
HPoint2 meet_lines(const HLine2& p1, const HLine2& p2);

/// Line through two points — the dual of meet_lines, same cross3 kernel.
/// Throws degenerate_input_error when the output is all-zero (same point).
HLine2 join_points(const HPoint2& x1, const HPoint2& x2);

/// Plane through three points. Throws degenerate_input_error when all-zero
/// (projectively collinear points).
HPlane plane_from_points(const HPoint3& x1, const HPoint3& x2, const HPoint3& x3);

/// Common point of three planes; w = 0 <=> only an ideal point is shared.
/// Throws degenerate_input_error when all-zero (dependent planes).
HPoint3 meet_three_planes(const HPlane& r1, const HPlane& r2, const HPlane& r3);

/// Intersection line of two planes: direction s = n1 x n2 and point
/// x0 = r1 x r2 x [s;0] (the auxiliary plane through the origin normal to s,
/// which makes Euclidean(x0) the line point nearest the origin).
/// Throws parallel_planes_error when s is all-zero.
ParametricLine3 meet_two_planes(const HPlane& r1, const HPlane& r2);

/// Join-side dual of meet_two_planes; delegates to plucker_from_points.
PluckerLine line_from_points_3d(const HPoint3& x1, const HPoint3& x2);

} // namespace pgeom
