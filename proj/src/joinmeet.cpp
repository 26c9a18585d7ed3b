#include "pgeom/joinmeet.hpp"

namespace pgeom {

namespace {

// Duality: meet of two lines and join of two points are the same cross3 on
// the raw tuples. Both public entry points share this kernel.
inline Vec3 dual_cross(const std::array<double, 3>& u, const std::array<double, 3>& v) {
    return cross3(u, v);
}

inline bool all_zero3(const Vec3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }
inline bool all_zero4(const Vec4& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0 && v[3] == 0; }

} // namespace

HPoint2 meet_lines(const HLine2& p1, const HLine2& p2) {
    const Vec3 x = dual_cross(p1.tuple(), p2.tuple());
    if (all_zero3(x)) throw degenerate_input_error("meet_lines: lines are projectively equal");
    return {x[0], x[1], x[2]};
}

HLine2 join_points(const HPoint2& x1, const HPoint2& x2) {
    const Vec3 p = dual_cross(x1.tuple(), x2.tuple());
    if (all_zero3(p)) throw degenerate_input_error("join_points: points are projectively equal");
    return {p[0], p[1], p[2]};
}

HPlane plane_from_points(const HPoint3& x1, const HPoint3& x2, const HPoint3& x3) {
    const Vec4 r = cross4(x1.tuple(), x2.tuple(), x3.tuple());
    if (all_zero4(r)) throw degenerate_input_error("plane_from_points: points are collinear");
    return {r[0], r[1], r[2], r[3]};
}

HPoint3 meet_three_planes(const HPlane& r1, const HPlane& r2, const HPlane& r3) {
    const Vec4 x = cross4(r1.tuple(), r2.tuple(), r3.tuple());
    if (all_zero4(x)) throw degenerate_input_error("meet_three_planes: planes are dependent");
    return {x[0], x[1], x[2], x[3]};
}

ParametricLine3 meet_two_planes(const HPlane& r1, const HPlane& r2) {
    const Vec3 s = cross3(r1.normal(), r2.normal());
    if (all_zero3(s)) throw parallel_planes_error();
    const Vec4 rho0 = {s[0], s[1], s[2], 0.0};
    const Vec4 x0 = cross4(r1.tuple(), r2.tuple(), rho0);
    if (all_zero4(x0))
        throw degenerate_input_error("meet_two_planes: planes and auxiliary plane dependent");
    return {HPoint3{x0[0], x0[1], x0[2], x0[3]}, s};
}

PluckerLine line_from_points_3d(const HPoint3& x1, const HPoint3& x2) {
    return plucker_from_points(x1, x2);
}

} // namespace pgeom
