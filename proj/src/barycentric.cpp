#include "pgeom/barycentric.hpp"

namespace pgeom {

namespace {

inline int sgn(double v) { return (v > 0) - (v < 0); }

} // namespace

ProjBary3 bary_triangle(const HPoint2& x1, const HPoint2& x2, const HPoint2& x3,
                        const HPoint2& x0) {
    const Vec4 xrow = {x1.x, x2.x, x3.x, x0.x};
    const Vec4 yrow = {x1.y, x2.y, x3.y, x0.y};
    const Vec4 wrow = {x1.w, x2.w, x3.w, x0.w};
    const Vec4 xi = cross4(xrow, yrow, wrow);
    if (xi[3] == 0.0)
        throw degenerate_triangle_error();
    return {xi[0], xi[1], xi[2], xi[3], x1.w, x2.w, x3.w, x0.w};
}

ProjBary4 bary_tetrahedron(const HPoint3& x1, const HPoint3& x2, const HPoint3& x3,
                           const HPoint3& x4, const HPoint3& x0) {
    const Vec5 xrow = {x1.x, x2.x, x3.x, x4.x, x0.x};
    const Vec5 yrow = {x1.y, x2.y, x3.y, x4.y, x0.y};
    const Vec5 zrow = {x1.z, x2.z, x3.z, x4.z, x0.z};
    const Vec5 wrow = {x1.w, x2.w, x3.w, x4.w, x0.w};
    const Vec5 xi = cross5(xrow, yrow, zrow, wrow);
    if (xi[0] == 0 && xi[1] == 0 && xi[2] == 0 && xi[3] == 0 && xi[4] == 0)
        throw degenerate_tetrahedron_error();
    return {xi[0], xi[1], xi[2], xi[3], xi[4], x1.w, x2.w, x3.w, x4.w, x0.w};
}

std::array<double, 3> bary_to_euclidean(const ProjBary3& xi) {
    if (xi.xiw == 0.0) throw degenerate_query_error();
    return {-xi.xi1 / xi.xiw, -xi.xi2 / xi.xiw, -xi.xi3 / xi.xiw};
}

std::array<double, 4> bary_to_euclidean(const ProjBary4& xi) {
    if (xi.xiw == 0.0) throw degenerate_query_error();
    return {-xi.xi1 / xi.xiw, -xi.xi2 / xi.xiw, -xi.xi3 / xi.xiw, -xi.xi4 / xi.xiw};
}

std::array<double, 3> euclidean_weights(const ProjBary3& xi) {
    const double den = xi.xiw * xi.w0;
    if (den == 0.0) throw degenerate_query_error();
    return {-(xi.xi1 * xi.w1) / den, -(xi.xi2 * xi.w2) / den, -(xi.xi3 * xi.w3) / den};
}

std::array<double, 4> euclidean_weights(const ProjBary4& xi) {
    const double den = xi.xiw * xi.w0;
    if (den == 0.0) throw degenerate_query_error();
    return {-(xi.xi1 * xi.w1) / den, -(xi.xi2 * xi.w2) / den, -(xi.xi3 * xi.w3) / den,
            -(xi.xi4 * xi.w4) / den};
}

bool inside_or_on_boundary(const ProjBary3& xi) {
    if (xi.xiw == 0.0 || xi.w0 == 0.0) throw degenerate_query_error();
    const int sd = sgn(xi.xiw) * sgn(xi.w0);
    return sgn(xi.xi1) * sgn(xi.w1) * sd <= 0 && sgn(xi.xi2) * sgn(xi.w2) * sd <= 0 &&
           sgn(xi.xi3) * sgn(xi.w3) * sd <= 0;
}

bool inside_or_on_boundary(const ProjBary4& xi) {
    if (xi.xiw == 0.0 || xi.w0 == 0.0) throw degenerate_query_error();
    const int sd = sgn(xi.xiw) * sgn(xi.w0);
    return sgn(xi.xi1) * sgn(xi.w1) * sd <= 0 && sgn(xi.xi2) * sgn(xi.w2) * sd <= 0 &&
           sgn(xi.xi3) * sgn(xi.w3) * sd <= 0 && sgn(xi.xi4) * sgn(xi.w4) * sd <= 0;
}

} // namespace pgeom
