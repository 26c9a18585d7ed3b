#include "pgeom/xprod.hpp"

#include <stdexcept>

namespace pgeom {

namespace {

// The six 2x2 column sub-determinants of rows (a, b): d_ij = a_i b_j - a_j b_i.
// Single normative site for this ordering; cross4 forms and Pluecker
// extraction all go through it.
struct Del2 {
    double d12, d13, d14, d23, d24, d34;
};

inline Del2 del2(const Vec4& a, const Vec4& b) {
    return {a[0] * b[1] - a[1] * b[0], a[0] * b[2] - a[2] * b[0], a[0] * b[3] - a[3] * b[0],
            a[1] * b[2] - a[2] * b[1], a[1] * b[3] - a[3] * b[1], a[2] * b[3] - a[3] * b[2]};
}

template <std::size_t N>
void check_batch(std::size_t arity, const std::span<const double>* ins,
                 const std::array<std::span<double>, N>& outs) {
    const std::size_t len = ins[0].size();
    for (std::size_t i = 0; i < arity * N; ++i)
        if (ins[i].size() != len) throw std::invalid_argument("batch spans must share one length");
    for (const auto& o : outs)
        if (o.size() != len) throw std::invalid_argument("batch spans must share one length");
}

} // namespace

Vec3 cross3(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

Vec3 cross3_matrix(const Vec3& a, const Vec3& b) {
    // rows of the skew matrix [[0,-a3,a2],[a3,0,-a1],[-a2,a1,0]] times b
    return {-a[2] * b[1] + a[1] * b[2],
            a[2] * b[0] - a[0] * b[2],
            -a[1] * b[0] + a[0] * b[1]};
}

Vec4 cross4(const Vec4& a, const Vec4& b, const Vec4& c) {
    const Del2 d = del2(a, b);
    // minors of the symbolic-first-row expansion, each expanded along its
    // c-row; cofactor signs +,-,+,-
    const double m234 = c[1] * d.d34 - c[2] * d.d24 + c[3] * d.d23;
    const double m134 = c[0] * d.d34 - c[2] * d.d14 + c[3] * d.d13;
    const double m124 = c[0] * d.d24 - c[1] * d.d14 + c[3] * d.d12;
    const double m123 = c[0] * d.d23 - c[1] * d.d13 + c[2] * d.d12;
    return {m234, -m134, m124, -m123};
}

Vec4 cross4_matrix(const Vec4& a, const Vec4& b, const Vec4& c) {
    const Del2 d = del2(a, b);
    // antisymmetric sub-determinant matrix applied to c...
    const double r1 = -d.d34 * c[1] + d.d24 * c[2] - d.d23 * c[3];
    const double r2 = d.d34 * c[0] - d.d14 * c[2] + d.d13 * c[3];
    const double r3 = -d.d24 * c[0] + d.d14 * c[1] - d.d12 * c[3];
    const double r4 = d.d23 * c[0] - d.d13 * c[1] + d.d12 * c[2];
    // ...then the global (-1)^(n+1) = -1 for n = 4
    return {-r1, -r2, -r3, -r4};
}

SubDet3Set subdets3(const Vec5& a, const Vec5& b, const Vec5& c) {
    const auto m = [&](int i, int j, int k) {
        return a[i] * (b[j] * c[k] - b[k] * c[j]) - a[j] * (b[i] * c[k] - b[k] * c[i]) +
               a[k] * (b[i] * c[j] - b[j] * c[i]);
    };
    SubDet3Set s;
    s.d123 = m(0, 1, 2);
    s.d124 = m(0, 1, 3);
    s.d125 = m(0, 1, 4);
    s.d134 = m(0, 2, 3);
    s.d135 = m(0, 2, 4);
    s.d145 = m(0, 3, 4);
    s.d234 = m(1, 2, 3);
    s.d235 = m(1, 2, 4);
    s.d245 = m(1, 3, 4);
    s.d345 = m(2, 3, 4);
    return s;
}

Vec5 cross5(const Vec5& a, const Vec5& b, const Vec5& c, const Vec5& d) {
    const SubDet3Set s = subdets3(a, b, c);
    // 4x4 minors expanded along their d-row; cofactor signs +,-,+,-,+
    const double m2345 = -d[1] * s.d345 + d[2] * s.d245 - d[3] * s.d235 + d[4] * s.d234;
    const double m1345 = -d[0] * s.d345 + d[2] * s.d145 - d[3] * s.d135 + d[4] * s.d134;
    const double m1245 = -d[0] * s.d245 + d[1] * s.d145 - d[3] * s.d125 + d[4] * s.d124;
    const double m1235 = -d[0] * s.d235 + d[1] * s.d135 - d[2] * s.d125 + d[4] * s.d123;
    const double m1234 = -d[0] * s.d234 + d[1] * s.d134 - d[2] * s.d124 + d[3] * s.d123;
    return {m2345, -m1345, m1245, -m1235, m1234};
}

Vec5 cross5_matrix(const Vec5& a, const Vec5& b, const Vec5& c, const Vec5& d) {
    const SubDet3Set s = subdets3(a, b, c);
    // global (-1)^(n+1) = +1 for n = 5
    const double r1 = -s.d345 * d[1] + s.d245 * d[2] - s.d235 * d[3] + s.d234 * d[4];
    const double r2 = s.d345 * d[0] - s.d145 * d[2] + s.d135 * d[3] - s.d134 * d[4];
    const double r3 = -s.d245 * d[0] + s.d145 * d[1] - s.d125 * d[3] + s.d124 * d[4];
    const double r4 = s.d235 * d[0] - s.d135 * d[1] + s.d125 * d[2] - s.d123 * d[4];
    const double r5 = -s.d234 * d[0] + s.d134 * d[1] - s.d124 * d[2] + s.d123 * d[3];
    return {r1, r2, r3, r4, r5};
}

PluckerLine plucker_from_points(const HPoint3& x1, const HPoint3& x2) {
    const Del2 d = del2(x1.tuple(), x2.tuple());
    if (d.d12 == 0 && d.d13 == 0 && d.d14 == 0 && d.d23 == 0 && d.d24 == 0 && d.d34 == 0)
        throw degenerate_line_error();
    return {d.d12, d.d13, d.d14, d.d23, d.d24, d.d34};
}

double grassmann_plucker(const PluckerLine& L) {
    return L.d12 * L.d34 - L.d13 * L.d24 + L.d14 * L.d23;
}

void cross3_batch(const SoaView3& a, const SoaView3& b, const SoaOut3& out) {
    const std::span<const double> ins[] = {a[0], a[1], a[2], b[0], b[1], b[2]};
    check_batch<3>(2, ins, out);
    for (std::size_t i = 0; i < a[0].size(); ++i) {
        const Vec3 r = cross3({a[0][i], a[1][i], a[2][i]}, {b[0][i], b[1][i], b[2][i]});
        out[0][i] = r[0];
        out[1][i] = r[1];
        out[2][i] = r[2];
    }
}

void cross4_batch(const SoaView4& a, const SoaView4& b, const SoaView4& c, const SoaOut4& out) {
    const std::span<const double> ins[] = {a[0], a[1], a[2], a[3], b[0], b[1],
                                           b[2], b[3], c[0], c[1], c[2], c[3]};
    check_batch<4>(3, ins, out);
    for (std::size_t i = 0; i < a[0].size(); ++i) {
        const Vec4 r = cross4({a[0][i], a[1][i], a[2][i], a[3][i]},
                              {b[0][i], b[1][i], b[2][i], b[3][i]},
                              {c[0][i], c[1][i], c[2][i], c[3][i]});
        for (int k = 0; k < 4; ++k) out[k][i] = r[k];
    }
}

void cross5_batch(const SoaView5& a, const SoaView5& b, const SoaView5& c, const SoaView5& d,
                  const SoaOut5& out) {
    const std::span<const double> ins[] = {a[0], a[1], a[2], a[3], a[4], b[0], b[1],
                                           b[2], b[3], b[4], c[0], c[1], c[2], c[3],
                                           c[4], d[0], d[1], d[2], d[3], d[4]};
    check_batch<5>(4, ins, out);
    for (std::size_t i = 0; i < a[0].size(); ++i) {
        const Vec5 r = cross5({a[0][i], a[1][i], a[2][i], a[3][i], a[4][i]},
                              {b[0][i], b[1][i], b[2][i], b[3][i], b[4][i]},
                              {c[0][i], c[1][i], c[2][i], c[3][i], c[4][i]},
                              {d[0][i], d[1][i], d[2][i], d[3][i], d[4][i]});
        for (int k = 0; k < 5; ++k) out[k][i] = r[k];
    }
}

} // namespace pgeom
