#include "pgeom/selftest.hpp"

#include <array>
#include <cmath>
#include <cstring>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

#include "pgeom/barycentric.hpp"
#include "pgeom/batchio.hpp"
#include "pgeom/errors.hpp"
#include "pgeom/hcoords.hpp"
#include "pgeom/interp.hpp"
#include "pgeom/joinmeet.hpp"
#include "pgeom/oracle.hpp"
#include "pgeom/xprod.hpp"

namespace pgeom::selftest {

namespace {

struct Harness {
    std::ostream& log;
    int failures = 0;

    void check(bool ok, const char* name, const std::string& detail = {}) {
        if (ok) {
            log << "ok - " << name << '\n';
        } else {
            ++failures;
            log << "FAIL - " << name;
            if (!detail.empty()) log << ": " << detail;
            log << '\n';
        }
    }
};

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    double unit() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
    double sym() { return 2.0 * unit() - 1.0; }
    double ints(int b) { // integer-valued double in [-b, b]
        return static_cast<double>(static_cast<long long>(eng() % (2ULL * b + 1)) - b);
    }
};

bool bits_equal(double a, double b) {
    return std::memcmp(&a, &b, sizeof a) == 0;
}

template <std::size_t N>
bool same_rational(const std::array<double, N>& got, const pgeom::oracle::RVec& exact) {
    for (std::size_t i = 0; i < N; ++i)
        if (pgeom::oracle::Rational(got[i]) != exact[i]) return false;
    return true;
}

void check_orthogonality(Harness& h) {
    Rng rng(101);
    bool ok3 = true, ok4 = true, ok5 = true;
    for (int n = 0; n < 2000; ++n) {
        const Vec3 a = {rng.ints(64), rng.ints(64), rng.ints(64)};
        const Vec3 b = {rng.ints(64), rng.ints(64), rng.ints(64)};
        const Vec3 c = cross3(a, b);
        ok3 = ok3 && dot(c, a) == 0.0 && dot(c, b) == 0.0;

        Vec4 p{}, q{}, r{};
        for (auto* v : {&p, &q, &r})
            for (auto& x : *v) x = rng.ints(64);
        const Vec4 s = cross4(p, q, r);
        ok4 = ok4 && dot(s, p) == 0.0 && dot(s, q) == 0.0 && dot(s, r) == 0.0;

        Vec5 u{}, v{}, w{}, z{};
        for (auto* t : {&u, &v, &w, &z})
            for (auto& x : *t) x = rng.ints(16);
        const Vec5 m = cross5(u, v, w, z);
        ok5 = ok5 && dot(m, u) == 0.0 && dot(m, v) == 0.0 && dot(m, w) == 0.0 && dot(m, z) == 0.0;
    }
    h.check(ok3, "cross3 orthogonal to both generators (integer inputs)");
    h.check(ok4, "cross4 orthogonal to all three generators (integer inputs)");
    h.check(ok5, "cross5 orthogonal to all four generators (integer inputs)");
}

void check_form_equivalence(Harness& h) {
    Rng rng(202);
    bool ok = true;
    for (int n = 0; n < 5000 && ok; ++n) {
        const Vec3 a = {rng.sym(), rng.sym(), rng.sym()}, b = {rng.sym(), rng.sym(), rng.sym()};
        const Vec3 c1 = cross3(a, b), c2 = cross3_matrix(a, b);
        Vec4 p{}, q{}, r{};
        for (auto* v : {&p, &q, &r})
            for (auto& x : *v) x = rng.sym();
        const Vec4 d1 = cross4(p, q, r), d2 = cross4_matrix(p, q, r);
        Vec5 u{}, v{}, w{}, z{};
        for (auto* t : {&u, &v, &w, &z})
            for (auto& x : *t) x = rng.sym();
        const Vec5 e1 = cross5(u, v, w, z), e2 = cross5_matrix(u, v, w, z);
        for (int i = 0; i < 3; ++i) ok = ok && bits_equal(c1[i], c2[i]);
        for (int i = 0; i < 4; ++i) ok = ok && bits_equal(d1[i], d2[i]);
        for (int i = 0; i < 5; ++i) ok = ok && bits_equal(e1[i], e2[i]);
    }
    h.check(ok, "cofactor and matrix cross-product forms agree bitwise");
}

void check_oracle_exactness(Harness& h) {
    Rng rng(303);
    bool ok = true;
    for (int n = 0; n < 500 && ok; ++n) {
        const Vec3 a = {rng.ints(1024), rng.ints(1024), rng.ints(1024)};
        const Vec3 b = {rng.ints(1024), rng.ints(1024), rng.ints(1024)};
        ok = ok && same_rational(cross3(a, b), oracle::exact_mirror("cross3", {{a[0], a[1], a[2]},
                                                                               {b[0], b[1], b[2]}}));
        Vec4 p{}, q{}, r{};
        for (auto* v : {&p, &q, &r})
            for (auto& x : *v) x = rng.ints(1024);
        ok = ok && same_rational(cross4(p, q, r),
                                 oracle::exact_mirror("cross4", {{p[0], p[1], p[2], p[3]},
                                                                 {q[0], q[1], q[2], q[3]},
                                                                 {r[0], r[1], r[2], r[3]}}));
    }
    h.check(ok, "integer inputs reproduce the exact-rational oracle bit-for-bit");
}

void check_plucker(Harness& h) {
    Rng rng(404);
    bool exact_zero = true;
    for (int n = 0; n < 2000; ++n) {
        Vec4 p{}, q{};
        for (auto* v : {&p, &q})
            for (auto& x : *v) x = rng.ints(512);
        if (p == q) continue;
        try {
            const PluckerLine L = plucker_from_points({p[0], p[1], p[2], p[3]},
                                                      {q[0], q[1], q[2], q[3]});
            exact_zero = exact_zero && grassmann_plucker(L) == 0.0;
        } catch (const degenerate_line_error&) {
        }
    }
    h.check(exact_zero, "Plucker coordinates satisfy the quadric identity exactly on integers");
}

void check_join_meet(Harness& h) {
    const HPoint2 o = meet_lines({0, 1, 0}, {1, 0, 0}); // x-axis meets y-axis
    h.check(projectively_equal(o.tuple(), std::array<double, 3>{0, 0, 1}, 0.0),
            "x-axis meets y-axis at the origin");

    bool dual_ok = true;
    Rng rng(505);
    for (int n = 0; n < 1000 && dual_ok; ++n) {
        const HPoint2 p1 = {rng.sym(), rng.sym(), rng.sym()};
        const HPoint2 p2 = {rng.sym(), rng.sym(), rng.sym()};
        try {
            const HLine2 l = join_points(p1, p2);
            const double r1 = l.a * p1.x + l.b * p1.y + l.c * p1.w;
            const double r2 = l.a * p2.x + l.b * p2.y + l.c * p2.w;
            dual_ok = dual_ok && std::abs(r1) < 1e-12 && std::abs(r2) < 1e-12;
        } catch (const degenerate_input_error&) {
        }
    }
    h.check(dual_ok, "joined line is incident to both generating points");

    bool planes_ok = true;
    Rng rng2(606);
    for (int n = 0; n < 500 && planes_ok; ++n) {
        const HPlane r1 = {rng2.sym(), rng2.sym(), rng2.sym(), rng2.sym()};
        const HPlane r2 = {rng2.sym(), rng2.sym(), rng2.sym(), rng2.sym()};
        try {
            const ParametricLine3 L = meet_two_planes(r1, r2);
            const auto x0 = L.origin_point.tuple();
            for (const HPlane& r : {r1, r2}) {
                const double res = r.a * x0[0] + r.b * x0[1] + r.c * x0[2] + r.d * x0[3];
                planes_ok = planes_ok && std::abs(res) < 1e-10;
            }
            const auto e = to_euclidean(L.origin_point);
            const double d =
                e[0] * L.direction[0] + e[1] * L.direction[1] + e[2] * L.direction[2];
            planes_ok = planes_ok && std::abs(d) < 1e-10;
        } catch (const geom_error&) {
        }
    }
    h.check(planes_ok, "two-plane meet: point on both planes, orthogonal to direction");
}

void check_barycentric(Harness& h) {
    const ProjBary3 c = bary_triangle({0, 0, 1}, {1, 0, 1}, {0, 1, 1},
                                      {1.0 / 3.0, 1.0 / 3.0, 1});
    const auto lam = bary_to_euclidean(c);
    bool centroid_ok = true;
    for (double l : lam) centroid_ok = centroid_ok && std::abs(l - 1.0 / 3.0) < 1e-15;
    h.check(centroid_ok, "centroid of the unit triangle has weights (1/3, 1/3, 1/3)");

    Rng rng(707);
    bool unity_ok = true;
    for (int n = 0; n < 1000 && unity_ok; ++n) {
        const HPoint2 x1 = {rng.sym(), rng.sym(), 0.5 + rng.unit()};
        const HPoint2 x2 = {rng.sym(), rng.sym(), 0.5 + rng.unit()};
        const HPoint2 x3 = {rng.sym(), rng.sym(), 0.5 + rng.unit()};
        const HPoint2 x0 = {rng.sym(), rng.sym(), 0.5 + rng.unit()};
        try {
            const auto mu = euclidean_weights(bary_triangle(x1, x2, x3, x0));
            unity_ok = unity_ok && std::abs(mu[0] + mu[1] + mu[2] - 1.0) < 1e-10;
        } catch (const geom_error&) {
        }
    }
    h.check(unity_ok, "normalized barycentric weights sum to one");
}

void check_interp(Harness& h) {
    const HPoint2 m = lerp_rational(HSegment2{{2, 0, 2}, {3, 0, 1}}, 0.5);
    h.check(bits_equal(m.x, 4.0) && bits_equal(m.y, 0.0) && bits_equal(m.w, 2.0),
            "rational midpoint of [2,0,2]-[3,0,1] is [4,0,2]");

    Rng rng(808);
    bool seg_ok = true;
    for (int n = 0; n < 1000 && seg_ok; ++n) {
        const HPoint2 p1 = {rng.sym(), rng.sym(), 0.5 + rng.unit()};
        const HPoint2 p2 = {rng.sym(), rng.sym(), 0.5 + rng.unit()};
        const double t = rng.unit();
        const auto q = to_euclidean(lerp_rational(HSegment2{p1, p2}, t));
        const auto e1 = to_euclidean(p1), e2 = to_euclidean(p2);
        for (int i = 0; i < 2; ++i) {
            const double lo = std::min(e1[i], e2[i]) - 1e-9, hi = std::max(e1[i], e2[i]) + 1e-9;
            seg_ok = seg_ok && q[i] >= lo && q[i] <= hi;
        }
    }
    h.check(seg_ok, "rational interpolation stays on the segment");
}

void check_normalization(Harness& h) {
    Rng rng(909);
    bool ok = true;
    for (int n = 0; n < 1000 && ok; ++n) {
        std::array<double, 4> t{};
        for (auto& x : t) x = rng.sym() * std::ldexp(1.0, static_cast<int>(rng.eng() % 601) - 300);
        if (t[0] == 0 && t[1] == 0 && t[2] == 0 && t[3] == 0) continue;
        const ScaledValue s = normalize_exponents(t);
        double m = 0;
        for (double x : s.tuple()) m = std::max(m, std::abs(x));
        ok = ok && m >= 0.5 && m < 2.0;
        for (std::size_t i = 0; i < 4; ++i)
            ok = ok && bits_equal(std::ldexp(s.tuple()[i], s.exp2()), t[i]);
    }
    h.check(ok, "exponent normalization lands in [0.5, 2) and restores exactly");
}

void check_batch(Harness& h) {
    std::istringstream in(R"({"id":"1","op":"meet_lines","args":[[0,1,0],[1,0,0]]}
{"id":"2","op":"meet_lines","args":[[1,0,0],[1,0,0]]}
not json
)");
    std::ostringstream out;
    const std::size_t errors = batchio::run_batch(in, out);
    const std::string s = out.str();
    h.check(errors == 2 && s.find("\"result\"") != std::string::npos &&
                s.find("DegenerateInput") != std::string::npos &&
                s.find("ParseError") != std::string::npos,
            "batch stream answers every record and never aborts");
}

} // namespace

int run(std::ostream& log) {
    Harness h{log};
    check_orthogonality(h);
    check_form_equivalence(h);
    check_oracle_exactness(h);
    check_plucker(h);
    check_join_meet(h);
    check_barycentric(h);
    check_interp(h);
    check_normalization(h);
    check_batch(h);
    log << (h.failures == 0 ? "selftest: all checks passed\n"
                            : "selftest: " + std::to_string(h.failures) + " check(s) FAILED\n");
    return h.failures;
}

} // namespace pgeom::selftest
