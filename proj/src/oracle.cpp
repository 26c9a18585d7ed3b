#include "pgeom/oracle.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "pgeom/errors.hpp"

namespace pgeom::oracle {

namespace {

inline double det2(double p, double q, double r, double s) { return p * s - q * r; }

double det3(const std::array<std::array<double, 3>, 3>& A) {
    return A[0][0] * det2(A[1][1], A[1][2], A[2][1], A[2][2]) -
           A[0][1] * det2(A[1][0], A[1][2], A[2][0], A[2][2]) +
           A[0][2] * det2(A[1][0], A[1][1], A[2][0], A[2][1]);
}

std::atomic<std::size_t> g_direct_form_fallbacks{0};

bool all_zero(const RVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

RVec row_of(const std::vector<RVec>& pts, std::size_t comp, std::size_t n) {
    RVec r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = pts[i][comp];
    return r;
}

void require_args(const std::vector<RVec>& args, std::size_t count, std::size_t len,
                  std::string_view op) {
    if (args.size() != count)
        throw std::invalid_argument(std::string(op) + ": wrong argument count");
    for (const auto& a : args)
        if (a.size() != len) throw std::invalid_argument(std::string(op) + ": wrong tuple length");
}

} // namespace

std::array<double, 2> cramer2(const std::array<std::array<double, 2>, 2>& A,
                              const std::array<double, 2>& b) {
    const double det = A[0][0] * A[1][1] - A[0][1] * A[1][0];
    if (det == 0.0) throw singular_matrix_error();
    const double dx = b[0] * A[1][1] - A[0][1] * b[1];
    const double dy = A[0][0] * b[1] - b[0] * A[1][0];
    return {dx / det, dy / det};
}

std::array<double, 3> cramer3(const std::array<std::array<double, 3>, 3>& A,
                              const std::array<double, 3>& b) {
    const double det = det3(A);
    if (det == 0.0) throw singular_matrix_error();
    std::array<double, 3> x{};
    for (int i = 0; i < 3; ++i) {
        auto Ai = A;
        for (int r = 0; r < 3; ++r) Ai[r][i] = b[r];
        x[i] = det3(Ai) / det;
    }
    return x;
}

std::array<double, 4> gauss_solve4(std::array<std::array<double, 4>, 4> A,
                                   std::array<double, 4> b) {
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
        if (A[piv][col] == 0.0) throw singular_matrix_error();
        std::swap(A[col], A[piv]);
        std::swap(b[col], b[piv]);
        for (int r = col + 1; r < 4; ++r) {
            const double f = A[r][col] / A[col][col];
            for (int c = col; c < 4; ++c) A[r][c] -= f * A[col][c];
            b[r] -= f * b[col];
        }
    }
    std::array<double, 4> x{};
    for (int r = 3; r >= 0; --r) {
        double s = b[r];
        for (int c = r + 1; c < 4; ++c) s -= A[r][c] * x[c];
        x[r] = s / A[r][r];
    }
    return x;
}

EuclidLine euclid_two_planes(const HPlane& r1, const HPlane& r2) {
    const double a1 = r1.a, b1 = r1.b, c1 = r1.c, d1 = r1.d;
    const double a2 = r2.a, b2 = r2.b, c2 = r2.c, d2 = r2.d;
    // s = n1 x n2, expanded by hand (no dependence on the kernel's code)
    const double a3 = b1 * c2 - c1 * b2;
    const double b3 = c1 * a2 - a1 * c2;
    const double c3 = a1 * b2 - b1 * a2;
    const std::array<std::array<double, 3>, 3> M = {{{a1, b1, c1}, {a2, b2, c2}, {a3, b3, c3}}};
    const double DET = det3(M);
    if (DET == 0.0) throw parallel_planes_error();

    // the direct closed form
    std::array<double, 3> X0 = {(d2 * det2(b1, c1, b3, c3) - d1 * det2(b2, c2, b3, c3)) / DET,
                                (d2 * det2(a3, c3, a1, c1) - d1 * det2(a3, c3, a2, c2)) / DET,
                                (d2 * det2(a1, b1, a3, b3) - d1 * det2(a2, b2, a3, b3)) / DET};

    const auto residual_ok = [&](const std::array<double, 3>& P) {
        for (const HPlane& r : {r1, r2}) {
            const double res = r.a * P[0] + r.b * P[1] + r.c * P[2] + r.d;
            const double scale =
                std::abs(r.a * P[0]) + std::abs(r.b * P[1]) + std::abs(r.c * P[2]) + std::abs(r.d) + 1.0;
            if (!(std::abs(res) <= 1e-8 * scale)) return false;
        }
        return true;
    };

    if (!residual_ok(X0)) {
        const std::array<double, 3> alt = cramer3(M, {-d1, -d2, 0.0});
        if (residual_ok(alt)) {
            g_direct_form_fallbacks.fetch_add(1, std::memory_order_relaxed);
            X0 = alt;
        }
    }
    return {X0, {a3, b3, c3}};
}

const char* validated_euclid_two_planes_variant() {
    return g_direct_form_fallbacks.load(std::memory_order_relaxed) == 0 ? "direct-form"
                                                                 : "cramer3-fallback";
}

std::size_t euclid_two_planes_fallback_count() {
    return g_direct_form_fallbacks.load(std::memory_order_relaxed);
}

Rational exact_det(const std::vector<RVec>& M) {
    const std::size_t n = M.size();
    for (const auto& row : M)
        if (row.size() != n) throw std::invalid_argument("exact_det: matrix not square");
    if (n == 1) return M[0][0];
    Rational acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (M[i][0] == 0) continue;
        std::vector<RVec> minor;
        minor.reserve(n - 1);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            minor.emplace_back(M[r].begin() + 1, M[r].end());
        }
        const Rational term = M[i][0] * exact_det(minor);
        acc += (i % 2 == 0) ? term : -term;
    }
    return acc;
}

RVec exact_cross(const std::vector<RVec>& rows) {
    const std::size_t n = rows.empty() ? 0 : rows[0].size();
    if (rows.size() + 1 != n) throw std::invalid_argument("exact_cross: need n-1 rows of length n");
    RVec out(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<RVec> minor;
        minor.reserve(rows.size());
        for (const auto& row : rows) {
            RVec m;
            m.reserve(n - 1);
            for (std::size_t c = 0; c < n; ++c)
                if (c != i) m.push_back(row[c]);
            minor.push_back(std::move(m));
        }
        const Rational d = exact_det(minor);
        out[i] = (i % 2 == 0) ? d : -d;
    }
    return out;
}

RVec exact_solve(std::vector<RVec> A, RVec b) {
    const std::size_t n = A.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && A[piv][col] == 0) ++piv;
        if (piv == n) throw singular_matrix_error();
        std::swap(A[col], A[piv]);
        std::swap(b[col], b[piv]);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (A[r][col] == 0) continue;
            const Rational f = A[r][col] / A[col][col];
            for (std::size_t c = col; c < n; ++c) A[r][c] -= f * A[col][c];
            b[r] -= f * b[col];
        }
    }
    RVec x(n);
    for (std::size_t r = n; r-- > 0;) {
        Rational s = b[r];
        for (std::size_t c = r + 1; c < n; ++c) s -= A[r][c] * x[c];
        x[r] = s / A[r][r];
    }
    return x;
}

RVec exact_mirror(std::string_view op, const std::vector<RVec>& args) {
    if (op == "cross3") {
        require_args(args, 2, 3, op);
        return exact_cross(args);
    }
    if (op == "meet_lines" || op == "join_points") {
        require_args(args, 2, 3, op);
        RVec r = exact_cross(args);
        if (all_zero(r)) throw degenerate_input_error(std::string(op) + ": dependent inputs");
        return r;
    }
    if (op == "cross4") {
        require_args(args, 3, 4, op);
        return exact_cross(args);
    }
    if (op == "plane_from_points" || op == "meet_three_planes") {
        require_args(args, 3, 4, op);
        RVec r = exact_cross(args);
        if (all_zero(r)) throw degenerate_input_error(std::string(op) + ": dependent inputs");
        return r;
    }
    if (op == "cross5") {
        require_args(args, 4, 5, op);
        return exact_cross(args);
    }
    if (op == "meet_two_planes") {
        require_args(args, 2, 4, op);
        const RVec n1(args[0].begin(), args[0].begin() + 3);
        const RVec n2(args[1].begin(), args[1].begin() + 3);
        RVec s = exact_cross({n1, n2});
        if (all_zero(s)) throw parallel_planes_error();
        const RVec rho0 = {s[0], s[1], s[2], 0};
        RVec x0 = exact_cross({args[0], args[1], rho0});
        x0.insert(x0.end(), s.begin(), s.end());
        return x0;
    }
    if (op == "bary_triangle") {
        require_args(args, 4, 3, op);
        const std::vector<RVec> rows = {row_of(args, 0, 4), row_of(args, 1, 4), row_of(args, 2, 4)};
        RVec xi = exact_cross(rows);
        if (xi[3] == 0) throw degenerate_triangle_error();
        return xi;
    }
    if (op == "bary_tetrahedron") {
        require_args(args, 5, 4, op);
        const std::vector<RVec> rows = {row_of(args, 0, 5), row_of(args, 1, 5), row_of(args, 2, 5),
                                        row_of(args, 3, 5)};
        RVec xi = exact_cross(rows);
        if (all_zero(xi)) throw degenerate_tetrahedron_error();
        return xi;
    }
    if (op == "lerp_rational") {
        if (args.size() != 3 || args[2].size() != 1 || args[0].size() != args[1].size() ||
            (args[0].size() != 3 && args[0].size() != 4))
            throw std::invalid_argument("lerp_rational: bad arguments");
        const std::size_t n = args[0].size();
        const Rational w1 = args[0][n - 1], w2 = args[1][n - 1], t = args[2][0];
        if (w1 == 0 || w2 == 0) throw ideal_endpoint_error();
        RVec out(n);
        for (std::size_t i = 0; i + 1 < n; ++i)
            out[i] = w2 * args[0][i] + (w1 * args[1][i] - w2 * args[0][i]) * t;
        out[n - 1] = w2 * w1;
        return out;
    }
    throw std::invalid_argument("exact_mirror: unknown operation name");
}

double rel_error_vs_exact(double computed, const Rational& exact, const Rational& floor_mag) {
    if (!std::isfinite(computed)) return std::numeric_limits<double>::infinity();
    Rational diff = Rational(computed) - exact;
    if (diff < 0) diff = -diff;
    Rational den = exact < 0 ? Rational(-exact) : exact;
    if (den < floor_mag) den = floor_mag;
    if (den == 0) return diff == 0 ? 0.0 : std::numeric_limits<double>::infinity();
    return Rational(diff / den).convert_to<double>();
}

} // namespace pgeom::oracle
