#include "pgeom/bench.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <limits>
#include <ostream>
#include <random>
#include <span>
#include <stdexcept>

#include "pgeom/barycentric.hpp"
#include "pgeom/errors.hpp"
#include "pgeom/hcoords.hpp"
#include "pgeom/joinmeet.hpp"
#include "pgeom/oracle.hpp"
#include "pgeom/xprod.hpp"

namespace pgeom::bench {

namespace {

using oracle::Rational;
using oracle::RVec;

/// Deterministic generator, fixed by the golden fixtures:
/// mt19937_64 raw draws mapped to doubles as (x >> 11) * 2^-53 (uniform in
/// [0,1)) and to integers in [a,b] as a + x % (b - a + 1). No library
/// distribution objects are used because their mappings are
/// implementation-defined.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    double unit() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
    double sym() { return 2.0 * unit() - 1.0; } // [-1, 1)
    long long uniform_int(long long a, long long b) {
        return a + static_cast<long long>(eng() % static_cast<std::uint64_t>(b - a + 1));
    }
};

struct Instance {
    std::array<double, 12> v{};
};

constexpr double kLog2Of10 = 3.3219280948873623;

// ---- instance generation ------------------------------------------------

std::vector<Instance> make_instances(const BenchScenario& sc) {
    Rng rng(sc.seed);
    std::vector<Instance> out;
    out.reserve(sc.count);
    const double eps = sc.severity;

    for (std::size_t n = 0; n < sc.count; ++n) {
        Instance ins;
        switch (sc.family) {
        case BenchFamily::near_parallel_lines: {
            double u, v;
            do {
                u = rng.sym();
                v = rng.sym();
            } while (std::abs(u) + std::abs(v) < 0.1);
            const double c1 = rng.sym(), c2 = rng.sym();
            const double p = rng.sym(), q = rng.sym();
            ins.v = {u, v, c1, u + eps * p, v + eps * q, c2, 0, 0, 0, 0, 0, 0};
            break;
        }
        case BenchFamily::near_parallel_planes: {
            std::array<double, 3> n1{}, n2{}, r{};
            for (auto& x : n1) x = rng.sym();
            for (auto& x : n2) x = rng.sym();
            for (auto& x : r) x = rng.sym();
            double al, be;
            do {
                al = rng.sym();
                be = rng.sym();
            } while (std::abs(al) + std::abs(be) < 0.1);
            const double d1 = rng.sym(), d2 = rng.sym(), d3 = rng.sym();
            ins.v = {n1[0], n1[1], n1[2], d1,
                     n2[0], n2[1], n2[2], d2,
                     al * n1[0] + be * n2[0] + eps * r[0],
                     al * n1[1] + be * n2[1] + eps * r[1],
                     al * n1[2] + be * n2[2] + eps * r[2], d3};
            break;
        }
        case BenchFamily::thin_triangle: {
            double x1, y1, x2, y2;
            do {
                x1 = rng.sym();
                y1 = rng.sym();
                x2 = rng.sym();
                y2 = rng.sym();
            } while (std::abs(x2 - x1) + std::abs(y2 - y1) < 0.1);
            const double x3 = 0.5 * (x1 + x2) - eps * (y2 - y1);
            const double y3 = 0.5 * (y1 + y2) + eps * (x2 - x1);
            const double s = 0.1 + 0.8 * rng.unit(), r = 0.1 + 0.8 * rng.unit();
            const double x0 = x1 + s * (x2 - x1) + r * (x3 - x1);
            const double y0 = y1 + s * (y2 - y1) + r * (y3 - y1);
            const std::array<double, 4> sig = {0.5 + 1.5 * rng.unit(), 0.5 + 1.5 * rng.unit(),
                                               0.5 + 1.5 * rng.unit(), 0.5 + 1.5 * rng.unit()};
            ins.v = {sig[0] * x1, sig[0] * y1, sig[0], sig[1] * x2, sig[1] * y2, sig[1],
                     sig[2] * x3, sig[2] * y3, sig[2], sig[3] * x0, sig[3] * y0, sig[3]};
            break;
        }
        case BenchFamily::exponent_spread: {
            const long long B = std::llround(sc.severity * kLog2Of10);
            for (int plane = 0; plane < 3; ++plane) {
                const double scale = std::ldexp(1.0, static_cast<int>(rng.uniform_int(-B, B)));
                for (int c = 0; c < 4; ++c) ins.v[4 * plane + c] = rng.sym() * scale;
            }
            break;
        }
        }
        out.push_back(ins);
    }
    return out;
}

// ---- exact references ----------------------------------------------------

/// Exact Euclidean-space reference values for one instance, or empty if the
/// instance is exactly singular in rational arithmetic (skipped for both
/// methods).
std::vector<Rational> exact_reference(BenchFamily fam, const Instance& ins) {
    const auto& v = ins.v;
    switch (fam) {
    case BenchFamily::near_parallel_lines: {
        const RVec xi = oracle::exact_cross({{v[0], v[1], v[2]}, {v[3], v[4], v[5]}});
        if (xi[2] == 0) return {};
        return {xi[0] / xi[2], xi[1] / xi[2]};
    }
    case BenchFamily::near_parallel_planes:
    case BenchFamily::exponent_spread: {
        const RVec xi = oracle::exact_cross({{v[0], v[1], v[2], v[3]},
                                             {v[4], v[5], v[6], v[7]},
                                             {v[8], v[9], v[10], v[11]}});
        if (xi[3] == 0) return {};
        return {xi[0] / xi[3], xi[1] / xi[3], xi[2] / xi[3]};
    }
    case BenchFamily::thin_triangle: {
        // True barycentric weights: the projective readout corrected by the
        // vertex/query homogeneous scales, so that both measured pipelines
        // compute the same quantity.
        const RVec xi = oracle::exact_cross({{v[0], v[3], v[6], v[9]},
                                             {v[1], v[4], v[7], v[10]},
                                             {v[2], v[5], v[8], v[11]}});
        if (xi[3] == 0) return {};
        const Rational den = xi[3] * Rational(v[11]);
        return {-xi[0] * Rational(v[2]) / den, -xi[1] * Rational(v[5]) / den,
                -xi[2] * Rational(v[8]) / den};
    }
    }
    return {};
}

// ---- the two measured pipelines -------------------------------------------

/// Division-free pipeline: homogeneous construction, one projection at the end.
std::vector<double> run_projective(BenchFamily fam, const Instance& ins) {
    const auto& v = ins.v;
    switch (fam) {
    case BenchFamily::near_parallel_lines: {
        const HPoint2 p = meet_lines({v[0], v[1], v[2]}, {v[3], v[4], v[5]});
        const auto e = to_euclidean(p);
        return {e[0], e[1]};
    }
    case BenchFamily::near_parallel_planes: {
        const HPoint3 p = meet_three_planes({v[0], v[1], v[2], v[3]}, {v[4], v[5], v[6], v[7]},
                                            {v[8], v[9], v[10], v[11]});
        const auto e = to_euclidean(p);
        return {e[0], e[1], e[2]};
    }
    case BenchFamily::thin_triangle: {
        const ProjBary3 xi = bary_triangle({v[0], v[1], v[2]}, {v[3], v[4], v[5]},
                                           {v[6], v[7], v[8]}, {v[9], v[10], v[11]});
        const auto lam = euclidean_weights(xi);
        return {lam[0], lam[1], lam[2]};
    }
    case BenchFamily::exponent_spread: {
        // Exact power-of-two prescaling; projectively neutral, so exp2 is dropped.
        std::array<std::array<double, 4>, 3> pl{};
        for (int i = 0; i < 3; ++i) {
            const ScaledValue s = normalize_exponents(std::span<const double>(&v[4 * i], 4));
            const auto t = s.tuple();
            std::copy(t.begin(), t.end(), pl[i].begin());
        }
        const HPoint3 p = meet_three_planes({pl[0][0], pl[0][1], pl[0][2], pl[0][3]},
                                            {pl[1][0], pl[1][1], pl[1][2], pl[1][3]},
                                            {pl[2][0], pl[2][1], pl[2][2], pl[2][3]});
        const auto e = to_euclidean(p);
        return {e[0], e[1], e[2]};
    }
    }
    return {};
}

/// Division-based pipeline: inputs converted to explicit Euclidean form first
/// (slope-intercept lines, explicit-z planes), which spends divisions up front
/// and cannot represent vertical elements. For exponent-spread the raw
/// coefficients are solved directly, which is what a pipeline without range
/// management does.
std::vector<double> run_euclidean(BenchFamily fam, const Instance& ins) {
    const auto& v = ins.v;
    switch (fam) {
    case BenchFamily::near_parallel_lines: {
        // a x + b y + c = 0  ->  y = k x + q with k = -a/b, q = -c/b.
        const double k1 = -v[0] / v[1], q1 = -v[2] / v[1];
        const double k2 = -v[3] / v[4], q2 = -v[5] / v[4];
        const double x = (q2 - q1) / (k1 - k2);
        return {x, k1 * x + q1};
    }
    case BenchFamily::near_parallel_planes: {
        // a x + b y + c z + d = 0  ->  z = P x + Q y + R.
        std::array<double, 3> P{}, Q{}, R{};
        for (int i = 0; i < 3; ++i) {
            const double c = v[4 * i + 2];
            P[i] = -v[4 * i] / c;
            Q[i] = -v[4 * i + 1] / c;
            R[i] = -v[4 * i + 3] / c;
        }
        // Equate explicit forms pairwise and solve for (x, y).
        const auto xy = oracle::cramer2({{{P[0] - P[2], Q[0] - Q[2]}, {P[1] - P[2], Q[1] - Q[2]}}},
                                        {R[2] - R[0], R[2] - R[1]});
        return {xy[0], xy[1], P[0] * xy[0] + Q[0] * xy[1] + R[0]};
    }
    case BenchFamily::thin_triangle: {
        std::array<double, 4> X{}, Y{};
        for (int i = 0; i < 4; ++i) {
            X[i] = v[3 * i] / v[3 * i + 2];
            Y[i] = v[3 * i + 1] / v[3 * i + 2];
        }
        const auto lam = oracle::cramer3({{{X[0], X[1], X[2]}, {Y[0], Y[1], Y[2]}, {1, 1, 1}}},
                                         {X[3], Y[3], 1.0});
        return {lam[0], lam[1], lam[2]};
    }
    case BenchFamily::exponent_spread: {
        const auto x = oracle::cramer3(
            {{{v[0], v[1], v[2]}, {v[4], v[5], v[6]}, {v[8], v[9], v[10]}}}, {-v[3], -v[7], -v[11]});
        return {x[0], x[1], x[2]};
    }
    }
    return {};
}

// ---- measurement -----------------------------------------------------------

template <class F>
BenchCell measure(const BenchScenario& sc, const BenchOptions& opt, const char* method,
                  const std::vector<Instance>& instances,
                  const std::vector<std::vector<Rational>>& refs, F&& pipeline) {
    BenchCell cell;
    cell.family = family_name(sc.family);
    cell.severity = sc.severity;
    cell.method = method;

    const double tiny = std::numeric_limits<double>::min();
    Rational max_err = 0;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        if (refs[i].empty()) continue; // exactly singular: skipped for both methods
        std::vector<double> got;
        try {
            got = pipeline(sc.family, instances[i]);
        } catch (const geom_error&) {
            ++cell.failure_count;
            continue;
        }
        Rational floor_mag = 0;
        for (const auto& r : refs[i]) {
            const Rational a = r < 0 ? Rational(-r) : r;
            if (a > floor_mag) floor_mag = a;
        }
        if (floor_mag == 0) floor_mag = 1;
        bool failed = false;
        Rational inst_err = 0;
        for (std::size_t k = 0; k < got.size(); ++k) {
            if (!std::isfinite(got[k]) ||
                (got[k] == 0.0 && (refs[i][k] >= tiny || refs[i][k] <= -tiny))) {
                failed = true;
                break;
            }
            Rational diff = Rational(got[k]) - refs[i][k];
            if (diff < 0) diff = -diff;
            diff /= floor_mag;
            if (diff > inst_err) inst_err = diff;
        }
        if (failed)
            ++cell.failure_count;
        else if (inst_err > max_err)
            max_err = inst_err;
    }
    cell.max_relative_error_vs_exact = max_err.convert_to<double>();

    if (opt.timing) {
        // Median of 5 timed repetitions after one untimed warm-up pass.
        std::array<double, 5> reps{};
        double sink = 0.0;
        for (int rep = -1; rep < 5; ++rep) {
            const auto t0 = std::chrono::steady_clock::now();
            for (const auto& ins : instances) {
                try {
                    for (double x : pipeline(sc.family, ins)) sink += x;
                } catch (const geom_error&) {
                }
            }
            const auto t1 = std::chrono::steady_clock::now();
            if (rep >= 0)
                reps[rep] = std::chrono::duration<double, std::nano>(t1 - t0).count() /
                            static_cast<double>(instances.size());
        }
        static volatile double vsink;
        vsink = sink;
        (void)vsink; // keep the accumulation observable so nothing is elided
        std::sort(reps.begin(), reps.end());
        cell.wall_time_ns_per_op = reps[2];
    }
    return cell;
}

void append_double(std::string& s, double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    s.append(buf, res.ptr);
}

} // namespace

const char* family_name(BenchFamily f) {
    switch (f) {
    case BenchFamily::near_parallel_lines: return "near-parallel-lines";
    case BenchFamily::near_parallel_planes: return "near-parallel-planes";
    case BenchFamily::thin_triangle: return "thin-triangle";
    case BenchFamily::exponent_spread: return "exponent-spread";
    }
    return "?";
}

BenchFamily family_from_name(std::string_view name) {
    if (name == "near-parallel-lines") return BenchFamily::near_parallel_lines;
    if (name == "near-parallel-planes") return BenchFamily::near_parallel_planes;
    if (name == "thin-triangle") return BenchFamily::thin_triangle;
    if (name == "exponent-spread") return BenchFamily::exponent_spread;
    throw std::invalid_argument("unknown bench family \"" + std::string(name) + "\"");
}

std::vector<BenchCell> run_bench(const BenchScenario& sc, const BenchOptions& opt) {
    if (sc.count < 1) throw std::invalid_argument("bench: count must be >= 1");
    if (sc.family == BenchFamily::exponent_spread) {
        if (!(sc.severity >= 0.0 && sc.severity <= 300.0))
            throw std::invalid_argument("bench: exponent-spread severity must be in [0, 300]");
    } else if (!(sc.severity > 0.0 && sc.severity <= 0.5)) {
        throw std::invalid_argument("bench: severity must be in (0, 0.5] for this family");
    }

    const std::vector<Instance> instances = make_instances(sc);
    std::vector<std::vector<Rational>> refs;
    refs.reserve(instances.size());
    for (const auto& ins : instances) refs.push_back(exact_reference(sc.family, ins));

    std::vector<BenchCell> cells;
    cells.push_back(measure(sc, opt, "projective", instances, refs,
                            [](BenchFamily f, const Instance& i) { return run_projective(f, i); }));
    cells.push_back(measure(sc, opt, "euclidean-oracle", instances, refs,
                            [](BenchFamily f, const Instance& i) { return run_euclidean(f, i); }));
    return cells;
}

void write_csv(std::ostream& out, const std::vector<BenchCell>& cells) {
    out << "family,severity,method,max_relative_error_vs_exact,failure_count,wall_time_ns_per_op\n";
    for (const auto& c : cells) {
        std::string row = c.family;
        row += ',';
        append_double(row, c.severity);
        row += ',';
        row += c.method;
        row += ',';
        append_double(row, c.max_relative_error_vs_exact);
        row += ',';
        row += std::to_string(c.failure_count);
        row += ',';
        append_double(row, c.wall_time_ns_per_op);
        row += '\n';
        out << row;
    }
}

} // namespace pgeom::bench
