#include "pgeom/interp.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace pgeom {

namespace {

constexpr double kWLow = 0x1p-500;
constexpr double kWHigh = 0x1p500;

template <std::size_t N>
std::array<double, N> guard_exponents(std::array<double, N> out) {
    const double aw = std::abs(out[N - 1]);
    if (aw >= kWLow && aw <= kWHigh) return out;
    bool nonzero = false;
    for (double v : out) nonzero |= (v != 0.0);
    if (!nonzero) return out;
    const ScaledValue sv = normalize_exponents(out);
    // the power-of-two factor is projectively immaterial; drop it
    for (std::size_t i = 0; i < N; ++i) out[i] = sv.tuple()[i];
    return out;
}

void require_affine(double w1, double w2) {
    if (w1 == 0.0 || w2 == 0.0) throw ideal_endpoint_error();
}

void require_param(double t) {
    if (!std::isfinite(t)) throw std::invalid_argument("lerp: t must be finite");
}

void require_unit_range(double t) {
    require_param(t);
    if (t < 0.0 || t > 1.0) throw std::invalid_argument("lerp_monotonic: t must lie in [0, 1]");
}

inline int sgn(double v) { return (v > 0) - (v < 0); }

// Shared comparator body over N-1 spatial axes + w (tuples are x..w).
template <std::size_t N>
int compare_impl(const std::array<double, N>& e1, const std::array<double, N>& e2,
                 const std::array<double, N>& p, const std::array<double, N>& q) {
    const double w1 = e1[N - 1], w2 = e2[N - 1];
    require_affine(w1, w2);
    if (p[N - 1] == 0.0 || q[N - 1] == 0.0) throw ideal_point_error();
    if (w1 * w2 < 0.0 || p[N - 1] * q[N - 1] < 0.0) throw sign_conflict_error();

    // dominant Euclidean extent: numerator of X2-X1 (denominator w1*w2 > 0)
    std::size_t k = 0;
    double nk = 0.0;
    for (std::size_t i = 0; i + 1 < N; ++i) {
        const double n = e2[i] * w1 - e1[i] * w2;
        if (std::abs(n) > std::abs(nk)) {
            nk = n;
            k = i;
        }
    }
    if (nk == 0.0) return 0; // degenerate segment: no ordering
    const double v = p[k] * q[N - 1] - q[k] * p[N - 1];
    return sgn(v) * sgn(nk);
}

} // namespace

HPoint2 lerp_rational(const HSegment2& seg, double t) {
    require_affine(seg.p1.w, seg.p2.w);
    require_param(t);
    const auto r = guard_exponents(detail::lerp_rational_kernel(seg.p1.tuple(), seg.p2.tuple(), t));
    return {r[0], r[1], r[2]};
}

HPoint3 lerp_rational(const HSegment3& seg, double t) {
    require_affine(seg.p1.w, seg.p2.w);
    require_param(t);
    const auto r = guard_exponents(detail::lerp_rational_kernel(seg.p1.tuple(), seg.p2.tuple(), t));
    return {r[0], r[1], r[2], r[3]};
}

HPoint2 lerp_monotonic(const HSegment2& seg, double t) {
    require_affine(seg.p1.w, seg.p2.w);
    if (seg.p1.w * seg.p2.w < 0.0) throw sign_conflict_error();
    require_unit_range(t);
    const auto r = detail::lerp_monotonic_kernel(seg.p1.tuple(), seg.p2.tuple(), t);
    return {r[0], r[1], r[2]};
}

HPoint3 lerp_monotonic(const HSegment3& seg, double t) {
    require_affine(seg.p1.w, seg.p2.w);
    if (seg.p1.w * seg.p2.w < 0.0) throw sign_conflict_error();
    require_unit_range(t);
    const auto r = detail::lerp_monotonic_kernel(seg.p1.tuple(), seg.p2.tuple(), t);
    return {r[0], r[1], r[2], r[3]};
}

int compare_along_segment(const HSegment2& seg, const HPoint2& p, const HPoint2& q) {
    return compare_impl<3>(seg.p1.tuple(), seg.p2.tuple(), p.tuple(), q.tuple());
}

int compare_along_segment(const HSegment3& seg, const HPoint3& p, const HPoint3& q) {
    return compare_impl<4>(seg.p1.tuple(), seg.p2.tuple(), p.tuple(), q.tuple());
}

} // namespace pgeom
