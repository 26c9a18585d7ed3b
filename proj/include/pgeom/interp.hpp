#pragma once

#include <array>
#include <cstddef>

#include "pgeom/hcoords.hpp"

namespace pgeom {

/// Segment between two affine homogeneous points (w != 0 checked at the
/// interpolation call, not at construction).
struct HSegment2 {
    HPoint2 p1, p2;
};
struct HSegment3 {
    HPoint3 p1, p2;
};

namespace detail {

/// The division-free rational form, generic over the scalar so tests can
/// instantiate a counting type: spatial numerators cost two forming products
/// each plus one parameter product; the shared denominator w2*w1 is one more
/// product; zero divisions. Last component of each tuple is w.
template <class T, std::size_t N>
std::array<T, N> lerp_rational_kernel(const std::array<T, N>& p1, const std::array<T, N>& p2,
                                      const T& t) {
    std::array<T, N> out{};
    for (std::size_t i = 0; i + 1 < N; ++i) {
        const T m1 = p2[N - 1] * p1[i];
        const T m2 = p1[N - 1] * p2[i];
        out[i] = m1 + (m2 - m1) * t;
    }
    out[N - 1] = p2[N - 1] * p1[N - 1];
    return out;
}

/// Componentwise form, w included; also division-free. The endpoint
/// parameters return the endpoint tuples verbatim, so t = 0 and t = 1 are
/// exact to the bit; interior parameters use one product per component.
template <class T, std::size_t N>
std::array<T, N> lerp_monotonic_kernel(const std::array<T, N>& p1, const std::array<T, N>& p2,
                                       const T& t) {
    if (t == T(0)) return p1;
    if (t == T(1)) return p2;
    std::array<T, N> out{};
    for (std::size_t i = 0; i < N; ++i) out[i] = p1[i] + (p2[i] - p1[i]) * t;
    return out;
}

} // namespace detail

/// Point at parameter t of the segment, in the rational form
/// [w2*x1 + (w1*x2 - w2*x1)*t : w2*w1]: the Euclidean projection traverses
/// the segment linearly in t. When |w2*w1| leaves [2^-500, 2^500] the output
/// tuple is exponent-normalized (exact power-of-two rescale, same projective
/// point). Throws ideal_endpoint_error if either endpoint has w = 0,
/// std::invalid_argument for non-finite t.
HPoint2 lerp_rational(const HSegment2& seg, double t);
HPoint3 lerp_rational(const HSegment3& seg, double t);

/// Componentwise interpolation including w: traverses the same segment with
/// a monotonic (generally nonlinear) parameterization; endpoints exact.
/// Throws ideal_endpoint_error if either w = 0, sign_conflict_error if the
/// endpoint w's have opposite signs (the path would cross infinity),
/// std::invalid_argument for t outside [0, 1].
HPoint2 lerp_monotonic(const HSegment2& seg, double t);
HPoint3 lerp_monotonic(const HSegment3& seg, double t);

/// Division-free three-way order of two on-segment points by their position
/// along the segment (monotonic-parameter order): negative when p precedes q
/// (p closer to seg.p1), 0 when equal or the segment is degenerate, positive
/// when q precedes p. Uses cross-multiplied progress along the dominant axis.
/// Throws ideal_endpoint_error / ideal_point_error on w = 0 inputs and
/// sign_conflict_error when w signs mix.
int compare_along_segment(const HSegment2& seg, const HPoint2& p, const HPoint2& q);
int compare_along_segment(const HSegment3& seg, const HPoint3& p, const HPoint3& q);

} // namespace pgeom
