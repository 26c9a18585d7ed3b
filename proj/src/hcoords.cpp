#include "pgeom/hcoords.hpp"

#include <cmath>
#include <stdexcept>

namespace pgeom {

ScaledValue::ScaledValue(std::span<const double> tuple, int exp2) : exp2_(exp2) {
    if (tuple.size() < 3 || tuple.size() > 6)
        throw std::invalid_argument("ScaledValue: tuple must have 3..6 components");
    size_ = tuple.size();
    for (std::size_t i = 0; i < size_; ++i) buf_[i] = tuple[i];
}

std::array<double, 6> ScaledValue::value() const noexcept {
    std::array<double, 6> out{};
    for (std::size_t i = 0; i < size_; ++i) out[i] = std::ldexp(buf_[i], exp2_);
    return out;
}

std::array<double, 2> to_euclidean(const HPoint2& p) {
    if (p.w == 0.0) throw ideal_point_error();
    return {p.x / p.w, p.y / p.w};
}

std::array<double, 3> to_euclidean(const HPoint3& p) {
    if (p.w == 0.0) throw ideal_point_error();
    return {p.x / p.w, p.y / p.w, p.z / p.w};
}

HPoint2 from_euclidean(double X, double Y) { return {X, Y, 1.0}; }

HPoint3 from_euclidean(double X, double Y, double Z) { return {X, Y, Z, 1.0}; }

namespace {

bool all_zero(std::span<const double> t) {
    for (double v : t)
        if (v != 0.0) return false;
    return true;
}

// Scales t to unit max magnitude and flips sign so the first nonzero
// component is positive. Division by the max is exact for the power-of-two
// families the tol=0 equivalence property runs on.
void canonicalize(std::span<const double> t, std::span<double> out) {
    double scale = 0.0;
    for (double v : t) scale = std::max(scale, std::abs(v));
    double sign = 1.0;
    for (double v : t) {
        if (v != 0.0) {
            sign = v < 0.0 ? -1.0 : 1.0;
            break;
        }
    }
    const double factor = sign * scale;
    for (std::size_t i = 0; i < t.size(); ++i) out[i] = t[i] / factor;
}

} // namespace

bool projectively_equal(std::span<const double> u, std::span<const double> v, double rel_tol) {
    if (u.size() != v.size())
        throw std::invalid_argument("projectively_equal: tuple lengths differ");
    if (all_zero(u) || all_zero(v)) throw degenerate_input_error("projectively_equal: all-zero tuple");

    std::array<double, 6> cu{}, cv{};
    if (u.size() > cu.size()) throw std::invalid_argument("projectively_equal: tuple too long");
    canonicalize(u, {cu.data(), u.size()});
    canonicalize(v, {cv.data(), v.size()});
    for (std::size_t i = 0; i < u.size(); ++i)
        if (!(std::abs(cu[i] - cv[i]) <= rel_tol)) return false;
    return true;
}

ScaledValue normalize_exponents(std::span<const double> t) {
    if (all_zero(t)) throw degenerate_input_error("normalize_exponents: all-zero tuple");
    double m = 0.0;
    for (double v : t) m = std::max(m, std::abs(v));
    const int e = std::ilogb(m);
    std::array<double, 6> out{};
    for (std::size_t i = 0; i < t.size(); ++i) out[i] = std::ldexp(t[i], -e);
    return ScaledValue({out.data(), t.size()}, e);
}

} // namespace pgeom
