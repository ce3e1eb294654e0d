#include "diskfn/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace diskfn {

LaurentCoefficients::LaurentCoefficients(int n_min, int n_max, std::vector<cplx> coeffs)
    : n_min_(n_min), n_max_(n_max), coeffs_(std::move(coeffs)) {
    if (n_min_ > 0 || n_max_ < 0)
        throw std::invalid_argument("coefficient window must contain n = 0, got [" +
                                    std::to_string(n_min_) + ", " + std::to_string(n_max_) + "]");
    const auto expected = static_cast<std::size_t>(n_max_) - static_cast<std::size_t>(n_min_) + 1;
    if (coeffs_.size() != expected)
        throw std::invalid_argument("expected " + std::to_string(expected) +
                                    " coefficients, got " + std::to_string(coeffs_.size()));
    for (const auto& a : coeffs_)
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
            throw std::invalid_argument("coefficients must be finite");
}

LaurentCoefficients LaurentCoefficients::zero(int n_min, int n_max) {
    if (n_min > 0 || n_max < 0)
        throw std::invalid_argument("coefficient window must contain n = 0");
    return {n_min, n_max, std::vector<cplx>(static_cast<std::size_t>(n_max - n_min + 1))};
}

LaurentCoefficients LaurentCoefficients::monomial(int n, cplx value) {
    const int lo = std::min(n, 0);
    const int hi = std::max(n, 0);
    std::vector<cplx> coeffs(static_cast<std::size_t>(hi - lo + 1));
    coeffs[static_cast<std::size_t>(n - lo)] = value;
    return {lo, hi, std::move(coeffs)};
}

int LaurentCoefficients::bandwidth() const noexcept { return std::max(-n_min_, n_max_); }

cplx LaurentCoefficients::operator[](int n) const noexcept {
    if (n < n_min_ || n > n_max_) return {};
    return coeffs_[static_cast<std::size_t>(n - n_min_)];
}

DiskPoint::DiskPoint(cplx z) : z_(z) {
    if (!(std::abs(z) < 1.0))
        throw std::domain_error("point is not inside the open unit disk");
}

CirclePoint::CirclePoint(cplx z) {
    const double mod = std::abs(z);
    if (!(std::abs(mod - 1.0) <= kTolerance))
        throw std::domain_error("point is not on the unit circle");
    z_ = z / mod;
}

namespace detail {

cplx evaluate(const LaurentCoefficients& c, cplx z) noexcept {
    // Each half is nested from the largest |n| inward and then scaled once,
    // so the constant term is added last.
    cplx hol{};
    for (int n = c.n_max(); n >= 1; --n) hol = hol * z + c[n];
    hol *= z;

    const cplx w = std::conj(z);
    cplx anti{};
    for (int n = c.n_min(); n <= -1; ++n) anti = anti * w + c[n];
    anti *= w;

    return c[0] + hol + anti;
}

}  // namespace detail

cplx eval_series(const LaurentCoefficients& c, DiskPoint z) {
    return detail::evaluate(c, z.value());
}

cplx eval_on_circle(const LaurentCoefficients& c, CirclePoint z) {
    return detail::evaluate(c, z.value());
}

cplx eval_dz(const LaurentCoefficients& c, DiskPoint z) {
    const cplx x = z.value();
    cplx acc{};
    for (int n = c.n_max(); n >= 1; --n) acc = acc * x + static_cast<double>(n) * c[n];
    return acc;
}

cplx eval_dzbar(const LaurentCoefficients& c, DiskPoint z) {
    const cplx w = std::conj(z.value());
    cplx acc{};
    for (int n = c.n_min(); n <= -1; ++n) acc = acc * w + static_cast<double>(-n) * c[n];
    return acc;
}

LaurentCoefficients dz_coefficients(const LaurentCoefficients& c) {
    const int hi = std::max(c.n_max() - 1, 0);
    std::vector<cplx> out(static_cast<std::size_t>(hi + 1));
    for (int n = 1; n <= c.n_max(); ++n)
        out[static_cast<std::size_t>(n - 1)] = static_cast<double>(n) * c[n];
    return {0, hi, std::move(out)};
}

LaurentCoefficients dzbar_coefficients(const LaurentCoefficients& c) {
    const int lo = std::min(c.n_min() + 1, 0);
    std::vector<cplx> out(static_cast<std::size_t>(1 - lo));
    for (int n = c.n_min(); n <= -1; ++n)
        out[static_cast<std::size_t>(n + 1 - lo)] = static_cast<double>(-n) * c[n];
    return {lo, 0, std::move(out)};
}

bool is_holomorphic(const LaurentCoefficients& c) noexcept {
    for (int n = c.n_min(); n < 0; ++n)
        if (c[n] != cplx{}) return false;
    return true;
}

double coefficient_tail_bound(const LaurentCoefficients& c, double r) {
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("radius must lie in (0, 1)");
    double best = 0.0;
    for (int n = c.n_min(); n <= c.n_max(); ++n)
        best = std::max(best, std::abs(c[n]) * std::pow(r, std::abs(n)));
    return best;
}

}  // namespace diskfn
