#include "diskfn/circle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace diskfn {

ContractionOperator::ContractionOperator(Matrix m) : m_(std::move(m)) {
    const double norm = operator_norm(m_);
    if (norm > 1.0 + kNormSlack)
        throw std::invalid_argument("operator norm " + std::to_string(norm) + " exceeds 1");
}

ContractionOperator ContractionOperator::unchecked(Matrix m) { return {std::move(m), NoCheck{}}; }

ComplexPolynomial::ComplexPolynomial(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("polynomial needs at least one coefficient");
    for (const auto& c : coeffs_)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw std::invalid_argument("polynomial coefficients must be finite");
}

cplx ComplexPolynomial::operator()(cplx z) const noexcept {
    cplx acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

cplx circle_inner_product(const BoundarySamples& s1, const BoundarySamples& s2) {
    if (s1.m() != s2.m())
        throw std::invalid_argument("inner product needs equal sample counts, got " +
                                    std::to_string(s1.m()) + " and " + std::to_string(s2.m()));
    cplx acc{};
    for (std::size_t k = 0; k < s1.m(); ++k) acc += s1[k] * std::conj(s2[k]);
    return acc / static_cast<double>(s1.m());
}

double parseval_sum(const LaurentCoefficients& c, double r) {
    if (!(r > 0.0 && r <= 1.0)) throw std::domain_error("radius must lie in (0, 1]");
    double acc = 0.0;
    for (int n = c.n_min(); n <= c.n_max(); ++n) acc += std::norm(c[n]) * std::pow(r, 2 * std::abs(n));
    return acc;
}

cplx sequence_inner_product(const LaurentCoefficients& a, const LaurentCoefficients& b) {
    cplx acc{};
    const int lo = std::max(a.n_min(), b.n_min());
    const int hi = std::min(a.n_max(), b.n_max());
    for (int n = lo; n <= hi; ++n) acc += a[n] * std::conj(b[n]);
    return acc;
}

LaurentCoefficients shift_two_sided(const LaurentCoefficients& c) {
    const int lo = std::min(c.n_min() + 1, 0);
    const int hi = c.n_max() + 1;
    std::vector<cplx> out(static_cast<std::size_t>(hi - lo + 1));
    for (int n = c.n_min(); n <= c.n_max(); ++n) out[static_cast<std::size_t>(n + 1 - lo)] = c[n];
    return {lo, hi, std::move(out)};
}

LaurentCoefficients unshift_two_sided(const LaurentCoefficients& c) {
    const int lo = c.n_min() - 1;
    const int hi = std::max(c.n_max() - 1, 0);
    std::vector<cplx> out(static_cast<std::size_t>(hi - lo + 1));
    for (int n = c.n_min(); n <= c.n_max(); ++n) out[static_cast<std::size_t>(n - 1 - lo)] = c[n];
    return {lo, hi, std::move(out)};
}

LaurentCoefficients shift_one_sided(const LaurentCoefficients& c) {
    if (c.n_min() < 0)
        throw std::invalid_argument("one-sided shift needs a sequence supported on n >= 0");
    return shift_two_sided(c);
}

double multiplication_correspondence_check(const LaurentCoefficients& c, std::size_t m) {
    const auto needed = 2 * static_cast<std::size_t>(-c.n_min() + c.n_max() + 2);
    if (m <= needed)
        throw std::invalid_argument("grid too coarse: need m > " + std::to_string(needed));
    const auto shifted = sample_series(shift_two_sided(c), m);
    const auto original = sample_series(c, m);
    const auto grid = circle_grid(m);
    double worst = 0.0;
    for (std::size_t k = 0; k < m; ++k)
        worst = std::max(worst, std::abs(shifted[k] - grid[k].value() * original[k]));
    return worst;
}

Matrix apply_polynomial(const ComplexPolynomial& p, const Matrix& t) {
    const auto coeffs = p.coeffs();
    Matrix acc(t.dim());
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * t;
        Matrix shift = Matrix::identity(t.dim());
        shift *= *it;
        acc += shift;
    }
    return acc;
}

Matrix apply_polynomial(const ComplexPolynomial& p, const ContractionOperator& t) {
    return apply_polynomial(p, t.matrix());
}

double sup_modulus_on_disk(const ComplexPolynomial& p, std::size_t m) {
    if (m < 4 * (p.degree() + 1))
        throw std::invalid_argument("sup grid needs m >= 4 (degree + 1)");
    constexpr double kAgreement = 1e-9;
    constexpr std::size_t kMaxGrid = std::size_t{1} << 24;
    auto modulus_at = [&](double theta) { return std::abs(p(cplx{std::cos(theta), std::sin(theta)})); };

    // The grid of size 2m contains the grid of size m, so each refinement
    // only evaluates the new odd-indexed nodes.
    std::vector<double> values;
    values.reserve(m);
    for (const auto& z : circle_grid(m)) values.push_back(std::abs(p(z.value())));
    double best = *std::max_element(values.begin(), values.end());
    while (m < kMaxGrid) {
        const std::size_t fine = 2 * m;
        const double step = 2.0 * std::numbers::pi / static_cast<double>(fine);
        std::vector<double> next(fine);
        for (std::size_t k = 0; k < m; ++k) {
            next[2 * k] = values[k];
            next[2 * k + 1] = modulus_at(step * static_cast<double>(2 * k + 1));
        }
        values = std::move(next);
        const double refined = std::max(best, *std::max_element(values.begin(), values.end()));
        const bool settled = refined - best <= kAgreement;
        best = refined;
        m = fine;
        if (settled) break;
    }

    // A settled grid can still sit O(h^2) below a peak between nodes, so
    // polish every local maximum of the final grid with a golden-section search.
    const double h = 2.0 * std::numbers::pi / static_cast<double>(m);
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    for (std::size_t k = 0; k < m; ++k) {
        const double left = values[(k + m - 1) % m];
        const double right = values[(k + 1) % m];
        if (values[k] < left || values[k] < right) continue;
        double a = h * (static_cast<double>(k) - 1.0);
        double b = h * (static_cast<double>(k) + 1.0);
        double c = b - inv_phi * (b - a);
        double d = a + inv_phi * (b - a);
        double fc = modulus_at(c), fd = modulus_at(d);
        for (int it = 0; it < 80 && b - a > 1e-15; ++it) {
            if (fc >= fd) {
                b = d;
                d = c;
                fd = fc;
                c = b - inv_phi * (b - a);
                fc = modulus_at(c);
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + inv_phi * (b - a);
                fd = modulus_at(d);
            }
        }
        best = std::max({best, fc, fd});
    }
    return best;
}

VonNeumannResult von_neumann_check(const ComplexPolynomial& p, const ContractionOperator& t) {
    VonNeumannResult out;
    out.lhs = operator_norm(apply_polynomial(p, t));
    out.rhs = sup_modulus_on_disk(p, std::max<std::size_t>(64, 4 * (p.degree() + 1)));
    out.holds = out.lhs <= out.rhs + kVonNeumannSlack;
    return out;
}

Matrix truncated_shift(std::size_t dim) {
    Matrix out(dim);
    for (std::size_t i = 0; i + 1 < dim; ++i) out(i, i + 1) = 1.0;
    return out;
}

}  // namespace diskfn
