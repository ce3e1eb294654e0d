#include "diskfn/poisson.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace diskfn {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// exp(2 pi i k / m), reduced to the nearest quarter turn so that the
// residual angle stays within [-pi/4, pi/4].
cplx root_of_unity(long long k, long long m) {
    k %= m;
    if (k < 0) k += m;
    const long long q = (8 * k + m) / (2 * m);
    const long long residual = 4 * k - q * m;
    const double angle = 0.5 * std::numbers::pi * static_cast<double>(residual) / static_cast<double>(m);
    const cplx base{std::cos(angle), std::sin(angle)};
    switch (q % 4) {
        case 0: return base;
        case 1: return {-base.imag(), base.real()};
        case 2: return -base;
        default: return {base.imag(), -base.real()};
    }
}

std::vector<cplx> grid_values(std::size_t m) {
    std::vector<cplx> out(m);
    for (std::size_t k = 0; k < m; ++k)
        out[k] = root_of_unity(static_cast<long long>(k), static_cast<long long>(m));
    return out;
}

// (1/m) sum_k values[k] * z_k^{-n} with the twiddle taken from the grid table.
cplx discrete_coefficient(std::span<const cplx> values, std::span<const cplx> grid, int n) {
    const auto m = static_cast<long long>(values.size());
    cplx acc{};
    for (long long k = 0; k < m; ++k) {
        long long idx = (-k * n) % m;
        if (idx < 0) idx += m;
        acc += values[static_cast<std::size_t>(k)] * grid[static_cast<std::size_t>(idx)];
    }
    return acc / static_cast<double>(m);
}

double kernel_value(cplx z, cplx zeta) noexcept {
    return (1.0 - std::norm(zeta)) / (kTwoPi * std::norm(z - zeta));
}

}  // namespace

BoundarySamples::BoundarySamples(std::vector<cplx> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("boundary samples must be nonempty");
    for (const auto& v : values_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument("boundary samples must be finite");
}

MixedPolynomial::MixedPolynomial(std::map<Exponents, cplx> terms) {
    for (const auto& [e, c] : terms) add_term(e.first, e.second, c);
}

void MixedPolynomial::add_term(int j, int k, cplx c) {
    if (j < 0 || k < 0) throw std::invalid_argument("monomial exponents must be nonnegative");
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
        throw std::invalid_argument("polynomial coefficients must be finite");
    terms_[{j, k}] += c;
}

cplx MixedPolynomial::operator()(cplx z) const noexcept {
    cplx acc{};
    const cplx w = std::conj(z);
    for (const auto& [e, c] : terms_) acc += c * std::pow(z, e.first) * std::pow(w, e.second);
    return acc;
}

std::vector<CirclePoint> circle_grid(std::size_t m) {
    if (m == 0) throw std::invalid_argument("circle grid needs at least one point");
    std::vector<CirclePoint> out;
    out.reserve(m);
    for (const auto& z : grid_values(m)) out.emplace_back(z);
    return out;
}

BoundarySamples sample_series(const LaurentCoefficients& c, std::size_t m, double r) {
    if (m == 0) throw std::invalid_argument("circle grid needs at least one point");
    if (!(r > 0.0 && r <= 1.0)) throw std::domain_error("sampling radius must lie in (0, 1]");
    std::vector<cplx> values(m);
    const auto grid = grid_values(m);
    for (std::size_t k = 0; k < m; ++k) values[k] = detail::evaluate(c, r * grid[k]);
    return BoundarySamples(std::move(values));
}

LaurentCoefficients coefficients_from_boundary(const BoundarySamples& s, int n_max) {
    if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
    if (s.m() <= 2 * static_cast<std::size_t>(n_max))
        throw std::invalid_argument("aliasing: need m > 2 n_max, got m = " + std::to_string(s.m()) +
                                    ", n_max = " + std::to_string(n_max));
    const auto grid = grid_values(s.m());
    std::vector<cplx> out;
    out.reserve(static_cast<std::size_t>(2 * n_max + 1));
    for (int n = -n_max; n <= n_max; ++n) out.push_back(discrete_coefficient(s.values(), grid, n));
    return {-n_max, n_max, std::move(out)};
}

RadiusCoefficients coefficients_at_radius(const BoundarySamples& s_r, double r, int n_max) {
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("radius must lie in (0, 1)");
    const auto scaled = coefficients_from_boundary(s_r, n_max);
    std::vector<cplx> out(scaled.values().begin(), scaled.values().end());
    for (int n = -n_max; n <= n_max; ++n)
        out[static_cast<std::size_t>(n + n_max)] /= std::pow(r, std::abs(n));
    return {LaurentCoefficients(-n_max, n_max, std::move(out)), std::pow(r, n_max) < 1e-12};
}

double poisson_kernel(CirclePoint z, DiskPoint zeta) noexcept {
    return kernel_value(z.value(), zeta.value());
}

double poisson_kernel_series(CirclePoint z, DiskPoint zeta, int n_max) {
    if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
    // sum_{n>=0} conj(z)^n zeta^n + sum_{n>=1} z^n conj(zeta)^n, accumulated
    // separately so a conjugation slip shows up as an imaginary residue.
    const cplx forward = std::conj(z.value()) * zeta.value();
    const cplx backward = z.value() * std::conj(zeta.value());
    cplx sum{1.0, 0.0};
    cplx pf{1.0, 0.0};
    cplx pb{1.0, 0.0};
    for (int n = 1; n <= n_max; ++n) {
        pf *= forward;
        pb *= backward;
        sum += pf;
        sum += pb;
    }
    if (std::abs(sum.imag()) > 1e-12)
        throw std::logic_error("Poisson series has imaginary residue " + std::to_string(sum.imag()));
    return sum.real() / kTwoPi;
}

Extension poisson_extend(const BoundarySamples& s, DiskPoint zeta) {
    const auto m = s.m();
    const auto grid = grid_values(m);
    cplx acc{};
    for (std::size_t k = 0; k < m; ++k) acc += s[k] * kernel_value(grid[k], zeta.value());
    const double weight = kTwoPi / static_cast<double>(m);
    const bool flag = (1.0 - std::abs(zeta.value())) < kTwoPi * 10.0 / static_cast<double>(m);
    return {acc * weight, flag};
}

double kernel_mass(DiskPoint zeta, std::size_t m) {
    if (m < 4) throw std::invalid_argument("kernel_mass needs m >= 4");
    double acc = 0.0;
    for (const auto& z : grid_values(m)) acc += kernel_value(z, zeta.value());
    return acc * kTwoPi / static_cast<double>(m);
}

std::vector<double> kernel_decay_profile(CirclePoint w, double rho, std::span<const double> radii,
                                         std::size_t m) {
    if (!(rho > 0.0 && rho <= 2.0))
        throw std::invalid_argument("rho must lie in (0, 2]");
    std::vector<cplx> far;
    for (const auto& z : grid_values(m))
        if (std::abs(z - w.value()) >= rho) far.push_back(z);
    std::vector<double> out;
    if (far.empty()) return out;
    out.reserve(radii.size());
    for (double r : radii) {
        if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("radii must lie in [0, 1)");
        const cplx zeta = r * w.value();
        double best = 0.0;
        for (const auto& z : far) best = std::max(best, kernel_value(z, zeta));
        out.push_back(best);
    }
    return out;
}

LaurentCoefficients harmonic_projection(const MixedPolynomial& p) {
    int lo = 0;
    int hi = 0;
    for (const auto& [e, c] : p.terms()) {
        lo = std::min(lo, e.first - e.second);
        hi = std::max(hi, e.first - e.second);
    }
    std::vector<cplx> out(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& [e, c] : p.terms()) out[static_cast<std::size_t>(e.first - e.second - lo)] += c;
    return {lo, hi, std::move(out)};
}

MixedPolynomial to_mixed_polynomial(const LaurentCoefficients& c) {
    MixedPolynomial p;
    for (int n = c.n_min(); n <= c.n_max(); ++n) {
        if (n >= 0)
            p.add_term(n, 0, c[n]);
        else
            p.add_term(0, -n, c[n]);
    }
    return p;
}

}  // namespace diskfn
