#pragma once

#include "diskfn/series.hpp"

#include <map>
#include <utility>
#include <vector>

namespace diskfn {

/// Values h(z_k) at the equispaced circle nodes z_k = exp(2 pi i k / m).
class BoundarySamples {
public:
    /// Throws std::invalid_argument when empty or when a value is not finite.
    explicit BoundarySamples(std::vector<cplx> values);

    std::size_t m() const noexcept { return values_.size(); }
    cplx operator[](std::size_t k) const noexcept { return values_[k]; }
    std::span<const cplx> values() const noexcept { return values_; }

private:
    std::vector<cplx> values_;
};

/// Polynomial in z and conj(z): terms c * z^j * conj(z)^k keyed by (j, k).
class MixedPolynomial {
public:
    using Exponents = std::pair<int, int>;

    MixedPolynomial() = default;
    /// Throws std::invalid_argument for negative exponents or non-finite values.
    explicit MixedPolynomial(std::map<Exponents, cplx> terms);

    /// Adds c to the coefficient of z^j conj(z)^k.
    void add_term(int j, int k, cplx c);
    const std::map<Exponents, cplx>& terms() const noexcept { return terms_; }

    /// Direct evaluation at any complex point.
    cplx operator()(cplx z) const noexcept;

private:
    std::map<Exponents, cplx> terms_;
};

/// z_k = exp(2 pi i k / m), k = 0..m-1. Quarter-turn nodes are exact.
std::vector<CirclePoint> circle_grid(std::size_t m);

/// Samples of the series on the circle of radius r in (0, 1], at the m-point grid.
BoundarySamples sample_series(const LaurentCoefficients& c, std::size_t m, double r = 1.0);

/// a(n) = (1/m) sum_k h(z_k) z_k^{-n} for n in [-n_max, n_max].
/// Requires m > 2 n_max; throws std::invalid_argument otherwise.
LaurentCoefficients coefficients_from_boundary(const BoundarySamples& s, int n_max);

struct RadiusCoefficients {
    LaurentCoefficients coeffs;
    /// Set when r^{n_max} < 1e-12 and the division by r^{|n|} is ill-conditioned.
    bool ill_conditioned = false;
};

/// Recovers a(n) from samples of h(r z_k) through b(n) = a(n) r^{|n|}.
RadiusCoefficients coefficients_at_radius(const BoundarySamples& s_r, double r, int n_max);

/// Closed-form kernel (1/2pi)(1 - |zeta|^2)/|z - zeta|^2.
double poisson_kernel(CirclePoint z, DiskPoint zeta) noexcept;

/// Truncated series form of the kernel. Throws std::logic_error if the
/// imaginary residue of the two conjugate sums exceeds 1e-12.
double poisson_kernel_series(CirclePoint z, DiskPoint zeta, int n_max);

struct Extension {
    cplx value;
    /// Set when 1 - |zeta| < 2 pi * 10 / m, where the kernel is under-resolved.
    bool under_resolved = false;
};

/// Trapezoidal Poisson integral sum_k h(z_k) P(z_k, zeta) (2 pi / m).
Extension poisson_extend(const BoundarySamples& s, DiskPoint zeta);

/// sum_k P(z_k, zeta) (2 pi / m); requires m >= 4.
double kernel_mass(DiskPoint zeta, std::size_t m);

/// For each r, max of P(z, r w) over grid nodes z with |z - w| >= rho.
/// Radii must lie in [0, 1) and rho in (0, 2]. Empty when no grid node
/// satisfies the constraint.
std::vector<double> kernel_decay_profile(CirclePoint w, double rho, std::span<const double> radii,
                                         std::size_t m = 1024);

/// Harmonic polynomial agreeing with p on the circle: z^j conj(z)^k -> index j - k.
LaurentCoefficients harmonic_projection(const MixedPolynomial& p);

/// The series as a mixed polynomial: a(n) z^n for n >= 0, a(n) conj(z)^{-n} for n < 0.
/// Every stored entry becomes a term, zeros included, so projection recovers the window.
MixedPolynomial to_mixed_polynomial(const LaurentCoefficients& c);

}  // namespace diskfn
