#pragma once

#include <complex>
#include <span>
#include <vector>

namespace diskfn {

using cplx = std::complex<double>;

/// Truncated two-sided coefficient sequence a(n), n in [n_min, n_max].
///
/// Represents the harmonic function
///   h(z) = sum_{n>=0} a(n) z^n + sum_{n<0} a(n) conj(z)^{-n}
/// on the unit disk. The window always contains n = 0; indices outside the
/// window read as zero. Instances are immutable.
class LaurentCoefficients {
public:
    /// Throws std::invalid_argument if n_min > 0, n_max < 0, the entry count
    /// does not match the window, or any entry is not finite.
    LaurentCoefficients(int n_min, int n_max, std::vector<cplx> coeffs);

    /// The zero series on [n_min, n_max].
    static LaurentCoefficients zero(int n_min, int n_max);
    /// A single term a(n) = value on the smallest window containing 0 and n.
    static LaurentCoefficients monomial(int n, cplx value);

    int n_min() const noexcept { return n_min_; }
    int n_max() const noexcept { return n_max_; }
    /// max(|n_min|, n_max).
    int bandwidth() const noexcept;
    std::size_t size() const noexcept { return coeffs_.size(); }

    /// a(n); zero outside the stored window.
    cplx operator[](int n) const noexcept;
    /// Coefficients in ascending n.
    std::span<const cplx> values() const noexcept { return coeffs_; }

    bool operator==(const LaurentCoefficients&) const = default;

private:
    int n_min_;
    int n_max_;
    std::vector<cplx> coeffs_;
};

/// A point of the open unit disk.
class DiskPoint {
public:
    /// Throws std::domain_error unless |z| < 1.
    explicit DiskPoint(cplx z);
    cplx value() const noexcept { return z_; }

private:
    cplx z_;
};

/// A point of the unit circle. Accepts | |z| - 1 | <= 1e-12 and renormalizes.
class CirclePoint {
public:
    static constexpr double kTolerance = 1e-12;

    /// Throws std::domain_error if z is too far from the circle.
    explicit CirclePoint(cplx z);
    cplx value() const noexcept { return z_; }

private:
    cplx z_;
};

/// h(z) by a two-sided Horner scheme.
cplx eval_series(const LaurentCoefficients& c, DiskPoint z);
/// Boundary value of the series, using conj(z) = 1/z on the circle.
cplx eval_on_circle(const LaurentCoefficients& c, CirclePoint z);

/// dh/dz = sum_{n>=1} n a(n) z^{n-1}.
cplx eval_dz(const LaurentCoefficients& c, DiskPoint z);
/// dh/dzbar = sum_{n<=-1} (-n) a(n) conj(z)^{-n-1}.
cplx eval_dzbar(const LaurentCoefficients& c, DiskPoint z);

/// Coefficients of dh/dz, itself a holomorphic series.
LaurentCoefficients dz_coefficients(const LaurentCoefficients& c);
/// Coefficients of dh/dzbar, itself an anti-holomorphic series.
LaurentCoefficients dzbar_coefficients(const LaurentCoefficients& c);

/// True iff every stored a(n) with n < 0 is exactly zero.
bool is_holomorphic(const LaurentCoefficients& c) noexcept;

/// max_n |a(n)| r^{|n|}, r in (0, 1).
double coefficient_tail_bound(const LaurentCoefficients& c, double r);

namespace detail {
// Unchecked evaluation for any |z| <= 1; callers own the domain check.
cplx evaluate(const LaurentCoefficients& c, cplx z) noexcept;
}  // namespace detail

}  // namespace diskfn
