#pragma once

#include "diskfn/matrix.hpp"
#include "diskfn/poisson.hpp"
#include "diskfn/series.hpp"

#include <vector>

namespace diskfn {

/// Square matrix whose operator norm is at most 1 (within 1e-10).
class ContractionOperator {
public:
    static constexpr double kNormSlack = 1e-10;

    /// Throws std::invalid_argument if operator_norm(m) > 1 + kNormSlack.
    explicit ContractionOperator(Matrix m);

    /// Skips the norm check. Only for exercising failure paths.
    static ContractionOperator unchecked(Matrix m);

    const Matrix& matrix() const noexcept { return m_; }
    std::size_t dim() const noexcept { return m_.dim(); }

private:
    struct NoCheck {};
    ContractionOperator(Matrix m, NoCheck) : m_(std::move(m)) {}
    Matrix m_;
};

/// c_0 + c_1 z + ... + c_d z^d; the degree is an upper bound.
class ComplexPolynomial {
public:
    /// Throws std::invalid_argument if coeffs is empty or has non-finite values.
    explicit ComplexPolynomial(std::vector<cplx> coeffs);

    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    std::span<const cplx> coeffs() const noexcept { return coeffs_; }
    cplx operator()(cplx z) const noexcept;

private:
    std::vector<cplx> coeffs_;
};

/// (1/m) sum_k s1(z_k) conj(s2(z_k)). Throws std::invalid_argument on mismatched m.
cplx circle_inner_product(const BoundarySamples& s1, const BoundarySamples& s2);

/// sum_n |a(n)|^2 r^{2|n|}, r in (0, 1].
double parseval_sum(const LaurentCoefficients& c, double r = 1.0);

/// sum_n a(n) conj(b(n)): the l2(Z) inner product of two coefficient sequences.
cplx sequence_inner_product(const LaurentCoefficients& a, const LaurentCoefficients& b);

/// Forward shift n -> a(n - 1) on l2(Z). The window grows to keep n = 0 inside.
LaurentCoefficients shift_two_sided(const LaurentCoefficients& c);
/// Inverse of shift_two_sided: n -> a(n + 1).
LaurentCoefficients unshift_two_sided(const LaurentCoefficients& c);

/// Forward shift on l2(Z_{>=0}); output index 0 is always zero.
/// Throws std::invalid_argument when c has n_min < 0.
LaurentCoefficients shift_one_sided(const LaurentCoefficients& c);

/// max_k |(S c)(z_k) - z_k c(z_k)| over the m-point circle grid.
/// Requires m > 2 (|n_min| + n_max + 2).
double multiplication_correspondence_check(const LaurentCoefficients& c, std::size_t m);

/// p(T) by Horner's scheme in the matrix algebra.
Matrix apply_polynomial(const ComplexPolynomial& p, const ContractionOperator& t);
Matrix apply_polynomial(const ComplexPolynomial& p, const Matrix& t);

/// Grid maximum of |p| on the circle, refined by doubling m until two
/// successive maxima agree within 1e-9. Requires m >= 4 (degree + 1).
double sup_modulus_on_disk(const ComplexPolynomial& p, std::size_t m);

struct VonNeumannResult {
    double lhs = 0.0;  // ||p(T)||
    double rhs = 0.0;  // sup |p| over the closed disk
    bool holds = false;
    double margin() const noexcept { return rhs - lhs; }
};

inline constexpr double kVonNeumannSlack = 1e-8;

/// Compares ||p(T)|| with sup_{|z|<=1} |p(z)|. Propagates NonConvergence.
VonNeumannResult von_neumann_check(const ComplexPolynomial& p, const ContractionOperator& t);

/// Truncated one-sided shift of size dim: ones on the superdiagonal.
Matrix truncated_shift(std::size_t dim);

}  // namespace diskfn
