#include "diskfn/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace diskfn {

Matrix::Matrix(std::size_t dim, std::vector<cplx> entries) : dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != dim_ * dim_)
        throw std::invalid_argument("matrix of dim " + std::to_string(dim_) + " needs " +
                                    std::to_string(dim_ * dim_) + " entries, got " +
                                    std::to_string(entries_.size()));
    for (const auto& e : entries_)
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag()))
            throw std::invalid_argument("matrix entries must be finite");
}

Matrix Matrix::identity(std::size_t dim) {
    Matrix out(dim);
    for (std::size_t i = 0; i < dim; ++i) out(i, i) = 1.0;
    return out;
}

Matrix Matrix::diagonal(std::span<const cplx> diag) {
    Matrix out(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) out(i, i) = diag[i];
    return out;
}

Matrix Matrix::adjoint() const {
    Matrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

std::vector<cplx> Matrix::apply(std::span<const cplx> v) const {
    if (v.size() != dim_) throw std::invalid_argument("vector length does not match matrix dim");
    std::vector<cplx> out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        cplx acc{};
        for (std::size_t j = 0; j < dim_; ++j) acc += (*this)(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

Matrix& Matrix::operator*=(cplx s) {
    for (auto& e : entries_) e *= s;
    return *this;
}

Matrix& Matrix::operator+=(const Matrix& other) {
    if (other.dim_ != dim_) throw std::invalid_argument("matrix dims differ");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dims differ");
    const auto n = a.dim_;
    Matrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a(i, k);
            for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

namespace {

double norm2(std::span<const cplx> v) {
    double acc = 0.0;
    for (const auto& x : v) acc += std::norm(x);
    return std::sqrt(acc);
}

}  // namespace

double operator_norm(const Matrix& t, NormOptions options) {
    const auto n = t.dim();
    if (n == 0) return 0.0;
    for (const auto& e : t.entries())
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag()))
            throw std::invalid_argument("matrix entries must be finite");

    const Matrix gram = t.adjoint() * t;
    std::vector<cplx> v(n, cplx{1.0 / std::sqrt(static_cast<double>(n)), 0.0});
    double previous = -1.0;
    for (int it = 0; it < options.max_iterations; ++it) {
        auto w = gram.apply(v);
        // v is unit length, so <v, G v> is the Rayleigh quotient.
        double quotient = 0.0;
        for (std::size_t i = 0; i < n; ++i) quotient += (std::conj(v[i]) * w[i]).real();
        const double len = norm2(w);
        if (len == 0.0) return 0.0;
        if (previous >= 0.0 && std::abs(quotient - previous) <= options.rel_tolerance * quotient)
            return std::sqrt(std::max(quotient, 0.0));
        previous = quotient;
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / len;
    }
    throw NonConvergence("operator norm power iteration did not converge in " +
                         std::to_string(options.max_iterations) + " iterations");
}

}  // namespace diskfn
