#pragma once

#include "diskfn/series.hpp"

#include <stdexcept>
#include <vector>

namespace diskfn {

/// Dense square complex matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}
    /// Throws std::invalid_argument if entries.size() != dim * dim or an entry is not finite.
    Matrix(std::size_t dim, std::vector<cplx> entries);

    static Matrix identity(std::size_t dim);
    static Matrix diagonal(std::span<const cplx> diag);

    std::size_t dim() const noexcept { return dim_; }
    cplx& operator()(std::size_t i, std::size_t j) noexcept { return entries_[i * dim_ + j]; }
    cplx operator()(std::size_t i, std::size_t j) const noexcept { return entries_[i * dim_ + j]; }
    std::span<const cplx> entries() const noexcept { return entries_; }

    Matrix adjoint() const;
    std::vector<cplx> apply(std::span<const cplx> v) const;

    Matrix& operator*=(cplx s);
    Matrix& operator+=(const Matrix& other);
    friend Matrix operator*(const Matrix& a, const Matrix& b);

    bool operator==(const Matrix&) const = default;

private:
    std::size_t dim_ = 0;
    std::vector<cplx> entries_;
};

/// Raised when the power iteration hits its cap without meeting tolerance.
class NonConvergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct NormOptions {
    double rel_tolerance = 1e-12;
    int max_iterations = 10000;
};

/// Largest singular value of t.
///
/// Power iteration on the Gram matrix t* t from the normalized all-ones
/// vector. Stops when successive Rayleigh quotients agree to
/// rel_tolerance; throws NonConvergence if max_iterations is reached first.
double operator_norm(const Matrix& t, NormOptions options = {});

}  // namespace diskfn
