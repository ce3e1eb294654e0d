#pragma once

#include "diskfn/circle.hpp"
#include "diskfn/poisson.hpp"
#include "diskfn/series.hpp"

#include <cstdint>

namespace diskfn {

/// PCG32 (XSH-RR): 64-bit LCG state with a 32-bit permuted output.
///
///   state' = state * 6364136223846793005 + inc         (mod 2^64)
///   out    = rotr32(((state >> 18) ^ state) >> 27, state >> 59)
///
/// Seeding follows the reference pcg32_srandom: inc = (stream << 1) | 1,
/// state = 0, step, state += seed, step. Doubles take the top 53 bits of
/// two consecutive outputs (high word first), so streams are identical on
/// every platform.
class Pcg32 {
public:
    using result_type = std::uint32_t;

    explicit Pcg32(std::uint64_t seed = 0, std::uint64_t stream = 54);

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return 0xffffffffu; }
    result_type operator()() noexcept;

    /// Uniform in [0, 1).
    double uniform() noexcept;
    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) noexcept;
    /// Uniform integer in [lo, hi], by rejection.
    int uniform_int(int lo, int hi) noexcept;
    /// Real and imaginary parts uniform in [-1, 1).
    cplx unit_box() noexcept;

private:
    std::uint64_t state_ = 0;
    std::uint64_t inc_ = 0;
};

/// Random series on [-n_neg, n_pos] with coefficients in the complex unit box.
LaurentCoefficients random_series(Pcg32& rng, int n_neg, int n_pos);
/// Random polynomial of the given degree with unit-box coefficients.
ComplexPolynomial random_polynomial(Pcg32& rng, std::size_t degree);
/// Unit-box entries divided by their operator norm, then scaled by U[0, 1).
Matrix random_contraction(Pcg32& rng, std::size_t dim);
/// Random mixed polynomial with j, k <= max_exponent.
MixedPolynomial random_mixed_polynomial(Pcg32& rng, int max_exponent, int terms);

}  // namespace diskfn
