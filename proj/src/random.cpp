#include "diskfn/random.hpp"

namespace diskfn {

Pcg32::Pcg32(std::uint64_t seed, std::uint64_t stream) : inc_((stream << 1u) | 1u) {
    (*this)();
    state_ += seed;
    (*this)();
}

Pcg32::result_type Pcg32::operator()() noexcept {
    const std::uint64_t old = state_;
    state_ = old * 6364136223846793005ULL + inc_;
    const auto xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
    const auto rot = static_cast<std::uint32_t>(old >> 59u);
    return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
}

double Pcg32::uniform() noexcept {
    const std::uint64_t hi = (*this)();
    const std::uint64_t lo = (*this)();
    const std::uint64_t bits = ((hi << 32u) | lo) >> 11u;
    return static_cast<double>(bits) * 0x1.0p-53;
}

double Pcg32::uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

int Pcg32::uniform_int(int lo, int hi) noexcept {
    const auto span = static_cast<std::uint32_t>(hi - lo) + 1u;
    if (span == 0u) return static_cast<int>((*this)());
    const std::uint32_t threshold = (0u - span) % span;
    for (;;) {
        const std::uint32_t r = (*this)();
        if (r >= threshold) return lo + static_cast<int>(r % span);
    }
}

cplx Pcg32::unit_box() noexcept {
    const double re = uniform(-1.0, 1.0);
    const double im = uniform(-1.0, 1.0);
    return {re, im};
}

LaurentCoefficients random_series(Pcg32& rng, int n_neg, int n_pos) {
    std::vector<cplx> coeffs(static_cast<std::size_t>(n_neg + n_pos + 1));
    for (auto& a : coeffs) a = rng.unit_box();
    return {-n_neg, n_pos, std::move(coeffs)};
}

ComplexPolynomial random_polynomial(Pcg32& rng, std::size_t degree) {
    std::vector<cplx> coeffs(degree + 1);
    for (auto& c : coeffs) c = rng.unit_box();
    return ComplexPolynomial(std::move(coeffs));
}

Matrix random_contraction(Pcg32& rng, std::size_t dim) {
    std::vector<cplx> entries(dim * dim);
    for (auto& e : entries) e = rng.unit_box();
    Matrix t(dim, std::move(entries));
    const double norm = operator_norm(t);
    const double scale = rng.uniform();
    if (norm > 0.0) t *= scale / norm;
    return t;
}

MixedPolynomial random_mixed_polynomial(Pcg32& rng, int max_exponent, int terms) {
    MixedPolynomial p;
    for (int t = 0; t < terms; ++t) {
        const int j = rng.uniform_int(0, max_exponent);
        const int k = rng.uniform_int(0, max_exponent);
        p.add_term(j, k, rng.unit_box());
    }
    return p;
}

}  // namespace diskfn
