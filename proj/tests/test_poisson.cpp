#include <doctest.h>

#include "diskfn/poisson.hpp"
#include "diskfn/random.hpp"
#include "oracles.hpp"

#include <cmath>
#include <numbers>

using namespace diskfn;

namespace {

constexpr double kPi = std::numbers::pi;

cplx random_point(Pcg32& rng, double max_radius) {
    const double r = max_radius * std::sqrt(rng.uniform());
    return std::polar(r, 2.0 * kPi * rng.uniform());
}

BoundarySamples samples_of(const std::function<cplx(cplx)>& f, std::size_t m) {
    return BoundarySamples(oracle::samples(f, m));
}

}  // namespace

TEST_CASE("circle_grid") {
    CHECK_THROWS_AS(circle_grid(0), std::invalid_argument);

    const auto one = circle_grid(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].value() == cplx{1.0});

    const auto four = circle_grid(4);
    CHECK(four[0].value() == cplx{1.0, 0.0});
    CHECK(four[1].value() == cplx{0.0, 1.0});
    CHECK(four[2].value() == cplx{-1.0, 0.0});
    CHECK(four[3].value() == cplx{0.0, -1.0});

    const auto eight = circle_grid(8);
    const double h = std::sqrt(2.0) / 2.0;
    CHECK(std::abs(eight[1].value() - cplx{h, h}) <= 2e-16);

    for (std::size_t m : {3u, 7u, 64u, 1000u}) {
        const auto g = circle_grid(m);
        for (std::size_t k = 0; k < m; ++k) {
            // std::polar loses a few ulps on large angles; the tolerance is the oracle's.
            CHECK(std::abs(g[k].value() - oracle::node(k, m)) < 4e-15);
            CHECK(std::abs(std::abs(g[k].value()) - 1.0) < 1e-15);
        }
    }
}

TEST_CASE("coefficients_from_boundary examples") {
    const auto z = coefficients_from_boundary(samples_of([](cplx w) { return w; }, 8), 2);
    for (int n = -2; n <= 2; ++n) CHECK(std::abs(z[n] - (n == 1 ? 1.0 : 0.0)) < 1e-15);

    const auto c5 = coefficients_from_boundary(BoundarySamples({5.0, 5.0, 5.0, 5.0}), 1);
    CHECK(std::abs(c5[0] - 5.0) < 1e-15);
    CHECK(std::abs(c5[1]) < 1e-15);
    CHECK(std::abs(c5[-1]) < 1e-15);

    // conj(z)^2 + 3z on 16 nodes, checked against the polar-form discrete sum.
    auto f = [](cplx w) { return std::conj(w) * std::conj(w) + 3.0 * w; };
    const auto v = oracle::samples(f, 16);
    const auto got = coefficients_from_boundary(BoundarySamples(v), 4);
    for (int n = -4; n <= 4; ++n) {
        CHECK(std::abs(got[n] - oracle::discrete_coefficient(v, n)) < 1e-14);
        const cplx want = n == -2 ? 1.0 : n == 1 ? 3.0 : 0.0;
        CHECK(std::abs(got[n] - want) < 1e-14);
    }

    CHECK_THROWS_AS(coefficients_from_boundary(BoundarySamples(std::vector<cplx>(8)), 4), std::invalid_argument);
}

TEST_CASE("coefficient round trip on band-limited data") {
    Pcg32 rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = rng.uniform_int(0, 20);
        const auto c = random_series(rng, n, n);
        const std::size_t m = 2 * static_cast<std::size_t>(n) + 1 + static_cast<std::size_t>(rng.uniform_int(0, 30));
        const auto back = coefficients_from_boundary(sample_series(c, m), n);
        for (int k = -n; k <= n; ++k) CHECK(std::abs(back[k] - c[k]) <= 1e-13);
    }
}

TEST_CASE("coefficients_at_radius") {
    const double r = 0.5;
    auto z = [](cplx w) { return w; };
    const auto res = coefficients_at_radius(BoundarySamples(oracle::samples(z, 8, r)), r, 2);
    CHECK_FALSE(res.ill_conditioned);
    CHECK(std::abs(res.coeffs[1] - 1.0) < 1e-15);
    CHECK(std::abs(oracle::discrete_coefficient(oracle::samples(z, 8, r), 1) - 0.5) < 1e-15);

    const auto k = coefficients_at_radius(BoundarySamples(std::vector<cplx>(32, cplx{2.0, -1.0})), 0.3, 3);
    CHECK(std::abs(k.coeffs[0] - cplx{2.0, -1.0}) < 1e-15);

    auto zb3 = [](cplx w) { return std::pow(std::conj(w), 3); };
    const auto v = oracle::samples(zb3, 16, r);
    CHECK(std::abs(oracle::discrete_coefficient(v, -3) - 0.125) < 1e-15);
    const auto got = coefficients_at_radius(BoundarySamples(v), r, 4);
    CHECK(std::abs(got.coeffs[-3] - 1.0) < 1e-14);

    const auto tiny = coefficients_at_radius(BoundarySamples(std::vector<cplx>(64, 1.0)), 0.1, 13);
    CHECK(tiny.ill_conditioned);
    CHECK_THROWS_AS(coefficients_at_radius(BoundarySamples(std::vector<cplx>(64, 1.0)), 1.0, 3), std::domain_error);
}

TEST_CASE("poisson_kernel closed form") {
    const CirclePoint one(1.0);
    const CirclePoint minus_one(-1.0);
    CHECK(std::abs(poisson_kernel(CirclePoint(std::polar(1.0, 2.3)), DiskPoint(0.0)) - 1.0 / (2 * kPi)) < 1e-16);
    CHECK(std::abs(poisson_kernel(one, DiskPoint(0.5)) - 3.0 / (2 * kPi)) < 1e-15);
    CHECK(std::abs(poisson_kernel(minus_one, DiskPoint(0.5)) - 1.0 / (6 * kPi)) < 1e-16);
}

TEST_CASE("poisson_kernel_series") {
    CHECK(std::abs(poisson_kernel_series(CirclePoint(cplx{0, 1}), DiskPoint(0.0), 17) - 1.0 / (2 * kPi)) < 1e-16);
    CHECK(std::abs(poisson_kernel_series(CirclePoint(1.0), DiskPoint(0.5), 60) - 3.0 / (2 * kPi)) <= 1e-15);

    const int n = static_cast<int>(std::ceil(std::log(1e-10) / std::log(0.9)));
    const CirclePoint i(cplx{0, 1});
    const DiskPoint zeta(cplx{0, 0.9});
    CHECK(std::abs(poisson_kernel_series(i, zeta, n) - poisson_kernel(i, zeta)) <= 1e-9);
    CHECK(std::abs(poisson_kernel_series(i, zeta, n) - oracle::kernel_series(i.value(), zeta.value(), n)) < 1e-12);
}

TEST_CASE("kernel series converges to the closed form within the geometric tail bound") {
    Pcg32 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const CirclePoint z(std::polar(1.0, 2 * kPi * rng.uniform()));
        const DiskPoint zeta(random_point(rng, 0.95));
        const int n = rng.uniform_int(0, 80);
        const double a = std::abs(zeta.value());
        const double closed = poisson_kernel(z, zeta);
        const double bound = std::pow(a, n + 1) / (kPi * (1.0 - a));
        CHECK(std::abs(poisson_kernel_series(z, zeta, n) - closed) <= bound + 1e-14 * closed);
        CHECK(closed > 0.0);
    }
}

TEST_CASE("poisson_extend") {
    auto ext = poisson_extend(BoundarySamples(std::vector<cplx>(64, 5.0)), DiskPoint({0.2, -0.6}));
    CHECK(std::abs(ext.value - 5.0) < 1e-12);

    const cplx zeta{0.3, 0.2};
    ext = poisson_extend(samples_of([](cplx w) { return w; }, 64), DiskPoint(zeta));
    CHECK(std::abs(ext.value - zeta) < 1e-12);
    CHECK(std::abs(ext.value - eval_series(LaurentCoefficients::monomial(1, 1.0), DiskPoint(zeta))) < 1e-12);

    ext = poisson_extend(samples_of([](cplx w) { return std::conj(w) * std::conj(w); }, 64), DiskPoint({0, 0.5}));
    CHECK(std::abs(ext.value - cplx{-0.25, 0.0}) < 1e-12);
    CHECK(std::abs(ext.value - eval_series(LaurentCoefficients::monomial(-2, 1.0), DiskPoint({0, 0.5}))) < 1e-12);

    // Flag threshold: 1 - |zeta| < 2 pi * 10 / m.
    CHECK(poisson_extend(BoundarySamples(std::vector<cplx>(64, 1.0)), DiskPoint(0.5)).under_resolved);
    CHECK(poisson_extend(BoundarySamples(std::vector<cplx>(1024, 1.0)), DiskPoint(0.95)).under_resolved);
    CHECK_FALSE(poisson_extend(BoundarySamples(std::vector<cplx>(2048, 1.0)), DiskPoint(0.95)).under_resolved);
    CHECK_FALSE(poisson_extend(BoundarySamples(std::vector<cplx>(64, 1.0)), DiskPoint(0.01)).under_resolved);
}

TEST_CASE("poisson_extend reproduces harmonic polynomials") {
    Pcg32 rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = rng.uniform_int(0, 10);
        const auto c = random_series(rng, n, n);
        // The trapezoidal kernel aliases at order |zeta|^{m - n}; m = n + 200 keeps
        // 0.9^{200} far below the tolerance.
        const auto s = sample_series(c, static_cast<std::size_t>(n) + 200);
        for (int k = 0; k < 100; ++k) {
            const DiskPoint zeta(random_point(rng, 0.9));
            CHECK(std::abs(poisson_extend(s, zeta).value - eval_series(c, zeta)) <= 1e-8);
        }
    }
}

TEST_CASE("kernel_mass") {
    CHECK(kernel_mass(DiskPoint(0.0), 4) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(kernel_mass(DiskPoint(0.5), 1024) - 1.0) <= 1e-12);
    CHECK(std::abs(kernel_mass(DiskPoint(0.99), 65536) - 1.0) <= 1e-8);
    CHECK_THROWS_AS(kernel_mass(DiskPoint(0.1), 3), std::invalid_argument);
}

TEST_CASE("kernel_decay_profile") {
    const CirclePoint w(1.0);
    const std::vector<double> zero{0.0};
    CHECK_THROWS_AS(kernel_decay_profile(w, 2.1, zero), std::invalid_argument);
    CHECK_THROWS_AS(kernel_decay_profile(w, 0.0, zero), std::invalid_argument);

    // Only the antipode is at distance 2, and it is not a node of an odd grid.
    CHECK(kernel_decay_profile(w, 2.0, zero, 1023).empty());
    CHECK(kernel_decay_profile(w, 2.0, zero, 1024).size() == 1);

    const auto at_center = kernel_decay_profile(w, 1.0, zero);
    CHECK(std::abs(at_center[0] - 1.0 / (2 * kPi)) < 1e-16);

    const std::vector<double> radii{0.9, 0.99, 0.999};
    const auto profile = kernel_decay_profile(w, 0.5, radii);
    REQUIRE(profile.size() == 3);
    CHECK(profile[0] > profile[1]);
    CHECK(profile[1] > profile[2]);
    for (std::size_t i = 0; i < radii.size(); ++i) {
        const double r = radii[i];
        const double bound = (1 - r * r) / (2 * kPi * (0.5 - (1 - r)) * (0.5 - (1 - r)));
        CHECK(profile[i] <= bound);
    }
    CHECK(profile[2] < 2e-3);
}

TEST_CASE("harmonic_projection examples") {
    MixedPolynomial zzb;
    zzb.add_term(1, 1, 1.0);
    CHECK(harmonic_projection(zzb) == LaurentCoefficients::monomial(0, 1.0));

    MixedPolynomial z2zb;
    z2zb.add_term(2, 1, 1.0);
    CHECK(harmonic_projection(z2zb) == LaurentCoefficients::monomial(1, 1.0));

    MixedPolynomial both;
    both.add_term(1, 2, 1.0);
    both.add_term(0, 1, 2.0);
    const auto c = harmonic_projection(both);
    CHECK(c == LaurentCoefficients::monomial(-1, 3.0));
    for (std::size_t k = 0; k < 64; ++k) {
        const cplx z = oracle::node(k, 64);
        CHECK(std::abs(both(z) - oracle::naive_eval(c, z)) < 1e-14);
    }

    CHECK_THROWS_AS(both.add_term(-1, 0, 1.0), std::invalid_argument);
}

TEST_CASE("harmonic_projection agrees on the circle and is idempotent") {
    Pcg32 rng(51);
    for (int trial = 0; trial < 50; ++trial) {
        const auto p = random_mixed_polynomial(rng, 6, rng.uniform_int(1, 12));
        const auto c = harmonic_projection(p);
        for (std::size_t k = 0; k < 64; ++k) {
            const cplx z = oracle::node(k, 64);
            CHECK(std::abs(p(z) - oracle::naive_eval(c, z)) <= 1e-12);
        }
        CHECK(harmonic_projection(to_mixed_polynomial(c)) == c);
    }
}

TEST_CASE("BoundarySamples validation") {
    CHECK_THROWS_AS(BoundarySamples(std::vector<cplx>{}), std::invalid_argument);
    CHECK_THROWS_AS(BoundarySamples(std::vector<cplx>{cplx{NAN, 0}}), std::invalid_argument);
}
