#include <doctest.h>

#include "diskfn/means.hpp"
#include "diskfn/random.hpp"
#include "oracles.hpp"

#include <cmath>
#include <numbers>

using namespace diskfn;

namespace {

constexpr double kPi = std::numbers::pi;

LaurentCoefficients pair_of(int a, cplx va, int b, cplx vb) {
    const int lo = std::min({a, b, 0});
    const int hi = std::max({a, b, 0});
    std::vector<cplx> coeffs(static_cast<std::size_t>(hi - lo + 1));
    coeffs[static_cast<std::size_t>(a - lo)] += va;
    coeffs[static_cast<std::size_t>(b - lo)] += vb;
    return {lo, hi, std::move(coeffs)};
}

std::vector<ConvexGauge> eligible_gauges() {
    return {ConvexGauge::power(1), ConvexGauge::power(2), ConvexGauge::power(4), ConvexGauge::exp_scaled(1)};
}

const std::vector<double> kTenths{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};

double closed_kernel(cplx z, cplx zeta) {
    return (1.0 - std::norm(zeta)) / (2.0 * kPi * std::norm(z - zeta));
}

}  // namespace

TEST_CASE("gauge construction and flags") {
    CHECK_THROWS_AS(ConvexGauge::power(0.0), std::invalid_argument);
    CHECK_THROWS_AS(ConvexGauge::power(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(ConvexGauge::exp_scaled(0.0), std::invalid_argument);
    CHECK_THROWS_AS(ConvexGauge::tabulated({0.0}, {0.0}), std::invalid_argument);
    CHECK_THROWS_AS(ConvexGauge::tabulated({0.0, 0.0}, {0.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(ConvexGauge::tabulated({-1.0, 1.0}, {0.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(ConvexGauge::tabulated({0.0, 1.0}, {0.0}), std::invalid_argument);

    const auto p2 = ConvexGauge::power(2);
    CHECK(p2(3.0) == 9.0);
    CHECK(p2(0.0) == 0.0);
    CHECK(p2.proposition_eligible());
    CHECK_FALSE(p2.holomorphic_only());

    const auto half = ConvexGauge::power(0.5);
    CHECK(half.is_monotone());
    CHECK_FALSE(half.is_convex());
    CHECK(half.holomorphic_only());

    const auto e = ConvexGauge::exp_scaled(1.5);
    CHECK(e(0.0) == 0.0);
    CHECK(std::abs(e(2.0) - (std::exp(3.0) - 1.0)) < 1e-13);
    CHECK(e.proposition_eligible());
}

TEST_CASE("tabulated gauges") {
    // Knots start at 1: the left segment extends down to 0 and is then shifted to vanish there.
    const auto g = ConvexGauge::tabulated({1.0, 2.0, 4.0}, {3.0, 4.0, 8.0});
    CHECK(g(0.0) == 0.0);
    CHECK(g(1.0) == 1.0);
    CHECK(g(3.0) == 4.0);
    CHECK(g(5.0) == 8.0);
    CHECK(g.is_monotone());
    CHECK(g.is_convex());
    CHECK(g.proposition_eligible());

    const auto concave = ConvexGauge::tabulated({0.0, 1.0, 2.0}, {0.0, 2.0, 3.0});
    CHECK(concave.is_monotone());
    CHECK_FALSE(concave.is_convex());
    CHECK_FALSE(concave.proposition_eligible());
    CHECK_FALSE(concave.holomorphic_only());

    const auto falling = ConvexGauge::tabulated({0.0, 1.0, 2.0}, {1.0, 0.0, 0.5});
    CHECK_FALSE(falling.is_monotone());
    CHECK(falling.is_convex());
}

TEST_CASE("integral_mean examples") {
    const auto p2 = ConvexGauge::power(2);
    for (double r : {0.1, 0.5, 0.95}) CHECK(std::abs(integral_mean(LaurentCoefficients::monomial(0, 2.0), r, p2) - 4.0) < 1e-14);
    CHECK(std::abs(integral_mean(LaurentCoefficients::monomial(1, 1.0), 0.5, p2) - 0.25) < 1e-15);

    // |cos| has kinks on grid nodes, so the trapezoid sum is only second-order here.
    const auto re2 = pair_of(1, 1.0, -1, 1.0);
    CHECK(std::abs(integral_mean(re2, 0.5, ConvexGauge::power(1)) - 2.0 / kPi) < 1e-5);
    CHECK(std::abs(integral_mean(re2, 0.5, ConvexGauge::power(1), 1 << 16) - 2.0 / kPi) < 1e-9);

    CHECK_THROWS_AS(integral_mean(re2, 0.5, p2, 32), std::invalid_argument);
    CHECK_THROWS_AS(integral_mean(LaurentCoefficients::monomial(8, 1.0), 0.5, p2, 72), std::invalid_argument);
    CHECK_NOTHROW(integral_mean(LaurentCoefficients::monomial(8, 1.0), 0.5, p2, 73));
    CHECK_THROWS_AS(integral_mean(re2, 1.0, p2), std::domain_error);
    CHECK_THROWS_AS(integral_mean(re2, 0.0, p2), std::domain_error);
}

TEST_CASE("integral_mean against an independent sum") {
    Pcg32 rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        const auto c = random_series(rng, rng.uniform_int(0, 8), rng.uniform_int(0, 8));
        const double r = 0.05 + 0.9 * rng.uniform();
        const auto g = ConvexGauge::power(1.0 + 3.0 * rng.uniform());
        const auto& pw = std::get<ConvexGauge::Power>(g.kind());
        double want = 0.0;
        for (const auto& v : oracle::samples([&](cplx z) { return oracle::naive_eval(c, z); }, 1024, r))
            want += std::pow(std::abs(v), pw.p);
        want /= 1024.0;
        CHECK(std::abs(integral_mean(c, r, g) - want) <= 1e-12 * (1.0 + want));
    }
}

TEST_CASE("sup_mean examples") {
    for (double r : {0.2, 0.7, 1.0}) {
        CHECK(std::abs(sup_mean(LaurentCoefficients::monomial(0, cplx{3.0, 4.0}), r) - 5.0) < 1e-15);
        CHECK(std::abs(sup_mean(LaurentCoefficients::monomial(1, 1.0), r) - r) < 1e-15);
    }
    CHECK(std::abs(sup_mean(pair_of(0, 1.0, 1, 1.0), 0.5) - 1.5) < 1e-15);
    CHECK_THROWS_AS(sup_mean(LaurentCoefficients::monomial(0, 1.0), 1.5), std::domain_error);
    CHECK_THROWS_AS(sup_mean(LaurentCoefficients::monomial(0, 1.0), 0.5, 63), std::invalid_argument);
}

TEST_CASE("mean_scan examples") {
    const auto p2 = ConvexGauge::power(2);
    const std::vector<double> three{0.1, 0.5, 0.9};
    const auto flat = mean_scan(LaurentCoefficients::monomial(0, 1.0), p2, three);
    REQUIRE(flat.means.size() == 3);
    for (double v : flat.means) CHECK(std::abs(v - 1.0) < 1e-15);
    CHECK(flat.m == kDefaultMeanGrid);
    CHECK(flat.is_nondecreasing(kMeanMonotoneTolerance));

    const std::vector<double> quarters{0.25, 0.5, 0.75};
    const auto sq = mean_scan(LaurentCoefficients::monomial(1, 1.0), p2, quarters);
    CHECK(std::abs(sq.means[0] - 0.0625) < 1e-15);
    CHECK(std::abs(sq.means[1] - 0.25) < 1e-15);
    CHECK(std::abs(sq.means[2] - 0.5625) < 1e-15);
    CHECK(sq.means[0] < sq.means[1]);
    CHECK(sq.means[1] < sq.means[2]);

    const std::vector<double> unsorted{0.5, 0.4};
    CHECK_THROWS_AS(mean_scan(LaurentCoefficients::monomial(0, 1.0), p2, unsorted), std::invalid_argument);
    const std::vector<double> outside{0.5, 1.0};
    CHECK_THROWS_AS(mean_scan(LaurentCoefficients::monomial(0, 1.0), p2, outside), std::domain_error);
}

TEST_CASE("MeanTable::is_nondecreasing") {
    MeanTable t{{0.1, 0.2, 0.3}, {1.0, 0.5, 2.0}, ConvexGauge::power(1), 64};
    CHECK_FALSE(t.is_nondecreasing(1e-10));
    t.means = {1.0, 1.0 - 1e-12, 2.0};
    CHECK(t.is_nondecreasing(1e-10));
    t.means = {};
    CHECK(t.is_nondecreasing(1e-10));
}

TEST_CASE("holomorphic_subconvex_scan") {
    const std::vector<double> radii{0.25, 0.64};
    const auto four = holomorphic_subconvex_scan(LaurentCoefficients::monomial(0, 4.0), 0.5, radii);
    for (double v : four.means) CHECK(std::abs(v - 2.0) < 1e-15);

    const auto root = holomorphic_subconvex_scan(LaurentCoefficients::monomial(1, 1.0), 0.5, radii);
    CHECK(std::abs(root.means[0] - 0.5) < 1e-15);
    CHECK(std::abs(root.means[1] - 0.8) < 1e-13);

    CHECK_THROWS_AS(holomorphic_subconvex_scan(pair_of(-1, 1.0, 0, 1.0), 0.5, radii), std::invalid_argument);
    CHECK_THROWS_AS(holomorphic_subconvex_scan(LaurentCoefficients::monomial(1, 1.0), 1.0, radii), std::invalid_argument);
    CHECK_THROWS_AS(holomorphic_subconvex_scan(LaurentCoefficients::monomial(1, 1.0), 0.0, radii), std::invalid_argument);
}

TEST_CASE("means are nondecreasing in r") {
    Pcg32 rng(71);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = rng.uniform_int(0, 8);
        const auto c = random_series(rng, n, n);
        for (const auto& g : eligible_gauges()) {
            const auto table = mean_scan(c, g, kTenths);
            CHECK(table.is_nondecreasing(kMeanMonotoneTolerance));
        }
        const auto sups = sup_scan(c, kTenths);
        for (std::size_t i = 1; i < sups.size(); ++i) CHECK(sups[i - 1] <= sups[i] + 1e-12);

        const auto f = random_series(rng, 0, rng.uniform_int(0, 6));
        for (double p : {0.25, 0.5, 0.9})
            CHECK(holomorphic_subconvex_scan(f, p, kTenths).is_nondecreasing(kSubconvexMonotoneTolerance));
    }
}

TEST_CASE("a non-convex gauge can break monotonicity for harmonic input") {
    // h = 1 + Re z: the t^{1/4} mean falls from about 1 toward 2^{1/4} E|cos|^{1/2} ~ 0.907.
    std::vector<cplx> coeffs{0.5, 1.0, 0.5};
    const LaurentCoefficients h(-1, 1, coeffs);
    CHECK_FALSE(mean_scan(h, ConvexGauge::power(0.25), kTenths).is_nondecreasing(kMeanMonotoneTolerance));
    CHECK(mean_scan(h, ConvexGauge::power(1), kTenths).is_nondecreasing(kMeanMonotoneTolerance));

    // conj(z) + 1 is only exercised with eligible gauges.
    const auto zbar = pair_of(-1, 1.0, 0, 1.0);
    for (const auto& g : eligible_gauges()) CHECK(mean_scan(zbar, g, kTenths).is_nondecreasing(kMeanMonotoneTolerance));
}

TEST_CASE("Jensen step and pointwise domination") {
    Pcg32 rng(81);
    constexpr std::size_t m = 4096;
    for (int trial = 0; trial < 30; ++trial) {
        const int n = rng.uniform_int(0, 6);
        const auto c = random_series(rng, n, n);
        const cplx zeta = std::polar(0.8 * std::sqrt(rng.uniform()), 2 * kPi * rng.uniform());
        const double at = std::abs(oracle::naive_eval(c, zeta));
        for (const auto& g : eligible_gauges()) {
            double avg = 0.0;
            double dom = 0.0;
            for (std::size_t k = 0; k < m; ++k) {
                const cplx z = oracle::node(k, m);
                const double w = closed_kernel(z, zeta) * 2.0 * kPi / static_cast<double>(m);
                const double v = std::abs(oracle::naive_eval(c, z));
                avg += g(v) * w;
                dom += v * w;
            }
            CHECK(g(at) <= avg + 1e-9 * (1.0 + avg));
            CHECK(at <= dom + 1e-10);
        }
    }
}
