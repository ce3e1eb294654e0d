#include "diskfn/means.hpp"

#include "diskfn/poisson.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace diskfn {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_radii(std::span<const double> radii) {
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0 && radii[i] < 1.0)) throw std::domain_error("radii must lie in (0, 1)");
        if (i > 0 && !(radii[i] > radii[i - 1]))
            throw std::invalid_argument("radii must be strictly increasing");
    }
}

void check_grid(const LaurentCoefficients& c, std::size_t m) {
    if (m < 64) throw std::invalid_argument("mean grid needs m >= 64");
    const auto needed = 8 * static_cast<std::size_t>(c.bandwidth() + 1);
    if (m <= needed)
        throw std::invalid_argument("mean grid needs m > 8 (bandwidth + 1) = " + std::to_string(needed));
}

}  // namespace

ConvexGauge::ConvexGauge(std::variant<Power, ExpScaled, Tabulated> kind) : kind_(std::move(kind)) {
    offset_ = raw(0.0);
}

ConvexGauge ConvexGauge::power(double p) {
    if (!(p > 0.0) || !std::isfinite(p)) throw std::invalid_argument("power gauge needs p > 0");
    return ConvexGauge(Power{p});
}

ConvexGauge ConvexGauge::exp_scaled(double lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw std::invalid_argument("exp gauge needs lambda > 0");
    return ConvexGauge(ExpScaled{lambda});
}

ConvexGauge ConvexGauge::tabulated(std::vector<double> knots, std::vector<double> values) {
    if (knots.size() < 2 || knots.size() != values.size())
        throw std::invalid_argument("tabulated gauge needs at least two knots with matching values");
    for (std::size_t i = 0; i < knots.size(); ++i) {
        if (!std::isfinite(knots[i]) || !std::isfinite(values[i]))
            throw std::invalid_argument("tabulated gauge entries must be finite");
        if (knots[i] < 0.0) throw std::invalid_argument("tabulated gauge knots must be >= 0");
        if (i > 0 && !(knots[i] > knots[i - 1]))
            throw std::invalid_argument("tabulated gauge knots must be strictly increasing");
    }
    return ConvexGauge(Tabulated{std::move(knots), std::move(values)});
}

double ConvexGauge::raw(double t) const {
    return std::visit(
        overloaded{
            [t](const Power& g) { return std::pow(t, g.p); },
            [t](const ExpScaled& g) { return std::expm1(g.lambda * t); },
            [t](const Tabulated& g) {
                const auto& x = g.knots;
                const auto& y = g.values;
                // Segment index, clamped so the end segments extend linearly.
                auto it = std::upper_bound(x.begin(), x.end(), t);
                std::size_t i = it == x.begin() ? 0 : static_cast<std::size_t>(it - x.begin()) - 1;
                i = std::min(i, x.size() - 2);
                const double slope = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);
                return y[i] + slope * (t - x[i]);
            },
        },
        kind_);
}

double ConvexGauge::operator()(double t) const { return raw(t) - offset_; }

bool ConvexGauge::is_monotone() const noexcept {
    if (const auto* tab = std::get_if<Tabulated>(&kind_))
        return std::is_sorted(tab->values.begin(), tab->values.end());
    return true;
}

bool ConvexGauge::is_convex() const noexcept {
    return std::visit(overloaded{
                          [](const Power& g) { return g.p >= 1.0; },
                          [](const ExpScaled&) { return true; },
                          [](const Tabulated& g) {
                              const auto& x = g.knots;
                              const auto& y = g.values;
                              for (std::size_t i = 1; i + 1 < x.size(); ++i) {
                                  const double left = (y[i] - y[i - 1]) / (x[i] - x[i - 1]);
                                  const double right = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);
                                  if (right < left) return false;
                              }
                              return true;
                          },
                      },
                      kind_);
}

bool ConvexGauge::holomorphic_only() const noexcept {
    const auto* pw = std::get_if<Power>(&kind_);
    return pw != nullptr && pw->p < 1.0;
}

bool MeanTable::is_nondecreasing(double rel_tol) const noexcept {
    if (means.empty()) return true;
    const double scale = 1.0 + *std::max_element(means.begin(), means.end());
    const double slack = rel_tol * scale;
    // Checking against the running maximum covers every pair i < j.
    double running = means.front();
    for (double v : means) {
        if (v + slack < running) return false;
        running = std::max(running, v);
    }
    return true;
}

double integral_mean(const LaurentCoefficients& c, double r, const ConvexGauge& g, std::size_t m) {
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("radius must lie in (0, 1)");
    check_grid(c, m);
    const auto samples = sample_series(c, m, r);
    double acc = 0.0;
    for (const auto& v : samples.values()) acc += g(std::abs(v));
    return acc / static_cast<double>(m);
}

double sup_mean(const LaurentCoefficients& c, double r, std::size_t m) {
    if (!(r > 0.0 && r <= 1.0)) throw std::domain_error("radius must lie in (0, 1]");
    if (m < 64) throw std::invalid_argument("sup grid needs m >= 64");
    const auto samples = sample_series(c, m, r);
    double best = 0.0;
    for (const auto& v : samples.values()) best = std::max(best, std::abs(v));
    return best;
}

MeanTable mean_scan(const LaurentCoefficients& c, const ConvexGauge& g, std::span<const double> radii,
                    std::size_t m) {
    check_radii(radii);
    MeanTable table{{radii.begin(), radii.end()}, {}, g, m};
    table.means.reserve(radii.size());
    for (double r : radii) table.means.push_back(integral_mean(c, r, g, m));
    return table;
}

std::vector<double> sup_scan(const LaurentCoefficients& c, std::span<const double> radii, std::size_t m) {
    check_radii(radii);
    std::vector<double> out;
    out.reserve(radii.size());
    for (double r : radii) out.push_back(sup_mean(c, r, m));
    return out;
}

MeanTable holomorphic_subconvex_scan(const LaurentCoefficients& c, double p, std::span<const double> radii,
                                     std::size_t m) {
    if (!is_holomorphic(c))
        throw std::invalid_argument("p < 1 means are only monotone for holomorphic series");
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("sub-convex scan needs 0 < p < 1");
    return mean_scan(c, ConvexGauge::power(p), radii, m);
}

}  // namespace diskfn
