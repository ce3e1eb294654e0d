#pragma once

#include "diskfn/series.hpp"

#include <variant>
#include <vector>

namespace diskfn {

/// Monotone gauge phi on [0, inf), normalized so that phi(0) = 0.
///
/// power(p) is t^p; exp_scaled(l) is exp(l t) - 1; tabulated is the
/// piecewise-linear interpolant of (knots, values), extended linearly past
/// both ends and shifted so that its value at 0 vanishes.
class ConvexGauge {
public:
    struct Power { double p; };
    struct ExpScaled { double lambda; };
    struct Tabulated {
        std::vector<double> knots;
        std::vector<double> values;
    };

    /// Throws std::invalid_argument unless p > 0.
    static ConvexGauge power(double p);
    /// Throws std::invalid_argument unless lambda > 0.
    static ConvexGauge exp_scaled(double lambda);
    /// Needs at least two strictly increasing knots >= 0 and matching finite values.
    static ConvexGauge tabulated(std::vector<double> knots, std::vector<double> values);

    double operator()(double t) const;

    bool is_monotone() const noexcept;
    bool is_convex() const noexcept;
    /// Monotone and convex: admissible for every harmonic function.
    bool proposition_eligible() const noexcept { return is_monotone() && is_convex(); }
    /// power(p) with 0 < p < 1: admissible only for holomorphic functions.
    bool holomorphic_only() const noexcept;

    const std::variant<Power, ExpScaled, Tabulated>& kind() const noexcept { return kind_; }

private:
    explicit ConvexGauge(std::variant<Power, ExpScaled, Tabulated> kind);
    double raw(double t) const;

    std::variant<Power, ExpScaled, Tabulated> kind_;
    double offset_ = 0.0;
};

struct MeanTable {
    std::vector<double> radii;
    std::vector<double> means;
    ConvexGauge gauge;
    std::size_t m = 0;

    /// means[i] <= means[j] + rel_tol (1 + max mean) for every i < j.
    bool is_nondecreasing(double rel_tol) const noexcept;
};

inline constexpr std::size_t kDefaultMeanGrid = 1024;
inline constexpr double kMeanMonotoneTolerance = 1e-10;
inline constexpr double kSubconvexMonotoneTolerance = 1e-9;

/// (1/m) sum_k phi(|h(r z_k)|). Requires m >= 64 and m > 8 (bandwidth + 1).
double integral_mean(const LaurentCoefficients& c, double r, const ConvexGauge& g,
                     std::size_t m = kDefaultMeanGrid);

/// max_k |h(r z_k)|, r in (0, 1]. Requires m >= 64.
double sup_mean(const LaurentCoefficients& c, double r, std::size_t m = kDefaultMeanGrid);

/// integral_mean over strictly increasing radii in (0, 1).
MeanTable mean_scan(const LaurentCoefficients& c, const ConvexGauge& g, std::span<const double> radii,
                    std::size_t m = kDefaultMeanGrid);

/// sup_mean over strictly increasing radii in (0, 1).
std::vector<double> sup_scan(const LaurentCoefficients& c, std::span<const double> radii,
                             std::size_t m = kDefaultMeanGrid);

/// Means of |f|^p with 0 < p < 1 for holomorphic f. Throws std::invalid_argument
/// on non-holomorphic input or p outside (0, 1).
MeanTable holomorphic_subconvex_scan(const LaurentCoefficients& c, double p, std::span<const double> radii,
                                     std::size_t m = kDefaultMeanGrid);

}  // namespace diskfn
