#include "diskfn/normal.hpp"

#include "diskfn/poisson.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace diskfn {

namespace {

void check_radius(double r) {
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("radius must lie in (0, 1)");
}

void check_shared_window(std::span<const LaurentCoefficients> seq, const LaurentCoefficients& ref) {
    for (const auto& c : seq)
        if (c.n_min() != ref.n_min() || c.n_max() != ref.n_max())
            throw std::invalid_argument("sequence members must share one coefficient window");
}

// Diagonal order 0, 1, -1, 2, -2, ... restricted to [lo, hi].
std::vector<int> diagonal_order(int lo, int hi) {
    std::vector<int> out{0};
    for (int k = 1; k <= std::max(-lo, hi); ++k) {
        if (k <= hi) out.push_back(k);
        if (-k >= lo) out.push_back(-k);
    }
    return out;
}

}  // namespace

FunctionFamily::FunctionFamily(std::vector<LaurentCoefficients> members_, std::string label_)
    : members(std::move(members_)), label(std::move(label_)) {
    if (members.empty()) throw std::invalid_argument("function family must be nonempty");
}

std::pair<int, int> FunctionFamily::window() const noexcept {
    int lo = 0;
    int hi = 0;
    for (const auto& c : members) {
        lo = std::min(lo, c.n_min());
        hi = std::max(hi, c.n_max());
    }
    return {lo, hi};
}

int FunctionFamily::bandwidth() const noexcept {
    const auto [lo, hi] = window();
    return std::max(-lo, hi);
}

double function_bound(const FunctionFamily& f, double r, std::size_t m) {
    check_radius(r);
    if (m < 64) throw std::invalid_argument("function bound grid needs m >= 64");
    double best = 0.0;
    for (const auto& c : f.members) {
        const auto samples = sample_series(c, m, r);
        for (const auto& v : samples.values()) best = std::max(best, std::abs(v));
    }
    return best;
}

double coefficient_bound_from_function(const FunctionFamily& f, double r, std::size_t m) {
    check_radius(r);
    double best = 0.0;
    for (const auto& c : f.members) {
        // b(n) = a(n) r^{|n|} straight from the samples; no division by r^{|n|}.
        const auto b = coefficients_from_boundary(sample_series(c, m, r), c.bandwidth());
        for (const auto& v : b.values()) best = std::max(best, std::abs(v));
    }
    return best;
}

double function_bound_from_coefficients(const FunctionFamily& f, double r, double s) {
    check_radius(r);
    check_radius(s);
    if (!(r < s)) throw std::invalid_argument("need r < s");
    double c_s = 0.0;
    for (const auto& c : f.members) c_s = std::max(c_s, coefficient_tail_bound(c, s));
    const auto [lo, hi] = f.window();
    const double q = r / s;
    double geometric = 0.0;
    for (int n = lo; n <= hi; ++n) geometric += std::pow(q, std::abs(n));
    return c_s * geometric;
}

NormalityCertificate certify(const FunctionFamily& f, std::span<const double> radii, std::size_t m) {
    NormalityCertificate cert;
    for (double r : radii) {
        cert.radii.push_back(r);
        cert.m_bounds.push_back(function_bound(f, r, m));
        cert.c_bounds.push_back(coefficient_bound_from_function(f, r, m));
    }
    return cert;
}

Extraction extract_subsequence(std::span<const LaurentCoefficients> seq, double tol) {
    if (seq.empty()) throw std::invalid_argument("cannot extract from an empty sequence");
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    check_shared_window(seq, seq.front());

    std::vector<std::size_t> alive(seq.size());
    for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;

    for (int n : diagonal_order(seq.front().n_min(), seq.front().n_max())) {
        if (alive.size() <= 1) break;
        std::map<std::pair<double, double>, std::vector<std::size_t>> boxes;
        for (auto i : alive) {
            const cplx a = seq[i][n];
            boxes[{std::floor(a.real() / tol), std::floor(a.imag() / tol)}].push_back(i);
        }
        // Map order is lexicographic on the box corner, so strict '>' keeps the smallest on ties.
        const std::vector<std::size_t>* fullest = nullptr;
        for (const auto& [corner, members] : boxes)
            if (fullest == nullptr || members.size() > fullest->size()) fullest = &members;
        alive = *fullest;
    }
    return {alive, alive.size() == 1};
}

ConvergenceReport convergence_equivalence_check(std::span<const LaurentCoefficients> seq,
                                                const LaurentCoefficients& limit,
                                                std::span<const double> radii, std::size_t m) {
    check_shared_window(seq, limit);
    for (double r : radii) check_radius(r);
    if (m <= 2 * static_cast<std::size_t>(limit.bandwidth()))
        throw std::invalid_argument("grid too coarse for the shared window");

    std::vector<BoundarySamples> limit_samples;
    for (double r : radii) limit_samples.push_back(sample_series(limit, m, r));

    ConvergenceReport report;
    for (const auto& c : seq) {
        double cd = 0.0;
        for (int n = limit.n_min(); n <= limit.n_max(); ++n) cd = std::max(cd, std::abs(c[n] - limit[n]));
        report.coeff_dist.push_back(cd);

        std::vector<double> row;
        for (std::size_t i = 0; i < radii.size(); ++i) {
            const auto samples = sample_series(c, m, radii[i]);
            double sd = 0.0;
            for (std::size_t k = 0; k < m; ++k) sd = std::max(sd, std::abs(samples[k] - limit_samples[i][k]));
            row.push_back(sd);
        }
        report.sup_dist.push_back(std::move(row));
    }
    return report;
}

bool equivalence_bounds_hold(const ConvergenceReport& report, std::span<const double> radii, int bandwidth,
                             double slack) {
    for (std::size_t j = 0; j < report.coeff_dist.size(); ++j) {
        for (std::size_t i = 0; i < radii.size(); ++i) {
            const double r = radii[i];
            double geometric = 0.0;
            for (int n = -bandwidth; n <= bandwidth; ++n) geometric += std::pow(r, std::abs(n));
            const double cd = report.coeff_dist[j];
            const double sd = report.sup_dist[j][i];
            if (sd > cd * geometric + slack) return false;
            if (cd > sd / std::pow(r, bandwidth) + slack) return false;
        }
    }
    return true;
}

}  // namespace diskfn
