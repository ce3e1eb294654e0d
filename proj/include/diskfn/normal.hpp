#pragma once

#include "diskfn/series.hpp"

#include <string>
#include <vector>

namespace diskfn {

/// Finite ordered family of series.
struct FunctionFamily {
    std::vector<LaurentCoefficients> members;
    std::string label;

    /// Throws std::invalid_argument when members is empty.
    FunctionFamily(std::vector<LaurentCoefficients> members, std::string label = {});

    /// Smallest window [lo, hi] containing every member's window.
    std::pair<int, int> window() const noexcept;
    int bandwidth() const noexcept;
};

/// Witnesses M(r) and C(r) at each radius.
struct NormalityCertificate {
    std::vector<double> radii;
    std::vector<double> m_bounds;
    std::vector<double> c_bounds;
};

/// M(r): max over members and the m-point grid of |h(r z_k)|. Requires m >= 64.
double function_bound(const FunctionFamily& f, double r, std::size_t m);

/// C(r): max over members and n of |a(n)| r^{|n|}, recovered from samples
/// h(r z_k) through the discrete coefficient formula. Requires m > 2 bandwidth.
double coefficient_bound_from_function(const FunctionFamily& f, double r, std::size_t m);

/// C(s) sum_{n in window} (r/s)^{|n|} with C(s) taken from the stored
/// coefficients; an upper bound for M(r). Throws std::invalid_argument unless 0 < r < s < 1.
double function_bound_from_coefficients(const FunctionFamily& f, double r, double s);

/// M(r) and C(r) for each radius.
NormalityCertificate certify(const FunctionFamily& f, std::span<const double> radii, std::size_t m);

struct Extraction {
    std::vector<std::size_t> indices;
    /// A single survivor: trivially a convergent subsequence.
    bool degenerate = false;
};

/// Finite diagonal argument. Walks n = 0, 1, -1, 2, -2, ... over the shared
/// window; at each n the surviving indices are binned into tol-sided boxes
/// (floor(re / tol), floor(im / tol)) and the fullest box is kept, ties going
/// to the lexicographically smallest box. Survivors are returned ascending.
///
/// Throws std::invalid_argument on an empty list, tol <= 0, or members with
/// different windows.
Extraction extract_subsequence(std::span<const LaurentCoefficients> seq, double tol);

struct ConvergenceReport {
    /// max_n |a_j(n) - a(n)| per member.
    std::vector<double> coeff_dist;
    /// sup_dist[j][i]: max over the grid of |h_j(r_i z_k) - h(r_i z_k)|.
    std::vector<std::vector<double>> sup_dist;
};

/// Both distances for every member against the limit. Requires a shared
/// window, radii in (0, 1), and m > 2 bandwidth.
ConvergenceReport convergence_equivalence_check(std::span<const LaurentCoefficients> seq,
                                                const LaurentCoefficients& limit,
                                                std::span<const double> radii, std::size_t m);

/// sup_dist <= coeff_dist * sum_{|n|<=N} r^{|n|} and coeff_dist <= sup_dist / r^N
/// for every member and radius, each with additive slack.
bool equivalence_bounds_hold(const ConvergenceReport& report, std::span<const double> radii, int bandwidth,
                             double slack = 1e-12);

}  // namespace diskfn
