#pragma once

#include "diskfn/circle.hpp"
#include "diskfn/means.hpp"
#include "diskfn/normal.hpp"
#include "diskfn/poisson.hpp"
#include "diskfn/series.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace diskfn::io {

/// Malformed input text or unreadable file.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// %.17g: enough digits to round-trip any double.
std::string format_double(double x);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

// {"n_min": int, "n_max": int, "coeffs": [[re, im], ...]}, ascending n.
std::string coefficients_to_json(const LaurentCoefficients& c);
LaurentCoefficients coefficients_from_json(std::string_view text);

// JSON array of coefficient objects.
std::string family_to_json(std::span<const LaurentCoefficients> members);
std::vector<LaurentCoefficients> family_from_json(std::string_view text);

// CSV with header k,theta,re,im; theta = 2 pi k / m.
std::string boundary_to_csv(const BoundarySamples& s);
BoundarySamples boundary_from_csv(std::string_view text);

// CSV with header re,im. Rows are returned unchecked so callers can report
// the offending row of an out-of-disk point.
std::vector<cplx> points_from_csv(std::string_view text);
std::string points_to_csv(std::span<const cplx> points);

// {"terms": [{"j": int, "k": int, "re": float, "im": float}, ...]}
std::string mixed_polynomial_to_json(const MixedPolynomial& p);
MixedPolynomial mixed_polynomial_from_json(std::string_view text);

// {"dim": int, "entries": [[re, im], ...]} row-major.
std::string matrix_to_json(const Matrix& m);
Matrix matrix_from_json(std::string_view text);

// {"coeffs": [[re, im], ...]} ascending degree.
std::string polynomial_to_json(const ComplexPolynomial& p);
ComplexPolynomial polynomial_from_json(std::string_view text);

// CSV with header r,mean.
std::string mean_table_to_csv(std::span<const double> radii, std::span<const double> means);

/// "power:<p>", "exp:<lambda>", or "file:<path>" holding {"knots": [...], "values": [...]}.
ConvexGauge parse_gauge(std::string_view spec);
ConvexGauge tabulated_gauge_from_json(std::string_view text);

/// Comma-separated reals, e.g. "0.1,0.5,0.9".
std::vector<double> parse_real_list(std::string_view text);

// {"indices": [...], "degenerate": bool}
std::string extraction_to_json(const Extraction& e);

}  // namespace diskfn::io
