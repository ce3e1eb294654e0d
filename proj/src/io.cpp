#include "diskfn/io.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

namespace diskfn::io {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

cplx complex_from(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError("expected a [re, im] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<cplx> complex_list(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j[key].is_array())
        throw ParseError(std::string("missing array field \"") + key + "\"");
    std::vector<cplx> out;
    out.reserve(j[key].size());
    for (const auto& e : j[key]) out.push_back(complex_from(e));
    return out;
}

template <class T>
T field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    try {
        return j[key].get<T>();
    } catch (const json::exception&) {
        throw ParseError(std::string("field \"") + key + "\" has the wrong type");
    }
}

LaurentCoefficients coefficients_from_object(const json& j) {
    try {
        return {field<int>(j, "n_min"), field<int>(j, "n_max"), complex_list(j, "coeffs")};
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = text.find(sep, start);
        out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

double parse_double(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v))
        throw ParseError("not a finite number: '" + std::string(s) + "'");
    return v;
}

long long parse_integer(std::string_view s) {
    s = trim(s);
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError("not an integer: '" + std::string(s) + "'");
    return v;
}

// Data rows of a CSV with the given header; blank lines are skipped.
std::vector<std::vector<std::string_view>> csv_rows(std::string_view text, std::string_view header,
                                                    std::size_t columns) {
    auto lines = split(text, '\n');
    std::size_t i = 0;
    while (i < lines.size() && trim(lines[i]).empty()) ++i;
    if (i == lines.size() || trim(lines[i]) != header)
        throw ParseError("expected CSV header '" + std::string(header) + "'");
    std::vector<std::vector<std::string_view>> rows;
    for (++i; i < lines.size(); ++i) {
        if (trim(lines[i]).empty()) continue;
        auto cells = split(trim(lines[i]), ',');
        if (cells.size() != columns)
            throw ParseError("row " + std::to_string(rows.size() + 1) + ": expected " + std::to_string(columns) +
                             " columns, got " + std::to_string(cells.size()));
        rows.push_back(std::move(cells));
    }
    return rows;
}

// JSON number with 17 significant digits. A bare integer form would come back
// through the parser as an integer and lose the sign of -0, so keep a '.'.
std::string json_number(double x) {
    auto s = format_double(x);
    if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
    return s;
}

std::string pair_text(cplx v) { return "[" + json_number(v.real()) + ", " + json_number(v.imag()) + "]"; }

std::string pair_list(std::span<const cplx> values, std::string_view indent) {
    if (values.empty()) return "[]";
    std::string out = "[\n";
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += std::string(indent) + "  " + pair_text(values[i]);
        out += i + 1 < values.size() ? ",\n" : "\n";
    }
    return out + std::string(indent) + "]";
}

std::string coefficients_text(const LaurentCoefficients& c, std::string_view indent) {
    const std::string in(indent);
    return "{\n" + in + "  \"n_min\": " + std::to_string(c.n_min()) + ",\n" + in + "  \"n_max\": " +
           std::to_string(c.n_max()) + ",\n" + in + "  \"coeffs\": " + pair_list(c.values(), in + "  ") + "\n" +
           in + "}";
}

}  // namespace

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

std::string coefficients_to_json(const LaurentCoefficients& c) { return coefficients_text(c, "") + "\n"; }

LaurentCoefficients coefficients_from_json(std::string_view text) { return coefficients_from_object(parse_json(text)); }

std::string family_to_json(std::span<const LaurentCoefficients> members) {
    if (members.empty()) return "[]\n";
    std::string out = "[\n";
    for (std::size_t i = 0; i < members.size(); ++i) {
        out += "  " + coefficients_text(members[i], "  ");
        out += i + 1 < members.size() ? ",\n" : "\n";
    }
    return out + "]\n";
}

std::vector<LaurentCoefficients> family_from_json(std::string_view text) {
    const auto j = parse_json(text);
    if (!j.is_array()) throw ParseError("family file must hold a JSON array");
    std::vector<LaurentCoefficients> out;
    for (const auto& e : j) out.push_back(coefficients_from_object(e));
    return out;
}

std::string boundary_to_csv(const BoundarySamples& s) {
    std::string out = "k,theta,re,im\n";
    const auto m = static_cast<double>(s.m());
    for (std::size_t k = 0; k < s.m(); ++k) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / m;
        out += std::to_string(k) + "," + format_double(theta) + "," + format_double(s[k].real()) + "," +
               format_double(s[k].imag()) + "\n";
    }
    return out;
}

BoundarySamples boundary_from_csv(std::string_view text) {
    const auto rows = csv_rows(text, "k,theta,re,im", 4);
    if (rows.empty()) throw ParseError("boundary CSV has no samples");
    std::vector<cplx> values;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        try {
            if (parse_integer(rows[i][0]) != static_cast<long long>(i))
                throw ParseError("k must run 0, 1, 2, ... in order");
            parse_double(rows[i][1]);
            values.emplace_back(parse_double(rows[i][2]), parse_double(rows[i][3]));
        } catch (const ParseError& e) {
            throw ParseError("boundary row " + std::to_string(i + 1) + ": " + e.what());
        }
    }
    return BoundarySamples(std::move(values));
}

std::vector<cplx> points_from_csv(std::string_view text) {
    const auto rows = csv_rows(text, "re,im", 2);
    std::vector<cplx> out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        try {
            out.emplace_back(parse_double(rows[i][0]), parse_double(rows[i][1]));
        } catch (const ParseError& e) {
            throw ParseError("points row " + std::to_string(i + 1) + ": " + e.what());
        }
    }
    return out;
}

std::string points_to_csv(std::span<const cplx> points) {
    std::string out = "re,im\n";
    for (const auto& z : points) out += format_double(z.real()) + "," + format_double(z.imag()) + "\n";
    return out;
}

std::string mixed_polynomial_to_json(const MixedPolynomial& p) {
    std::vector<std::string> terms;
    for (const auto& [e, c] : p.terms())
        terms.push_back("    {\"j\": " + std::to_string(e.first) + ", \"k\": " + std::to_string(e.second) +
                        ", \"re\": " + json_number(c.real()) + ", \"im\": " + json_number(c.imag()) + "}");
    if (terms.empty()) return "{\n  \"terms\": []\n}\n";
    std::string out = "{\n  \"terms\": [\n";
    for (std::size_t i = 0; i < terms.size(); ++i) out += terms[i] + (i + 1 < terms.size() ? ",\n" : "\n");
    return out + "  ]\n}\n";
}

MixedPolynomial mixed_polynomial_from_json(std::string_view text) {
    const auto j = parse_json(text);
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw ParseError("missing array field \"terms\"");
    MixedPolynomial p;
    try {
        for (const auto& t : j["terms"])
            p.add_term(field<int>(t, "j"), field<int>(t, "k"), {field<double>(t, "re"), field<double>(t, "im")});
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    return p;
}

std::string matrix_to_json(const Matrix& m) {
    return "{\n  \"dim\": " + std::to_string(m.dim()) + ",\n  \"entries\": " + pair_list(m.entries(), "  ") + "\n}\n";
}

Matrix matrix_from_json(std::string_view text) {
    const auto j = parse_json(text);
    try {
        return {field<std::size_t>(j, "dim"), complex_list(j, "entries")};
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string polynomial_to_json(const ComplexPolynomial& p) {
    return "{\n  \"coeffs\": " + pair_list(p.coeffs(), "  ") + "\n}\n";
}

ComplexPolynomial polynomial_from_json(std::string_view text) {
    const auto j = parse_json(text);
    try {
        return ComplexPolynomial(complex_list(j, "coeffs"));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string mean_table_to_csv(std::span<const double> radii, std::span<const double> means) {
    std::string out = "r,mean\n";
    for (std::size_t i = 0; i < radii.size(); ++i)
        out += format_double(radii[i]) + "," + format_double(means[i]) + "\n";
    return out;
}

ConvexGauge tabulated_gauge_from_json(std::string_view text) {
    const auto j = parse_json(text);
    try {
        return ConvexGauge::tabulated(field<std::vector<double>>(j, "knots"), field<std::vector<double>>(j, "values"));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

ConvexGauge parse_gauge(std::string_view spec) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos)
        throw ParseError("gauge must look like power:<p>, exp:<lambda> or file:<path>");
    const auto kind = spec.substr(0, colon);
    const auto arg = spec.substr(colon + 1);
    try {
        if (kind == "power") return ConvexGauge::power(parse_double(arg));
        if (kind == "exp") return ConvexGauge::exp_scaled(parse_double(arg));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    if (kind == "file") return tabulated_gauge_from_json(read_file(std::string(arg)));
    throw ParseError("unknown gauge kind '" + std::string(kind) + "'");
}

std::vector<double> parse_real_list(std::string_view text) {
    std::vector<double> out;
    for (auto cell : split(text, ',')) out.push_back(parse_double(cell));
    return out;
}

std::string extraction_to_json(const Extraction& e) {
    return json{{"indices", e.indices}, {"degenerate", e.degenerate}}.dump() + "\n";
}

}  // namespace diskfn::io
