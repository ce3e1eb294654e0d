// diskfn: command-line front end for harmonic functions on the unit disk.
//
// Exit codes: 0 success, 1 internal error, 2 input error, 3 domain error,
// 4 von Neumann inequality violation, 5 monotonicity failure.

#include "diskfn/circle.hpp"
#include "diskfn/io.hpp"
#include "diskfn/means.hpp"
#include "diskfn/normal.hpp"
#include "diskfn/poisson.hpp"
#include "diskfn/random.hpp"
#include "diskfn/series.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace diskfn;

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kInputError = 2,
    kDomainError = 3,
    kInequalityViolation = 4,
    kNotMonotone = 5,
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::size_t grid = kDefaultMeanGrid;
    int n_max = 8;
    std::uint64_t seed = 0;
    std::size_t trials = 100;
    std::size_t dim = 6;
    std::size_t degree = 8;
    std::string gauge = "power:2";
    std::string radii = "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9";
    double tol = 0.1;
    std::optional<double> radius;
    std::string in;
    std::string out;
    std::string points;
    // Hidden: single von Neumann trial on supplied operator/polynomial.
    std::string matrix;
    std::string poly;
    bool unchecked = false;
};

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty())
        std::cout << text;
    else
        io::write_file(cfg.out, text);
}

std::string require_input(const RunConfig& cfg) {
    if (cfg.in.empty()) throw InputError("--in is required");
    return io::read_file(cfg.in);
}

std::vector<double> radii_of(const RunConfig& cfg) {
    auto radii = io::parse_real_list(cfg.radii);
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0 && radii[i] < 1.0)) throw InputError("--radii values must lie in (0, 1)");
        if (i > 0 && !(radii[i] > radii[i - 1])) throw InputError("--radii must be strictly increasing");
    }
    return radii;
}

int cmd_extend(const RunConfig& cfg) {
    const auto boundary = io::boundary_from_csv(require_input(cfg));
    if (cfg.points.empty()) throw InputError("--points is required");
    const auto points = io::points_from_csv(io::read_file(cfg.points));

    std::string out = "re,im,h_re,h_im,resolution_flag\n";
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto z = points[i];
        if (!(std::abs(z) < 1.0))
            throw DomainError("points row " + std::to_string(i + 1) + ": |zeta| = " + io::format_double(std::abs(z)) +
                              " is not inside the unit disk");
        const auto ext = poisson_extend(boundary, DiskPoint(z));
        out += io::format_double(z.real()) + "," + io::format_double(z.imag()) + "," +
               io::format_double(ext.value.real()) + "," + io::format_double(ext.value.imag()) + "," +
               (ext.under_resolved ? "1" : "0") + "\n";
    }
    emit(cfg, out);
    return kOk;
}

int cmd_coeffs(const RunConfig& cfg) {
    const auto boundary = io::boundary_from_csv(require_input(cfg));
    if (cfg.radius) {
        const auto res = coefficients_at_radius(boundary, *cfg.radius, cfg.n_max);
        if (res.ill_conditioned)
            std::cerr << "warning: r^n_max < 1e-12, recovered high-order coefficients are ill-conditioned\n";
        emit(cfg, io::coefficients_to_json(res.coeffs));
    } else {
        emit(cfg, io::coefficients_to_json(coefficients_from_boundary(boundary, cfg.n_max)));
    }
    return kOk;
}

int cmd_project(const RunConfig& cfg) {
    const auto poly = io::mixed_polynomial_from_json(require_input(cfg));
    emit(cfg, io::coefficients_to_json(harmonic_projection(poly)));
    return kOk;
}

int cmd_means(const RunConfig& cfg) {
    const auto c = io::coefficients_from_json(require_input(cfg));
    const auto gauge = io::parse_gauge(cfg.gauge);
    const auto radii = radii_of(cfg);

    MeanTable table = [&] {
        if (gauge.holomorphic_only()) {
            if (!is_holomorphic(c))
                throw InputError("gauge " + cfg.gauge +
                                 " is not convex and requires holomorphic input (no negative-index terms)");
            const auto p = std::get<ConvexGauge::Power>(gauge.kind()).p;
            return holomorphic_subconvex_scan(c, p, radii, cfg.grid);
        }
        if (!gauge.proposition_eligible()) throw InputError("gauge " + cfg.gauge + " is not monotone and convex");
        return mean_scan(c, gauge, radii, cfg.grid);
    }();
    const double tol = gauge.holomorphic_only() ? kSubconvexMonotoneTolerance : kMeanMonotoneTolerance;
    const bool monotone = table.is_nondecreasing(tol);
    emit(cfg, io::mean_table_to_csv(table.radii, table.means) + "monotone: " + (monotone ? "true" : "false") + "\n");
    return monotone ? kOk : kNotMonotone;
}

int cmd_supmeans(const RunConfig& cfg) {
    const auto c = io::coefficients_from_json(require_input(cfg));
    const auto radii = radii_of(cfg);
    const auto sups = sup_scan(c, radii, cfg.grid);
    bool monotone = true;
    for (std::size_t i = 1; i < sups.size(); ++i)
        if (sups[i] + 1e-12 < sups[i - 1]) monotone = false;
    std::string out = "r,sup\n";
    for (std::size_t i = 0; i < radii.size(); ++i)
        out += io::format_double(radii[i]) + "," + io::format_double(sups[i]) + "\n";
    emit(cfg, out + "monotone: " + (monotone ? "true" : "false") + "\n");
    return monotone ? kOk : kNotMonotone;
}

std::string violation_path(const RunConfig& cfg) {
    return cfg.out.empty() ? std::string("vn_violation.json") : cfg.out + ".violation.json";
}

void dump_violation(const RunConfig& cfg, std::size_t trial, const Matrix& t, const ComplexPolynomial& p,
                    const VonNeumannResult& r) {
    const std::string text = "{\n\"trial\": " + std::to_string(trial) + ",\n\"lhs\": " + io::format_double(r.lhs) +
                             ",\n\"rhs\": " + io::format_double(r.rhs) + ",\n\"matrix\": " + io::matrix_to_json(t) +
                             ",\n\"polynomial\": " + io::polynomial_to_json(p) + "}\n";
    io::write_file(violation_path(cfg), text);
    std::cerr << "von Neumann inequality violated in trial " << trial << "; dumped to " << violation_path(cfg)
              << "\n";
}

std::string vn_row(std::size_t trial, const VonNeumannResult& r) {
    return std::to_string(trial) + "," + io::format_double(r.lhs) + "," + io::format_double(r.rhs) + "," +
           io::format_double(r.margin()) + "," + (r.holds ? "true" : "false") + "\n";
}

int cmd_vn_sweep(const RunConfig& cfg) {
    std::string out = "trial,lhs,rhs,margin,holds\n";

    if (!cfg.matrix.empty() || !cfg.poly.empty()) {
        if (cfg.matrix.empty() || cfg.poly.empty()) throw InputError("--matrix and --poly go together");
        auto m = io::matrix_from_json(io::read_file(cfg.matrix));
        const auto p = io::polynomial_from_json(io::read_file(cfg.poly));
        const auto t = cfg.unchecked ? ContractionOperator::unchecked(m) : [&] {
            try {
                return ContractionOperator(m);
            } catch (const std::invalid_argument& e) {
                throw InputError(e.what());
            }
        }();
        const auto r = von_neumann_check(p, t);
        emit(cfg, out + vn_row(0, r));
        if (!r.holds) {
            dump_violation(cfg, 0, m, p, r);
            return kInequalityViolation;
        }
        return kOk;
    }

    if (cfg.dim == 0) throw InputError("--dim must be positive");
    Pcg32 rng(cfg.seed);
    for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
        const auto dim = static_cast<std::size_t>(rng.uniform_int(1, static_cast<int>(cfg.dim)));
        const auto degree = static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(cfg.degree)));
        auto m = random_contraction(rng, dim);
        const auto p = random_polynomial(rng, degree);
        const auto r = von_neumann_check(p, ContractionOperator(m));
        out += vn_row(trial, r);
        if (!r.holds) {
            emit(cfg, out);
            dump_violation(cfg, trial, m, p, r);
            return kInequalityViolation;
        }
    }
    emit(cfg, out);
    return kOk;
}

int cmd_parseval(const RunConfig& cfg) {
    const auto boundary = io::boundary_from_csv(require_input(cfg));
    const double mean_square = circle_inner_product(boundary, boundary).real();
    const double coeff_sum = parseval_sum(coefficients_from_boundary(boundary, cfg.n_max), 1.0);
    emit(cfg, "mean_square,coefficient_sum,abs_diff\n" + io::format_double(mean_square) + "," +
                  io::format_double(coeff_sum) + "," + io::format_double(std::abs(mean_square - coeff_sum)) + "\n");
    return kOk;
}

int cmd_normality(const RunConfig& cfg) {
    FunctionFamily family(io::family_from_json(require_input(cfg)));
    const auto radii = radii_of(cfg);
    const auto cert = certify(family, radii, cfg.grid);
    std::string out = "r,M,C,M_from_coeffs\n";
    for (std::size_t i = 0; i < radii.size(); ++i) {
        const double s = 0.5 * (1.0 + radii[i]);
        out += io::format_double(radii[i]) + "," + io::format_double(cert.m_bounds[i]) + "," +
               io::format_double(cert.c_bounds[i]) + "," +
               io::format_double(function_bound_from_coefficients(family, radii[i], s)) + "\n";
    }
    emit(cfg, out);
    return kOk;
}

int cmd_extract(const RunConfig& cfg) {
    const auto seq = io::family_from_json(require_input(cfg));
    emit(cfg, io::extraction_to_json(extract_subsequence(seq, cfg.tol)));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Harmonic and holomorphic functions on the unit disk"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_io = [&](CLI::App* sub) {
        sub->add_option("--in", cfg.in, "Input file");
        sub->add_option("--out", cfg.out, "Output file (stdout when omitted)");
    };
    auto add_grid = [&](CLI::App* sub) { sub->add_option("--grid", cfg.grid, "Circle grid size m"); };
    auto add_radii = [&](CLI::App* sub) { sub->add_option("--radii", cfg.radii, "Radii, e.g. 0.1,0.5,0.9"); };

    auto* extend = app.add_subcommand("extend", "Poisson extension of boundary samples to interior points");
    add_io(extend);
    extend->add_option("--points", cfg.points, "CSV of interior points (re,im)");

    auto* coeffs = app.add_subcommand("coeffs", "Coefficients from boundary samples");
    add_io(coeffs);
    coeffs->add_option("--nmax", cfg.n_max, "Truncation index");
    coeffs->add_option("--radius", cfg.radius, "Samples were taken on the circle of this radius");

    auto* project = app.add_subcommand("project", "Harmonic projection of a mixed polynomial");
    add_io(project);

    auto* means = app.add_subcommand("means", "Convex integral means over radii");
    add_io(means);
    add_grid(means);
    add_radii(means);
    means->add_option("--gauge", cfg.gauge, "power:<p>, exp:<lambda> or file:<path>");

    auto* supmeans = app.add_subcommand("supmeans", "Circle maxima over radii");
    add_io(supmeans);
    add_grid(supmeans);
    add_radii(supmeans);

    auto* vn = app.add_subcommand("vn-sweep", "Randomized von Neumann inequality sweep");
    add_io(vn);
    vn->add_option("--seed", cfg.seed, "Generator seed");
    vn->add_option("--trials", cfg.trials, "Number of trials");
    vn->add_option("--dim", cfg.dim, "Maximum matrix dimension");
    vn->add_option("--degree", cfg.degree, "Maximum polynomial degree");
    vn->add_option("--matrix", cfg.matrix)->group("");
    vn->add_option("--poly", cfg.poly)->group("");
    vn->add_flag("--unchecked", cfg.unchecked)->group("");

    auto* parseval = app.add_subcommand("parseval", "Circle mean square vs coefficient sum");
    add_io(parseval);
    parseval->add_option("--nmax", cfg.n_max, "Truncation index");

    auto* normality = app.add_subcommand("normality", "M(r) and C(r) witnesses for a family");
    add_io(normality);
    add_grid(normality);
    add_radii(normality);

    auto* extract = app.add_subcommand("extract", "Diagonal subsequence extraction");
    add_io(extract);
    extract->add_option("--tol", cfg.tol, "Box side");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*extend) return cmd_extend(cfg);
        if (*coeffs) return cmd_coeffs(cfg);
        if (*project) return cmd_project(cfg);
        if (*means) return cmd_means(cfg);
        if (*supmeans) return cmd_supmeans(cfg);
        if (*vn) return cmd_vn_sweep(cfg);
        if (*parseval) return cmd_parseval(cfg);
        if (*normality) return cmd_normality(cfg);
        if (*extract) return cmd_extract(cfg);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomainError;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const io::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomainError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kInternal;
}
