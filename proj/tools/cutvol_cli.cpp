// Command-line front end: every pipeline of the library is exposed as a
// subcommand that reads flags and emits machine-readable JSON or CSV, either
// to stdout or to a file.  Runs are deterministic: fixed flags and seed
// always produce byte-identical output.

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cutvol/cutvol.hpp"
#include "cutvol/json_io.hpp"
#include "cutvol/verify.hpp"

namespace {

using cutvol::Json;

// Relative --out paths are joined with $CUTVOL_OUT_DIR when it is set.
std::filesystem::path resolve_output_path(const std::string& out) {
    std::filesystem::path path(out);
    if (path.is_relative()) {
        if (const char* dir = std::getenv("CUTVOL_OUT_DIR"); dir != nullptr && *dir != '\0')
            path = std::filesystem::path(dir) / path;
    }
    return path;
}

void emit(const std::string& out, const std::string& content) {
    if (out.empty()) {
        std::cout << content;
        return;
    }
    const std::filesystem::path path = resolve_output_path(out);
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file)
        throw cutvol::Error("cannot open output file: " + path.string());
    file << content;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Shortest round-trip decimal form; deterministic for identical doubles.
std::string fmt(double x) { return Json(x).dump(); }

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ','))
        values.push_back(std::stod(cell));
    if (values.empty())
        throw cutvol::DomainError("expected a comma-separated list of numbers");
    return values;
}

std::string bipoly_csv(const std::string& name, const cutvol::BiPoly& p) {
    std::string rows;
    for (const auto& [key, coef] : p.terms())
        for (const auto& [pi, q] : coef.terms())
            rows += name + "," + std::to_string(key.first) + "," + std::to_string(key.second) +
                    "," + std::to_string(pi) + "," + cutvol::to_fraction_string(q) + "\n";
    return rows;
}

Json residual_table_json(const std::vector<cutvol::FitReport>& table) {
    Json rows = Json::array();
    for (const auto& rep : table)
        rows.push_back(Json{{"degree", rep.degree},
                            {"max_abs_residual", rep.max_abs_residual},
                            {"rms_residual", rep.rms_residual}});
    return rows;
}

std::string residual_table_csv(const std::vector<cutvol::FitReport>& table) {
    std::string out = "degree,max_abs_residual,rms_residual\n";
    for (const auto& rep : table)
        out += std::to_string(rep.degree) + "," + fmt(rep.max_abs_residual) + "," +
               fmt(rep.rms_residual) + "\n";
    return out;
}

// -------------------------------------------------------------- tube-poly --

struct TubePolyArgs {
    int k = 1;
    int m = 1;
    std::string eps = "1/2";
    std::string out;
    std::string format = "json";
};

void run_tube_poly(const TubePolyArgs& args) {
    const cutvol::TubeSpec spec(args.k, args.m, cutvol::parse_rational(args.eps));
    const cutvol::BiPoly dvdb = cutvol::tube_dvdb(spec);
    const cutvol::BiPoly cut = cutvol::tube_cut_poly(spec);

    if (args.format == "csv") {
        std::string out = "poly,a_power,b_power,pi_power,coef\n";
        out += bipoly_csv("dvdb", dvdb);
        out += bipoly_csv("cut", cut);
        emit(args.out, out);
        return;
    }
    emit(args.out, dump(Json{{"k", spec.k},
                             {"m", spec.m},
                             {"epsilon", cutvol::to_fraction_string(spec.epsilon)},
                             {"ambient_dim", spec.ambient_dim()},
                             {"pi_grade", spec.k + (spec.m + 1) / 2},
                             {"dvdb", cutvol::to_json(dvdb)},
                             {"cut_poly", cutvol::to_json(cut)},
                             {"cut_degree", cut.total_degree()}}));
}

// ----------------------------------------------------------------- verify --

struct VerifyArgs {
    cutvol::VerifyConfig config;
    std::string eps = "1/2";
    std::string out;
    std::string format = "json";
};

int run_verify_cmd(const VerifyArgs& args) {
    cutvol::VerifyConfig config = args.config;
    config.epsilon = cutvol::parse_rational(args.eps);
    const cutvol::VerifyReport report = cutvol::run_verify(config);
    if (args.format == "csv")
        emit(args.out, cutvol::to_csv(report));
    else
        emit(args.out, dump(cutvol::to_json(report)));
    return report.all_pass ? 0 : 1;
}

// -------------------------------------------------------------------- fit --

struct FitArgs {
    std::string in;
    int degree = -1;
    int dmax = 10;
    double tol = 1e-9;
    std::string out;
    std::string format = "json";
};

void run_fit(const FitArgs& args) {
    std::ifstream file(args.in);
    if (!file)
        throw cutvol::Error("cannot open input file: " + args.in);
    const cutvol::SampleSet samples = cutvol::SampleSet::read_csv(file);

    if (args.degree >= 0) {
        const cutvol::FitReport report = cutvol::fit_poly(samples, args.degree);
        if (args.format == "csv") {
            // Plot-ready: each sample with its fitted value and residual.
            const auto basis = cutvol::detail::monomial_basis(samples.arity(), args.degree);
            std::string out;
            for (const auto& name : samples.var_names)
                out += name + ",";
            out += "value,fitted,residual\n";
            for (const auto& [x, v] : samples.points) {
                double fitted = 0.0;
                for (std::size_t c = 0; c < basis.size(); ++c)
                    fitted += report.coefficients[c] * std::pow(x[0], basis[c][0]) *
                              std::pow(samples.arity() == 2 ? x[1] : 1.0, basis[c][1]);
                for (const double xi : x)
                    out += fmt(xi) + ",";
                out += fmt(v) + "," + fmt(fitted) + "," + fmt(fitted - v) + "\n";
            }
            emit(args.out, out);
            return;
        }
        emit(args.out, dump(Json{{"mode", "fixed-degree"},
                                 {"input", args.in},
                                 {"var_names", samples.var_names},
                                 {"points", samples.points.size()},
                                 {"report", cutvol::to_json(report)}}));
        return;
    }

    const cutvol::DetectionResult result = cutvol::detect_degree(samples, args.dmax, args.tol);
    if (args.format == "csv") {
        emit(args.out, residual_table_csv(result.table));
        return;
    }
    emit(args.out,
         dump(Json{{"mode", "detect"},
                   {"input", args.in},
                   {"var_names", samples.var_names},
                   {"points", samples.points.size()},
                   {"dmax", args.dmax},
                   {"tol", args.tol},
                   {"detected", result.detected ? Json(*result.detected) : Json("none")},
                   {"report", cutvol::to_json(result.report)},
                   {"residual_table", residual_table_json(result.table)}}));
}

// -------------------------------------------------------------- classical --

struct ClassicalArgs {
    std::string body;
    int N = 3;
    double h = std::numeric_limits<double>::quiet_NaN();
    double d = 1.0;
    double offset = 0.0;
    std::string semiaxes;
    std::string normal;
    std::string c;
    std::string out;
    std::string format = "json";
};

std::string curve_csv(const std::string& var, const std::vector<std::pair<double, double>>& xs) {
    std::string out = var + ",volume\n";
    for (const auto& [x, v] : xs)
        out += fmt(x) + "," + fmt(v) + "\n";
    return out;
}

void run_classical(const ClassicalArgs& args) {
    const bool have_h = !std::isnan(args.h);

    if (args.body == "ball") {
        if (args.format == "csv") {
            std::vector<std::pair<double, double>> curve;
            for (int i = 0; i <= 100; ++i) {
                const double h = -1.0 + 2.0 * i / 100.0;
                curve.emplace_back(h, cutvol::ball_cap(args.N, h));
            }
            emit(args.out, curve_csv("h", curve));
            return;
        }
        Json j{{"body", "ball"}, {"N", args.N}};
        if (args.N % 2 == 1) {
            j["certificate"] = "polynomial";
            j["cap_poly"] = cutvol::to_json(cutvol::ball_cap_poly(args.N));
        } else {
            if (!have_h)
                throw cutvol::DomainError(
                    "ball: even dimension has no cap polynomial; pass --height for a value");
            j["certificate"] = "transcendental-suspected";
        }
        if (have_h) {
            j["h"] = args.h;
            j["volume"] = cutvol::ball_cap(args.N, args.h);
        }
        emit(args.out, dump(j));
        return;
    }

    if (args.body == "hyperboloid") {
        const cutvol::UniPoly cap = cutvol::hyperboloid_cap_poly(args.N);
        if (args.format == "csv") {
            const double hmax = have_h && args.h > 1.0 ? args.h : 2.0;
            std::vector<std::pair<double, double>> curve;
            for (int i = 0; i <= 100; ++i) {
                const double h = 1.0 + (hmax - 1.0) * i / 100.0;
                curve.emplace_back(h, cap(h));
            }
            emit(args.out, curve_csv("h", curve));
            return;
        }
        Json j{{"body", "hyperboloid"},
               {"N", args.N},
               {"certificate", "polynomial"},
               {"cap_poly", cutvol::to_json(cap)}};
        if (have_h) {
            if (args.h < 1.0)
                throw cutvol::DomainError("hyperboloid: cap height must satisfy h >= 1");
            j["h"] = args.h;
            j["volume"] = cap(args.h);
        }
        emit(args.out, dump(j));
        return;
    }

    if (args.body == "paraboloid") {
        std::vector<double> c(static_cast<std::size_t>(args.N - 1), 0.0);
        if (!args.c.empty()) {
            c = parse_double_list(args.c);
            if (static_cast<int>(c.size()) != args.N - 1)
                throw cutvol::DomainError("paraboloid: --c must list N-1 slope coefficients");
        }
        if (args.format == "csv") {
            const double dmax = args.d > 0.0 ? args.d : 1.0;
            std::vector<std::pair<double, double>> curve;
            for (int i = 0; i <= 100; ++i) {
                const double d = dmax * i / 100.0;
                curve.emplace_back(d, cutvol::paraboloid_cut(args.N, c, d).volume);
            }
            emit(args.out, curve_csv("d", curve));
            return;
        }
        const cutvol::QuadricCut cut = cutvol::paraboloid_cut(args.N, c, args.d);
        emit(args.out, dump(Json{{"body", "paraboloid"},
                                 {"N", args.N},
                                 {"c", c},
                                 {"d", args.d},
                                 {"volume", cut.volume},
                                 {"certificate", to_string(cut.certificate)}}));
        return;
    }

    if (args.body == "ellipsoid") {
        if (args.semiaxes.empty() || args.normal.empty())
            throw cutvol::DomainError("ellipsoid: --semiaxes and --normal are required");
        const cutvol::EllipsoidSpec spec(parse_double_list(args.semiaxes));
        const std::vector<double> normal = parse_double_list(args.normal);
        if (spec.dimension() != args.N || static_cast<int>(normal.size()) != args.N)
            throw cutvol::DomainError("ellipsoid: --semiaxes and --normal must have N entries");
        if (args.format == "csv") {
            double scale = 0.0;
            for (int i = 0; i < args.N; ++i)
                scale += spec.semiaxes[i] * normal[i] * (spec.semiaxes[i] * normal[i]);
            scale = std::sqrt(scale);
            std::vector<std::pair<double, double>> curve;
            for (int i = 0; i <= 100; ++i) {
                const double beta = -scale + 2.0 * scale * i / 100.0;
                const cutvol::Hyperplane plane{normal, {}, beta};
                curve.emplace_back(beta, cutvol::ellipsoid_cut(spec, plane).volume);
            }
            emit(args.out, curve_csv("offset", curve));
            return;
        }
        const cutvol::Hyperplane plane{normal, {}, args.offset};
        const cutvol::QuadricCut cut = cutvol::ellipsoid_cut(spec, plane);
        emit(args.out, dump(Json{{"body", "ellipsoid"},
                                 {"N", args.N},
                                 {"semiaxes", spec.semiaxes},
                                 {"normal", normal},
                                 {"offset", args.offset},
                                 {"volume", cut.volume},
                                 {"certificate", to_string(cut.certificate)}}));
        return;
    }

    throw cutvol::DomainError("unknown body: " + args.body +
                              " (expected ball, ellipsoid, paraboloid or hyperboloid)");
}

// ------------------------------------------------------------ newton-demo --

struct NewtonArgs {
    int dmax = 15;
    int points = 200;
    double tol = 1e-6;
    std::string out;
    std::string format = "json";
};

void run_newton_demo(const NewtonArgs& args) {
    if (args.points < 2)
        throw cutvol::DomainError("newton-demo: need at least 2 sample points");
    cutvol::SampleSet samples;
    samples.var_names = {"b"};
    samples.tag = "disk-segment-area";
    for (int i = 0; i < args.points; ++i) {
        const double b = -0.95 + 1.9 * i / (args.points - 1);
        samples.points.push_back({{b}, cutvol::disk_segment_area(b)});
    }

    if (args.format == "csv") {
        // Plot-ready sampled curve.
        std::ostringstream out;
        samples.write_csv(out);
        emit(args.out, out.str());
        return;
    }

    const cutvol::DetectionResult result =
        cutvol::detect_degree(samples, args.dmax, args.tol);
    emit(args.out,
         dump(Json{{"curve", samples.tag},
                   {"points", args.points},
                   {"b_range", Json::array({-0.95, 0.95})},
                   {"dmax", args.dmax},
                   {"tol", args.tol},
                   {"detected", result.detected ? Json(*result.detected) : Json("none")},
                   {"residual_table", residual_table_json(result.table)}}));
}

void add_output_flags(CLI::App* cmd, std::string& out, std::string& format) {
    cmd->add_option("--out", out, "Output file (default: stdout); relative paths are joined "
                                  "with $CUTVOL_OUT_DIR when set");
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and numeric cut-volume computations for tube and quadric bodies"};
    app.require_subcommand(1);
    int exit_code = 0;

    TubePolyArgs tube_args;
    CLI::App* tube = app.add_subcommand(
        "tube-poly", "Exact cut-volume polynomial of a sphere tube neighborhood");
    tube->add_option("--k", tube_args.k, "Sphere parameter: the sphere S^2k lives in R^(2k+1)")
        ->capture_default_str();
    tube->add_option("--m", tube_args.m, "Codimension of the sphere factor")
        ->capture_default_str();
    tube->add_option("--eps", tube_args.eps, "Tube radius as an exact rational p/q in (0,1)")
        ->capture_default_str();
    add_output_flags(tube, tube_args.out, tube_args.format);
    tube->callback([&] { run_tube_poly(tube_args); });

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand(
        "verify", "Cross-check the exact engine against quadrature and Monte Carlo");
    verify->add_option("--k-max", verify_args.config.k_max, "Largest sphere parameter k")
        ->capture_default_str();
    verify->add_option("--m-max", verify_args.config.m_max, "Largest codimension m")
        ->capture_default_str();
    verify->add_option("--eps", verify_args.eps, "Tube radius as an exact rational p/q")
        ->capture_default_str();
    verify->add_option("--a", verify_args.config.a, "Slope of the Monte Carlo probe hyperplane")
        ->capture_default_str();
    verify->add_option("--b", verify_args.config.b, "Offset of the Monte Carlo probe hyperplane")
        ->capture_default_str();
    verify->add_option("--samples", verify_args.config.samples, "Monte Carlo sample count")
        ->capture_default_str();
    verify->add_option("--seed", verify_args.config.seed, "Monte Carlo seed")
        ->capture_default_str();
    verify->add_option("--tol", verify_args.config.tol,
                       "Relative tolerance for exact-vs-quadrature checks")
        ->capture_default_str();
    add_output_flags(verify, verify_args.out, verify_args.format);
    verify->callback([&] { exit_code = run_verify_cmd(verify_args); });

    FitArgs fit_args;
    CLI::App* fit = app.add_subcommand(
        "fit", "Least-squares polynomial fit / degree detection on CSV samples");
    fit->add_option("--in", fit_args.in, "Input CSV (header: variable names..., value)")
        ->required();
    fit->add_option("--degree", fit_args.degree,
                     "Fit this exact degree (omit to auto-detect up to --dmax)");
    fit->add_option("--dmax", fit_args.dmax, "Largest degree tried in detection mode")
        ->capture_default_str();
    fit->add_option("--tol", fit_args.tol, "Max-abs residual threshold for detection")
        ->capture_default_str();
    add_output_flags(fit, fit_args.out, fit_args.format);
    fit->callback([&] { run_fit(fit_args); });

    ClassicalArgs classical_args;
    CLI::App* classical = app.add_subcommand(
        "classical", "Cut volumes of classical quadrics with algebraicity certificates");
    classical->add_option("--body", classical_args.body,
                          "One of: ball, ellipsoid, paraboloid, hyperboloid")
        ->required();
    classical->add_option("--N", classical_args.N, "Ambient dimension")->capture_default_str();
    classical->add_option("--height", classical_args.h,
                          "Cap height (ball: in [-1,1]; hyperboloid: >= 1)");
    classical->add_option("--d", classical_args.d, "Paraboloid cut offset")->capture_default_str();
    classical->add_option("--c", classical_args.c,
                          "Paraboloid cut slopes, comma-separated (N-1 entries)");
    classical->add_option("--semiaxes", classical_args.semiaxes,
                          "Ellipsoid semiaxes, comma-separated (N entries)");
    classical->add_option("--normal", classical_args.normal,
                          "Ellipsoid cut normal, comma-separated (N entries)");
    classical->add_option("--offset", classical_args.offset, "Ellipsoid cut offset")
        ->capture_default_str();
    add_output_flags(classical, classical_args.out, classical_args.format);
    classical->callback([&] { run_classical(classical_args); });

    NewtonArgs newton_args;
    CLI::App* newton = app.add_subcommand(
        "newton-demo", "Degree detection on the transcendental disk-segment area (control)");
    newton->add_option("--dmax", newton_args.dmax, "Largest degree tried")->capture_default_str();
    newton->add_option("--points", newton_args.points, "Sample count over b in [-0.95, 0.95]")
        ->capture_default_str();
    newton->add_option("--tol", newton_args.tol, "Max-abs residual threshold")
        ->capture_default_str();
    add_output_flags(newton, newton_args.out, newton_args.format);
    newton->callback([&] { run_newton_demo(newton_args); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
