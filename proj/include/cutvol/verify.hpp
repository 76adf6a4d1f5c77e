#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "cutvol/json_io.hpp"
#include "cutvol/tube.hpp"
#include "cutvol/tube_oracle.hpp"
#include "cutvol/wallis.hpp"

namespace cutvol {

struct VerifyConfig {
    int k_max = 2;
    int m_max = 2;
    Rational epsilon{1, 2};
    double a = 0.1;  // probe point for the Monte Carlo cross-check
    double b = 0.05;
    std::uint64_t samples = 2'000'000;
    std::uint64_t seed = 20240901;
    double tol = 1e-9;

    // Below this, binomial error bars are too wide to be informative and
    // the MC checks are reported as skipped.
    static constexpr std::uint64_t min_powered_samples = 100'000;
};

struct VerifyCheck {
    std::string name;
    std::string status; // "pass", "fail" or "skipped"
    double deviation = 0.0;
    double threshold = 0.0;
    std::string note;
};

struct VerifyReport {
    VerifyConfig config;
    std::vector<VerifyCheck> checks;
    bool all_pass = true;
};

namespace detail {

inline void push_check(VerifyReport& report, std::string name, bool pass, double deviation,
                       double threshold, std::string note = {}) {
    report.checks.push_back(
        {std::move(name), pass ? "pass" : "fail", deviation, threshold, std::move(note)});
    report.all_pass = report.all_pass && pass;
}

// Deterministic lacuna probe points for a given spec.
inline std::vector<NormalForm> lacuna_probes(const TubeSpec& spec, int count) {
    const double eps = to_double(spec.epsilon);
    const double reach = 0.9 * std::sqrt(1.0 - eps);
    std::vector<NormalForm> points;
    for (int i = 0; i < count; ++i) {
        const double t = reach * (i + 1) / (count + 1);
        const double split = 0.3 + 0.4 * ((i * 7) % 11) / 10.0;
        points.push_back({t * split / eps, t * (1.0 - split)});
    }
    return points;
}

} // namespace detail

// Cross-verification of the exact engine against the independent numeric
// oracles over a small parameter grid. Deterministic for fixed config.
inline VerifyReport run_verify(const VerifyConfig& cfg) {
    VerifyReport report;
    report.config = cfg;

    // Wallis values against direct quadrature.
    for (const auto [p, q] : {std::pair{0, 0}, {1, 1}, {2, 2}, {3, 4}, {6, 2}}) {
        const double exact = wallis(p, q).to_double();
        const double quad = adaptive_quad(
            [p = p, q = q](double t) {
                return std::pow(std::sin(t), p) * std::pow(std::cos(t), q);
            },
            0.0, std::numbers::pi / 2, 1e-13);
        const double dev = std::fabs(exact - quad);
        detail::push_check(report,
                           "wallis(" + std::to_string(p) + "," + std::to_string(q) +
                               ") vs quadrature",
                           dev <= 1e-12, dev, 1e-12);
    }

    for (int k = 1; k <= cfg.k_max; ++k) {
        for (int m = 1; m <= cfg.m_max; ++m) {
            const TubeSpec spec(k, m, cfg.epsilon);
            const std::string label =
                "tube(k=" + std::to_string(k) + ",m=" + std::to_string(m) + ")";
            const BiPoly q = tube_dvdb(spec);
            const BiPoly p = tube_cut_poly(spec);

            // Structural contracts of the cut polynomial.
            const unsigned grade = static_cast<unsigned>(k + (m + 1) / 2);
            const bool structural = q.even_in_a() && q.even_in_b() && p.odd_in_b() &&
                                    q.total_degree() <= 2 * (k - 1) &&
                                    p.total_degree() <= 2 * k - 1 &&
                                    q.has_uniform_pi_grade(grade);
            detail::push_check(report, label + " structure (parity/degree/pi-grade)",
                               structural, structural ? 0.0 : 1.0, 0.0, "exact");

            // Exact dV/db against direct quadrature of the fiber integral.
            double worst = 0.0;
            for (const NormalForm& nf : detail::lacuna_probes(spec, 5)) {
                const double exact = q(nf.a, nf.b);
                const double numeric = quad_dvdb(spec, nf.a, nf.b, 1e-12);
                worst = std::fmax(worst, std::fabs(exact - numeric) / std::fabs(numeric));
            }
            detail::push_check(report, label + " dV/db exact vs quadrature", worst <= cfg.tol,
                               worst, cfg.tol);

            // Central symmetry: b = 0 splits the volume exactly in half.
            const double central = p(0.37, 0.0);
            detail::push_check(report, label + " b=0 section has P=0", central == 0.0,
                               std::fabs(central), 0.0, "exact");
        }
    }

    // End-to-end Monte Carlo cross-check at the probe hyperplane.
    {
        const TubeSpec spec(1, 1, cfg.epsilon);
        const NormalForm nf{cfg.a, cfg.b};
        if (!in_lacuna(spec, nf)) {
            report.checks.push_back({"tube(k=1,m=1) volumes vs Monte Carlo", "fail", 0.0, 0.0,
                                     "probe point outside lacuna"});
            report.all_pass = false;
        } else if (cfg.samples < VerifyConfig::min_powered_samples) {
            report.checks.push_back({"tube(k=1,m=1) volumes vs Monte Carlo", "skipped", 0.0,
                                     0.0, "low power: fewer than 100000 samples"});
        } else {
            const Hyperplane h = make_reduced_hyperplane(spec, cfg.a, cfg.b);
            const TwoValuedVolume tv = tube_volumes(spec, h, 1e-10);
            const McEstimate mc =
                mc_cut_volume(make_tube_body(spec), hyperplane_functional(h), cfg.samples,
                              cfg.seed);
            const double dev = std::fmax(std::fabs(mc.side_minus - tv.bigger),
                                         std::fabs(mc.side_plus - tv.smaller));
            const double bound = 3.0 * mc.stderr_est;
            detail::push_check(report, "tube(k=1,m=1) volumes vs Monte Carlo", dev <= bound,
                               dev, bound,
                               "samples=" + std::to_string(cfg.samples));
        }
    }

    return report;
}

inline Json to_json(const VerifyReport& report) {
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json row{{"name", c.name},
                 {"status", c.status},
                 {"deviation", c.deviation},
                 {"threshold", c.threshold}};
        if (!c.note.empty())
            row["note"] = c.note;
        checks.push_back(std::move(row));
    }
    return Json{{"config",
                 Json{{"k_max", report.config.k_max},
                      {"m_max", report.config.m_max},
                      {"epsilon", to_fraction_string(report.config.epsilon)},
                      {"a", report.config.a},
                      {"b", report.config.b},
                      {"samples", report.config.samples},
                      {"seed", report.config.seed},
                      {"tol", report.config.tol}}},
                {"checks", std::move(checks)},
                {"all_pass", report.all_pass}};
}

inline std::string to_csv(const VerifyReport& report) {
    std::string out = "name,status,deviation,threshold\n";
    for (const auto& c : report.checks) {
        out += c.name + "," + c.status + "," + Json(c.deviation).dump() + "," +
               Json(c.threshold).dump() + "\n";
    }
    return out;
}

} // namespace cutvol
