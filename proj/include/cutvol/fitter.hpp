#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cutvol/errors.hpp"

namespace cutvol {

// Labelled scalar samples over one or two input variables.
struct SampleSet {
    std::vector<std::string> var_names;                      // size 1 or 2
    std::vector<std::pair<std::vector<double>, double>> points;
    std::string tag;

    int arity() const { return static_cast<int>(var_names.size()); }

    void validate() const {
        if (var_names.empty() || var_names.size() > 2)
            throw DomainError("SampleSet: inputs must have 1 or 2 variables");
        if (points.empty())
            throw DomainError("SampleSet: at least one point required");
        for (const auto& [x, v] : points) {
            if (x.size() != var_names.size())
                throw DomainError("SampleSet: point arity mismatch");
            if (!std::isfinite(v))
                throw DomainError("SampleSet: non-finite sample value");
            for (const double xi : x)
                if (!std::isfinite(xi))
                    throw DomainError("SampleSet: non-finite sample input");
        }
    }

    // CSV with a header row: variable names followed by "value".
    void write_csv(std::ostream& out) const {
        for (const auto& name : var_names)
            out << name << ",";
        out << "value\n";
        out.precision(17);
        for (const auto& [x, v] : points) {
            for (const double xi : x)
                out << xi << ",";
            out << v << "\n";
        }
    }

    static SampleSet read_csv(std::istream& in) {
        SampleSet s;
        std::string line;
        if (!std::getline(in, line))
            throw DomainError("SampleSet: empty CSV");
        std::vector<std::string> header;
        {
            std::stringstream ss(line);
            std::string cell;
            while (std::getline(ss, cell, ','))
                header.push_back(cell);
        }
        if (header.size() < 2 || header.back() != "value")
            throw DomainError("SampleSet: CSV header must end with \"value\"");
        s.var_names.assign(header.begin(), header.end() - 1);
        while (std::getline(in, line)) {
            if (line.empty())
                continue;
            std::stringstream ss(line);
            std::string cell;
            std::vector<double> row;
            while (std::getline(ss, cell, ','))
                row.push_back(std::stod(cell));
            if (row.size() != header.size())
                throw DomainError("SampleSet: CSV row width mismatch");
            const double v = row.back();
            row.pop_back();
            s.points.emplace_back(std::move(row), v);
        }
        s.validate();
        return s;
    }
};

// Least-squares fit result over the monomial basis of total degree <= degree,
// in graded-lex order (by total degree, then descending power of the first
// variable).
struct FitReport {
    int degree = 0;
    std::vector<double> coefficients;
    double max_abs_residual = 0.0;
    double rms_residual = 0.0;
};

namespace detail {

// Exponent tuples of the degree-d monomial space in graded-lex order.
inline std::vector<std::array<int, 2>> monomial_basis(int arity, int degree) {
    std::vector<std::array<int, 2>> basis;
    for (int total = 0; total <= degree; ++total) {
        if (arity == 1) {
            basis.push_back({total, 0});
        } else {
            for (int i = total; i >= 0; --i)
                basis.push_back({i, total - i});
        }
    }
    return basis;
}

} // namespace detail

inline FitReport fit_poly(const SampleSet& samples, int degree) {
    samples.validate();
    if (degree < 0)
        throw DomainError("fit_poly: degree must be non-negative");

    const auto basis = detail::monomial_basis(samples.arity(), degree);
    const auto rows = static_cast<Eigen::Index>(samples.points.size());
    const auto cols = static_cast<Eigen::Index>(basis.size());
    if (rows < cols)
        throw RankDeficient("fit_poly: fewer samples than basis monomials");

    Eigen::MatrixXd design(rows, cols);
    Eigen::VectorXd rhs(rows);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const auto& [x, v] = samples.points[static_cast<std::size_t>(r)];
        rhs(r) = v;
        const double x0 = x[0];
        const double x1 = samples.arity() == 2 ? x[1] : 0.0;
        for (Eigen::Index c = 0; c < cols; ++c) {
            const auto& [e0, e1] = basis[static_cast<std::size_t>(c)];
            design(r, c) = std::pow(x0, e0) * std::pow(x1, e1);
        }
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    if (qr.rank() < cols)
        throw RankDeficient("fit_poly: design matrix rank below coefficient count");
    const Eigen::VectorXd coef = qr.solve(rhs);
    const Eigen::VectorXd residual = design * coef - rhs;

    FitReport report;
    report.degree = degree;
    report.coefficients.assign(coef.data(), coef.data() + coef.size());
    report.max_abs_residual = residual.cwiseAbs().maxCoeff();
    report.rms_residual = std::sqrt(residual.squaredNorm() / static_cast<double>(rows));
    return report;
}

struct DetectionResult {
    std::optional<int> detected;   // smallest degree meeting the tolerance
    FitReport report;              // the detected fit, or the best attempt when none
    std::vector<FitReport> table;  // one row per tried degree
};

// Smallest degree d <= dmax whose fit has max-abs residual below tol.
// All degrees up to dmax (or the detected one) are reported so callers can
// plot the residual-versus-degree curve.
inline DetectionResult detect_degree(const SampleSet& samples, int dmax, double tol) {
    if (dmax < 0)
        throw DomainError("detect_degree: dmax must be non-negative");
    if (!(tol > 0))
        throw DomainError("detect_degree: tolerance must be positive");

    DetectionResult result;
    std::optional<std::size_t> best;
    for (int d = 0; d <= dmax; ++d) {
        const auto basis_size = detail::monomial_basis(samples.arity(), d).size();
        if (samples.points.size() < basis_size)
            break; // not enough samples to go higher
        result.table.push_back(fit_poly(samples, d));
        const FitReport& rep = result.table.back();
        if (!best || rep.max_abs_residual < result.table[*best].max_abs_residual)
            best = result.table.size() - 1;
        if (rep.max_abs_residual < tol) {
            result.detected = d;
            result.report = rep;
            return result;
        }
    }
    if (result.table.empty())
        throw RankDeficient("detect_degree: not enough samples for any degree");
    result.report = result.table[*best];
    return result;
}

// Area of the disk segment { x^2 + y^2 <= 1, x >= b }: the classical
// transcendental cut-area of the disk.
inline double disk_segment_area(double b) {
    if (std::fabs(b) > 1.0)
        throw DomainError("disk_segment_area: offset must lie in [-1, 1]");
    return std::acos(b) - b * std::sqrt(1.0 - b * b);
}

} // namespace cutvol
