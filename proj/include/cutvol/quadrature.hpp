#pragma once

#include <cmath>
#include <concepts>
#include <cstdint>
#include <vector>

#include "cutvol/errors.hpp"

namespace cutvol {

namespace detail {

// Gauss 7 / Kronrod 15 pair on [-1, 1] (QUADPACK dqk15 nodes and weights).
struct Gk15Result {
    double value;
    double error;
};

template <std::invocable<double> F>
Gk15Result gk15(F&& f, double lo, double hi) {
    static constexpr double xgk[8] = {
        0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
        0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
        0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
        0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
    static constexpr double wgk[8] = {
        0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
        0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
        0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
        0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
    static constexpr double wg[4] = {
        0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
        0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);

    const double fc = f(center);
    double kronrod = wgk[7] * fc;
    double gauss = wg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * xgk[i];
        const double fsum = f(center - dx) + f(center + dx);
        kronrod += wgk[i] * fsum;
        if (i % 2 == 1)
            gauss += wg[i / 2] * fsum;
    }
    kronrod *= half;
    gauss *= half;

    const double diff = std::fabs(kronrod - gauss);
    double err = diff * 200.0;
    err = err * std::sqrt(err);
    if (err > diff)
        err = diff;
    err = std::fmax(err, 5e-16 * std::fabs(kronrod));
    return {kronrod, err};
}

} // namespace detail

struct QuadOptions {
    long max_intervals = 100000; // refinement budget
};

// Deterministic error-controlled integration of f over [lo, hi]:
// Gauss-Kronrod base rule plus interval bisection, local error allowance
// proportional to interval length. Throws QuadratureFailure when the
// budget is exhausted before |result - integral| <= abs_tol.
template <std::invocable<double> F>
double adaptive_quad(F&& f, double lo, double hi, double abs_tol, QuadOptions opts = {}) {
    if (!(abs_tol > 0))
        throw DomainError("adaptive_quad: tolerance must be positive");
    if (lo == hi)
        return 0.0;

    struct Interval {
        double lo, hi;
    };
    std::vector<Interval> stack{{lo, hi}};
    const double total_len = std::fabs(hi - lo);
    double sum = 0.0;
    long used = 0;

    while (!stack.empty()) {
        const Interval iv = stack.back();
        stack.pop_back();
        if (++used > opts.max_intervals)
            throw QuadratureFailure("adaptive_quad: interval budget exhausted");

        const auto r = detail::gk15(f, iv.lo, iv.hi);
        const double local_tol = abs_tol * (std::fabs(iv.hi - iv.lo) / total_len);
        const double width = std::fabs(iv.hi - iv.lo);
        if (r.error <= local_tol || width <= 1e-14 * total_len) {
            sum += r.value;
            continue;
        }
        const double mid = 0.5 * (iv.lo + iv.hi);
        stack.push_back({iv.lo, mid});
        stack.push_back({mid, iv.hi});
    }
    return sum;
}

// Nested 2D integral of f(x, y) over x in [x_lo, x_hi], y in [y_lo(x), y_hi(x)].
// The inner tolerance is split off the outer one so the total absolute
// error stays within abs_tol.
template <class F, class LoFn, class HiFn>
double adaptive_quad_2d(F&& f, double x_lo, double x_hi, LoFn&& y_lo, HiFn&& y_hi,
                        double abs_tol, QuadOptions opts = {}) {
    if (!(abs_tol > 0))
        throw DomainError("adaptive_quad_2d: tolerance must be positive");
    const double width = std::fabs(x_hi - x_lo);
    if (width == 0.0)
        return 0.0;
    const double inner_tol = 0.5 * abs_tol / width;
    auto outer = [&](double x) {
        return adaptive_quad([&](double y) { return f(x, y); }, y_lo(x), y_hi(x), inner_tol, opts);
    };
    return adaptive_quad(outer, x_lo, x_hi, 0.5 * abs_tol, opts);
}

// Convenience overload for a rectangle.
template <class F>
double adaptive_quad_2d(F&& f, double x_lo, double x_hi, double y_lo, double y_hi,
                        double abs_tol, QuadOptions opts = {}) {
    return adaptive_quad_2d(std::forward<F>(f), x_lo, x_hi,
                            [y_lo](double) { return y_lo; },
                            [y_hi](double) { return y_hi; }, abs_tol, opts);
}

} // namespace cutvol
