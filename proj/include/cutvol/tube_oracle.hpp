#pragma once

#include <cmath>
#include <numbers>

#include "cutvol/quadrature.hpp"
#include "cutvol/tube.hpp"

namespace cutvol {

namespace detail {

// Unit-ball volume from the Gamma function; kept separate from the exact
// module so the quadrature oracle does not share its constants.
inline double unit_ball_volume_numeric(int p) {
    return std::pow(std::numbers::pi, 0.5 * p) / std::tgamma(0.5 * p + 1.0);
}

} // namespace detail

// Numeric value of dV/db at (a, b) by direct adaptive quadrature of the
// fiber-layer integral in its trigonometric form (single integral for
// m = 1, nested for m > 1).
inline double quad_dvdb(const TubeSpec& spec, double a, double b, double tol) {
    if (!(tol > 0))
        throw DomainError("quad_dvdb: tolerance must be positive");
    if (!in_lacuna(spec, {a, b}))
        throw OutsideLacuna("quad_dvdb: (a, b) outside the lacuna domain");

    const int k = spec.k;
    const int m = spec.m;
    const double eps = to_double(spec.epsilon);
    const double half_pi = std::numbers::pi / 2;

    auto layer_diff = [k](double u, double w) {
        return detail::ipow(u + w, k) - detail::ipow(u - w, k);
    };

    if (m == 1) {
        const double prefactor = detail::unit_ball_volume_numeric(2 * k) * eps;
        auto f = [&](double phi) {
            const double c = std::cos(phi);
            const double t = a * eps * std::sin(phi) + b;
            return layer_diff(1.0 - t * t, eps * c) * c;
        };
        return prefactor * adaptive_quad(f, -half_pi, half_pi, tol / prefactor);
    }

    const double prefactor = (m - 1) * detail::unit_ball_volume_numeric(m - 1) *
                             detail::unit_ball_volume_numeric(2 * k) * std::pow(eps, m);
    auto f = [&](double phi, double theta) {
        const double cphi = std::cos(phi);
        const double t = a * eps * std::sin(phi) + b;
        const double u = 1.0 - t * t;
        const double w = eps * cphi * std::cos(theta);
        return detail::ipow(cphi, m) * layer_diff(u, w) *
               std::pow(std::sin(theta), m - 2) * std::cos(theta);
    };
    return prefactor *
           adaptive_quad_2d(f, -half_pi, half_pi, 0.0, half_pi, tol / prefactor);
}

} // namespace cutvol
