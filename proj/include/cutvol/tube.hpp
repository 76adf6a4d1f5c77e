#pragma once

#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "cutvol/monte_carlo.hpp"
#include "cutvol/polynomial.hpp"
#include "cutvol/quadrature.hpp"
#include "cutvol/wallis.hpp"

namespace cutvol {

// Tubular neighborhood of the unit sphere S^{2k} in R^n x R^m, n = 2k+1:
// the body { (x, y) : (|x|^2 - 1)^2 + |y|^2 <= eps^2 }.
struct TubeSpec {
    int k = 1;
    int m = 1;
    Rational epsilon{1, 2};

    TubeSpec(int k_, int m_, Rational eps) : k(k_), m(m_), epsilon(std::move(eps)) {
        if (k < 1)
            throw DomainError("TubeSpec: k must be a positive integer");
        if (m < 1)
            throw DomainError("TubeSpec: m must be a positive integer");
        if (!(epsilon > 0 && epsilon < 1))
            throw DomainError("TubeSpec: epsilon must lie in (0, 1)");
    }

    int sphere_factor_dim() const { return 2 * k + 1; } // n
    int ambient_dim() const { return sphere_factor_dim() + m; } // N
};

// General hyperplane <alpha, x> + <gamma, y> = beta.
struct Hyperplane {
    std::vector<double> alpha;
    std::vector<double> gamma;
    double beta = 0.0;
};

// Reduced hyperplane x_1 = a y_1 + b; a is the cotangent of the angle to
// the R^n factor, b the offset inside it.
struct NormalForm {
    double a = 0.0;
    double b = 0.0;
};

struct TwoValuedVolume {
    double bigger = 0.0;
    double smaller = 0.0;
    double total = 0.0;
};

namespace detail {

inline double squared_norm(const std::vector<double>& v) {
    double s = 0.0;
    for (const double x : v)
        s += x * x;
    return s;
}

inline Rational rat_pow(const Rational& base, int exp) {
    Rational p(1);
    for (int i = 0; i < exp; ++i)
        p *= base;
    return p;
}

inline Rational binomial(int n, int r) {
    Rational c(1);
    for (int i = 1; i <= r; ++i)
        c *= Rational(n - r + i, i);
    return c;
}

// Sparse polynomial in (a, b, s) with rational coefficients; s stands for
// sin(phi) during the expansion of the fiber integrals.
using TriKey = std::array<int, 3>;
using TriPoly = std::map<TriKey, Rational>;

inline TriPoly tri_mul(const TriPoly& x, const TriPoly& y) {
    TriPoly r;
    for (const auto& [kx, cx] : x)
        for (const auto& [ky, cy] : y) {
            const TriKey key{kx[0] + ky[0], kx[1] + ky[1], kx[2] + ky[2]};
            Rational& slot = r[key];
            slot += cx * cy;
            if (slot == 0)
                r.erase(key);
        }
    return r;
}

inline TriPoly tri_pow(const TriPoly& base, int exp) {
    TriPoly r{{TriKey{0, 0, 0}, Rational(1)}};
    for (int i = 0; i < exp; ++i)
        r = tri_mul(r, base);
    return r;
}

} // namespace detail

// Reduction of a general hyperplane to the (a, b) normal form by the
// O(n) x O(m) symmetry of the body.
inline NormalForm normal_form(const Hyperplane& h) {
    const double alpha2 = detail::squared_norm(h.alpha);
    if (alpha2 == 0.0)
        throw DegenerateHyperplane(
            "normal_form: hyperplane is parallel to or contains the R^n factor");
    const double alpha_norm = std::sqrt(alpha2);
    return {std::sqrt(detail::squared_norm(h.gamma)) / alpha_norm,
            std::fabs(h.beta) / alpha_norm};
}

// Sufficient condition for the hyperplane to lie in the lacuna:
// (a eps + b)^2 <= 1 - eps keeps both spherical-layer radii real on every
// fiber |y| <= eps.
inline bool in_lacuna(const TubeSpec& spec, const NormalForm& nf) {
    const double eps = to_double(spec.epsilon);
    const double t = nf.a * eps + nf.b;
    return t * t <= 1.0 - eps;
}

// Exact polynomial Q(a, b) = dV/db on the lacuna, computed by expanding
// the difference of k-th powers in the fiber-layer integral and
// integrating each trigonometric monomial with wallis(). Only even powers
// of sin(phi) survive the symmetric phi integration, which makes Q even
// in a and b.
inline BiPoly tube_dvdb(const TubeSpec& spec) {
    const int k = spec.k;
    const int m = spec.m;
    const Rational& eps = spec.epsilon;

    // u(a, b, s) = 1 - (a eps s + b)^2, s = sin(phi)
    const detail::TriPoly u{
        {detail::TriKey{0, 0, 0}, Rational(1)},
        {detail::TriKey{0, 2, 0}, Rational(-1)},
        {detail::TriKey{1, 1, 1}, Rational(-2) * eps},
        {detail::TriKey{2, 0, 2}, -(eps * eps)},
    };

    const PiNumber v2k = unit_ball_volume(2 * k);
    BiPoly q;
    for (int j = 1; j <= k; j += 2) {
        const detail::TriPoly upow = detail::tri_pow(u, k - j);
        const Rational cj = detail::binomial(k, j);
        for (const auto& [key, c] : upow) {
            if (key[2] % 2 != 0)
                continue;
            PiNumber coef;
            if (m == 1) {
                coef = v2k * wallis(key[2], j + 1) *
                       PiNumber(Rational(4) * cj * c * detail::rat_pow(eps, j + 1));
            } else {
                coef = unit_ball_volume(m - 1) * v2k * wallis(m - 2, j + 1) *
                       wallis(key[2], m + j) *
                       PiNumber(Rational(4 * (m - 1)) * cj * c * detail::rat_pow(eps, m + j));
            }
            q += BiPoly::monomial(key[0], key[1], coef);
        }
    }
    return q;
}

// P(a, b) with V(a, b) = C(eps)/2 + P(a, b) on the lacuna: the
// antiderivative of dV/db vanishing at b = 0. Even in a, odd in b,
// degree <= 2k - 1.
inline BiPoly tube_cut_poly(const TubeSpec& spec) {
    return tube_dvdb(spec).antiderivative_b();
}

// Volume C(eps) of the whole body: the fiber shell volume integrated
// against the m-ball measure, after the substitution |y| = eps sin(phi)
// that removes the square-root endpoint.
inline double tube_total_volume(const TubeSpec& spec, double tol) {
    if (!(tol > 0))
        throw DomainError("tube_total_volume: tolerance must be positive");
    const double eps = to_double(spec.epsilon);
    const int n = spec.sphere_factor_dim();
    const int m = spec.m;
    const double prefactor = m * unit_ball_volume(m).to_double() *
                             unit_ball_volume(n).to_double() * std::pow(eps, m);
    const double half_n = 0.5 * n;
    auto shell = [&](double phi) {
        const double c = std::cos(phi);
        const double s = std::sin(phi);
        const double core =
            std::pow(1.0 + eps * c, half_n) - std::pow(1.0 - eps * c, half_n);
        return std::pow(s, m - 1) * c * core;
    };
    return prefactor *
           adaptive_quad(shell, 0.0, std::numbers::pi / 2, tol / prefactor);
}

// Two-valued volume at a lacuna hyperplane: C/2 + P on the side containing
// the origin, C/2 - P on the other.
inline TwoValuedVolume tube_volumes(const TubeSpec& spec, const Hyperplane& h, double tol) {
    const NormalForm nf = normal_form(h);
    if (!in_lacuna(spec, nf))
        throw OutsideLacuna("tube_volumes: hyperplane outside the lacuna domain");
    const double p = tube_cut_poly(spec)(nf.a, nf.b);
    const double total = tube_total_volume(spec, tol);
    return {total / 2 + p, total / 2 - p, total};
}

// The body of the tube as an implicit membership test; box |x_i| <= sqrt(1+eps),
// |y_j| <= eps.
inline ImplicitBody make_tube_body(const TubeSpec& spec) {
    const double eps = to_double(spec.epsilon);
    const int n = spec.sphere_factor_dim();
    const int dim = spec.ambient_dim();
    ImplicitBody body;
    body.dimension = dim;
    body.box_lo.resize(static_cast<std::size_t>(dim));
    body.box_hi.resize(static_cast<std::size_t>(dim));
    const double xr = std::sqrt(1.0 + eps);
    for (int i = 0; i < dim; ++i) {
        const double r = i < n ? xr : eps;
        body.box_lo[static_cast<std::size_t>(i)] = -r;
        body.box_hi[static_cast<std::size_t>(i)] = r;
    }
    const double eps2 = eps * eps;
    body.contains = [n, eps2](std::span<const double> p) {
        double sx = 0.0, sy = 0.0;
        for (int i = 0; i < static_cast<int>(p.size()); ++i) {
            const double v = p[static_cast<std::size_t>(i)];
            (i < n ? sx : sy) += v * v;
        }
        const double shell = sx - 1.0;
        return shell * shell + sy <= eps2;
    };
    body.tag = "tube(k=" + std::to_string(spec.k) + ",m=" + std::to_string(spec.m) +
               ",eps=" + to_fraction_string(spec.epsilon) + ")";
    return body;
}

// Hyperplane x_1 = a y_1 + b as a Hyperplane value in the tube's ambient space.
inline Hyperplane make_reduced_hyperplane(const TubeSpec& spec, double a, double b) {
    Hyperplane h;
    h.alpha.assign(static_cast<std::size_t>(spec.sphere_factor_dim()), 0.0);
    h.gamma.assign(static_cast<std::size_t>(spec.m), 0.0);
    h.alpha[0] = 1.0;
    h.gamma[0] = -a;
    h.beta = b;
    return h;
}

inline AffineFunctional hyperplane_functional(const Hyperplane& h) {
    AffineFunctional f;
    f.normal.reserve(h.alpha.size() + h.gamma.size());
    f.normal.insert(f.normal.end(), h.alpha.begin(), h.alpha.end());
    f.normal.insert(f.normal.end(), h.gamma.begin(), h.gamma.end());
    f.offset = h.beta;
    return f;
}

} // namespace cutvol
