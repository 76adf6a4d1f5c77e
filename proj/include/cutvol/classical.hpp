#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "cutvol/monte_carlo.hpp"
#include "cutvol/polynomial.hpp"
#include "cutvol/quadrature.hpp"
#include "cutvol/tube.hpp"
#include "cutvol/wallis.hpp"

namespace cutvol {

struct EllipsoidSpec {
    std::vector<double> semiaxes;

    explicit EllipsoidSpec(std::vector<double> axes) : semiaxes(std::move(axes)) {
        if (semiaxes.empty())
            throw DomainError("EllipsoidSpec: at least one semiaxis required");
        for (const double s : semiaxes)
            if (!(s > 0))
                throw DomainError("EllipsoidSpec: semiaxes must be positive");
    }

    int dimension() const { return static_cast<int>(semiaxes.size()); }
};

enum class AlgebraicCertificate {
    polynomial,            // the one-sided volume is a polynomial in the cut parameters
    square_is_polynomial,  // V itself is not, but V^2 is
    transcendental_suspected,
};

inline const char* to_string(AlgebraicCertificate c) {
    switch (c) {
    case AlgebraicCertificate::polynomial: return "polynomial";
    case AlgebraicCertificate::square_is_polynomial: return "square-is-polynomial";
    case AlgebraicCertificate::transcendental_suspected: return "transcendental-suspected";
    }
    return "?";
}

struct QuadricCut {
    double volume = 0.0;
    AlgebraicCertificate certificate = AlgebraicCertificate::transcendental_suspected;
};

// Exact cap polynomial of the unit ball in odd dimension N: the volume of
// { |x| <= 1, x_1 >= h } as a degree-N polynomial in h,
// v_{N-1} int_h^1 (1 - t^2)^{(N-1)/2} dt.
inline UniPoly ball_cap_poly(int N) {
    if (N < 1)
        throw DomainError("ball_cap_poly: dimension must be positive");
    if (N % 2 == 0)
        throw EvenDimension("ball_cap_poly: cap volume is not polynomial in even dimension");
    const int s = (N - 1) / 2;
    const PiNumber shell = unit_ball_volume(N - 1);
    UniPoly p;
    for (int i = 0; i <= s; ++i) {
        const Rational c = detail::binomial(s, i) * Rational((i % 2 == 0) ? 1 : -1, 2 * i + 1);
        p += UniPoly::monomial(0, shell * PiNumber(c));
        p += UniPoly::monomial(2 * i + 1, shell * PiNumber(-c));
    }
    return p;
}

// Cap volume of the unit N-ball above height h; exact polynomial
// evaluation for odd N, adaptive quadrature for even N. The even case
// integrates v_{N-1} sin^N(psi) over psi in [0, arccos h], which keeps the
// integrand smooth at the pole.
inline double ball_cap(int N, double h) {
    if (N < 1)
        throw DomainError("ball_cap: dimension must be positive");
    if (std::fabs(h) > 1.0)
        throw DomainError("ball_cap: height must lie in [-1, 1]");
    // Clamp away the sub-epsilon negatives that polynomial evaluation can
    // produce at the tangent heights h = +-1; a cap volume is never negative.
    if (N % 2 == 1)
        return std::fmax(0.0, ball_cap_poly(N)(h));
    auto f = [N](double psi) { return std::pow(std::sin(psi), N); };
    const double shell = unit_ball_volume(N - 1).to_double();
    return std::fmax(0.0, shell * adaptive_quad(f, 0.0, std::acos(h), 1e-12));
}

// Cut volume of an axis-aligned ellipsoid on the side of the hyperplane
// away from the center. The plane normal is alpha followed by gamma and
// must have the ellipsoid's dimension; everything is pulled back to the
// unit ball by the diagonal affine map.
inline QuadricCut ellipsoid_cut(const EllipsoidSpec& e, const Hyperplane& h) {
    std::vector<double> normal(h.alpha);
    normal.insert(normal.end(), h.gamma.begin(), h.gamma.end());
    const int N = e.dimension();
    if (static_cast<int>(normal.size()) != N)
        throw DomainError("ellipsoid_cut: hyperplane dimension mismatch");

    double det = 1.0, w2 = 0.0;
    for (int i = 0; i < N; ++i) {
        const auto iu = static_cast<std::size_t>(i);
        det *= e.semiaxes[iu];
        const double wi = normal[iu] * e.semiaxes[iu];
        w2 += wi * wi;
    }
    if (w2 == 0.0)
        throw DomainError("ellipsoid_cut: zero normal vector");
    const double dist = std::fabs(h.beta) / std::sqrt(w2);
    if (dist > 1.0)
        throw NoIntersection("ellipsoid_cut: hyperplane misses the ellipsoid");

    QuadricCut cut;
    cut.volume = det * ball_cap(N, dist);
    cut.certificate = (N % 2 == 1) ? AlgebraicCertificate::polynomial
                                   : AlgebraicCertificate::transcendental_suspected;
    return cut;
}

// Finite volume cut from the paraboloid region { x_N >= |x'|^2 } by the
// plane x_N = <c, x'> + d:   (2 v_{N-1} / (N+1)) (d + |c|^2/4)^{(N+1)/2}.
inline QuadricCut paraboloid_cut(int N, std::span<const double> c, double d) {
    if (N < 2)
        throw DomainError("paraboloid_cut: dimension must be at least 2");
    if (static_cast<int>(c.size()) != N - 1)
        throw DomainError("paraboloid_cut: expected N-1 plane slope coefficients");
    double c2 = 0.0;
    for (const double ci : c)
        c2 += ci * ci;
    const double r2 = d + 0.25 * c2;

    QuadricCut cut;
    cut.certificate = (N % 2 == 1) ? AlgebraicCertificate::polynomial
                                   : AlgebraicCertificate::square_is_polynomial;
    if (r2 <= 0.0)
        return cut; // plane below the vertex: empty intersection
    cut.volume = 2.0 * unit_ball_volume(N - 1).to_double() / (N + 1) *
                 std::pow(r2, 0.5 * (N + 1));
    return cut;
}

// Cap of one sheet of the two-sheet hyperboloid x_1^2 - |x'|^2 = 1 cut by
// x_1 = h: exact degree-N polynomial v_{N-1} int_1^h (t^2 - 1)^{(N-1)/2} dt,
// vanishing at h = 1.
inline UniPoly hyperboloid_cap_poly(int N) {
    if (N < 1)
        throw DomainError("hyperboloid_cap_poly: dimension must be positive");
    if (N % 2 == 0)
        throw EvenDimension("hyperboloid_cap_poly: cap volume is not polynomial in even dimension");
    const int s = (N - 1) / 2;
    const PiNumber shell = unit_ball_volume(N - 1);
    UniPoly p;
    for (int i = 0; i <= s; ++i) {
        const Rational c = detail::binomial(s, i) * Rational(((s - i) % 2 == 0) ? 1 : -1, 2 * i + 1);
        p += UniPoly::monomial(2 * i + 1, shell * PiNumber(c));
        p += UniPoly::monomial(0, shell * PiNumber(-c));
    }
    return p;
}

// The finite paraboloid segment realized as an implicit body, for the
// Monte Carlo cross-checks.
inline ImplicitBody make_paraboloid_segment_body(int N, std::span<const double> c, double d) {
    if (N < 2 || static_cast<int>(c.size()) != N - 1)
        throw DomainError("make_paraboloid_segment_body: bad parameters");
    double c2 = 0.0;
    for (const double ci : c)
        c2 += ci * ci;
    const double r2 = d + 0.25 * c2;
    if (!(r2 > 0))
        throw DomainError("make_paraboloid_segment_body: empty segment");
    const double r = std::sqrt(r2);
    const double cnorm = std::sqrt(c2);

    ImplicitBody body;
    body.dimension = N;
    body.box_lo.resize(static_cast<std::size_t>(N));
    body.box_hi.resize(static_cast<std::size_t>(N));
    for (int i = 0; i + 1 < N; ++i) {
        const auto iu = static_cast<std::size_t>(i);
        body.box_lo[iu] = 0.5 * c[iu] - r;
        body.box_hi[iu] = 0.5 * c[iu] + r;
    }
    body.box_lo[static_cast<std::size_t>(N - 1)] = 0.0;
    body.box_hi[static_cast<std::size_t>(N - 1)] = cnorm * (0.5 * cnorm + r) + std::fmax(d, 0.0);
    std::vector<double> slope(c.begin(), c.end());
    body.contains = [slope, d](std::span<const double> p) {
        const std::size_t last = p.size() - 1;
        double s2 = 0.0, plane = d;
        for (std::size_t i = 0; i < last; ++i) {
            s2 += p[i] * p[i];
            plane += slope[i] * p[i];
        }
        return s2 <= p[last] && p[last] <= plane;
    };
    body.tag = "paraboloid-segment(N=" + std::to_string(N) + ")";
    return body;
}

// Hyperboloid cap { x_1^2 - |x'|^2 >= 1, 1 <= x_1 <= h } as an implicit body.
inline ImplicitBody make_hyperboloid_cap_body(int N, double h) {
    if (N < 2 || !(h > 1.0))
        throw DomainError("make_hyperboloid_cap_body: bad parameters");
    const double rim = std::sqrt(h * h - 1.0);
    ImplicitBody body;
    body.dimension = N;
    body.box_lo.assign(static_cast<std::size_t>(N), -rim);
    body.box_hi.assign(static_cast<std::size_t>(N), rim);
    body.box_lo[0] = 1.0;
    body.box_hi[0] = h;
    body.contains = [h](std::span<const double> p) {
        double s2 = 0.0;
        for (std::size_t i = 1; i < p.size(); ++i)
            s2 += p[i] * p[i];
        return p[0] >= 1.0 && p[0] <= h && p[0] * p[0] - s2 >= 1.0;
    };
    body.tag = "hyperboloid-cap(N=" + std::to_string(N) + ")";
    return body;
}

} // namespace cutvol
