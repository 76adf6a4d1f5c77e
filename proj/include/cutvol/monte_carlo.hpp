#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "cutvol/errors.hpp"

namespace cutvol {

namespace detail {

inline std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return x;
}

} // namespace detail

// Counter-addressed uniform stream: the value at counter t is a pure
// function of (seed, t), so chunked or parallel consumption cannot change
// the sample sequence.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed)
        : base_(detail::mix64(seed ^ 0xD1B54A32D192ED03ull)) {}

    double uniform01(std::uint64_t counter) const {
        const std::uint64_t h =
            detail::mix64(base_ + (counter + 1) * 0x9E3779B97F4A7C15ull);
        return static_cast<double>(h >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t base_;
};

// Compact body given by a membership predicate inside an axis-aligned box.
struct ImplicitBody {
    int dimension = 0;
    std::function<bool(std::span<const double>)> contains;
    std::vector<double> box_lo;
    std::vector<double> box_hi;
    std::string tag;

    double box_volume() const {
        double v = 1.0;
        for (int i = 0; i < dimension; ++i)
            v *= box_hi[static_cast<std::size_t>(i)] - box_lo[static_cast<std::size_t>(i)];
        return v;
    }
};

// Affine functional f(x) = <normal, x> - offset; its zero set is the
// cutting hyperplane, f < 0 is the "minus" side.
struct AffineFunctional {
    std::vector<double> normal;
    double offset = 0.0;

    double operator()(std::span<const double> x) const {
        double s = -offset;
        for (std::size_t i = 0; i < normal.size(); ++i)
            s += normal[i] * x[i];
        return s;
    }
};

struct McEstimate {
    double side_minus = 0.0;
    double side_plus = 0.0;
    double stderr_est = 0.0; // max of the two per-side binomial standard errors
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

// Rejection-samples the bounding box and classifies inside-body points by
// the sign of the affine functional. Deterministic for fixed (n, seed).
inline McEstimate mc_cut_volume(const ImplicitBody& body, const AffineFunctional& plane,
                                std::uint64_t n, std::uint64_t seed) {
    if (n == 0)
        throw DomainError("mc_cut_volume: sample count must be positive");
    const int dim = body.dimension;
    if (dim <= 0 || body.box_lo.size() != static_cast<std::size_t>(dim) ||
        body.box_hi.size() != static_cast<std::size_t>(dim))
        throw DomainError("mc_cut_volume: inconsistent body dimensions");
    const double box_vol = body.box_volume();
    if (!(box_vol > 0))
        throw DomainError("mc_cut_volume: bounding box must have positive volume");

    const CounterRng rng(seed);
    std::vector<double> point(static_cast<std::size_t>(dim));
    std::uint64_t hits_minus = 0, hits_plus = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        const std::uint64_t base = i * static_cast<std::uint64_t>(dim);
        for (int j = 0; j < dim; ++j) {
            const auto ju = static_cast<std::size_t>(j);
            point[ju] = body.box_lo[ju] +
                        rng.uniform01(base + static_cast<std::uint64_t>(j)) *
                            (body.box_hi[ju] - body.box_lo[ju]);
        }
        if (!body.contains(point))
            continue;
        if (plane(point) < 0.0)
            ++hits_minus;
        else
            ++hits_plus;
    }

    const double nd = static_cast<double>(n);
    const double p_minus = static_cast<double>(hits_minus) / nd;
    const double p_plus = static_cast<double>(hits_plus) / nd;
    const double se_minus = box_vol * std::sqrt(p_minus * (1.0 - p_minus) / nd);
    const double se_plus = box_vol * std::sqrt(p_plus * (1.0 - p_plus) / nd);

    McEstimate est;
    est.side_minus = p_minus * box_vol;
    est.side_plus = p_plus * box_vol;
    est.stderr_est = std::fmax(se_minus, se_plus);
    est.samples = n;
    est.seed = seed;
    return est;
}

// Total-volume estimate: every inside point lands on the plus side.
inline McEstimate mc_volume(const ImplicitBody& body, std::uint64_t n, std::uint64_t seed) {
    AffineFunctional all_plus;
    all_plus.normal.assign(static_cast<std::size_t>(body.dimension), 0.0);
    all_plus.offset = -1.0;
    return mc_cut_volume(body, all_plus, n, seed);
}

inline ImplicitBody make_ball_body(int dim, double radius = 1.0) {
    if (dim <= 0 || !(radius > 0))
        throw DomainError("make_ball_body: bad parameters");
    ImplicitBody body;
    body.dimension = dim;
    body.box_lo.assign(static_cast<std::size_t>(dim), -radius);
    body.box_hi.assign(static_cast<std::size_t>(dim), radius);
    const double r2 = radius * radius;
    body.contains = [r2](std::span<const double> x) {
        double s = 0.0;
        for (const double xi : x)
            s += xi * xi;
        return s <= r2;
    };
    body.tag = "ball(dim=" + std::to_string(dim) + ")";
    return body;
}

} // namespace cutvol
