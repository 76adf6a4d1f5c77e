#pragma once

#include <cstdint>
#include <random>

#include "cutvol/pi_number.hpp"
#include "cutvol/polynomial.hpp"

namespace testutil {

// Deterministic generator for property tests. mt19937_64 output is fully
// specified by the standard; the mappings below avoid distribution objects
// whose results vary across standard-library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double real01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double real(double lo, double hi) { return lo + (hi - lo) * real01(); }

    // Uniform integer in [lo, hi].
    long long int_in(long long lo, long long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long long>(gen_() % span);
    }

    cutvol::Rational rational() {
        const long long num = int_in(-9, 9);
        const long long den = int_in(1, 9);
        return cutvol::Rational(num, den);
    }

    cutvol::Rational nonzero_rational() {
        for (;;) {
            cutvol::Rational q = rational();
            if (q != 0)
                return q;
        }
    }

    cutvol::PiNumber pi_number() {
        cutvol::PiNumber x;
        const long long parts = int_in(0, 3);
        for (long long i = 0; i < parts; ++i)
            x += cutvol::PiNumber::pi_power(static_cast<unsigned>(int_in(0, 4)), rational());
        return x;
    }

    cutvol::BiPoly bipoly() {
        cutvol::BiPoly p;
        const long long terms = int_in(0, 4);
        for (long long i = 0; i < terms; ++i)
            p += cutvol::BiPoly::monomial(static_cast<int>(int_in(0, 4)),
                                          static_cast<int>(int_in(0, 4)), pi_number());
        return p;
    }

    cutvol::UniPoly unipoly() {
        cutvol::UniPoly p;
        const long long terms = int_in(0, 4);
        for (long long i = 0; i < terms; ++i)
            p += cutvol::UniPoly::monomial(static_cast<int>(int_in(0, 5)), pi_number());
        return p;
    }

private:
    std::mt19937_64 gen_;
};

} // namespace testutil
