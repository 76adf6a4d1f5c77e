#pragma once

#include "cutvol/pi_number.hpp"

namespace cutvol {

// Exact value of the Wallis integral  int_0^{pi/2} sin^p(t) cos^q(t) dt.
// Computed by the reduction (p+q) W(p,q) = (p-1) W(p-2,q) down to the four
// base cases; the result carries pi^1 iff p and q are both even.
inline PiNumber wallis(int p, int q) {
    if (p < 0 || q < 0)
        throw DomainError("wallis: exponents must be non-negative");
    Rational coef(1);
    while (p >= 2) {
        coef *= Rational(p - 1, p + q);
        p -= 2;
    }
    while (q >= 2) {
        coef *= Rational(q - 1, p + q);
        q -= 2;
    }
    if (p == 0 && q == 0)
        return PiNumber::pi_power(1, coef / 2);
    if (p == 1 && q == 1)
        return PiNumber(coef / 2);
    return PiNumber(coef); // (1,0) or (0,1)
}

// Exact volume of the unit ball in R^p: v_0 = 1, v_1 = 2, v_p = v_{p-2} * 2 pi / p.
inline PiNumber unit_ball_volume(int p) {
    if (p < 0)
        throw DomainError("unit_ball_volume: dimension must be non-negative");
    PiNumber v = (p % 2 == 0) ? PiNumber(1) : PiNumber(2);
    for (int i = (p % 2 == 0) ? 2 : 3; i <= p; i += 2)
        v *= PiNumber::pi_power(1, Rational(2, i));
    return v;
}

} // namespace cutvol
