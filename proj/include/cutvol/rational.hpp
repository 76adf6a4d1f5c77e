#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "cutvol/errors.hpp"

namespace cutvol {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always in lowest terms with positive
// denominator (canonical zero is 0/1).
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Parses "p/q" or "p" with optional sign; whitespace is not accepted.
inline Rational parse_rational(std::string_view text) {
    if (text.empty())
        throw DomainError("empty rational literal");
    const auto slash = text.find('/');
    BigInt num, den = 1;
    try {
        if (slash == std::string_view::npos) {
            num = BigInt(std::string(text));
        } else {
            num = BigInt(std::string(text.substr(0, slash)));
            den = BigInt(std::string(text.substr(slash + 1)));
        }
    } catch (const std::exception&) {
        throw DomainError("malformed rational literal: " + std::string(text));
    }
    if (den == 0)
        throw DomainError("zero denominator in rational literal: " + std::string(text));
    return Rational(num) / Rational(den);
}

// Renders as "num/den", both decimal integers, den > 0, lowest terms.
inline std::string to_fraction_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace cutvol
