#pragma once

#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include "cutvol/rational.hpp"

namespace cutvol {

// Exact scalar of the form sum_e q_e * pi^e with rational q_e and integer
// e >= 0. Closed under addition and multiplication; zero terms are never
// stored.
class PiNumber {
public:
    using TermMap = std::map<unsigned, Rational>;

    PiNumber() = default;
    PiNumber(const Rational& q) { set_term(0, q); }
    PiNumber(long long v) : PiNumber(Rational(v)) {}

    static PiNumber pi_power(unsigned exponent, const Rational& coef = Rational(1)) {
        PiNumber x;
        x.set_term(exponent, coef);
        return x;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // True when the value is q * pi^e for a single exponent e.
    bool is_monomial() const { return terms_.size() == 1; }

    // Exponent of the unique pi power; only meaningful for monomials.
    unsigned pi_grade() const {
        if (!is_monomial())
            throw DomainError("pi_grade: value is not a single pi power");
        return terms_.begin()->first;
    }

    Rational coefficient(unsigned exponent) const {
        const auto it = terms_.find(exponent);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    PiNumber& operator+=(const PiNumber& o) {
        for (const auto& [e, q] : o.terms_)
            add_term(e, q);
        return *this;
    }
    PiNumber& operator-=(const PiNumber& o) {
        for (const auto& [e, q] : o.terms_)
            add_term(e, -q);
        return *this;
    }
    PiNumber& operator*=(const PiNumber& o) {
        TermMap product;
        for (const auto& [e1, q1] : terms_)
            for (const auto& [e2, q2] : o.terms_) {
                Rational& slot = product[e1 + e2];
                slot += q1 * q2;
            }
        terms_.clear();
        for (auto& [e, q] : product)
            if (q != 0)
                terms_.emplace(e, std::move(q));
        return *this;
    }
    PiNumber& operator*=(const Rational& q) {
        if (q == 0) {
            terms_.clear();
        } else {
            for (auto& [e, c] : terms_)
                c *= q;
        }
        return *this;
    }

    friend PiNumber operator+(PiNumber a, const PiNumber& b) { return a += b; }
    friend PiNumber operator-(PiNumber a, const PiNumber& b) { return a -= b; }
    friend PiNumber operator*(PiNumber a, const PiNumber& b) { return a *= b; }
    friend PiNumber operator*(PiNumber a, const Rational& q) { return a *= q; }
    friend PiNumber operator*(const Rational& q, PiNumber a) { return a *= q; }
    friend PiNumber operator-(const PiNumber& a) {
        PiNumber r;
        for (const auto& [e, q] : a.terms_)
            r.terms_.emplace(e, -q);
        return r;
    }

    friend bool operator==(const PiNumber& a, const PiNumber& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const PiNumber& a, const PiNumber& b) { return !(a == b); }

    double to_double() const {
        double sum = 0.0;
        for (const auto& [e, q] : terms_)
            sum += cutvol::to_double(q) * std::pow(std::numbers::pi, static_cast<int>(e));
        return sum;
    }

    // Human-readable form, e.g. "(3/4)*pi^2 + 1/2".
    std::string str() const {
        if (terms_.empty())
            return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!out.empty())
                out += " + ";
            out += "(" + to_fraction_string(it->second) + ")";
            if (it->first == 1)
                out += "*pi";
            else if (it->first > 1)
                out += "*pi^" + std::to_string(it->first);
        }
        return out;
    }

private:
    void set_term(unsigned e, const Rational& q) {
        if (q != 0)
            terms_[e] = q;
    }
    void add_term(unsigned e, const Rational& q) {
        const auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (q != 0)
                terms_.emplace(e, q);
            return;
        }
        it->second += q;
        if (it->second == 0)
            terms_.erase(it);
    }

    TermMap terms_;
};

} // namespace cutvol
