#pragma once

#include <algorithm>
#include <map>
#include <utility>

#include "cutvol/pi_number.hpp"

namespace cutvol {

namespace detail {

inline PiNumber eval_exact_power(const Rational& base, int exp) {
    Rational p(1);
    for (int i = 0; i < exp; ++i)
        p *= base;
    return PiNumber(p);
}

inline double ipow(double base, int exp) {
    double p = 1.0;
    for (int i = 0; i < exp; ++i)
        p *= base;
    return p;
}

} // namespace detail

// Sparse bivariate polynomial in (a, b) with PiNumber coefficients.
// Exponents are non-negative; zero coefficients are never stored.
class BiPoly {
public:
    using Key = std::pair<int, int>; // (a-exponent, b-exponent)
    using TermMap = std::map<Key, PiNumber>;

    BiPoly() = default;

    static BiPoly monomial(int ea, int eb, PiNumber coef) {
        BiPoly p;
        if (ea < 0 || eb < 0)
            throw DomainError("BiPoly: negative exponent");
        if (!coef.is_zero())
            p.terms_.emplace(Key{ea, eb}, std::move(coef));
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    BiPoly& operator+=(const BiPoly& o) {
        for (const auto& [k, c] : o.terms_)
            add_term(k, c);
        return *this;
    }
    BiPoly& operator-=(const BiPoly& o) {
        for (const auto& [k, c] : o.terms_)
            add_term(k, -c);
        return *this;
    }
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
        return r;
    }

    BiPoly& operator*=(const PiNumber& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        TermMap scaled;
        for (const auto& [k, c] : terms_) {
            PiNumber v = c * s;
            if (!v.is_zero())
                scaled.emplace(k, std::move(v));
        }
        terms_ = std::move(scaled);
        return *this;
    }
    friend BiPoly operator*(BiPoly p, const PiNumber& s) { return p *= s; }
    friend BiPoly operator*(const PiNumber& s, BiPoly p) { return p *= s; }

    // Antiderivative in b with zero constant: (i, j) -> (i, j+1) / (j+1).
    BiPoly antiderivative_b() const {
        BiPoly r;
        for (const auto& [k, c] : terms_)
            r.terms_.emplace(Key{k.first, k.second + 1}, c * Rational(1, k.second + 1));
        return r;
    }

    // Substitution a -> lambda * a.
    BiPoly substitute_a(const Rational& lambda) const {
        BiPoly r;
        for (const auto& [k, c] : terms_) {
            PiNumber v = c;
            for (int i = 0; i < k.first; ++i)
                v *= lambda;
            if (!v.is_zero())
                r.terms_.emplace(k, std::move(v));
        }
        return r;
    }

    PiNumber eval_exact(const Rational& a, const Rational& b) const {
        PiNumber sum;
        for (const auto& [k, c] : terms_)
            sum += c * detail::eval_exact_power(a, k.first) * detail::eval_exact_power(b, k.second);
        return sum;
    }

    double operator()(double a, double b) const {
        double sum = 0.0;
        for (const auto& [k, c] : terms_)
            sum += c.to_double() * detail::ipow(a, k.first) * detail::ipow(b, k.second);
        return sum;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [k, c] : terms_)
            d = std::max(d, k.first + k.second);
        return d;
    }
    int degree_a() const {
        int d = 0;
        for (const auto& [k, c] : terms_)
            d = std::max(d, k.first);
        return d;
    }
    int degree_b() const {
        int d = 0;
        for (const auto& [k, c] : terms_)
            d = std::max(d, k.second);
        return d;
    }

    bool even_in_a() const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [](const auto& t) { return t.first.first % 2 == 0; });
    }
    bool even_in_b() const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [](const auto& t) { return t.first.second % 2 == 0; });
    }
    bool odd_in_b() const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [](const auto& t) { return t.first.second % 2 == 1; });
    }

    // True when every coefficient is a single pi power of the same grade.
    bool has_uniform_pi_grade(unsigned grade) const {
        return std::all_of(terms_.begin(), terms_.end(), [grade](const auto& t) {
            return t.second.is_monomial() && t.second.pi_grade() == grade;
        });
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

private:
    void add_term(const Key& k, const PiNumber& c) {
        const auto it = terms_.find(k);
        if (it == terms_.end()) {
            if (!c.is_zero())
                terms_.emplace(k, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }

    TermMap terms_;
};

// Sparse univariate polynomial with PiNumber coefficients.
class UniPoly {
public:
    using TermMap = std::map<int, PiNumber>;

    UniPoly() = default;

    static UniPoly monomial(int e, PiNumber coef) {
        UniPoly p;
        if (e < 0)
            throw DomainError("UniPoly: negative exponent");
        if (!coef.is_zero())
            p.terms_.emplace(e, std::move(coef));
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    UniPoly& operator+=(const UniPoly& o) {
        for (const auto& [e, c] : o.terms_)
            add_term(e, c);
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) {
        for (const auto& [e, c] : o.terms_)
            add_term(e, -c);
        return *this;
    }
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        UniPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(ea + eb, ca * cb);
        return r;
    }

    UniPoly& operator*=(const PiNumber& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        TermMap scaled;
        for (const auto& [e, c] : terms_) {
            PiNumber v = c * s;
            if (!v.is_zero())
                scaled.emplace(e, std::move(v));
        }
        terms_ = std::move(scaled);
        return *this;
    }
    friend UniPoly operator*(UniPoly p, const PiNumber& s) { return p *= s; }
    friend UniPoly operator*(const PiNumber& s, UniPoly p) { return p *= s; }

    PiNumber eval_exact(const Rational& x) const {
        PiNumber sum;
        for (const auto& [e, c] : terms_)
            sum += c * detail::eval_exact_power(x, e);
        return sum;
    }

    double operator()(double x) const {
        double sum = 0.0;
        for (const auto& [e, c] : terms_)
            sum += c.to_double() * detail::ipow(x, e);
        return sum;
    }

    int degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

private:
    void add_term(int e, const PiNumber& c) {
        const auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!c.is_zero())
                terms_.emplace(e, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }

    TermMap terms_;
};

// Spec operation name: antiderivative in b with integration constant zero.
inline BiPoly poly_antiderivative_b(const BiPoly& p) { return p.antiderivative_b(); }

} // namespace cutvol
