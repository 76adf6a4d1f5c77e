#pragma once

#include <json.hpp>

#include "cutvol/classical.hpp"
#include "cutvol/fitter.hpp"
#include "cutvol/monte_carlo.hpp"
#include "cutvol/polynomial.hpp"

// JSON wire formats. Exact polynomials round-trip bit-exactly:
//   BiPoly  {"terms":[{"a":i,"b":j,"coef":[{"pi":e,"q":"num/den"}]}]}
//   UniPoly {"terms":[{"e":i,"coef":[{"pi":e,"q":"num/den"}]}]}
// with terms sorted lexicographically by exponent and rationals rendered
// as decimal integer strings joined by "/".

namespace cutvol {

using Json = nlohmann::ordered_json;

inline Json to_json(const PiNumber& x) {
    Json coef = Json::array();
    for (const auto& [e, q] : x.terms())
        coef.push_back(Json{{"pi", e}, {"q", to_fraction_string(q)}});
    return coef;
}

inline PiNumber pi_number_from_json(const Json& j) {
    PiNumber x;
    for (const auto& term : j)
        x += PiNumber::pi_power(term.at("pi").get<unsigned>(),
                                parse_rational(term.at("q").get<std::string>()));
    return x;
}

inline Json to_json(const BiPoly& p) {
    Json terms = Json::array();
    for (const auto& [key, coef] : p.terms())
        terms.push_back(Json{{"a", key.first}, {"b", key.second}, {"coef", to_json(coef)}});
    return Json{{"terms", std::move(terms)}};
}

inline BiPoly bipoly_from_json(const Json& j) {
    BiPoly p;
    for (const auto& term : j.at("terms"))
        p += BiPoly::monomial(term.at("a").get<int>(), term.at("b").get<int>(),
                              pi_number_from_json(term.at("coef")));
    return p;
}

inline Json to_json(const UniPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, coef] : p.terms())
        terms.push_back(Json{{"e", e}, {"coef", to_json(coef)}});
    return Json{{"terms", std::move(terms)}};
}

inline UniPoly unipoly_from_json(const Json& j) {
    UniPoly p;
    for (const auto& term : j.at("terms"))
        p += UniPoly::monomial(term.at("e").get<int>(), pi_number_from_json(term.at("coef")));
    return p;
}

inline Json to_json(const McEstimate& e) {
    return Json{{"side_minus", e.side_minus},
                {"side_plus", e.side_plus},
                {"stderr", e.stderr_est},
                {"samples", e.samples},
                {"seed", e.seed}};
}

inline Json to_json(const FitReport& r) {
    return Json{{"degree", r.degree},
                {"coefficients", r.coefficients},
                {"max_abs_residual", r.max_abs_residual},
                {"rms_residual", r.rms_residual}};
}

inline Json to_json(const QuadricCut& c) {
    return Json{{"volume", c.volume}, {"certificate", to_string(c.certificate)}};
}

} // namespace cutvol
