#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "cutvol/json_io.hpp"
#include "cutvol/monte_carlo.hpp"
#include "cutvol/pi_number.hpp"
#include "cutvol/polynomial.hpp"
#include "cutvol/quadrature.hpp"
#include "cutvol/rational.hpp"
#include "cutvol/wallis.hpp"

#include "helpers.hpp"

using namespace cutvol;

TEST_CASE("rational parsing accepts p/q and plain integers") {
    CHECK(parse_rational("1/2") == Rational(1, 2));
    CHECK(parse_rational("-3/4") == Rational(-3, 4));
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(parse_rational("-0/5") == Rational(0));
    CHECK(to_fraction_string(Rational(-3, 4)) == "-3/4");
    CHECK(to_fraction_string(Rational(5)) == "5/1");
}

TEST_CASE("rational parsing rejects malformed input") {
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational("abc"), DomainError);
    CHECK_THROWS_AS(parse_rational(""), DomainError);
    CHECK_THROWS_AS(parse_rational("1/2/3"), DomainError);
    CHECK_THROWS_AS(parse_rational("1.5"), DomainError);
}

TEST_CASE("pi-graded scalars evaluate and compare exactly") {
    const PiNumber half_pi = PiNumber::pi_power(1, Rational(1, 2));
    CHECK(half_pi.to_double() == Catch::Approx(std::numbers::pi / 2).epsilon(1e-15));
    CHECK(half_pi.is_monomial());
    CHECK(half_pi.pi_grade() == 1);

    const PiNumber mixed = half_pi + PiNumber(Rational(3)); // 3 + pi/2
    CHECK_FALSE(mixed.is_monomial());
    CHECK(mixed.coefficient(0) == Rational(3));
    CHECK(mixed.coefficient(1) == Rational(1, 2));
    CHECK(mixed.coefficient(7) == Rational(0));

    CHECK((half_pi - half_pi).is_zero());
    CHECK(half_pi * PiNumber::pi_power(2, Rational(4)) ==
          PiNumber::pi_power(3, Rational(2)));
}

TEST_CASE("pi-number arithmetic is associative, commutative, distributive") {
    testutil::Rng rng(991);
    for (int trial = 0; trial < 200; ++trial) {
        const PiNumber x = rng.pi_number();
        const PiNumber y = rng.pi_number();
        const PiNumber z = rng.pi_number();
        CHECK((x + y) + z == x + (y + z));
        CHECK(x + y == y + x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * y == y * x);
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + PiNumber() == x);
        CHECK(x * PiNumber(1) == x);
        CHECK((x * PiNumber()).is_zero());
    }
}

TEST_CASE("bivariate polynomial arithmetic is a commutative ring") {
    testutil::Rng rng(1733);
    for (int trial = 0; trial < 120; ++trial) {
        const BiPoly p = rng.bipoly();
        const BiPoly q = rng.bipoly();
        const BiPoly r = rng.bipoly();
        CHECK((p + q) + r == p + (q + r));
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p - p == BiPoly{});
    }
}

TEST_CASE("polynomial evaluation matches the exact route") {
    testutil::Rng rng(552);
    for (int trial = 0; trial < 60; ++trial) {
        const BiPoly p = rng.bipoly();
        const Rational a = rng.rational();
        const Rational b = rng.rational();
        const double direct = p(to_double(a), to_double(b));
        const double exact = p.eval_exact(a, b).to_double();
        CHECK(direct == Catch::Approx(exact).margin(1e-9 * (1.0 + std::fabs(exact))));
    }
}

TEST_CASE("antiderivative in b shifts exponents and divides by the new power") {
    const BiPoly p = BiPoly::monomial(0, 0, PiNumber::pi_power(2));
    CHECK(poly_antiderivative_b(p) == BiPoly::monomial(0, 1, PiNumber::pi_power(2)));

    const BiPoly q = BiPoly::monomial(2, 1, PiNumber(3));
    CHECK(poly_antiderivative_b(q) == BiPoly::monomial(2, 2, PiNumber(Rational(3, 2))));

    CHECK(poly_antiderivative_b(BiPoly{}) == BiPoly{});

    SECTION("antiderivative always vanishes at b = 0") {
        testutil::Rng rng(84);
        for (int trial = 0; trial < 40; ++trial) {
            const BiPoly integral = poly_antiderivative_b(rng.bipoly());
            CHECK(integral.eval_exact(rng.rational(), Rational(0)).is_zero());
        }
    }
}

TEST_CASE("substituting a -> lambda a rescales coefficients exactly") {
    // p = a^2 b + 2 a
    const BiPoly p =
        BiPoly::monomial(2, 1, PiNumber(1)) + BiPoly::monomial(1, 0, PiNumber(2));
    const BiPoly scaled = p.substitute_a(Rational(1, 2));
    CHECK(scaled == BiPoly::monomial(2, 1, PiNumber(Rational(1, 4))) +
                        BiPoly::monomial(1, 0, PiNumber(1)));
}

TEST_CASE("trigonometric moment integrals match closed forms") {
    CHECK(wallis(0, 0) == PiNumber::pi_power(1, Rational(1, 2)));
    CHECK(wallis(1, 1) == PiNumber(Rational(1, 2)));
    CHECK(wallis(2, 2) == PiNumber::pi_power(1, Rational(1, 16)));
    CHECK(wallis(1, 0) == PiNumber(1));
    CHECK(wallis(0, 1) == PiNumber(1));
    CHECK(wallis(2, 0) == PiNumber::pi_power(1, Rational(1, 4)));
    CHECK_THROWS_AS(wallis(-1, 0), DomainError);
}

TEST_CASE("moment integrals satisfy the reduction recurrence up to order 20") {
    for (int p = 2; p <= 20; ++p)
        for (int q = 0; q <= 20; ++q)
            CHECK(PiNumber(Rational(p + q)) * wallis(p, q) ==
                  PiNumber(Rational(p - 1)) * wallis(p - 2, q));
}

TEST_CASE("moment integrals are symmetric in the two exponents") {
    for (int p = 0; p <= 12; ++p)
        for (int q = 0; q <= 12; ++q)
            CHECK(wallis(p, q) == wallis(q, p));
}

TEST_CASE("moment integrals carry a pi factor exactly when both exponents are even") {
    for (int p = 0; p <= 12; ++p)
        for (int q = 0; q <= 12; ++q) {
            const PiNumber w = wallis(p, q);
            REQUIRE(w.is_monomial());
            const unsigned expected = (p % 2 == 0 && q % 2 == 0) ? 1u : 0u;
            CHECK(w.pi_grade() == expected);
            CHECK(w.coefficient(expected) > 0);
        }
}

TEST_CASE("moment integrals match adaptive quadrature to 1e-10 relative") {
    for (int p = 0; p <= 10; ++p)
        for (int q = 0; q <= 10; ++q) {
            const double exact = wallis(p, q).to_double();
            const double numeric = adaptive_quad(
                [p, q](double t) {
                    return std::pow(std::sin(t), p) * std::pow(std::cos(t), q);
                },
                0.0, std::numbers::pi / 2, 1e-13);
            CHECK(std::fabs(exact - numeric) <= 1e-10 * std::fabs(exact));
        }
}

TEST_CASE("unit ball volumes match the classical values") {
    CHECK(unit_ball_volume(0) == PiNumber(1));
    CHECK(unit_ball_volume(1) == PiNumber(2));
    CHECK(unit_ball_volume(2) == PiNumber::pi_power(1));
    CHECK(unit_ball_volume(3) == PiNumber::pi_power(1, Rational(4, 3)));
    CHECK(unit_ball_volume(4) == PiNumber::pi_power(2, Rational(1, 2)));
    CHECK(unit_ball_volume(5) == PiNumber::pi_power(2, Rational(8, 15)));
    CHECK_THROWS_AS(unit_ball_volume(-1), DomainError);

    SECTION("two-step recurrence v_p = v_{p-2} * 2 pi / p") {
        for (int p = 2; p <= 14; ++p)
            CHECK(PiNumber(Rational(p)) * unit_ball_volume(p) ==
                  PiNumber::pi_power(1, Rational(2)) * unit_ball_volume(p - 2));
    }

    SECTION("dimension five agrees with a seeded Monte Carlo volume estimate") {
        const McEstimate est = mc_volume(make_ball_body(5), 4'000'000, 77001);
        const double exact = unit_ball_volume(5).to_double();
        CHECK(std::fabs(est.side_plus - exact) <= 3.0 * est.stderr_est);
    }
}

TEST_CASE("polynomial JSON round-trips bit-exactly") {
    testutil::Rng rng(4242);
    for (int trial = 0; trial < 50; ++trial) {
        const BiPoly p = rng.bipoly();
        const Json j = to_json(p);
        const Json reparsed = Json::parse(j.dump());
        CHECK(bipoly_from_json(reparsed) == p);

        const UniPoly u = rng.unipoly();
        CHECK(unipoly_from_json(Json::parse(to_json(u).dump())) == u);
    }
}

TEST_CASE("polynomial JSON lists terms in sorted exponent order") {
    const BiPoly p = BiPoly::monomial(2, 0, PiNumber(1)) +
                     BiPoly::monomial(0, 2, PiNumber::pi_power(1)) +
                     BiPoly::monomial(0, 0, PiNumber::pi_power(1, Rational(-1, 3)));
    const Json j = to_json(p);
    REQUIRE(j.at("terms").size() == 3);
    CHECK(j["terms"][0]["a"] == 0);
    CHECK(j["terms"][0]["b"] == 0);
    CHECK(j["terms"][1]["a"] == 0);
    CHECK(j["terms"][1]["b"] == 2);
    CHECK(j["terms"][2]["a"] == 2);
    CHECK(j["terms"][2]["b"] == 0);
    CHECK(j["terms"][0]["coef"][0]["q"] == "-1/3");
    CHECK(j["terms"][0]["coef"][0]["pi"] == 1);
}
