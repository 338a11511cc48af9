#include <doctest.h>

#include <random>

#include "diffspec/poly_text.hpp"
#include "diffspec/verification.hpp"

using namespace diffspec;

TEST_CASE("printer canonical forms") {
    CHECK(print_poly(MultiPoly(3)) == "0");
    CHECK(print_poly(MultiPoly::constant(1, Rational(-3, 2))) == "-3/2");
    const MultiPoly h2 = MultiPoly::variable(1, 0).pow(2) - MultiPoly::constant(1, 1);
    CHECK(print_poly(h2) == "-1 + 1*x1^2");
    const MultiPoly mixed = Rational(1, 2) * (MultiPoly::variable(2, 0) * MultiPoly::variable(2, 1).pow(3)) -
                            Rational(2) * MultiPoly::variable(2, 0);
    CHECK(print_poly(mixed) == "-2*x1^1 + 1/2*x1^1*x2^3");
}

TEST_CASE("parser accepts the printed grammar and variations") {
    const MultiPoly p = parse_poly("-1 + 1*x1^2", 1);
    CHECK(p.coeff({0}) == Rational(-1));
    CHECK(p.coeff({2}) == Rational(1));

    // omitted coefficients, omitted exponents, free whitespace, repeated factors
    CHECK(parse_poly("x1", 2) == MultiPoly::variable(2, 0));
    CHECK(parse_poly("x1 * x1", 1) == MultiPoly::variable(1, 0).pow(2));
    CHECK(parse_poly("  3/2*x2^2  -  x1  ", 2) ==
          Rational(3, 2) * MultiPoly::variable(2, 1).pow(2) - MultiPoly::variable(2, 0));
    CHECK(parse_poly("-x1 + x1", 1).is_zero());
    CHECK(parse_poly("0", 4).is_zero());
    // like terms merge
    CHECK(parse_poly("x1 + 2*x1", 1) == Rational(3) * MultiPoly::variable(1, 0));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_poly("", 1), PolyParseError);
    CHECK_THROWS_AS(parse_poly("1 +", 1), PolyParseError);
    CHECK_THROWS_AS(parse_poly("x0", 1), PolyParseError);
    CHECK_THROWS_AS(parse_poly("x2", 1), PolyParseError);  // out of range for dim 1
    CHECK_THROWS_AS(parse_poly("1 & 2", 1), PolyParseError);
    CHECK_THROWS_AS(parse_poly("3//2*x1", 1), PolyParseError);
    try {
        parse_poly("1 + $", 1);
        CHECK(false);
    } catch (const PolyParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("round trip is bit exact on random polynomials") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; ++i) {
        const int dim = 1 + static_cast<int>(rng() % 3);
        const MultiPoly p = random_polynomial(rng, dim, 6, 6);
        CHECK(parse_poly(print_poly(p), dim) == p);
    }
}
