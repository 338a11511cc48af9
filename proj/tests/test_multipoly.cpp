#include <doctest.h>

#include <random>

#include "diffspec/multipoly.hpp"
#include "diffspec/verification.hpp"

using namespace diffspec;

namespace {

MultiPoly x(int dim, int i) { return MultiPoly::variable(dim, i); }

}  // namespace

TEST_CASE("basic arithmetic expansions") {
    // (x^2 - 1)^2 = x^4 - 2x^2 + 1
    const MultiPoly h2 = x(1, 0) * x(1, 0) - MultiPoly::constant(1, 1);
    const MultiPoly sq = h2 * h2;
    CHECK(sq.coeff({4}) == Rational(1));
    CHECK(sq.coeff({2}) == Rational(-2));
    CHECK(sq.coeff({0}) == Rational(1));
    CHECK(sq.degree() == 4);

    // p + 0 = p
    CHECK(h2 + MultiPoly(1) == h2);

    // (x1 + x2)^2 = x1^2 + 2 x1 x2 + x2^2
    const MultiPoly s = (x(2, 0) + x(2, 1)).pow(2);
    CHECK(s.coeff({2, 0}) == Rational(1));
    CHECK(s.coeff({1, 1}) == Rational(2));
    CHECK(s.coeff({0, 2}) == Rational(1));
    CHECK(s.terms().size() == 3);
}

TEST_CASE("zero polynomial conventions") {
    const MultiPoly z(2);
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK(z.is_constant());
    CHECK(z == Rational(0) * x(2, 0));
    // cancellation drops the stored term
    MultiPoly p = x(1, 0);
    p -= x(1, 0);
    CHECK(p.is_zero());
    CHECK(p.terms().empty());
}

TEST_CASE("dimension mismatch is an error, not a coercion") {
    CHECK_THROWS_AS(x(1, 0) + x(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(x(1, 0) * x(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(MultiPoly(0), std::invalid_argument);
    CHECK_THROWS_AS(MultiPoly::variable(2, 2), std::invalid_argument);
}

TEST_CASE("substitute_affine worked cases") {
    // p(x) = x under x -> -2x + 1 gives 1 - 2x
    const MultiPoly p1 = substitute_affine(x(1, 0), {{Rational(-2), Rational(1)}});
    CHECK(p1.coeff({0}) == Rational(1));
    CHECK(p1.coeff({1}) == Rational(-2));

    // identity map fixes x^2
    const MultiPoly p2 = substitute_affine(x(1, 0).pow(2), {{Rational(1), Rational(0)}});
    CHECK(p2 == x(1, 0).pow(2));

    // x^2 - 1 under x -> x + nu, with nu = 2: x^2 + 4x + 3
    const MultiPoly h2 = x(1, 0).pow(2) - MultiPoly::constant(1, 1);
    const MultiPoly p3 = substitute_affine(h2, {{Rational(1), Rational(2)}});
    CHECK(p3.coeff({2}) == Rational(1));
    CHECK(p3.coeff({1}) == Rational(4));
    CHECK(p3.coeff({0}) == Rational(3));

    // a = 0 collapses the coordinate
    const MultiPoly p4 = substitute_affine(x(1, 0).pow(2), {{Rational(0), Rational(3)}});
    CHECK(p4 == MultiPoly::constant(1, 9));
}

TEST_CASE("substitution degree preserved when all scales non-zero") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 100; ++i) {
        const MultiPoly p = random_polynomial(rng, 2, 5, 4);
        std::vector<std::pair<Rational, Rational>> maps;
        for (int j = 0; j < 2; ++j) maps.emplace_back(random_small_rational(rng, 3, 3), random_small_rational(rng, 3, 3, true));
        CHECK(substitute_affine(p, maps).degree() == p.degree());
    }
}

TEST_CASE("exact rational evaluation") {
    // H2 at 2 = 3
    const MultiPoly h2 = x(1, 0).pow(2) - MultiPoly::constant(1, 1);
    const Rational point2[] = {Rational(2)};
    CHECK(h2.evaluate(std::span<const Rational>(point2)) == Rational(3));

    // x1 * x2 at (3, 1/3) = 1
    const MultiPoly prod = x(2, 0) * x(2, 1);
    const Rational point[] = {Rational(3), Rational(1, 3)};
    CHECK(prod.evaluate(std::span<const Rational>(point)) == Rational(1));

    // float path
    const double fpoint[] = {3.0, 1.0 / 3.0};
    CHECK(prod.evaluate(std::span<const double>(fpoint)) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("derivative and composition") {
    // d/dx (x^3 - 3x) = 3x^2 - 3
    const MultiPoly h3 = x(1, 0).pow(3) - Rational(3) * x(1, 0);
    const MultiPoly d = h3.derivative(0);
    CHECK(d.coeff({2}) == Rational(3));
    CHECK(d.coeff({0}) == Rational(-3));

    // q(t) = t^2 + 1 composed with p = x1 + x2
    const MultiPoly q = x(1, 0).pow(2) + MultiPoly::constant(1, 1);
    const MultiPoly composed = compose_univariate(q, x(2, 0) + x(2, 1));
    CHECK(composed == (x(2, 0) + x(2, 1)).pow(2) + MultiPoly::constant(2, 1));
}

TEST_CASE("random ring axioms") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
        const MultiPoly a = random_polynomial(rng, 3, 4, 4);
        const MultiPoly b = random_polynomial(rng, 3, 4, 4);
        const MultiPoly c = random_polynomial(rng, 3, 4, 4);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a.pow(2) == a * a);
    }
}

TEST_CASE("evaluation is a ring homomorphism and respects substitution") {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 100; ++i) {
        const MultiPoly a = random_polynomial(rng, 2, 4, 4);
        const MultiPoly b = random_polynomial(rng, 2, 4, 4);
        const std::vector<Rational> point{random_small_rational(rng, 3, 3, true), random_small_rational(rng, 3, 3, true)};
        const std::span<const Rational> pt(point);
        CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
        CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));

        // evaluating the substituted polynomial equals evaluating at the image point
        std::vector<std::pair<Rational, Rational>> maps;
        std::vector<Rational> image;
        for (int j = 0; j < 2; ++j) {
            maps.emplace_back(random_small_rational(rng, 3, 3, true), random_small_rational(rng, 3, 3, true));
            image.push_back(maps.back().first * point[static_cast<std::size_t>(j)] + maps.back().second);
        }
        CHECK(substitute_affine(a, maps).evaluate(pt) == a.evaluate(std::span<const Rational>(image)));
    }
}
