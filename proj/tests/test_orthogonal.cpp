#include <doctest.h>

#include <random>

#include "diffspec/orthogonal.hpp"
#include "diffspec/structures.hpp"
#include "diffspec/verification.hpp"
#include "rodrigues_oracle.hpp"

using namespace diffspec;

namespace {

MultiPoly x1() { return MultiPoly::variable(1, 0); }

}  // namespace

TEST_CASE("hermite family, probabilists' normalization") {
    CHECK(hermite_polynomial(0) == MultiPoly::constant(1, 1));
    CHECK(hermite_polynomial(1) == x1());
    CHECK(hermite_polynomial(2) == x1().pow(2) - MultiPoly::constant(1, 1));
    CHECK(hermite_polynomial(3) == x1().pow(3) - Rational(3) * x1());
    // monic of the right degree
    for (int n = 0; n <= 8; ++n) {
        const MultiPoly h = hermite_polynomial(n);
        CHECK(h.degree() == n);
        CHECK(h.coeff({n}) == Rational(1));
    }
    CHECK_THROWS_AS(hermite_polynomial(-1), std::invalid_argument);
}

TEST_CASE("laguerre family") {
    // L_2^{(nu-1)} = x^2/2 - (nu+1) x + nu(nu+1)/2, here with nu = 5/2
    const Rational nu(5, 2);
    const MultiPoly l2 = laguerre_polynomial(2, nu - 1);
    CHECK(l2.coeff({2}) == Rational(1, 2));
    CHECK(l2.coeff({1}) == -(nu + 1));
    CHECK(l2.coeff({0}) == nu * (nu + 1) / 2);

    CHECK(laguerre_polynomial(0, Rational(7, 3)) == MultiPoly::constant(1, 1));
    // L_1^{(a)} = -x + a + 1
    const Rational a(1, 3);
    CHECK(laguerre_polynomial(1, a) == MultiPoly::constant(1, a + 1) - x1());
    CHECK_THROWS_AS(laguerre_polynomial(2, Rational(-2)), std::invalid_argument);
}

TEST_CASE("jacobi family") {
    CHECK(jacobi_polynomial(0, Rational(1, 2), Rational(1, 3)) == MultiPoly::constant(1, 1));
    // Legendre specialization alpha = beta = 0
    CHECK(jacobi_polynomial(1, 0, 0) == x1());
    CHECK(jacobi_polynomial(2, 0, 0) == Rational(3, 2) * x1().pow(2) - MultiPoly::constant(1, Rational(1, 2)));
    // P_1 = ((alpha+beta+2) x + alpha - beta)/2
    const Rational al(1, 2), be(1, 4);
    CHECK(jacobi_polynomial(1, al, be) ==
          Rational(1, 2) * ((al + be + 2) * x1() + MultiPoly::constant(1, al - be)));
    CHECK_THROWS_AS(jacobi_polynomial(1, Rational(-1), Rational(0)), std::invalid_argument);
}

TEST_CASE("recurrence agrees with the Rodrigues route") {
    for (int n = 0; n <= 6; ++n) {
        CHECK(hermite_polynomial(n) == testing::hermite_rodrigues(n));
        for (const Rational& nu : {Rational(0), Rational(-1, 2), Rational(3, 2), Rational(7, 3)})
            CHECK(laguerre_polynomial(n, nu) == testing::laguerre_rodrigues(n, nu));
        for (const auto& [al, be] : std::vector<std::pair<Rational, Rational>>{
                 {Rational(0), Rational(0)}, {Rational(-1, 2), Rational(-1, 2)}, {Rational(1, 2), Rational(1, 3)}})
            CHECK(jacobi_polynomial(n, al, be) == testing::jacobi_rodrigues(n, al, be));
    }
}

TEST_CASE("orthogonality under the matching coordinate measures") {
    const std::vector<CoordinateStructure> coords = {
        CoordinateStructure::ornstein_uhlenbeck(),
        CoordinateStructure::laguerre(Rational(-1, 2)),
        CoordinateStructure::laguerre(Rational(3, 2)),
        CoordinateStructure::jacobi(Rational(1, 2), Rational(1, 2)),
        CoordinateStructure::jacobi(Rational(3, 4), Rational(1, 4)),
    };
    for (const CoordinateStructure& c : coords) {
        const ProductStructure s({c});
        for (int m = 0; m <= 5; ++m)
            for (int n = m + 1; n <= 5; ++n)
                CHECK(integrate(s, c.basis(m) * c.basis(n)).is_zero());
    }
}

TEST_CASE("product basis expansion worked cases") {
    const std::vector<OrthogonalFamily> hermite1{OrthogonalFamily::hermite()};

    // x^2 = H2 + 1
    const auto e1 = product_basis_expand(x1().pow(2), hermite1);
    CHECK(e1.size() == 2);
    CHECK(e1.at({2}) == Rational(1));
    CHECK(e1.at({0}) == Rational(1));

    // H2(x1) H2(x2) is a basis element
    const std::vector<OrthogonalFamily> hermite2{OrthogonalFamily::hermite(), OrthogonalFamily::hermite()};
    MultiPoly h2h2(2);
    {
        const MultiPoly h2 = hermite_polynomial(2);
        MultiPoly a(2), b(2);
        for (const auto& [e, c] : h2.terms()) a.add_term({e[0], 0}, c);
        for (const auto& [e, c] : h2.terms()) b.add_term({0, e[0]}, c);
        h2h2 = a * b;
    }
    const auto e2 = product_basis_expand(h2h2, hermite2);
    CHECK(e2.size() == 1);
    CHECK(e2.at({2, 2}) == Rational(1));

    // (x^2-1)^2 = H4 + 4 H2 + 2
    const MultiPoly h2 = x1().pow(2) - MultiPoly::constant(1, 1);
    const auto e3 = product_basis_expand(h2 * h2, hermite1);
    CHECK(e3.size() == 3);
    CHECK(e3.at({4}) == Rational(1));
    CHECK(e3.at({2}) == Rational(4));
    CHECK(e3.at({0}) == Rational(2));
}

TEST_CASE("change-of-basis round trip, 200 random polynomials") {
    std::mt19937_64 rng(101);
    const std::vector<OrthogonalFamily> pool = {
        OrthogonalFamily::hermite(),
        OrthogonalFamily::laguerre(Rational(0)),
        OrthogonalFamily::laguerre(Rational(-1, 2)),
        OrthogonalFamily::jacobi(Rational(-1, 2), Rational(-1, 2)),
        OrthogonalFamily::jacobi(Rational(1, 2), Rational(1, 3)),
    };
    for (int i = 0; i < 200; ++i) {
        const int dim = 1 + static_cast<int>(rng() % 3);
        std::vector<OrthogonalFamily> families;
        for (int j = 0; j < dim; ++j) families.push_back(pool[rng() % pool.size()]);
        const MultiPoly p = random_polynomial(rng, dim, 6, 5);
        const auto expansion = product_basis_expand(p, families);
        CHECK(reconstruct_from_basis(dim, expansion, families) == p);
    }
}

TEST_CASE("family parameter validation") {
    CHECK_THROWS_AS(OrthogonalFamily::laguerre(Rational(-1)), std::invalid_argument);
    CHECK_THROWS_AS(OrthogonalFamily::jacobi(Rational(-3, 2), Rational(0)), std::invalid_argument);
    CHECK(OrthogonalFamily::jacobi(Rational(-1, 2), Rational(-1, 2)).polynomial(3).degree() == 3);
}

TEST_CASE("evaluate worked example from the laguerre family") {
    // L_1^{(0)} = 1 - x vanishes at 1
    const Rational one[] = {Rational(1)};
    CHECK(laguerre_polynomial(1, 0).evaluate(std::span<const Rational>(one)).is_zero());
}
