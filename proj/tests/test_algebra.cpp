#include "boundring/algebra.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace boundring;

static const std::vector<std::string> XY{"x", "y"};

TEST_CASE("parser handles coefficients, powers and parentheses") {
    Polynomial f = parsePolynomial("3/2*x^2*y - y + 1", XY);
    REQUIRE(f.terms().size() == 3);
    REQUIRE(f.terms().at({2, 1}) == Rat(3, 2));
    REQUIRE(f.terms().at({0, 1}) == Rat(-1));
    REQUIRE(f.terms().at({0, 0}) == Rat(1));

    Polynomial g = parsePolynomial("(x + y) * (x - y)", XY);
    Polynomial want = parsePolynomial("x^2 - y^2", XY);
    REQUIRE(g == want);
}

TEST_CASE("parser rejects malformed input") {
    REQUIRE_THROWS_AS(parsePolynomial("x + ", XY), ParseError);
    REQUIRE_THROWS_AS(parsePolynomial("z", XY), ParseError);
    REQUIRE_THROWS_AS(parsePolynomial("x^-2", XY), ParseError);
    REQUIRE_THROWS_AS(parsePolynomial("1/0", XY), ParseError);
    REQUIRE_THROWS_AS(parsePolynomial("x y", XY), ParseError);
}

TEST_CASE("format/parse round-trip") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> deg(0, 6), coefNum(-20, 20), coefDen(1, 9), nterms(0, 6);
    for (int trial = 0; trial < 200; ++trial) {
        Polynomial f(2);
        int T = nterms(rng);
        for (int t = 0; t < T; ++t)
            f.addTerm({deg(rng), deg(rng)}, Rat(coefNum(rng), coefDen(rng)));
        Polynomial g = parsePolynomial(format(f, XY), XY);
        REQUIRE(f == g);
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937 rng(8);
    std::uniform_int_distribution<int> deg(0, 4), coef(-5, 5), pnum(-3, 3), pden(1, 4);
    for (int trial = 0; trial < 100; ++trial) {
        Polynomial f(2), g(2);
        for (int t = 0; t < 4; ++t) {
            f.addTerm({deg(rng), deg(rng)}, coef(rng));
            g.addTerm({deg(rng), deg(rng)}, coef(rng));
        }
        std::vector<Rat> p{Rat(pnum(rng), pden(rng)), Rat(pnum(rng), pden(rng))};
        REQUIRE((f + g).evaluate(p) == f.evaluate(p) + g.evaluate(p));
        REQUIRE((f * g).evaluate(p) == f.evaluate(p) * g.evaluate(p));
        REQUIRE((f - g).evaluate(p) == f.evaluate(p) - g.evaluate(p));
    }
}

TEST_CASE("addTerm cancels and rejects negative exponents") {
    Polynomial f(2);
    f.addTerm({1, 1}, 2);
    f.addTerm({1, 1}, -2);
    REQUIRE(f.isZero());
    REQUIRE_THROWS_AS(f.addTerm({-1, 0}, 1), std::invalid_argument);
}

TEST_CASE("graded-lex ordering of terms") {
    Polynomial f = parsePolynomial("x + y^3 + x*y", XY);
    std::vector<Exponent> order;
    for (const auto& [e, c] : f.terms()) order.push_back(e);
    REQUIRE(order == std::vector<Exponent>{{1, 0}, {1, 1}, {0, 3}});
}
