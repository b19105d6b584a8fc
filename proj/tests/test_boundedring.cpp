#include "boundring/boundedring.hpp"
#include "boundring/dsl.hpp"
#include "boundring/valuation.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <random>
#include <sstream>

using namespace boundring;

namespace {

SetSpec loadSet(const std::string& name) {
    std::ifstream in(std::string(DATA_DIR) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return parseSetFile(ss.str()).spec;
}

Exponent E(long long a, long long b) { return Exponent{a, b}; }

}  // namespace

TEST_CASE("strip: B = R[x]") {
    BoundedMonoid m = boundedMonoid(loadSet("strip.set"));
    REQUIRE(m.basis.elements == std::vector<Exponent>{E(1, 0)});
    REQUIRE(m.trdeg == 1);
}

TEST_CASE("T: B = R[x, xy]") {
    BoundedMonoid m = boundedMonoid(loadSet("T.set"));
    REQUIRE(m.basis.elements == std::vector<Exponent>{E(1, 0), E(1, 1)});
    REQUIRE(m.trdeg == 2);
}

TEST_CASE("two hyperbola conditions: B = R[xy, x^2y, x^2y^3]") {
    BoundedMonoid m = boundedMonoid(loadSet("hyperbolas.set"));
    REQUIRE(m.basis.elements == std::vector<Exponent>{E(1, 1), E(2, 1), E(2, 3)});
    REQUIRE(m.trdeg == 2);
}

TEST_CASE("box: everything is bounded") {
    BoundedMonoid m = boundedMonoid(loadSet("box.set"));
    REQUIRE(m.basis.elements == std::vector<Exponent>{E(0, 1), E(1, 0)});
    REQUIRE(m.trdeg == 2);
}

TEST_CASE("sector |y| <= |x|: only constants are bounded") {
    BoundedMonoid m = boundedMonoid(loadSet("halfplane.set"));
    REQUIRE(m.basis.elements.empty());
    REQUIRE(m.trdeg == 0);
}

TEST_CASE("membership verdicts on T") {
    SetSpec T = loadSet("T.set");
    auto vars = T.names();
    REQUIRE(isBounded(parsePolynomial("x^3 + x*y", vars), T).bounded);
    REQUIRE(isBounded(parsePolynomial("5", vars), T).bounded);
    MembershipVerdict v = isBounded(parsePolynomial("y", vars), T);
    REQUIRE(!v.bounded);
    REQUIRE(v.violating_exponent == E(0, 1));
    REQUIRE(dot(toVecI(*v.violating_exponent), *v.violating_direction) > 0);
    // y^2*x is unbounded even though each factor power balances differently
    REQUIRE(!isBounded(parsePolynomial("x*y^2", vars), T).bounded);
}

TEST_CASE("membership agrees with the basis monoid on monomials") {
    SetSpec s = loadSet("hyperbolas.set");
    BoundedMonoid m = boundedMonoid(s);
    for (long long a = 0; a <= 7; ++a)
        for (long long b = 0; b <= 7; ++b) {
            Polynomial mono = Polynomial::monomial(2, E(a, b));
            bool member = m.exponentCone.contains(VecI{Int(a), Int(b)});
            REQUIRE(isBounded(mono, s).bounded == member);
        }
}

TEST_CASE("a sum is bounded iff every term is (monomial sets)") {
    SetSpec T = loadSet("T.set");
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> deg(0, 5), coef(1, 9);
    for (int trial = 0; trial < 100; ++trial) {
        Polynomial f(2);
        bool all = true;
        for (int t = 0; t < 4; ++t) {
            Exponent e = E(deg(rng), deg(rng));
            f.addTerm(e, coef(rng));
            all = all && isBounded(Polynomial::monomial(2, e), T).bounded;
        }
        REQUIRE(isBounded(f, T).bounded == all);
    }
}

TEST_CASE("fraction field membership") {
    SetSpec s = loadSet("hyperbolas.set");
    // group generated by (1,1),(2,1),(2,3) is all of Z^2
    REQUIRE(fractionFieldContains(E(1, 0), s));
    REQUIRE(fractionFieldContains(E(0, 1), s));
    SetSpec strip = loadSet("strip.set");
    REQUIRE(fractionFieldContains(E(3, 0), strip));
    REQUIRE(!fractionFieldContains(E(0, 1), strip));
    REQUIRE_THROWS_AS(fractionFieldContains(Exponent{-1, 0}, strip), std::invalid_argument);
}

TEST_CASE("proper witness existence tracks transcendence degree") {
    REQUIRE(!properWitness(loadSet("strip.set")).witness.has_value());
    REQUIRE(!properWitness(loadSet("halfplane.set")).witness.has_value());
    WitnessResult w = properWitness(loadSet("hyperbolas.set"));
    REQUIRE(w.witness.has_value());
    REQUIRE(verifyWitness(*w.witness, loadSet("hyperbolas.set")));
    WitnessResult box = properWitness(loadSet("box.set"));
    REQUIRE(box.witness.has_value());
}

TEST_CASE("witness verifier rejects bad candidates") {
    SetSpec s = loadSet("hyperbolas.set");
    REQUIRE(verifyWitness(E(1, 1), s));
    REQUIRE(!verifyWitness(E(0, 0), s));
    REQUIRE(!verifyWitness(E(2, 1), s));  // on the boundary of strictness
    SetSpec strip = loadSet("strip.set");
    REQUIRE(!verifyWitness(E(1, 0), strip));
}

TEST_CASE("valuations: axioms and compatibility") {
    MonomialValuation v(VecI{Int(0), Int(-1)});
    auto vars = defaultVarNames(2);
    Polynomial f = parsePolynomial("x^2*y^3 + x", vars);
    Polynomial g = parsePolynomial("y^2 + 1", vars);
    REQUIRE(*valuationValue(v, f) == -3);
    REQUIRE(*valuationValue(v, g) == -2);
    REQUIRE(*valuationValue(v, f * g) == *valuationValue(v, f) + *valuationValue(v, g));
    REQUIRE(*valuationValue(v, f + g) >= std::min(*valuationValue(v, f), *valuationValue(v, g)));
    REQUIRE(!valuationValue(v, Polynomial::zero(2)).has_value());

    SetSpec strip = loadSet("strip.set");
    REQUIRE(compatibleWith(MonomialValuation(VecI{Int(0), Int(-1)}), strip));
    REQUIRE(compatibleWith(MonomialValuation(VecI{Int(1), Int(0)}), strip));
    REQUIRE(!compatibleWith(MonomialValuation(VecI{Int(-1), Int(0)}), strip));
}
