#include "boundring/completion2d.hpp"
#include "boundring/dsl.hpp"

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

VecI V(long long a, long long b) { return VecI{Int(a), Int(b)}; }

}  // namespace

TEST_CASE("initial fan is the projective plane") {
    Fan2D f = initialFan();
    REQUIRE(f.rays == std::vector<VecI>{V(1, 0), V(0, 1), V(-1, -1)});
    REQUIRE(f.smoothAndComplete());
    // standard self-intersections of the three toric lines of P^2
    for (std::size_t i = 0; i < 3; ++i) REQUIRE(f.selfIntersection(i) == 1);
}

TEST_CASE("insertRay performs chained stellar subdivisions") {
    Fan2D f = initialFan();
    auto steps = insertRay(f, V(1, -2));
    REQUIRE(f.smoothAndComplete());
    REQUIRE(f.indexOf(V(1, -2)) >= 0);
    // the chain passes through the mediants (0,-1) and (1,-2)
    REQUIRE(steps.size() == 3);
    REQUIRE(steps[0].inserted_ray == V(0, -1));
    REQUIRE(steps[1].inserted_ray == V(1, -1));
    REQUIRE(steps[2].inserted_ray == V(1, -2));
    // idempotent
    REQUIRE(insertRay(f, V(1, -2)).empty());
    REQUIRE_THROWS_AS(insertRay(f, V(2, -4)), std::invalid_argument);
}

TEST_CASE("fan stays smooth under random insertions") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> entry(-6, 6);
    for (int trial = 0; trial < 50; ++trial) {
        Fan2D f = initialFan();
        for (int k = 0; k < 3; ++k) {
            VecI t = primitive(V(entry(rng), entry(rng)));
            if (isZero(t)) continue;
            insertRay(f, t);
            REQUIRE(f.smoothAndComplete());
        }
        // blow-up accounting: every new ray drops a self-intersection by one
        Int total = 0;
        for (std::size_t i = 0; i < f.rays.size(); ++i) total += f.selfIntersection(i);
        REQUIRE(total == 3 - 3 * (Int(f.rays.size()) - 3));
    }
}

TEST_CASE("strip completion: one blow-up, divisor labels and matrix") {
    CompletionReport rep = compatibleCompletion(loadSet("strip.set"));
    REQUIRE(rep.blowups.size() == 1);
    REQUIRE(rep.blowups[0].inserted_ray == V(0, -1));
    REQUIRE(rep.touchedRays() == std::vector<VecI>{V(0, -1)});
    REQUIRE(rep.untouchedInfinityRays() == std::vector<VecI>{V(-1, -1)});
    REQUIRE(rep.m_d == std::vector<std::vector<Int>>{{Int(0)}});
    REQUIRE(rep.trdeg_verdict == TrdegVerdict::inconclusive);
    REQUIRE(rep.ring.basis.elements == std::vector<Exponent>{{1, 0}});
}

TEST_CASE("T completion: two blow-ups and an indefinite matrix") {
    CompletionReport rep = compatibleCompletion(loadSet("T.set"));
    REQUIRE(rep.blowups.size() == 2);
    REQUIRE(rep.blowups[0].inserted_ray == V(0, -1));
    REQUIRE(rep.blowups[1].inserted_ray == V(1, -1));
    REQUIRE(rep.trdeg_verdict == TrdegVerdict::two);
    REQUIRE(rep.ring.basis.elements == std::vector<Exponent>{{1, 0}, {1, 1}});
}

TEST_CASE("already compatible completions need no blow-up") {
    CompletionReport half = compatibleCompletion(loadSet("halfplane.set"));
    REQUIRE(half.blowups.empty());
    REQUIRE(half.ring.basis.elements.empty());
    REQUIRE(half.trdeg_verdict == TrdegVerdict::zero);

    CompletionReport box = compatibleCompletion(loadSet("box.set"));
    REQUIRE(box.blowups.empty());
    REQUIRE(box.touchedRays().empty());
    REQUIRE(box.trdeg_verdict == TrdegVerdict::two);
    REQUIRE(box.ring.basis.elements == std::vector<Exponent>{{0, 1}, {1, 0}});
}

TEST_CASE("completion route equals the direct route on random sets") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> nTent(1, 2), nCons(1, 3), entry(-3, 3), cidx(0, 2);
    const Rat consts[3] = {Rat(1, 2), Rat(1), Rat(2)};
    int done = 0;
    while (done < 60) {
        std::vector<Tentacle> tents;
        int T = nTent(rng);
        for (int t = 0; t < T; ++t) {
            Tentacle tent;
            tent.n = 2;
            int K = nCons(rng);
            for (int k = 0; k < K; ++k) {
                MonomialConstraint c;
                c.alpha = {0, 0};
                c.beta = {0, 0};
                for (int i = 0; i < 2; ++i) {
                    int a = entry(rng);
                    if (a > 0) c.alpha[i] = a;
                    else c.beta[i] = -a;
                }
                c.bound = consts[cidx(rng)];
                tent.constraints.push_back(std::move(c));
            }
            tents.push_back(std::move(tent));
        }
        SetSpec s = makeSetSpec(2, std::move(tents));
        if (!validate(s).ring_computable) continue;
        ++done;
        BoundedMonoid direct = boundedMonoid(s);
        CompletionReport rep = compatibleCompletion(s);
        REQUIRE(direct.basis == rep.ring.basis);
    }
}

TEST_CASE("inertia verdicts") {
    using M = std::vector<std::vector<Int>>;
    REQUIRE(definitenessVerdict(M{}, 0) == TrdegVerdict::zero);
    REQUIRE(definitenessVerdict(M{{Int(-1)}}, 0) == TrdegVerdict::zero);
    REQUIRE(definitenessVerdict(M{{Int(0), Int(1)}, {Int(1), Int(-2)}}, 2) == TrdegVerdict::two);
    REQUIRE(definitenessVerdict(M{{Int(0)}}, 1) == TrdegVerdict::inconclusive);
    REQUIRE_THROWS_AS(definitenessVerdict(M{{Int(1)}}, 0), EngineContradiction);
}

TEST_CASE("only the planar case is supported") {
    Tentacle t;
    t.n = 3;
    MonomialConstraint c;
    c.alpha = {1, 0, 0};
    c.beta = {0, 0, 0};
    t.constraints.push_back(c);
    REQUIRE_THROWS_AS(compatibleCompletion(makeSetSpec(3, {t})), std::invalid_argument);
}
