#include "boundring/setmodel.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace boundring;

namespace {

VecI V(long long a, long long b) { return VecI{Int(a), Int(b)}; }

Tentacle tentacle(std::vector<MonomialConstraint> cons) {
    Tentacle t;
    t.n = 2;
    t.constraints = std::move(cons);
    return t;
}

MonomialConstraint con(Exponent alpha, Exponent beta, Rat bound = 1) {
    MonomialConstraint c;
    c.alpha = std::move(alpha);
    c.beta = std::move(beta);
    c.bound = std::move(bound);
    return c;
}

}  // namespace

TEST_CASE("recession cone of the strip") {
    Tentacle strip = tentacle({con({1, 0}, {0, 0})});  // |x| <= 1
    LatticeCone rc = recessionCone(strip);
    REQUIRE(rc.lineality == std::vector<VecI>{V(0, 1)});
    REQUIRE(rc.rays == std::vector<VecI>{V(-1, 0)});
}

TEST_CASE("recession cone of T is pointed") {
    Tentacle T = tentacle({con({1, 0}, {0, 0}), con({1, 1}, {0, 0})});
    LatticeCone rc = recessionCone(T);
    std::vector<VecI> rays = rc.rays;
    std::sort(rays.begin(), rays.end(), lexLess);
    REQUIRE(rc.lineality.empty());
    REQUIRE(rays == std::vector<VecI>{V(-1, 1), V(0, -1)});
}

TEST_CASE("recession cone ignores the constants") {
    Tentacle a = tentacle({con({1, 0}, {0, 0}, Rat(1))});
    Tentacle b = tentacle({con({1, 0}, {0, 0}, Rat(1000000))});
    REQUIRE(recessionCone(a) == recessionCone(b));
}

TEST_CASE("diagnostics: bounded box") {
    SetSpec s = makeSetSpec(2, {tentacle({con({1, 0}, {0, 0}), con({0, 1}, {0, 0})})});
    DensityDiagnostics d = validate(s);
    REQUIRE(!d.unbounded);
    REQUIRE(d.ring_computable);
    REQUIRE(!d.noetherian_obstruction);
    REQUIRE(!d.zariski_dense_at_infinity);
    bool boundedMsg = false;
    for (const auto& m : d.messages)
        if (m.find("bounded") != std::string::npos) boundedMsg = true;
    REQUIRE(boundedMsg);
}

TEST_CASE("diagnostics: unbounded full-dimensional set is dense at infinity") {
    SetSpec s = makeSetSpec(2, {tentacle({con({1, 0}, {0, 0})})});
    DensityDiagnostics d = validate(s);
    REQUIRE(d.unbounded);
    REQUIRE(d.zariski_dense_at_infinity);
    REQUIRE(d.conductor_zero);
    REQUIRE(!d.noetherian_obstruction);
}

TEST_CASE("diagnostics: thin unbounded set obstructs noetherianity") {
    // |x| <= |y| and |y| <= |x|: the diagonal
    SetSpec s = makeSetSpec(2, {tentacle({con({1, 0}, {0, 1}), con({0, 1}, {1, 0})})});
    DensityDiagnostics d = validate(s);
    REQUIRE(d.noetherian_obstruction);
    REQUIRE(!d.ring_computable);
    REQUIRE(d.unbounded);
    REQUIRE_THROWS_AS(requireValid(s), ValidationError);
}

TEST_CASE("diagnostics: empty tentacle") {
    SetSpec s = makeSetSpec(
        2, {tentacle({con({1, 0}, {0, 1}, Rat(1, 2)), con({0, 1}, {1, 0}, Rat(1, 2))})});
    DensityDiagnostics d = validate(s);
    REQUIRE(!d.ring_computable);
    REQUIRE(!d.noetherian_obstruction);  // empty sets obstruct nothing
}

TEST_CASE("strictness of the comparator does not matter for the model") {
    Tentacle strict = tentacle({con({1, 0}, {0, 0})});
    MultiplicativeSystem m = logModel(strict);
    REQUIRE(m.rows.size() == 1);
    REQUIRE(m.rows[0].a == V(1, 0));
    REQUIRE(m.rows[0].bound == Rat(1));
}
