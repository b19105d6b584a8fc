#pragma once

// Tentacle sets cut out by monomial inequalities |x^alpha| <= C*|x^beta|,
// their log-space polyhedra, recession cones, and density/noetherianity
// diagnostics.

#include "boundring/algebra.hpp"
#include "boundring/polyhedra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace boundring {

enum class SignRegime { absolute, positive_orthant };

struct MonomialConstraint {
    Exponent alpha;
    Exponent beta;
    Rat bound = 1;  // C > 0

    VecI normal() const { return sub(toVecI(alpha), toVecI(beta)); }
};

struct Tentacle {
    int n = 0;
    std::vector<MonomialConstraint> constraints;
    SignRegime regime = SignRegime::absolute;
};

struct SetSpec {
    int n = 0;
    std::vector<Tentacle> tentacles;            // semantics: union
    std::vector<std::string> varNames;          // defaults to x,y,z,w

    const std::vector<std::string>& names() const { return varNames; }
};

inline SetSpec makeSetSpec(int n, std::vector<Tentacle> tentacles,
                           std::vector<std::string> varNames = {}) {
    if (tentacles.empty()) throw std::invalid_argument("SetSpec: need at least one tentacle");
    for (const auto& t : tentacles)
        if (t.n != n) throw std::invalid_argument("SetSpec: tentacle dimension mismatch");
    SetSpec s;
    s.n = n;
    s.tentacles = std::move(tentacles);
    s.varNames = varNames.empty() ? defaultVarNames(n) : std::move(varNames);
    return s;
}

// Coordinate transport u_i = log|x_i|: one row (alpha - beta, C) per
// constraint. The sign chambers all share this model.
inline MultiplicativeSystem logModel(const Tentacle& t) {
    MultiplicativeSystem sys;
    sys.n = t.n;
    for (const auto& c : t.constraints) {
        if (c.bound <= 0)
            throw std::invalid_argument("logModel: constraint bound must be positive");
        sys.rows.push_back({c.normal(), c.bound});
    }
    return sys;
}

// Asymptotic directions: the constants C do not enter.
inline LatticeCone recessionCone(const Tentacle& t) {
    if (!feasible(logModel(t)))
        throw std::invalid_argument("recessionCone: infeasible tentacle");
    std::vector<VecI> normals;
    for (const auto& c : t.constraints) {
        VecI a = primitive(c.normal());
        if (!isZero(a)) normals.push_back(std::move(a));
    }
    return LatticeCone::fromHalfspaces(t.n, normals);
}

struct DensityDiagnostics {
    bool zariski_dense_at_infinity = false;
    bool unbounded = false;
    bool conductor_zero = false;
    bool noetherian_obstruction = false;
    std::vector<std::string> messages;

    // all tentacles feasible and full-dimensional: precondition of the ring
    // computation
    bool ring_computable = true;
};

inline DensityDiagnostics validate(const SetSpec& s) {
    DensityDiagnostics d;
    bool anyUnbounded = false;
    bool anyBadUnbounded = false;
    for (std::size_t i = 0; i < s.tentacles.size(); ++i) {
        const Tentacle& t = s.tentacles[i];
        SystemClass cls = classifySystem(logModel(t));
        if (cls == SystemClass::infeasible) {
            d.ring_computable = false;
            d.messages.push_back("tentacle " + std::to_string(i) + ": log polyhedron is empty");
            continue;
        }
        // directions with all coordinates <= 0 send |x_i| toward 0 or keep it
        // bounded; only a positive coordinate escapes to infinity
        LatticeCone rc = recessionCone(t);
        bool unbounded = false;
        for (const VecI& g : rc.generators())
            for (const Int& x : g)
                if (x > 0) unbounded = true;
        anyUnbounded = anyUnbounded || unbounded;
        if (cls == SystemClass::lower_dimensional) {
            d.ring_computable = false;
            d.messages.push_back("tentacle " + std::to_string(i) +
                                 ": log polyhedron is lower-dimensional");
            if (unbounded) anyBadUnbounded = true;
        }
    }
    d.unbounded = anyUnbounded;
    d.noetherian_obstruction = anyBadUnbounded;
    d.zariski_dense_at_infinity = anyUnbounded && !anyBadUnbounded && d.ring_computable;
    d.conductor_zero = d.zariski_dense_at_infinity;
    if (d.noetherian_obstruction)
        d.messages.push_back("B_V(S) is not noetherian: an unbounded tentacle has a "
                             "lower-dimensional log polyhedron");
    if (!d.unbounded && d.ring_computable)
        d.messages.push_back("set is bounded: B(S) = R[V]");
    return d;
}

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(DensityDiagnostics diag)
        : std::runtime_error(describe(diag)), diagnostics(std::move(diag)) {}
    DensityDiagnostics diagnostics;

private:
    static std::string describe(const DensityDiagnostics& d) {
        std::string s = "set validation failed";
        for (const auto& m : d.messages) s += "; " + m;
        return s;
    }
};

inline void requireValid(const SetSpec& s) {
    DensityDiagnostics d = validate(s);
    if (!d.ring_computable) throw ValidationError(std::move(d));
}

}  // namespace boundring
