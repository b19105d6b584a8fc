#pragma once

// The direct route: B(S) as a monomial algebra read off the dual of the
// recession cones, with membership, transcendence degree, fraction-field and
// proper-witness queries.

#include "boundring/algebra.hpp"
#include "boundring/intlinalg.hpp"
#include "boundring/polyhedra.hpp"
#include "boundring/setmodel.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace boundring {

struct BoundedMonoid {
    HilbertBasis basis;
    LatticeCone exponentCone;  // {e >= 0 : <e,d> <= 0 for all recession directions}
    int trdeg = 0;
};

inline std::vector<VecI> orthantNormals(int n) {
    std::vector<VecI> h;
    for (int i = 0; i < n; ++i) {
        VecI a(n, 0);
        a[i] = -1;
        h.push_back(std::move(a));
    }
    return h;
}

inline std::vector<LatticeCone> recessionCones(const SetSpec& s) {
    std::vector<LatticeCone> cones;
    for (const Tentacle& t : s.tentacles) cones.push_back(recessionCone(t));
    return cones;
}

inline BoundedMonoid boundedMonoid(const SetSpec& s) {
    requireValid(s);
    LatticeCone sum = recessionCone(s.tentacles[0]);
    for (std::size_t i = 1; i < s.tentacles.size(); ++i)
        sum = minkowskiSum(sum, recessionCone(s.tentacles[i]));
    LatticeCone orthant = LatticeCone::fromHalfspaces(s.n, orthantNormals(s.n));
    BoundedMonoid m;
    m.exponentCone = intersect(orthant, dualCone(sum));
    m.basis = hilbertBasis(m.exponentCone);
    m.trdeg = m.basis.rank;
    return m;
}

struct MembershipVerdict {
    bool bounded = true;
    std::optional<Exponent> violating_exponent;
    std::optional<VecI> violating_direction;
    std::map<VecI, Int> per_divisor_values;  // weight -> valuation of f
};

inline MembershipVerdict isBounded(const Polynomial& f, const SetSpec& s) {
    requireValid(s);
    MembershipVerdict v;
    if (f.isZero()) return v;
    std::vector<VecI> directions;
    for (const LatticeCone& rc : recessionCones(s))
        for (const VecI& d : rc.generators()) directions.push_back(d);
    std::sort(directions.begin(), directions.end(), lexLess);
    directions.erase(std::unique(directions.begin(), directions.end()), directions.end());

    for (const VecI& d : directions) {
        VecI w = negated(d);
        Int minval = 0;
        bool first = true;
        for (const auto& [e, c] : f.terms()) {
            Int val = dot(w, toVecI(e));
            if (first || val < minval) minval = val;
            first = false;
        }
        v.per_divisor_values[w] = minval;
    }

    // pick a maximizing extreme direction as the reported violation
    std::optional<Int> worst;
    for (const auto& [e, c] : f.terms()) {
        VecI ev = toVecI(e);
        for (const VecI& d : directions) {
            Int p = dot(ev, d);
            if (p > 0 && (!worst || p > *worst)) {
                worst = p;
                v.bounded = false;
                v.violating_exponent = e;
                v.violating_direction = d;
            }
        }
    }
    return v;
}

inline int trdeg(const SetSpec& s) { return boundedMonoid(s).trdeg; }

// Lattice (group) membership of a monomial exponent in the group generated by
// the Hilbert basis, decided by Smith-style diagonalization.
inline bool fractionFieldContains(const Exponent& e, const SetSpec& s) {
    for (long long x : e)
        if (x < 0) throw std::invalid_argument("fractionFieldContains: exponent must be >= 0");
    BoundedMonoid m = boundedMonoid(s);
    std::vector<VecI> gens;
    for (const auto& b : m.basis.elements) gens.push_back(toVecI(b));
    return latticeContains(gens, toVecI(e));
}

struct WitnessResult {
    std::optional<Exponent> witness;
    std::string reason;
};

// A proper witness is a nonzero e >= 0 in the exponent cone pairing strictly
// negatively with every nonzero recession direction. The relative-interior
// point of the exponent cone (sum of its extreme rays) works whenever any
// witness exists.
inline WitnessResult properWitness(const SetSpec& s) {
    BoundedMonoid m = boundedMonoid(s);
    WitnessResult res;
    VecI cand(s.n, 0);
    for (const VecI& r : m.exponentCone.rays) cand = add(cand, r);
    if (isZero(cand)) {
        res.reason = "trdeg < n: no such h exists";
        return res;
    }
    for (const LatticeCone& rc : recessionCones(s)) {
        if (!rc.lineality.empty()) {
            res.reason = "trdeg < n: no such h exists";
            return res;
        }
        for (const VecI& d : rc.rays)
            if (dot(cand, d) >= 0) {
                res.reason = "trdeg < n: no such h exists";
                return res;
            }
    }
    Exponent e(s.n);
    for (int i = 0; i < s.n; ++i) e[i] = static_cast<long long>(cand[i]);
    res.witness = e;
    res.reason = "verified strict on all recession directions";
    return res;
}

// Checks a candidate exponent against the witness conditions.
inline bool verifyWitness(const Exponent& e, const SetSpec& s) {
    VecI ev = toVecI(e);
    if (isZero(ev)) return false;
    for (long long x : e)
        if (x < 0) return false;
    BoundedMonoid m = boundedMonoid(s);
    if (!m.exponentCone.contains(ev)) return false;
    for (const LatticeCone& rc : recessionCones(s)) {
        if (!rc.lineality.empty()) return false;
        for (const VecI& d : rc.rays)
            if (dot(ev, d) >= 0) return false;
    }
    return true;
}

inline std::vector<std::string> generatorStrings(const BoundedMonoid& m,
                                                 const std::vector<std::string>& vars) {
    std::vector<std::string> out;
    for (const auto& e : m.basis.elements) out.push_back(formatMonomial(e, vars));
    return out;
}

}  // namespace boundring
