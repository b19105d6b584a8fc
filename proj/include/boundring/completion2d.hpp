#pragma once

// The geometric route for n = 2: build an S-compatible smooth complete fan by
// iterated stellar subdivisions at infinity, classify boundary divisors, read
// off B(S) as global sections, and analyze the intersection matrix of the
// removed divisors.

#include "boundring/boundedring.hpp"
#include "boundring/intlinalg.hpp"
#include "boundring/polyhedra.hpp"
#include "boundring/setmodel.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace boundring {

namespace detail {

// counterclockwise angular order starting at direction (1,0)
inline bool angleLess(const VecI& a, const VecI& b) {
    auto half = [](const VecI& v) {
        return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1;
    };
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return det2(a, b) > 0;
}

}  // namespace detail

// Smooth complete fan in Z^2, rays kept in cyclic (counterclockwise) order.
struct Fan2D {
    std::vector<VecI> rays;

    int indexOf(const VecI& r) const {
        for (std::size_t i = 0; i < rays.size(); ++i)
            if (rays[i] == r) return static_cast<int>(i);
        return -1;
    }

    const VecI& next(std::size_t i) const { return rays[(i + 1) % rays.size()]; }
    const VecI& prev(std::size_t i) const { return rays[(i + rays.size() - 1) % rays.size()]; }

    bool smoothAndComplete() const {
        if (rays.size() < 3) return false;
        for (std::size_t i = 0; i < rays.size(); ++i)
            if (detail::det2(rays[i], next(i)) != 1) return false;
        return true;
    }

    // The prev/next ray pair determines the self-intersection of the divisor:
    // u_prev + u_next = -c * u.
    Int selfIntersection(std::size_t i) const {
        VecI s = add(prev(i), next(i));
        const VecI& u = rays[i];
        int k = (u[0] != 0) ? 0 : 1;
        Int c = -s[k] / u[k];
        if (scaled(u, -c) != s)
            throw std::logic_error("Fan2D: prev+next not proportional to ray");
        return c;
    }
};

// Fan of the projective plane: affine chart plus the line at infinity.
inline Fan2D initialFan() {
    Fan2D f;
    f.rays = {VecI{1, 0}, VecI{0, 1}, VecI{-1, -1}};
    return f;
}

struct BlowupStep {
    VecI inserted_ray;
    std::pair<VecI, VecI> parent_cone;
    std::string label;
};

// Repeated stellar subdivision of the cone containing target until target is
// a ray; every inserted ray is the sum of its parent cone's rays, so the fan
// stays smooth.
inline std::vector<BlowupStep> insertRay(Fan2D& fan, const VecI& target, int labelStart = 1) {
    if (target.size() != 2 || isZero(target) || primitive(target) != target)
        throw std::invalid_argument("insertRay: target must be a primitive nonzero vector");
    if (!fan.smoothAndComplete())
        throw std::invalid_argument("insertRay: fan must be smooth and complete");
    std::vector<BlowupStep> steps;
    int counter = labelStart;
    while (fan.indexOf(target) < 0) {
        std::size_t i = 0;
        for (; i < fan.rays.size(); ++i) {
            if (detail::det2(fan.rays[i], target) > 0 && detail::det2(target, fan.next(i)) > 0)
                break;
        }
        if (i == fan.rays.size())
            throw std::logic_error("insertRay: no cone strictly contains target");
        VecI mediant = add(fan.rays[i], fan.next(i));
        BlowupStep step;
        step.inserted_ray = mediant;
        step.parent_cone = {fan.rays[i], fan.next(i)};
        step.label = "E" + std::to_string(counter++);
        fan.rays.insert(fan.rays.begin() + static_cast<long>(i) + 1, mediant);
        steps.push_back(std::move(step));
    }
    return steps;
}

struct DivisorRecord {
    VecI ray;
    bool at_infinity = false;
    bool touched = false;
    Int self_intersection = 0;
    std::string label;
};

enum class TrdegVerdict { zero, two, inconclusive, not_computed };

inline std::string toString(TrdegVerdict v) {
    switch (v) {
        case TrdegVerdict::zero: return "zero";
        case TrdegVerdict::two: return "two";
        case TrdegVerdict::inconclusive: return "inconclusive";
        default: return "not-computed";
    }
}

struct CompletionReport {
    Fan2D fan;
    std::vector<BlowupStep> blowups;
    std::vector<DivisorRecord> divisors;  // cyclic ray order
    BoundedMonoid ring;
    std::vector<std::vector<Int>> m_d;    // untouched infinity divisors
    TrdegVerdict trdeg_verdict = TrdegVerdict::not_computed;

    std::vector<VecI> touchedRays() const {
        std::vector<VecI> out;
        for (const auto& d : divisors)
            if (d.touched) out.push_back(d.ray);
        return out;
    }
    std::vector<VecI> untouchedInfinityRays() const {
        std::vector<VecI> out;
        for (const auto& d : divisors)
            if (d.at_infinity && !d.touched) out.push_back(d.ray);
        return out;
    }
};

class EngineContradiction : public std::logic_error {
public:
    explicit EngineContradiction(const std::string& msg) : std::logic_error(msg) {}
};

// Exact signature analysis of the intersection matrix, cross-checked against
// the monoid transcendence degree.
inline TrdegVerdict definitenessVerdict(const std::vector<std::vector<Int>>& m, int monoidTrdeg) {
    std::size_t k = m.size();
    std::vector<std::vector<Rat>> q(k, std::vector<Rat>(k));
    for (std::size_t i = 0; i < k; ++i) {
        if (m[i].size() != k) throw std::invalid_argument("definitenessVerdict: matrix not square");
        for (std::size_t j = 0; j < k; ++j) {
            if (m[i][j] != m[j][i])
                throw std::invalid_argument("definitenessVerdict: matrix not symmetric");
            q[i][j] = Rat(m[i][j]);
        }
    }
    auto [pos, neg, zero] = symmetricInertia(std::move(q));
    TrdegVerdict v;
    if (pos > 0)
        v = TrdegVerdict::two;
    else if (zero == 0)
        v = TrdegVerdict::zero;  // negative definite (vacuously for empty m)
    else
        v = TrdegVerdict::inconclusive;
    if (v == TrdegVerdict::two && monoidTrdeg != 2)
        throw EngineContradiction("intersection matrix has a positive eigenvalue but trdeg = " +
                                  std::to_string(monoidTrdeg));
    if (v == TrdegVerdict::zero && monoidTrdeg != 0)
        throw EngineContradiction("intersection matrix is negative definite but trdeg = " +
                                  std::to_string(monoidTrdeg));
    return v;
}

namespace detail {

inline bool atInfinity(const VecI& r) { return r[0] < 0 || r[1] < 0; }

inline bool touchedBy(const VecI& r, const std::vector<LatticeCone>& cones) {
    VecI mr = negated(r);
    for (const auto& c : cones)
        if (c.contains(mr)) return true;
    return false;
}

// Does some recession direction point strictly into the 2D cone (u,w) of the
// fan? Checked via the extreme rays of the exact cone intersection.
inline bool strictlyEntered(const VecI& u, const VecI& w, const std::vector<LatticeCone>& negCones) {
    LatticeCone sector = LatticeCone::fromGenerators(2, {u, w});
    for (const auto& nc : negCones) {
        LatticeCone is = intersect(sector, nc);
        for (const VecI& g : is.generators())
            if (g != u && g != w && !isZero(g)) return true;
    }
    return false;
}

}  // namespace detail

// Build a completion compatible with S: subdivide cones at infinity until
// every boundary divisor is either touched (its negated ray lies in a
// recession cone, so S sweeps it densely) or missed entirely by the closure
// of S.
inline CompletionReport compatibleCompletion(const SetSpec& s) {
    if (s.n != 2)
        throw std::invalid_argument("compatibleCompletion: only the planar case is supported");
    requireValid(s);

    std::vector<LatticeCone> cones = recessionCones(s);
    std::vector<LatticeCone> negCones;
    for (const auto& c : cones) {
        std::vector<VecI> g;
        for (const VecI& v : c.generators()) g.push_back(negated(v));
        negCones.push_back(LatticeCone::fromGenerators(2, g));
    }

    CompletionReport rep;
    rep.fan = initialFan();

    int guard = 0;
    for (;;) {
        if (++guard > 1000) throw std::logic_error("compatibleCompletion: subdivision did not terminate");
        bool changed = false;
        for (std::size_t i = 0; i < rep.fan.rays.size() && !changed; ++i) {
            const VecI& u = rep.fan.rays[i];
            const VecI& w = rep.fan.next(i);
            bool uBad = detail::atInfinity(u) && !detail::touchedBy(u, cones);
            bool wBad = detail::atInfinity(w) && !detail::touchedBy(w, cones);
            if (!uBad && !wBad) continue;
            if (!detail::strictlyEntered(u, w, negCones)) continue;
            VecI mediant = add(u, w);
            BlowupStep step;
            step.inserted_ray = mediant;
            step.parent_cone = {u, w};
            step.label = "E" + std::to_string(rep.blowups.size() + 1);
            rep.fan.rays.insert(rep.fan.rays.begin() + static_cast<long>(i) + 1, mediant);
            rep.blowups.push_back(std::move(step));
            changed = true;
        }
        if (!changed) break;
    }

    for (std::size_t i = 0; i < rep.fan.rays.size(); ++i) {
        DivisorRecord d;
        d.ray = rep.fan.rays[i];
        d.at_infinity = detail::atInfinity(d.ray);
        d.touched = d.at_infinity && detail::touchedBy(d.ray, cones);
        d.self_intersection = rep.fan.selfIntersection(i);
        for (const auto& step : rep.blowups)
            if (step.inserted_ray == d.ray) d.label = step.label;
        if (d.label.empty()) {
            if (d.ray == VecI{1, 0}) d.label = "D_x";
            else if (d.ray == VecI{0, 1}) d.label = "D_y";
            else d.label = "L";
        }
        rep.divisors.push_back(std::move(d));
    }

    // global sections of the complement of the untouched divisors
    std::vector<VecI> normals = orthantNormals(2);
    for (const auto& d : rep.divisors)
        if (d.touched) normals.push_back(negated(d.ray));
    rep.ring.exponentCone = LatticeCone::fromHalfspaces(2, normals);
    rep.ring.basis = hilbertBasis(rep.ring.exponentCone);
    rep.ring.trdeg = rep.ring.basis.rank;

    // intersection matrix of the untouched infinity divisors, cyclic order
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < rep.fan.rays.size(); ++i)
        if (rep.divisors[i].at_infinity && !rep.divisors[i].touched) idx.push_back(i);
    std::size_t k = idx.size();
    rep.m_d.assign(k, std::vector<Int>(k, 0));
    for (std::size_t a = 0; a < k; ++a) {
        rep.m_d[a][a] = rep.divisors[idx[a]].self_intersection;
        for (std::size_t b = a + 1; b < k; ++b) {
            std::size_t ia = idx[a], ib = idx[b];
            std::size_t nRays = rep.fan.rays.size();
            bool adjacent = ((ia + 1) % nRays == ib) || ((ib + 1) % nRays == ia);
            rep.m_d[a][b] = rep.m_d[b][a] = adjacent ? 1 : 0;
        }
    }
    rep.trdeg_verdict = definitenessVerdict(rep.m_d, rep.ring.trdeg);
    return rep;
}

inline std::vector<std::vector<Int>> intersectionMatrix(const CompletionReport& rep) {
    return rep.m_d;
}

}  // namespace boundring
