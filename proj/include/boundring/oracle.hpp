#pragma once

// One-sided numeric certification of unboundedness: sample |f| along
// sign-decorated monomial curves through a verified interior point of the
// tentacle, in exact rational arithmetic. Certification can only under-claim.

#include "boundring/boundedring.hpp"
#include "boundring/setmodel.hpp"

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace boundring {

struct OracleParams {
    int scales = 40;              // geometric schedule t = 0..scales
    Rat growth_threshold = 1000000;
    Rat ratio = Rat(3, 2);
    int window = 5;
};

struct GrowthVerdict {
    bool unbounded_certified = false;
    double max_abs = 0.0;
    std::vector<double> trace;            // certifying curve (or last tried)
    std::vector<Rat> trace_exact;
};

namespace detail {

inline Rat powerOfTwo(const Int& e) {
    using boost::multiprecision::pow;
    if (e >= 0) return Rat(pow(Int(2), static_cast<unsigned>(e)));
    return Rat(1, pow(Int(2), static_cast<unsigned>(-e)));
}

// Close rational approximation of 2^v for rational v; only used to propose
// points, every use is followed by an exact feasibility check.
inline Rat pow2Approx(const Rat& v) {
    using boost::multiprecision::numerator;
    using boost::multiprecision::denominator;
    Int num = numerator(v), den = denominator(v);
    Int fl = num / den;
    if (Rat(fl) > v) --fl;  // floor
    Rat frac = v - Rat(fl);
    double f = std::exp2(frac.convert_to<double>());  // in [1,2)
    const long long scale = 1LL << 40;
    Rat fr(Int(std::llround(f * static_cast<double>(scale))), Int(scale));
    return powerOfTwo(fl) * fr;
}

inline Rat log2Approx(const Rat& c) {
    double d = std::log2(c.convert_to<double>());
    const long long scale = 1LL << 30;
    return Rat(Int(std::llround(d * static_cast<double>(scale))), Int(scale));
}

// Fourier-Motzkin: a feasible point of {v : <a_i,v> <= b_i}, eliminating the
// last variable and back-substituting interval midpoints.
inline std::optional<std::vector<Rat>> fmFeasiblePoint(
    int n, const std::vector<std::pair<std::vector<Rat>, Rat>>& rows) {
    if (n == 0) {
        for (const auto& [a, b] : rows)
            if (b < 0) return std::nullopt;
        return std::vector<Rat>{};
    }
    std::vector<std::pair<std::vector<Rat>, Rat>> projected;
    std::vector<std::pair<std::vector<Rat>, Rat>> uppers, lowers;
    for (const auto& row : rows) {
        const Rat& c = row.first[n - 1];
        if (c == 0)
            projected.push_back(row);
        else if (c > 0)
            uppers.push_back(row);
        else
            lowers.push_back(row);
    }
    for (const auto& [au, bu] : uppers)
        for (const auto& [al, bl] : lowers) {
            std::vector<Rat> a(n, 0);
            const Rat cu = au[n - 1], cl = al[n - 1];
            for (int i = 0; i < n - 1; ++i) a[i] = au[i] / cu - al[i] / cl;
            projected.push_back({std::move(a), bu / cu - bl / cl});
        }
    auto sub = fmFeasiblePoint(n - 1, projected);
    if (!sub) return std::nullopt;
    std::optional<Rat> lo, hi;
    for (const auto& [a, b] : lowers) {
        Rat rest = b;
        for (int i = 0; i < n - 1; ++i) rest -= a[i] * (*sub)[i];
        Rat bound = rest / a[n - 1];  // c < 0 flips to a lower bound
        if (!lo || bound > *lo) lo = bound;
    }
    for (const auto& [a, b] : uppers) {
        Rat rest = b;
        for (int i = 0; i < n - 1; ++i) rest -= a[i] * (*sub)[i];
        Rat bound = rest / a[n - 1];
        if (!hi || bound < *hi) hi = bound;
    }
    Rat v;
    if (lo && hi) {
        if (*lo > *hi) return std::nullopt;
        v = (*lo + *hi) / 2;
    } else if (hi) {
        v = *hi - 1;
    } else if (lo) {
        v = *lo + 1;
    } else {
        v = 0;
    }
    sub->push_back(v);
    return sub;
}

inline bool strictlySatisfies(const std::vector<Rat>& p, const Tentacle& t) {
    for (const auto& c : t.constraints) {
        Rat lhs = 1, rhs = c.bound;
        for (int i = 0; i < t.n; ++i) {
            for (long long k = 0; k < c.alpha[i]; ++k) lhs *= p[i];
            for (long long k = 0; k < c.beta[i]; ++k) rhs *= p[i];
        }
        if (!(lhs < rhs)) return false;
    }
    return true;
}

}  // namespace detail

// A rational point strictly inside the tentacle's positive-orthant chamber,
// found in log coordinates and verified exactly in x-space.
inline std::vector<Rat> interiorPoint(const Tentacle& t) {
    const std::array<Rat, 4> deltas{Rat(1, 4), Rat(1, 16), Rat(1, 256), Rat(1, 65536)};
    for (const Rat& delta : deltas) {
        std::vector<std::pair<std::vector<Rat>, Rat>> rows;
        bool bad = false;
        for (const auto& c : t.constraints) {
            VecI a = c.normal();
            if (isZero(a)) {
                if (c.bound < 1) bad = true;
                continue;
            }
            std::vector<Rat> ar(t.n);
            for (int i = 0; i < t.n; ++i) ar[i] = Rat(a[i]);
            rows.push_back({std::move(ar), detail::log2Approx(c.bound) - delta});
        }
        if (bad) break;
        auto v = detail::fmFeasiblePoint(t.n, rows);
        if (!v) continue;
        std::vector<Rat> p(t.n);
        for (int i = 0; i < t.n; ++i) p[i] = detail::pow2Approx((*v)[i]);
        if (detail::strictlySatisfies(p, t)) return p;
    }
    throw std::invalid_argument("interiorPoint: no strictly interior point found "
                                "(tentacle empty or lower-dimensional)");
}

namespace detail {

inline bool growthCertified(const std::vector<Rat>& vals, const OracleParams& params) {
    int K = static_cast<int>(vals.size()) - 1;
    if (K < params.window) return false;
    if (!(vals[K] > params.growth_threshold)) return false;
    for (int k = K - params.window + 1; k <= K; ++k)
        if (!(vals[k] >= params.ratio * vals[k - 1])) return false;
    return true;
}

inline void runCurve(const Polynomial& f, const std::vector<Rat>& p, const VecI& dir,
                     const std::vector<int>& signs, const OracleParams& params,
                     GrowthVerdict& out) {
    std::vector<Rat> vals;
    std::vector<Rat> point(p.size());
    for (int t = 0; t <= params.scales; ++t) {
        for (std::size_t i = 0; i < p.size(); ++i)
            point[i] = Rat(signs[i]) * p[i] * powerOfTwo(Int(t) * dir[i]);
        Rat v = f.evaluate(point);
        if (v < 0) v = -v;
        vals.push_back(v);
    }
    for (const Rat& v : vals) {
        double d = v.convert_to<double>();
        if (d > out.max_abs) out.max_abs = d;
    }
    bool certified = growthCertified(vals, params);
    if (certified || out.trace_exact.empty()) {
        out.trace.clear();
        for (const Rat& v : vals) out.trace.push_back(v.convert_to<double>());
        out.trace_exact = std::move(vals);
    }
    if (certified) out.unbounded_certified = true;
}

inline std::vector<std::vector<int>> signPatterns(int n, SignRegime regime) {
    if (regime == SignRegime::positive_orthant) return {std::vector<int>(n, 1)};
    std::vector<std::vector<int>> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> s(n);
        for (int i = 0; i < n; ++i) s[i] = (mask >> i) & 1 ? -1 : 1;
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace detail

inline GrowthVerdict certifyUnbounded(const Polynomial& f, const SetSpec& s,
                                      const std::optional<VecI>& hint = std::nullopt,
                                      const OracleParams& params = {}) {
    requireValid(s);
    GrowthVerdict out;
    for (const Tentacle& t : s.tentacles) {
        LatticeCone rc = recessionCone(t);
        std::vector<VecI> dirs;
        if (hint) {
            if (!rc.contains(*hint)) continue;  // hint targets another tentacle
            dirs.push_back(primitive(*hint));
        } else {
            dirs = rc.generators();
        }
        if (dirs.empty()) continue;  // bounded tentacle, nothing grows
        std::vector<Rat> p = interiorPoint(t);
        for (const VecI& d : dirs)
            for (const auto& signs : detail::signPatterns(t.n, t.regime)) {
                detail::runCurve(f, p, d, signs, params, out);
                if (out.unbounded_certified) return out;
            }
    }
    return out;
}

struct ConsistencyReport {
    int monomials_checked = 0;
    std::vector<std::string> disagreements;
};

// Cross-validates the symbolic membership decision against the numeric
// oracle on all monomials up to the degree bound.
inline ConsistencyReport consistencyCheck(const SetSpec& s, int degreeBound,
                                          const OracleParams& params = {}) {
    requireValid(s);
    ConsistencyReport rep;
    std::vector<Exponent> monomials;
    Exponent cur(s.n, 0);
    auto enumerate = [&](auto&& self, int idx, int remaining) -> void {
        if (idx == s.n) {
            monomials.push_back(cur);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            cur[idx] = v;
            self(self, idx + 1, remaining - v);
        }
        cur[idx] = 0;
    };
    enumerate(enumerate, 0, degreeBound);

    for (const Exponent& e : monomials) {
        Polynomial mono = Polynomial::monomial(s.n, e);
        MembershipVerdict mv = isBounded(mono, s);
        rep.monomials_checked++;
        if (!mv.bounded) {
            GrowthVerdict gv = certifyUnbounded(mono, s, mv.violating_direction, params);
            if (!gv.unbounded_certified)
                rep.disagreements.push_back("monomial " + formatMonomial(e, s.names()) +
                                            ": symbolically unbounded but not certified");
        } else {
            GrowthVerdict gv = certifyUnbounded(mono, s, std::nullopt, params);
            if (gv.unbounded_certified)
                rep.disagreements.push_back("monomial " + formatMonomial(e, s.names()) +
                                            ": symbolically bounded but oracle certified growth");
        }
    }
    return rep;
}

}  // namespace boundring
