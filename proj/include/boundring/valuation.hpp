#pragma once

// Monomial (divisorial) valuations attached to primitive weight vectors.

#include "boundring/algebra.hpp"
#include "boundring/setmodel.hpp"

#include <optional>

namespace boundring {

struct MonomialValuation {
    VecI weight;  // primitive, nonzero

    explicit MonomialValuation(VecI w) : weight(primitive(std::move(w))) {
        if (isZero(weight))
            throw std::invalid_argument("MonomialValuation: weight must be nonzero");
    }
};

// min over the support of <w, e>; nullopt encodes +infinity (zero polynomial).
inline std::optional<Int> valuationValue(const MonomialValuation& v, const Polynomial& f) {
    std::optional<Int> best;
    for (const auto& [e, c] : f.terms()) {
        Int val = dot(v.weight, toVecI(e));
        if (!best || val < *best) best = val;
    }
    return best;
}

inline bool isRegularAlong(const MonomialValuation& v, const Polynomial& f) {
    auto val = valuationValue(v, f);
    return !val || *val >= 0;
}

// Combinatorial compatibility: -w lies in the recession cone of some tentacle.
inline bool compatibleWith(const MonomialValuation& v, const SetSpec& s) {
    VecI mw = negated(v.weight);
    for (const Tentacle& t : s.tentacles)
        if (recessionCone(t).contains(mw)) return true;
    return false;
}

}  // namespace boundring
