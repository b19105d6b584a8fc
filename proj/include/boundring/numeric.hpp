#pragma once

// Exact arithmetic base layer: arbitrary-precision integers/rationals and
// small integer-vector helpers used across the cone and monoid machinery.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace boundring {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Integer vector in the exponent / direction lattice Z^n.
using VecI = std::vector<Int>;

inline Int dot(const VecI& a, const VecI& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dot: dimension mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool isZero(const VecI& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

inline VecI negated(const VecI& v) {
    VecI r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
    return r;
}

inline VecI add(const VecI& a, const VecI& b) {
    VecI r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline VecI sub(const VecI& a, const VecI& b) {
    VecI r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline VecI scaled(const VecI& v, const Int& c) {
    VecI r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

// Divide by the gcd of the entries; the zero vector stays zero.
inline VecI primitive(VecI v) {
    Int g = 0;
    for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
    if (g > 1)
        for (Int& x : v) x /= g;
    return v;
}

inline bool lexLess(const VecI& a, const VecI& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline std::string toString(const VecI& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + ")";
}

// Π C_i^{λ_i} compared against 1, decided by exact integer exponentiation.
// Returns -1, 0 or +1 for <, = or >.
inline int compareProductPowersToOne(const std::vector<Rat>& C, const VecI& lambda) {
    using boost::multiprecision::numerator;
    using boost::multiprecision::denominator;
    using boost::multiprecision::pow;
    Int num = 1, den = 1;
    for (std::size_t i = 0; i < C.size(); ++i) {
        if (lambda[i] == 0) continue;
        if (lambda[i] < 0)
            throw std::invalid_argument("compareProductPowersToOne: negative exponent");
        auto e = static_cast<unsigned>(lambda[i]);
        num *= pow(numerator(C[i]), e);
        den *= pow(denominator(C[i]), e);
    }
    if (num < den) return -1;
    if (num > den) return 1;
    return 0;
}

}  // namespace boundring
