#pragma once

// Sparse exact-rational multivariate polynomials keyed by exponent vectors,
// together with the text parser/printer shared with the CLI.

#include "boundring/numeric.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace boundring {

using Exponent = std::vector<long long>;

inline VecI toVecI(const Exponent& e) {
    VecI v(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) v[i] = e[i];
    return v;
}

inline long long degreeSum(const Exponent& e) {
    long long s = 0;
    for (long long x : e) s += x;
    return s;
}

// Graded lexicographic order: first by total degree, then lexicographically.
struct GradedLexLess {
    bool operator()(const Exponent& a, const Exponent& b) const {
        long long da = degreeSum(a), db = degreeSum(b);
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    std::size_t position;
};

class Polynomial {
public:
    explicit Polynomial(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("Polynomial: need n >= 1");
    }

    int vars() const { return n_; }
    bool isZero() const { return terms_.empty(); }

    const std::map<Exponent, Rat, GradedLexLess>& terms() const { return terms_; }

    std::set<Exponent, GradedLexLess> support() const {
        std::set<Exponent, GradedLexLess> s;
        for (const auto& [e, c] : terms_) s.insert(e);
        return s;
    }

    void addTerm(const Exponent& e, const Rat& c) {
        if (static_cast<int>(e.size()) != n_)
            throw std::invalid_argument("Polynomial::addTerm: exponent length mismatch");
        for (long long x : e)
            if (x < 0) throw std::invalid_argument("Polynomial::addTerm: negative exponent");
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    static Polynomial zero(int n) { return Polynomial(n); }

    static Polynomial constant(int n, const Rat& c) {
        Polynomial p(n);
        p.addTerm(Exponent(n, 0), c);
        return p;
    }

    static Polynomial monomial(int n, const Exponent& e, const Rat& c = 1) {
        Polynomial p(n);
        p.addTerm(e, c);
        return p;
    }

    Polynomial operator+(const Polynomial& o) const {
        requireSameVars(o);
        Polynomial r = *this;
        for (const auto& [e, c] : o.terms_) r.addTerm(e, c);
        return r;
    }

    Polynomial operator-(const Polynomial& o) const {
        requireSameVars(o);
        Polynomial r = *this;
        for (const auto& [e, c] : o.terms_) r.addTerm(e, -c);
        return r;
    }

    Polynomial operator*(const Polynomial& o) const {
        requireSameVars(o);
        Polynomial r(n_);
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) {
                Exponent e(n_);
                for (int i = 0; i < n_; ++i) e[i] = e1[i] + e2[i];
                r.addTerm(e, c1 * c2);
            }
        return r;
    }

    bool operator==(const Polynomial& o) const {
        return n_ == o.n_ && terms_ == o.terms_;
    }

    Rat evaluate(const std::vector<Rat>& point) const {
        if (static_cast<int>(point.size()) != n_)
            throw std::invalid_argument("Polynomial::evaluate: dimension mismatch");
        Rat s = 0;
        for (const auto& [e, c] : terms_) {
            Rat m = c;
            for (int i = 0; i < n_; ++i)
                for (long long k = 0; k < e[i]; ++k) m *= point[i];
            s += m;
        }
        return s;
    }

private:
    void requireSameVars(const Polynomial& o) const {
        if (n_ != o.n_) throw std::invalid_argument("Polynomial: variable count mismatch");
    }

    int n_;
    std::map<Exponent, Rat, GradedLexLess> terms_;
};

namespace detail {

class PolyParser {
public:
    PolyParser(const std::string& text, const std::vector<std::string>& vars)
        : text_(text), vars_(vars) {}

    Polynomial parse() {
        Polynomial p = parseExpression();
        skipSpace();
        if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
        return p;
    }

private:
    Polynomial parseExpression() {
        skipSpace();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = (take() == '-');
        Polynomial p = parseTerm();
        if (neg) p = Polynomial::zero(n()) - p;
        for (;;) {
            skipSpace();
            char c = peek();
            if (c != '+' && c != '-') break;
            take();
            Polynomial t = parseTerm();
            p = (c == '+') ? p + t : p - t;
        }
        return p;
    }

    Polynomial parseTerm() {
        Polynomial p = parseFactor();
        for (;;) {
            skipSpace();
            if (peek() != '*') break;
            take();
            p = p * parseFactor();
        }
        return p;
    }

    Polynomial parseFactor() {
        skipSpace();
        char c = peek();
        if (c == '(') {
            take();
            Polynomial p = parseExpression();
            skipSpace();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            take();
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parseNumber();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parseVariablePower();
        throw ParseError("expected number, variable or '('", pos_);
    }

    Polynomial parseNumber() {
        Int num = parseInteger();
        skipSpace();
        if (peek() == '/') {
            take();
            skipSpace();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("expected denominator", pos_);
            Int den = parseInteger();
            if (den == 0) throw ParseError("zero denominator", pos_);
            return Polynomial::constant(n(), Rat(num, den));
        }
        return Polynomial::constant(n(), Rat(num));
    }

    Polynomial parseVariablePower() {
        std::size_t start = pos_;
        std::string name = parseIdent();
        int idx = -1;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) idx = static_cast<int>(i);
        if (idx < 0) throw ParseError("unknown variable '" + name + "'", start);
        long long exp = 1;
        skipSpace();
        if (peek() == '^') {
            take();
            skipSpace();
            bool neg = false;
            if (peek() == '-') {
                neg = true;
                take();
            }
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("expected integer exponent", pos_);
            Int e = parseInteger();
            if (neg) throw ParseError("negative exponent not allowed", pos_);
            if (e > (Int(1) << 31)) throw ParseError("exponent too large", pos_);
            exp = static_cast<long long>(e);
        }
        Exponent e(n(), 0);
        e[idx] = exp;
        return Polynomial::monomial(n(), e);
    }

    Int parseInteger() {
        Int v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (take() - '0');
        }
        return v;
    }

    std::string parseIdent() {
        std::string s;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') s += take();
        return s;
    }

    int n() const { return static_cast<int>(vars_.size()); }
    void skipSpace() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }

    const std::string& text_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parsePolynomial(const std::string& text, const std::vector<std::string>& vars) {
    if (vars.empty()) throw std::invalid_argument("parsePolynomial: need at least one variable");
    return detail::PolyParser(text, vars).parse();
}

inline std::vector<std::string> defaultVarNames(int n) {
    static const char* names[] = {"x", "y", "z", "w"};
    std::vector<std::string> v;
    for (int i = 0; i < n; ++i)
        v.push_back(i < 4 ? names[i] : "x" + std::to_string(i));
    return v;
}

inline std::string formatMonomial(const Exponent& e, const std::vector<std::string>& vars) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars[i];
        if (e[i] != 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

inline std::string formatRat(const Rat& r) {
    using boost::multiprecision::numerator;
    using boost::multiprecision::denominator;
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

// Graded-lex descending term order, for deterministic golden output.
inline std::string format(const Polynomial& f, const std::vector<std::string>& vars) {
    if (f.isZero()) return "0";
    std::string out;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        Rat a = c;
        if (out.empty()) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        std::string mono = formatMonomial(e, vars);
        if (mono == "1") {
            out += formatRat(a);
        } else if (a == 1) {
            out += mono;
        } else {
            out += formatRat(a) + "*" + mono;
        }
    }
    return out;
}

}  // namespace boundring
