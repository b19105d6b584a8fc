#pragma once

// The .set input DSL:
//
//   vars x, y;
//   set T = { |x| <= 1 and |x*y| <= 1 };
//
// Unions are written with "or" between blocks. Strict and non-strict
// comparators are synonyms: bounded rings only see the closure of the set.

#include "boundring/algebra.hpp"
#include "boundring/setmodel.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace boundring {

struct ParsedSetFile {
    SetSpec spec;
    std::string setName;
};

namespace detail {

class SetFileParser {
public:
    explicit SetFileParser(const std::string& text) : text_(text) {}

    ParsedSetFile parse() {
        expectWord("vars");
        std::vector<std::string> vars;
        vars.push_back(expectIdent());
        while (peek() == ',') {
            take();
            vars.push_back(expectIdent());
        }
        expectChar(';');
        expectWord("set");
        std::string name = expectIdent();
        expectChar('=');
        std::vector<Tentacle> tentacles;
        tentacles.push_back(parseBlock(vars));
        for (;;) {
            skipSpace();
            if (!tryWord("or")) break;
            tentacles.push_back(parseBlock(vars));
        }
        expectChar(';');
        skipSpace();
        if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
        ParsedSetFile out;
        out.spec = makeSetSpec(static_cast<int>(vars.size()), std::move(tentacles), vars);
        out.setName = name;
        return out;
    }

private:
    Tentacle parseBlock(const std::vector<std::string>& vars) {
        expectChar('{');
        Tentacle t;
        t.n = static_cast<int>(vars.size());
        t.constraints.push_back(parseConstraint(vars));
        for (;;) {
            skipSpace();
            if (!tryWord("and")) break;
            t.constraints.push_back(parseConstraint(vars));
        }
        expectChar('}');
        return t;
    }

    MonomialConstraint parseConstraint(const std::vector<std::string>& vars) {
        MonomialConstraint c;
        expectChar('|');
        c.alpha = parseMonomial(vars);
        expectChar('|');
        skipSpace();
        if (peek() != '<') throw ParseError("expected '<' or '<='", pos_);
        take();
        if (peek() == '=') take();
        c.bound = parseRational();
        c.beta.assign(vars.size(), 0);
        skipSpace();
        if (peek() == '*') {
            take();
            expectChar('|');
            c.beta = parseMonomial(vars);
            expectChar('|');
        }
        return c;
    }

    Exponent parseMonomial(const std::vector<std::string>& vars) {
        Exponent e(vars.size(), 0);
        skipSpace();
        if (peek() == '1') {
            take();
            return e;
        }
        parseFactor(vars, e);
        for (;;) {
            skipSpace();
            if (peek() != '*') break;
            take();
            parseFactor(vars, e);
        }
        return e;
    }

    void parseFactor(const std::vector<std::string>& vars, Exponent& e) {
        std::size_t start = pos_;
        std::string name = expectIdent();
        int idx = -1;
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) idx = static_cast<int>(i);
        if (idx < 0) throw ParseError("unknown variable '" + name + "'", start);
        long long exp = 1;
        skipSpace();
        if (peek() == '^') {
            take();
            skipSpace();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("expected positive integer exponent", pos_);
            Int v = parseInteger();
            if (v == 0) throw ParseError("exponent must be positive", pos_);
            if (v > (Int(1) << 31)) throw ParseError("exponent too large", pos_);
            exp = static_cast<long long>(v);
        }
        e[idx] += exp;
    }

    Rat parseRational() {
        skipSpace();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected rational constant", pos_);
        Int num = parseInteger();
        skipSpace();
        if (peek() == '/') {
            take();
            skipSpace();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("expected denominator", pos_);
            Int den = parseInteger();
            if (den == 0) throw ParseError("zero denominator", pos_);
            return Rat(num, den);
        }
        return Rat(num);
    }

    Int parseInteger() {
        Int v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (take() - '0');
        return v;
    }

    std::string expectIdent() {
        skipSpace();
        if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_')
            throw ParseError("expected identifier", pos_);
        std::string s;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') s += take();
        return s;
    }

    void expectWord(const std::string& w) {
        skipSpace();
        if (!tryWord(w)) throw ParseError("expected '" + w + "'", pos_);
    }

    bool tryWord(const std::string& w) {
        skipSpace();
        if (text_.compare(pos_, w.size(), w) != 0) return false;
        std::size_t end = pos_ + w.size();
        if (end < text_.size() &&
            (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
            return false;
        pos_ = end;
        return true;
    }

    void expectChar(char c) {
        skipSpace();
        if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
        take();
    }

    void skipSpace() {
        for (;;) {
            while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ < text_.size() && text_[pos_] == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
                continue;
            }
            break;
        }
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline ParsedSetFile parseSetFile(const std::string& text) {
    return detail::SetFileParser(text).parse();
}

}  // namespace boundring
