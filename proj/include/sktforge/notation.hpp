#pragma once

#include "sktforge/lie_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

namespace sktforge {

// Compact structure-equation notation: "(0,0,21)" reads as de3 = e2^e1 with
// the index pair written in the order it multiplies. Coefficients follow the
// table style: "lambda31", "2.41", "2lambda.41", "(1-lambda)31", "3/2.21".
struct NotationError : std::runtime_error {
    size_t offset;
    NotationError(size_t off, const std::string& msg)
        : std::runtime_error("notation error at offset " + std::to_string(off) + ": " + msg),
          offset(off) {}
};

namespace detail {

struct NormChar {
    char c;
    size_t orig;
};

// Normalizes unicode lambda/mu/minus to ASCII and strips whitespace, keeping
// original byte offsets for diagnostics.
inline std::vector<NormChar> normalize_notation(const std::string& s) {
    std::vector<NormChar> out;
    size_t i = 0;
    auto push_str = [&](const char* t, size_t orig) {
        for (; *t; ++t) out.push_back({*t, orig});
    };
    while (i < s.size()) {
        unsigned char c = s[i];
        if (c == 0xCE && i + 1 < s.size() && (unsigned char)s[i + 1] == 0xBB) {
            push_str("lambda", i);
            i += 2;
        } else if (c == 0xCE && i + 1 < s.size() && (unsigned char)s[i + 1] == 0xBC) {
            push_str("mu", i);
            i += 2;
        } else if (c == 0xE2 && i + 2 < s.size() && (unsigned char)s[i + 1] == 0x88 &&
                   (unsigned char)s[i + 2] == 0x92) {
            push_str("-", i);
            i += 3;
        } else if (std::isspace(c)) {
            ++i;
        } else {
            out.push_back({(char)c, i});
            ++i;
        }
    }
    return out;
}

class NotationParser {
public:
    explicit NotationParser(const std::string& s) : text_(normalize_notation(s)) {}

    LieAlgebra run() {
        expect('(', "expected '('");
        std::vector<std::vector<std::pair<ScalarPoly, std::pair<int, int>>>> entries;
        for (;;) {
            entries.push_back(parse_entry());
            if (peek() == ',') {
                ++pos_;
                continue;
            }
            break;
        }
        expect(')', "expected ')' or ','");
        if (pos_ != text_.size()) fail("unexpected trailing input");
        if (entries.size() > 9) fail("dimensions beyond 9 are unsupported");
        int dim = (int)entries.size();
        LieAlgebra alg(dim);
        for (int k = 0; k < dim; ++k) {
            for (auto& [coef, pair] : entries[k]) {
                auto [a, b] = pair;
                if (a > dim || b > dim)
                    fail("index exceeds algebra dimension " + std::to_string(dim));
                if (a < b)
                    alg.d[k].add(mask_from_indices({a, b}, dim), coef);
                else
                    alg.d[k].add(mask_from_indices({b, a}, dim), ScalarPoly(0) - coef);
            }
        }
        return alg;
    }

private:
    using Entry = std::vector<std::pair<ScalarPoly, std::pair<int, int>>>;

    Entry parse_entry() {
        Entry terms;
        if (peek() == '0' && !std::isdigit((unsigned char)peek_at(1)) &&
            !std::isalpha((unsigned char)peek_at(1)) && peek_at(1) != '.' &&
            peek_at(1) != '/') {
            ++pos_;
            return terms;
        }
        bool neg = false;
        if (peek() == '-') { neg = true; ++pos_; }
        terms.push_back(parse_term(neg));
        while (peek() == '+' || peek() == '-') {
            bool n = peek() == '-';
            ++pos_;
            terms.push_back(parse_term(n));
        }
        return terms;
    }

    std::pair<ScalarPoly, std::pair<int, int>> parse_term(bool neg) {
        ScalarPoly coef;
        std::string digits, param, den;
        if (peek() == '(') {
            ++pos_;
            coef = parse_paren_sum();
        } else {
            while (std::isdigit((unsigned char)peek())) digits += text_[pos_++].c;
            while (std::isalpha((unsigned char)peek())) param += text_[pos_++].c;
            if (!param.empty() && peek() == '/') {
                ++pos_;
                while (std::isdigit((unsigned char)peek())) den += text_[pos_++].c;
                if (den.empty()) fail("expected denominator");
            } else if (param.empty() && peek() == '/' && !digits.empty()) {
                ++pos_;
                while (std::isdigit((unsigned char)peek())) den += text_[pos_++].c;
                if (den.empty()) fail("expected denominator");
            }
            if (param.empty() && den.empty() && peek() != '.') {
                // A bare digit run carries the index pair as its last two digits.
                if (digits.size() < 2) fail("expected an index pair");
                std::string pair = digits.substr(digits.size() - 2);
                digits.erase(digits.size() - 2);
                coef = make_simple(digits, "", "");
                if (neg) coef = ScalarPoly(0) - coef;
                return {coef, decode_pair(pair)};
            }
            coef = make_simple(digits, param, den);
        }
        if (peek() == '.') ++pos_;
        std::string pair;
        while (std::isdigit((unsigned char)peek()) && pair.size() < 2) pair += text_[pos_++].c;
        if (pair.size() != 2) fail("expected a two-digit index pair");
        if (std::isdigit((unsigned char)peek())) fail("index pairs are exactly two digits");
        if (neg) coef = ScalarPoly(0) - coef;
        return {coef, decode_pair(pair)};
    }

    ScalarPoly parse_paren_sum() {
        ScalarPoly acc;
        bool first = true;
        for (;;) {
            bool neg = false;
            if (peek() == '-') { neg = true; ++pos_; }
            else if (peek() == '+') { ++pos_; }
            else if (!first) fail("expected '+', '-', or ')'");
            std::string digits, param, den;
            while (std::isdigit((unsigned char)peek())) digits += text_[pos_++].c;
            while (std::isalpha((unsigned char)peek())) param += text_[pos_++].c;
            if (peek() == '/') {
                ++pos_;
                while (std::isdigit((unsigned char)peek())) den += text_[pos_++].c;
                if (den.empty()) fail("expected denominator");
            }
            if (digits.empty() && param.empty()) fail("expected coefficient");
            ScalarPoly s = make_simple(digits, param, den);
            acc = neg ? acc - s : acc + s;
            first = false;
            if (peek() == ')') { ++pos_; return acc; }
            if (peek() != '+' && peek() != '-') fail("expected '+', '-', or ')'");
        }
    }

    ScalarPoly make_simple(const std::string& digits, const std::string& param,
                           const std::string& den) {
        Rational c = digits.empty() ? Rational(1) : Rational(BigInt(digits));
        if (!den.empty()) c /= Rational(BigInt(den));
        ScalarPoly p(c);
        if (!param.empty()) p *= ScalarPoly::var(param);
        return p;
    }

    std::pair<int, int> decode_pair(const std::string& pair) {
        int a = pair[0] - '0', b = pair[1] - '0';
        if (a == 0 || b == 0) fail("index 0 is invalid");
        if (a == b) fail("repeated index in pair");
        return {a, b};
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_].c : '\0'; }
    char peek_at(size_t k) const { return pos_ + k < text_.size() ? text_[pos_ + k].c : '\0'; }
    void expect(char c, const std::string& msg) {
        if (peek() != c) fail(msg);
        ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        size_t off = pos_ < text_.size() ? text_[pos_].orig
                                         : (text_.empty() ? 0 : text_.back().orig + 1);
        throw NotationError(off, msg);
    }

    std::vector<NormChar> text_;
    size_t pos_ = 0;
};

// Renders one grammar-simple coefficient monomial, or fails.
inline std::string render_simple(const Monomial& m, const Rational& c, bool inside_paren) {
    if (m.degree() > 1)
        throw std::domain_error("coefficient has a nonlinear parameter monomial");
    std::string out;
    Rational a = c.abs();
    if (!a.numerator().is_zero() && m.degree() == 1) {
        if (a.numerator() != 1) out += a.numerator().str();
        out += m.factors[0].first;
        if (!a.is_integer()) out += "/" + a.denominator().str();
    } else {
        out += a.numerator().str();
        if (!a.is_integer()) out += "/" + a.denominator().str();
    }
    (void)inside_paren;
    return out;
}

} // namespace detail

inline LieAlgebra parse_compact(const std::string& text) {
    return detail::NotationParser(text).run();
}

// Accepts "(...)" optionally followed by one or more "xR" product suffixes.
inline LieAlgebra parse_algebra_spec(const std::string& text) {
    std::string body = text;
    int lines = 0;
    while (body.size() >= 2 && body.substr(body.size() - 2) == "xR") {
        body.erase(body.size() - 2);
        ++lines;
    }
    LieAlgebra alg = parse_compact(body);
    for (int i = 0; i < lines; ++i) alg = product_with_line(alg);
    return alg;
}

inline std::string print_compact(const LieAlgebra& alg) {
    std::string out = "(";
    for (int k = 0; k < alg.dim; ++k) {
        if (k) out += ",";
        // Terms ordered by the increasing-pair (i,j); pairs print descending
        // "ji", so their stored coefficient flips sign on output.
        std::vector<std::pair<std::pair<int, int>, ScalarPoly>> terms;
        for (auto& [mask, c] : alg.d[k].coeffs) {
            if (c.is_zero()) continue;
            auto ij = indices_from_mask(mask);
            terms.push_back({{ij[0], ij[1]}, ScalarPoly(0) - c});
        }
        std::sort(terms.begin(), terms.end(),
                  [](auto& a, auto& b) { return a.first < b.first; });
        if (terms.empty()) {
            out += "0";
            continue;
        }
        bool first = true;
        for (auto& [pair, coef] : terms) {
            std::string idx = std::to_string(pair.second) + std::to_string(pair.first);
            auto& tm = coef.terms();
            std::string body;
            bool negative = false;
            if (tm.size() == 1) {
                auto& [m, c] = *tm.begin();
                negative = c.sign() < 0;
                body = detail::render_simple(m, c, false);
            } else {
                body = "(";
                bool inner_first = true;
                for (auto it = tm.rbegin(); it != tm.rend(); ++it) {
                    auto& [m, c] = *it;
                    if (!inner_first) body += c.sign() < 0 ? "-" : "+";
                    else if (c.sign() < 0) body += "-";
                    body += detail::render_simple(m, c, true);
                    inner_first = false;
                }
                body += ")";
            }
            if (body == "1") body.clear();
            if (!body.empty() && std::isdigit((unsigned char)body.back())) body += ".";
            out += (negative ? (first ? "-" : "-") : (first ? "" : "+"));
            out += body + idx;
            first = false;
        }
    }
    out += ")";
    return out;
}

} // namespace sktforge
