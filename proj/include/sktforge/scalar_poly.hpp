#pragma once

#include "sktforge/rational.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sktforge {

// Power product over named variables. Factors are sorted by variable name and
// carry strictly positive exponents; the empty product is the unit monomial.
struct Monomial {
    std::vector<std::pair<std::string, int>> factors;

    int degree() const {
        int d = 0;
        for (auto& [v, e] : factors) d += e;
        return d;
    }
    bool is_unit() const { return factors.empty(); }

    static Monomial unit() { return {}; }
    static Monomial var(const std::string& name, int exp = 1) {
        if (exp < 0) throw std::invalid_argument("Monomial: negative exponent");
        Monomial m;
        if (exp > 0) m.factors.emplace_back(name, exp);
        return m;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        size_t i = 0, j = 0;
        while (i < a.factors.size() || j < b.factors.size()) {
            if (j == b.factors.size() ||
                (i < a.factors.size() && a.factors[i].first < b.factors[j].first)) {
                r.factors.push_back(a.factors[i++]);
            } else if (i == a.factors.size() || b.factors[j].first < a.factors[i].first) {
                r.factors.push_back(b.factors[j++]);
            } else {
                r.factors.emplace_back(a.factors[i].first,
                                       a.factors[i].second + b.factors[j].second);
                ++i, ++j;
            }
        }
        return r;
    }

    bool operator==(const Monomial& o) const { return factors == o.factors; }
};

// Graded lexicographic order; the variable order is the lexicographic order on
// variable names, so comparisons are independent of construction history.
inline int mono_cmp(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    size_t i = 0, j = 0;
    while (i < a.factors.size() && j < b.factors.size()) {
        if (a.factors[i].first < b.factors[j].first) return 1;
        if (b.factors[j].first < a.factors[i].first) return -1;
        if (a.factors[i].second != b.factors[j].second)
            return a.factors[i].second > b.factors[j].second ? 1 : -1;
        ++i, ++j;
    }
    if (i < a.factors.size()) return 1;
    if (j < b.factors.size()) return -1;
    return 0;
}

struct MonoLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return mono_cmp(a, b) < 0; }
};

// Sparse multivariate polynomial with Rational coefficients. Stored terms are
// nonzero; the zero polynomial has no terms.
class ScalarPoly {
public:
    using TermMap = std::map<Monomial, Rational, MonoLess>;

    ScalarPoly() = default;
    ScalarPoly(long long c) { add_term(Monomial::unit(), Rational(c)); }
    ScalarPoly(const Rational& c) { add_term(Monomial::unit(), c); }

    static ScalarPoly var(const std::string& name, int exp = 1) {
        ScalarPoly p;
        p.add_term(Monomial::var(name, exp), Rational(1));
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
    }
    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant())
            throw std::domain_error("ScalarPoly: '" + to_string() + "' is not constant");
        return terms_.begin()->second;
    }
    int degree() const {
        return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
    }

    std::set<std::string> variables() const {
        std::set<std::string> vs;
        for (auto& [m, c] : terms_)
            for (auto& [v, e] : m.factors) vs.insert(v);
        return vs;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend ScalarPoly operator+(const ScalarPoly& a, const ScalarPoly& b) {
        ScalarPoly r = a;
        for (auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend ScalarPoly operator-(const ScalarPoly& a, const ScalarPoly& b) {
        ScalarPoly r = a;
        for (auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    ScalarPoly operator-() const {
        ScalarPoly r;
        for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) {
        ScalarPoly r;
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    friend ScalarPoly operator*(const ScalarPoly& a, const Rational& c) {
        ScalarPoly r;
        if (c.is_zero()) return r;
        for (auto& [m, k] : a.terms_) r.terms_.emplace(m, k * c);
        return r;
    }
    friend ScalarPoly operator*(const Rational& c, const ScalarPoly& a) { return a * c; }

    ScalarPoly& operator+=(const ScalarPoly& o) { return *this = *this + o; }
    ScalarPoly& operator-=(const ScalarPoly& o) { return *this = *this - o; }
    ScalarPoly& operator*=(const ScalarPoly& o) { return *this = *this * o; }

    bool operator==(const ScalarPoly& o) const { return terms_ == o.terms_; }

    ScalarPoly pow(int e) const {
        if (e < 0) throw std::invalid_argument("ScalarPoly: negative power");
        ScalarPoly r(1);
        for (int i = 0; i < e; ++i) r *= *this;
        return r;
    }

    // Full evaluation; every variable of the polynomial must be bound.
    Rational eval(const std::map<std::string, Rational>& point) const {
        Rational total(0);
        for (auto& [m, c] : terms_) {
            Rational t = c;
            for (auto& [v, e] : m.factors) {
                auto it = point.find(v);
                if (it == point.end())
                    throw std::invalid_argument("ScalarPoly: unbound variable '" + v + "'");
                for (int i = 0; i < e; ++i) t *= it->second;
            }
            total += t;
        }
        return total;
    }

    // Substitutes the given variables, leaving the rest symbolic.
    ScalarPoly substitute(const std::map<std::string, ScalarPoly>& repl) const {
        ScalarPoly total;
        for (auto& [m, c] : terms_) {
            ScalarPoly t(c);
            for (auto& [v, e] : m.factors) {
                auto it = repl.find(v);
                if (it == repl.end())
                    t *= ScalarPoly::var(v, e);
                else
                    t *= it->second.pow(e);
            }
            total += t;
        }
        return total;
    }

    ScalarPoly substitute_rationals(const std::map<std::string, Rational>& repl) const {
        std::map<std::string, ScalarPoly> m;
        for (auto& [v, r] : repl) m.emplace(v, ScalarPoly(r));
        return substitute(m);
    }

    // Rewrites var^2 -> rhs until var appears at most linearly. Used to reduce
    // residuals modulo a relation of the form var^2 - rhs = 0.
    ScalarPoly reduce_square(const std::string& var, const ScalarPoly& rhs) const {
        ScalarPoly total;
        for (auto& [m, c] : terms_) {
            ScalarPoly t(c);
            for (auto& [v, e] : m.factors) {
                if (v == var) {
                    t *= rhs.pow(e / 2);
                    if (e % 2) t *= ScalarPoly::var(var);
                } else {
                    t *= ScalarPoly::var(v, e);
                }
            }
            total += t;
        }
        return total;
    }

    // Exact division by a single variable; throws if some term lacks it.
    ScalarPoly divexact_var(const std::string& var) const {
        ScalarPoly r;
        for (auto& [m, c] : terms_) {
            Monomial q;
            bool found = false;
            for (auto& [v, e] : m.factors) {
                if (v == var) {
                    found = true;
                    if (e > 1) q.factors.emplace_back(v, e - 1);
                } else {
                    q.factors.push_back({v, e});
                }
            }
            if (!found)
                throw std::domain_error("ScalarPoly: term not divisible by " + var);
            r.add_term(q, c);
        }
        return r;
    }

    // Canonical text form: terms in descending graded-lex order.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            Rational a = c.abs();
            if (out.empty())
                out += c.sign() < 0 ? "-" : "";
            else
                out += c.sign() < 0 ? " - " : " + ";
            std::string vars;
            for (auto& [v, e] : m.factors) {
                if (!vars.empty()) vars += "*";
                vars += v;
                if (e > 1) vars += "^" + std::to_string(e);
            }
            if (vars.empty())
                out += a.to_string();
            else if (a.is_one())
                out += vars;
            else
                out += a.to_string() + "*" + vars;
        }
        return out;
    }

    static ScalarPoly parse(const std::string& text);

private:
    TermMap terms_;
};

inline bool is_zero(const ScalarPoly& p) { return p.is_zero(); }

namespace detail {

// Recursive-descent parser for polynomial expressions: + - * / ^ ( ), integer
// literals, and identifiers. Division requires a nonzero constant divisor.
class PolyParser {
public:
    explicit PolyParser(const std::string& s) : s_(s) {}

    ScalarPoly run() {
        ScalarPoly p = parse_expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    ScalarPoly parse_expr() {
        ScalarPoly acc = parse_term();
        for (;;) {
            skip_ws();
            if (peek() == '+') { ++pos_; acc += parse_term(); }
            else if (peek() == '-') { ++pos_; acc -= parse_term(); }
            else return acc;
        }
    }

    ScalarPoly parse_term() {
        ScalarPoly acc = parse_factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') { ++pos_; acc *= parse_factor(); }
            else if (peek() == '/') {
                ++pos_;
                ScalarPoly d = parse_factor();
                if (!d.is_constant() || d.constant_value().is_zero())
                    fail("divisor must be a nonzero constant");
                acc = acc * (Rational(1) / d.constant_value());
            }
            else return acc;
        }
    }

    ScalarPoly parse_factor() {
        skip_ws();
        bool neg = false;
        while (peek() == '-' || peek() == '+') {
            if (s_[pos_] == '-') neg = !neg;
            ++pos_;
            skip_ws();
        }
        ScalarPoly base = parse_atom();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
            if (start == pos_) fail("expected integer exponent");
            base = base.pow(std::stoi(s_.substr(start, pos_ - start)));
        }
        return neg ? -base : base;
    }

    ScalarPoly parse_atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            ScalarPoly p = parse_expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return p;
        }
        if (std::isdigit((unsigned char)c)) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
            return ScalarPoly(Rational(BigInt(s_.substr(start, pos_ - start))));
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum((unsigned char)s_[pos_]) || s_[pos_] == '_'))
                ++pos_;
            return ScalarPoly::var(s_.substr(start, pos_ - start));
        }
        fail("expected number, variable, or '('");
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("polynomial parse error at offset " +
                                    std::to_string(pos_) + ": " + why);
    }

    const std::string& s_;
    size_t pos_ = 0;
};

} // namespace detail

inline ScalarPoly ScalarPoly::parse(const std::string& text) {
    return detail::PolyParser(text).run();
}

} // namespace sktforge
