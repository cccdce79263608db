#pragma once

#include "sktforge/scalar_poly.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace sktforge {

// One scaled-generator contribution in a membership certificate.
struct CertTerm {
    size_t generator = 0;  // index into the generator list
    Monomial multiplier;   // monomial the generator was scaled by
    Rational coeff;
};

// target == sum over combination of coeff * multiplier * generators[generator]
struct MembershipCert {
    bool member = false;
    std::vector<CertTerm> combination;
};

namespace detail {

inline ScalarPoly monomial_poly(const Monomial& m) {
    ScalarPoly p(1);
    for (auto& [v, e] : m.factors) p *= ScalarPoly::var(v, e);
    return p;
}

struct ComboKey {
    size_t generator;
    Monomial multiplier;
    bool operator<(const ComboKey& o) const {
        if (generator != o.generator) return generator < o.generator;
        return mono_cmp(multiplier, o.multiplier) < 0;
    }
};

using ComboMap = std::map<ComboKey, Rational>;

inline void combo_add(ComboMap& into, const ComboMap& from, const Rational& scale) {
    for (auto& [k, c] : from) {
        Rational v = into.count(k) ? into[k] + c * scale : c * scale;
        if (is_zero(v))
            into.erase(k);
        else
            into[k] = v;
    }
}

struct EchelonRow {
    ScalarPoly poly; // nonzero, monic leading coefficient
    ComboMap combo;  // poly == sum combo
};

// Incremental echelon over graded-lex monomial coordinates. Rows keep the
// combination of original generators they represent, so reductions yield
// certificates, not just yes/no answers.
struct PolyEchelon {
    std::vector<EchelonRow> rows;
    std::map<Monomial, size_t, MonoLess> pivots; // leading monomial -> row

    // Reduces p in place; accumulates the row combination used into used.
    void reduce(ScalarPoly& p, ComboMap& used) const {
        while (!p.is_zero()) {
            const Monomial& lead = p.terms().rbegin()->first;
            auto it = pivots.find(lead);
            if (it == pivots.end()) break;
            const EchelonRow& row = rows[it->second];
            Rational f = p.terms().rbegin()->second; // row is monic
            p -= f * row.poly;
            combo_add(used, row.combo, f);
        }
    }

    // Full reduction (eliminates every pivot monomial, not only the leading one).
    void reduce_full(ScalarPoly& p, ComboMap& used) const {
        reduce(p, used);
        if (p.is_zero()) return;
        ScalarPoly rest = p;
        ScalarPoly out;
        while (!rest.is_zero()) {
            auto top = *rest.terms().rbegin();
            auto it = pivots.find(top.first);
            if (it == pivots.end()) {
                out += detail::monomial_poly(top.first) * top.second;
                rest -= detail::monomial_poly(top.first) * top.second;
            } else {
                const EchelonRow& row = rows[it->second];
                rest -= top.second * row.poly;
                combo_add(used, row.combo, top.second);
            }
        }
        p = out;
    }

    void insert(ScalarPoly p, ComboMap combo) {
        // reduce() tallies what it subtracts from p, so the row combination
        // must subtract that tally to keep poly == sum combo.
        ComboMap tally;
        reduce(p, tally);
        combo_add(combo, tally, Rational(-1));
        if (p.is_zero()) return;
        Rational lc = p.terms().rbegin()->second;
        Rational inv = Rational(1) / lc;
        p = inv * p;
        ComboMap scaled;
        combo_add(scaled, combo, inv);
        pivots[p.terms().rbegin()->first] = rows.size();
        rows.push_back(EchelonRow{std::move(p), std::move(scaled)});
    }
};

inline void monomials_up_to(const std::vector<std::string>& vars, int bound, size_t start,
                            const Monomial& cur, std::vector<Monomial>& out) {
    out.push_back(cur);
    if (cur.degree() >= bound) return;
    for (size_t i = start; i < vars.size(); ++i)
        monomials_up_to(vars, bound, i, cur * Monomial::var(vars[i]), out);
}

} // namespace detail

// Decides whether target lies in the rational span of
//   { m * g : g in generators, m a monomial, deg(m * g) <= degree_bound }
// and returns an explicit combination when it does.
inline MembershipCert poly_linear_membership(const ScalarPoly& target,
                                             const std::vector<ScalarPoly>& generators,
                                             int degree_bound) {
    std::set<std::string> var_set = target.variables();
    for (auto& g : generators)
        for (auto& v : g.variables()) var_set.insert(v);
    std::vector<std::string> vars(var_set.begin(), var_set.end());

    detail::PolyEchelon ech;
    for (size_t gi = 0; gi < generators.size(); ++gi) {
        const ScalarPoly& g = generators[gi];
        if (g.is_zero() || g.degree() > degree_bound) continue;
        std::vector<Monomial> mults;
        detail::monomials_up_to(vars, degree_bound - g.degree(), 0, Monomial::unit(), mults);
        for (auto& m : mults) {
            detail::ComboMap combo;
            combo[detail::ComboKey{gi, m}] = Rational(1);
            ech.insert(detail::monomial_poly(m) * g, std::move(combo));
        }
    }

    ScalarPoly rem = target;
    detail::ComboMap used;
    ech.reduce_full(rem, used);

    MembershipCert cert;
    cert.member = rem.is_zero();
    if (cert.member)
        for (auto& [k, c] : used) cert.combination.push_back({k.generator, k.multiplier, c});
    return cert;
}

// Rebuilds the combination and compares against the target; used to validate
// certificates independently of the echelon bookkeeping.
inline bool certificate_valid(const MembershipCert& cert, const ScalarPoly& target,
                              const std::vector<ScalarPoly>& generators) {
    if (!cert.member) return false;
    ScalarPoly sum;
    for (auto& term : cert.combination) {
        if (term.generator >= generators.size()) return false;
        sum += term.coeff * (detail::monomial_poly(term.multiplier) * generators[term.generator]);
    }
    return (sum - target).is_zero();
}

// Bidirectional comparison of two condition lists modulo scaled combinations.
struct ListComparison {
    std::vector<MembershipCert> forward;   // first[i] against span(second)
    std::vector<MembershipCert> backward;  // second[j] against span(first)
    std::vector<size_t> forward_failures;  // indices of first not covered
    std::vector<size_t> backward_failures; // indices of second not covered

    bool ok() const { return forward_failures.empty() && backward_failures.empty(); }
};

inline ListComparison compare_condition_lists(const std::vector<ScalarPoly>& first,
                                              const std::vector<ScalarPoly>& second,
                                              int degree_bound) {
    ListComparison out;
    for (size_t i = 0; i < first.size(); ++i) {
        out.forward.push_back(poly_linear_membership(first[i], second, degree_bound));
        if (!out.forward.back().member) out.forward_failures.push_back(i);
    }
    for (size_t j = 0; j < second.size(); ++j) {
        out.backward.push_back(poly_linear_membership(second[j], first, degree_bound));
        if (!out.backward.back().member) out.backward_failures.push_back(j);
    }
    return out;
}

} // namespace sktforge
