#pragma once

#include "sktforge/catalog.hpp"

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace sktforge {

// Summary row for a four-dimensional solvable algebra that carries an SKT
// structure: its Betti numbers b1..b4 and whether it also carries a Kaehler
// structure. Parametric rows list admissible sample parameters; the invariants
// are the same at every admissible parameter value.
struct Table4Row {
    std::string label;
    bool parametric = false;
    std::function<AlgebraId(const Rational&)> id_at;
    std::vector<Rational> samples; // one entry (value ignored) when not parametric
    std::array<int, 4> betti{};    // b1..b4
    bool kahler = false;

    std::vector<AlgebraId> instances() const {
        std::vector<AlgebraId> out;
        for (auto& s : samples) out.push_back(id_at(s));
        return out;
    }
};

inline const std::vector<Table4Row>& skt_algebra_rows() {
    static const std::vector<Table4Row> rows = [] {
        std::vector<Table4Row> r;
        Rational z(0);
        std::vector<Rational> lams = {Rational(1, 3), Rational(2), Rational(3, 2)};
        auto fixed = [&](std::string label, AlgebraId id, std::array<int, 4> betti,
                         bool kahler) {
            Table4Row row;
            row.label = std::move(label);
            row.parametric = false;
            row.id_at = [id](const Rational&) { return id; };
            row.samples = {Rational(0)};
            row.betti = betti;
            row.kahler = kahler;
            r.push_back(std::move(row));
        };
        auto param = [&](std::string label, std::function<AlgebraId(const Rational&)> f,
                         std::array<int, 4> betti, bool kahler) {
            Table4Row row;
            row.label = std::move(label);
            row.parametric = true;
            row.id_at = std::move(f);
            row.samples = lams;
            row.betti = betti;
            row.kahler = kahler;
            r.push_back(std::move(row));
        };

        fixed("R^4", AlgebraId{"R^n", {}, 4, 0}, {4, 6, 4, 1}, true);
        fixed("R x h3", AlgebraId{"h3", {}, 0, 1}, {3, 4, 3, 1}, false);
        fixed("R x r_{3,0}", AlgebraId{"r3_lambda", {z}, 0, 1}, {3, 3, 1, 0}, true);
        fixed("R x r'_{3,0}", AlgebraId{"r3p_lambda", {z}, 0, 1}, {2, 2, 2, 1}, true);
        fixed("aff_R x aff_R", AlgebraId{"aff_R x aff_R", {}, 0, 0}, {2, 1, 0, 0}, true);
        param("r'_{4,l,0}, l>0",
              [](const Rational& l) {
                  return AlgebraId{"r4p_mu_lambda", {l, Rational(0)}, 0, 0};
              },
              {1, 1, 1, 0}, true);
        fixed("r_{4,-1/2,-1/2}",
              AlgebraId{"r4_mu_lambda", {Rational(-1, 2), Rational(-1, 2)}, 0, 0},
              {1, 0, 1, 1}, false);
        param("r'_{4,2l,-l}, l>0",
              [](const Rational& l) {
                  return AlgebraId{"r4p_mu_lambda", {Rational(2) * l, -l}, 0, 0};
              },
              {1, 0, 1, 1}, false);
        fixed("d4", AlgebraId{"d4", {}, 0, 0}, {1, 0, 1, 1}, false);
        fixed("d_{4,2}", AlgebraId{"d4_lambda", {Rational(2)}, 0, 0}, {1, 1, 1, 0}, true);
        fixed("d'_{4,0}", AlgebraId{"d4p_lambda", {z}, 0, 0}, {1, 0, 1, 1}, false);
        fixed("d_{4,1/2}", AlgebraId{"d4_lambda", {Rational(1, 2)}, 0, 0}, {1, 0, 0, 0},
              true);
        param("d'_{4,l}, l>0",
              [](const Rational& l) { return AlgebraId{"d4p_lambda", {l}, 0, 0}; },
              {1, 0, 0, 0}, true);
        return r;
    }();
    return rows;
}

// Membership in the list of unimodular solvable algebras of dimension four.
// Abelian factors never change unimodularity, so rn / r_factors are ignored.
inline bool in_unimodular_list(const AlgebraId& id) {
    const std::string& f = id.family;
    const std::vector<Rational>& p = id.params;
    if (f == "R^n" || f == "h3" || f == "n4" || f == "d4") return true;
    if (f == "r3_lambda") return p.at(0) == Rational(-1);
    if (f == "r3p_lambda") return p.at(0) == Rational(0);
    if (f == "r4_lambda") return p.at(0) == Rational(-1, 2);
    if (f == "r4_mu_lambda")
        return p.at(1) == Rational(-1) - p.at(0) && Rational(-1) < p.at(0) &&
               p.at(0) <= Rational(-1, 2);
    if (f == "r4p_mu_lambda") return p.at(1) == -p.at(0) / Rational(2);
    if (f == "d4p_lambda") return p.at(0) == Rational(0);
    return false; // aff_R, aff_R x aff_R, aff_C, r3, r4, d4_lambda, h4
}

// Algebras that admit a compatible complex structure but no SKT metric, given
// as concrete instances (parametric entries sampled at admissible values).
struct NonSktEntry {
    std::string label;
    std::vector<AlgebraId> ids;
};

inline const std::vector<NonSktEntry>& non_skt_entries() {
    static const std::vector<NonSktEntry> entries = [] {
        std::vector<NonSktEntry> e;
        e.push_back({"R x r_{3,1}", {AlgebraId{"r3_lambda", {Rational(1)}, 0, 1}}});
        e.push_back({"R x r'_{3,l}, l>0",
                     {AlgebraId{"r3p_lambda", {Rational(1, 3)}, 0, 1},
                      AlgebraId{"r3p_lambda", {Rational(2)}, 0, 1},
                      AlgebraId{"r3p_lambda", {Rational(3, 2)}, 0, 1}}});
        e.push_back({"aff_C", {AlgebraId{"aff_C", {}, 0, 0}}});
        e.push_back({"r_{4,1}", {AlgebraId{"r4_lambda", {Rational(1)}, 0, 0}}});
        e.push_back(
            {"r_{4,m,l}, m=l!=-1/2 or m<=l=1",
             {AlgebraId{"r4_mu_lambda", {Rational(1, 3), Rational(1, 3)}, 0, 0},
              AlgebraId{"r4_mu_lambda", {Rational(-1, 4), Rational(-1, 4)}, 0, 0},
              AlgebraId{"r4_mu_lambda", {Rational(1, 2), Rational(1)}, 0, 0},
              AlgebraId{"r4_mu_lambda", {Rational(-1, 2), Rational(1)}, 0, 0}}});
        e.push_back({"r'_{4,m,l}, l!=0,-m/2",
                     {AlgebraId{"r4p_mu_lambda", {Rational(1), Rational(1)}, 0, 0},
                      AlgebraId{"r4p_mu_lambda", {Rational(2), Rational(-3)}, 0, 0},
                      AlgebraId{"r4p_mu_lambda", {Rational(1, 2), Rational(1, 4)}, 0, 0}}});
        e.push_back({"d_{4,l}, l!=1/2,2",
                     {AlgebraId{"d4_lambda", {Rational(1)}, 0, 0},
                      AlgebraId{"d4_lambda", {Rational(3)}, 0, 0},
                      AlgebraId{"d4_lambda", {Rational(3, 2)}, 0, 0}}});
        e.push_back({"h4", {AlgebraId{"h4", {}, 0, 0}}});
        return e;
    }();
    return entries;
}

} // namespace sktforge
