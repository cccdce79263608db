#pragma once

#include "sktforge/generic_case.hpp"
#include "sktforge/identify.hpp"
#include "sktforge/rng.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace sktforge {

// One solution family of the classification: a parametrized assignment of the
// generic-frame structure constants, with admissibility sampling, the target
// isomorphism class, and the Kaehler sub-locus.
struct FamilyDef {
    std::string id;
    StructCase frame = StructCase::complex_case;
    std::vector<std::string> params;
    std::map<std::string, ScalarPoly> assignment; // generic var -> poly in params
    // replacements v^2 -> rhs applied after substitution (circle relations)
    std::vector<std::pair<std::string, ScalarPoly>> square_relations;
    std::function<AlgebraId(const std::map<std::string, Rational>&)> claimed_id;
    std::function<bool(const std::map<std::string, Rational>&)> kahler_predicate;
    std::function<std::map<std::string, Rational>(Splitmix64&)> sample;
    std::string target_description; // human name of the isomorphism class
    std::string kahler_description; // human form of the Kaehler sub-locus
};

namespace detail {

inline std::map<std::string, ScalarPoly> full_assignment(const FamilyDef& def) {
    std::map<std::string, ScalarPoly> repl;
    for (auto& v : generic_case(def.frame).vars) repl[v] = ScalarPoly(0);
    if (def.frame == StructCase::real_case) repl["t"] = ScalarPoly(0);
    for (auto& [v, p] : def.assignment) repl[v] = p;
    return repl;
}

inline ScalarPoly reduce_relations(const FamilyDef& def, ScalarPoly p) {
    for (auto& [v, rhs] : def.square_relations) p = p.reduce_square(v, rhs);
    return p;
}

} // namespace detail

// Structure constants of the family member at a parameter point, expressed as
// values of the generic-frame variables.
inline std::map<std::string, Rational>
family_generic_point(const FamilyDef& def, const std::map<std::string, Rational>& params) {
    std::map<std::string, Rational> point;
    for (auto& [v, p] : detail::full_assignment(def)) point[v] = p.eval(params);
    return point;
}

inline HermitianQ family_instance(const FamilyDef& def,
                                  const std::map<std::string, Rational>& params) {
    return evaluate(generic_case(def.frame).herm, family_generic_point(def, params));
}

// Family structure equations with the parameters kept symbolic.
inline LieAlgebra family_symbolic_algebra(const FamilyDef& def) {
    auto repl = detail::full_assignment(def);
    const LieAlgebra& generic = generic_case(def.frame).herm.alg;
    LieAlgebra alg(generic.dim);
    alg.name = def.id;
    for (int k = 0; k < generic.dim; ++k)
        for (auto& [m, c] : generic.d[k].coeffs) {
            ScalarPoly sub = detail::reduce_relations(def, c.substitute(repl));
            if (!sub.is_zero()) alg.d[k].add(m, sub);
        }
    return alg;
}

// Symbolic verification: Jacobi, integrability, and the SKT residual must all
// vanish identically in the family parameters (modulo the square relations).
struct FamilySymbolicCheck {
    bool jacobi_zero = false;
    bool integrability_zero = false;
    bool skt_zero = false;
    bool ok() const { return jacobi_zero && integrability_zero && skt_zero; }
};

inline FamilySymbolicCheck verify_family_symbolic(const FamilyDef& def) {
    auto repl = detail::full_assignment(def);
    const ConditionPolys& cp = generic_condition_polys(def.frame);
    auto all_zero = [&](const std::vector<ScalarPoly>& polys) {
        for (auto& p : polys)
            if (!detail::reduce_relations(def, p.substitute(repl)).is_zero()) return false;
        return true;
    };
    FamilySymbolicCheck out;
    out.jacobi_zero = all_zero(cp.jacobi);
    out.integrability_zero = all_zero(cp.integrability);
    out.skt_zero = detail::reduce_relations(def, cp.skt.substitute(repl)).is_zero();
    return out;
}

// Per-point verification: the instance is SKT, identifies to the claimed
// algebra, and is Kaehler exactly when the family predicate says so.
struct FamilyPointReport {
    bool skt = false;
    bool identified = false;
    bool id_match = false;
    bool kahler = false;
    bool kahler_expected = false;
    AlgebraId claimed;
    AlgebraId found;
    std::string message;

    bool ok() const { return skt && identified && id_match && kahler == kahler_expected; }
};

inline FamilyPointReport check_family_point(const FamilyDef& def,
                                            const std::map<std::string, Rational>& params) {
    FamilyPointReport rep;
    HermitianQ h = family_instance(def, params);
    rep.skt = is_skt(h).skt;
    rep.kahler = is_kahler(h).kahler;
    rep.kahler_expected = def.kahler_predicate(params);
    rep.claimed = def.claimed_id(params);
    IdResult idr = identify(h.alg);
    rep.identified = idr.status == IdStatus::identified;
    rep.message = idr.message;
    if (rep.identified) {
        rep.found = idr.id;
        rep.id_match = rep.found == rep.claimed;
    }
    return rep;
}

namespace detail {

inline std::map<std::string, ScalarPoly> parse_assignment(
    std::initializer_list<std::pair<const char*, const char*>> items) {
    std::map<std::string, ScalarPoly> out;
    for (auto& [v, s] : items) out[v] = ScalarPoly::parse(s);
    return out;
}

// m in (0,1) rational, for circle points in the open quadrant
inline Rational random_unit_interval(Splitmix64& rng) {
    int den = rng.next_int(2, 5);
    return Rational(rng.next_int(1, den - 1), den);
}

} // namespace detail

inline const std::vector<FamilyDef>& skt_families() {
    static const std::vector<FamilyDef> defs = [] {
        std::vector<FamilyDef> fs;
        Rational half(1, 2);

        {
            FamilyDef f;
            f.id = "abelian";
            f.target_description = "R^4";
            f.kahler_description = "always";
            f.frame = StructCase::complex_case;
            f.claimed_id = [](const auto&) { return AlgebraId{"R^n", {}, 4, 0}; };
            f.kahler_predicate = [](const auto&) { return true; };
            f.sample = [](Splitmix64&) { return std::map<std::string, Rational>{}; };
            fs.push_back(std::move(f));
        }
        {
            FamilyDef f;
            f.id = "oneDim_nilpotent";
            f.target_description = "R x h3";
            f.kahler_description = "never";
            f.frame = StructCase::complex_case;
            f.params = {"u1"};
            f.assignment = detail::parse_assignment({{"u1", "u1"}});
            f.claimed_id = [](const auto&) { return AlgebraId{"h3", {}, 0, 1}; };
            f.kahler_predicate = [](const auto&) { return false; };
            f.sample = [](Splitmix64& rng) {
                return std::map<std::string, Rational>{{"u1", random_nonzero_rational(rng)}};
            };
            fs.push_back(std::move(f));
        }
        {
            FamilyDef f;
            f.id = "oneDim_r30";
            f.target_description = "R x r_{3,0}";
            f.kahler_description = "p = 0";
            f.frame = StructCase::complex_case;
            f.params = {"p", "w1"};
            f.assignment = detail::parse_assignment(
                {{"u1", "p^2*w1"}, {"u3", "p*w1"}, {"v1", "p*w1"}, {"w1", "w1"}});
            f.claimed_id = [](const auto&) {
                return AlgebraId{"r3_lambda", {Rational(0)}, 0, 1};
            };
            f.kahler_predicate = [](const std::map<std::string, Rational>& p) {
                return p.at("p").is_zero();
            };
            f.sample = [](Splitmix64& rng) {
                std::map<std::string, Rational> p;
                p["p"] = rng.next_int(0, 3) == 0 ? Rational(0)
                                                 : random_positive_rational(rng);
                p["w1"] = random_positive_rational(rng);
                return p;
            };
            fs.push_back(std::move(f));
        }
        {
            FamilyDef f;
            f.id = "complexKernel";
            f.target_description = "R x r'_{3,0}";
            f.kahler_description = "u1 = 0";
            f.frame = StructCase::complex_case;
            f.params = {"y3", "u1"};
            f.assignment =
                detail::parse_assignment({{"y3", "y3"}, {"u2", "-y3"}, {"u1", "u1"}});
            f.claimed_id = [](const auto&) {
                return AlgebraId{"r3p_lambda", {Rational(0)}, 0, 1};
            };
            f.kahler_predicate = [](const std::map<std::string, Rational>& p) {
                return p.at("u1").is_zero();
            };
            f.sample = [](Splitmix64& rng) {
                std::map<std::string, Rational> p;
                p["y3"] = random_positive_rational(rng);
                p["u1"] = rng.next_int(0, 3) == 0 ? Rational(0)
                                                  : random_positive_rational(rng);
                return p;
            };
            fs.push_back(std::move(f));
        }
        {
            FamilyDef f;
            f.id = "realKernel_affaff";
            f.target_description = "aff_R x aff_R";
            f.kahler_description = "t = 0";
            f.frame = StructCase::real_case;
            f.params = {"l", "sigma", "tau", "t"};
            f.assignment = detail::parse_assignment(
                {{"x1", "2*l*sigma"}, {"v2", "-2*l*tau"}, {"t", "t"}});
            f.square_relations = {{"tau", ScalarPoly::parse("1-sigma^2")}};
            f.claimed_id = [](const auto&) { return AlgebraId{"aff_R x aff_R", {}, 0, 0}; };
            f.kahler_predicate = [](const std::map<std::string, Rational>& p) {
                return p.at("t").is_zero();
            };
            f.sample = [](Splitmix64& rng) {
                Rational m = detail::random_unit_interval(rng);
                Rational den = Rational(1) + m * m;
                std::map<std::string, Rational> p;
                p["sigma"] = (Rational(1) - m * m) / den;
                p["tau"] = Rational(-2) * m / den;
                p["l"] = random_positive_rational(rng);
                p["t"] = rng.next_int(0, 3) == 0
                             ? Rational(0)
                             : Rational(rng.next_int(-3, 3), rng.next_int(4, 6));
                return p;
            };
            fs.push_back(std::move(f));
        }
        {
            FamilyDef f;
            f.id = "threeDimAb_y2zero";
            f.target_description = "r'_{4,m,0}, m = |x1/y3|";
            f.kahler_description = "y1 = 0";
            f.frame = StructCase::complex_case;
            f.params = {"x1", "y1", "y3"};
            f.assignment = detail::parse_assignment(
                {{"x1", "x1"}, {"y1", "y1"}, {"y3", "y3"}, {"u2", "-y3"}});
            f.claimed_id = [](const std::map<std::string, Rational>& p) {
                return AlgebraId{"r4p_mu_lambda",
                                 {(p.at("x1") / p.at("y3")).abs(), Rational(0)}, 0, 0};
            };
            f.kahler_predicate = [](const std::map<std::string, Rational>& p) {
                return p.at("y1").is_zero();
            };
            f.sample = [](Splitmix64& rng) {
                std::map<std::string, Rational> p;
                p["x1"] = random_positive_rational(rng);
                p["y1"] = rng.next_int(0, 2) == 0 ? Rational(0)
                                                  : random_positive_rational(rng);
                p["y3"] = random_nonzero_rational(rng);
                return p;
            };
            fs.push_back(std::move(f));
        }
        {
            FamilyDef f;
            f.id = "threeDimAb_y3zero";
            f.target_description = "r_{4,-1/2,-1/2}";
            f.kahler_description = "never";
            f.frame = StructCase::complex_case;
            f.params = {"y1", "y2"};
            f.assignment = detail::parse_assignment(
                {{"x1", "-2*y2"}, {"y1", "y1"}, {"y2", "y2"}, {"u3", "y2"}});
            f.claimed_id = [half](const auto&) {
                return AlgebraId{"r4_mu_lambda", {-half, -half}, 0, 0};
            };
            f.kahler_predicate = [](const auto&) { return false; };
            f.sample = [](Splitmix64& rng) {
                std::map<std::string, Rational> p;
                p["y2"] = Rational(0) - random_positive_rational(rng);
                p["y1"] = rng.next_int(0, 2) == 0 ? Rational(0)
                                                  : random_positive_rational(rng);
                return p;
            };
            fs.push_back(std::move(f));
        }
        {
            FamilyDef f;
            f.id = "threeDimAb_general";
            f.target_description = "r'_{4,2l,-l}, l = |y2/y3|";
            f.kahler_description = "never";
            f.frame = StructCase::complex_case;
            f.params = {"y1", "y2", "y3"};
            f.assignment = detail::parse_assignment({{"x1", "-2*y2"},
                                                     {"y1", "y1"},
                                                     {"y2", "y2"},
                                                     {"y3", "y3"},
                                                     {"u2", "-y3"},
                                                     {"u3", "y2"}});
            f.claimed_id = [](const std::map<std::string, Rational>& p) {
                Rational lam = (p.at("y2") / p.at("y3")).abs();
                return AlgebraId{"r4p_mu_lambda", {Rational(2) * lam, Rational(0) - lam},
                                 0, 0};
            };
            f.kahler_predicate = [](const auto&) { return false; };
            f.sample = [](Splitmix64& rng) {
                std::map<std::string, Rational> p;
                p["y2"] = Rational(0) - random_positive_rational(rng);
                p["y3"] = random_nonzero_rational(rng);
                p["y1"] = rng.next_int(0, 2) == 0 ? Rational(0)
                                                  : random_positive_rational(rng);
                return p;
            };
            fs.push_back(std::move(f));
        }
        {
            FamilyDef f;
            f.id = "h3_d4";
            f.target_description = "d4";
            f.kahler_description = "never";
            f.frame = StructCase::complex_case;
            f.params = {"x1", "y1", "u1"};
            f.assignment = detail::parse_assignment(
                {{"x1", "x1"}, {"y1", "y1"}, {"y2", "-x1"}, {"u1", "u1"}, {"v1", "x1"}});
            f.claimed_id = [](const auto&) { return AlgebraId{"d4", {}, 0, 0}; };
            f.kahler_predicate = [](const auto&) { return false; };
            f.sample = [](Splitmix64& rng) {
                std::map<std::string, Rational> p;
                p["x1"] = random_positive_rational(rng);
                p["y1"] = random_rational(rng);
                p["u1"] = random_rational(rng);
                return p;
            };
            fs.push_back(std::move(f));
        }
        {
            FamilyDef f;
            f.id = "h3_d42";
            f.target_description = "d_{4,2}";
            f.kahler_description = "y1 = 0 and u1 = 0";
            f.frame = StructCase::complex_case;
            f.params = {"x1", "y1", "u1"};
            f.assignment = detail::parse_assignment({{"x1", "x1"},
                                                     {"y1", "y1"},
                                                     {"y2", "-1/2*x1"},
                                                     {"u1", "u1"},
                                                     {"u3", "1/2*x1"},
                                                     {"v1", "x1"}});
            f.claimed_id = [](const auto&) {
                return AlgebraId{"d4_lambda", {Rational(2)}, 0, 0};
            };
            f.kahler_predicate = [](const std::map<std::string, Rational>& p) {
                return p.at("y1").is_zero() && p.at("u1").is_zero();
            };
            f.sample = [](Splitmix64& rng) {
                std::map<std::string, Rational> p;
                p["x1"] = random_positive_rational(rng);
                if (rng.next_int(0, 3) == 0) {
                    p["y1"] = Rational(0);
                    p["u1"] = Rational(0);
                } else {
                    p["y1"] = random_rational(rng);
                    p["u1"] = random_rational(rng);
                }
                return p;
            };
            fs.push_back(std::move(f));
        }
        {
            FamilyDef f;
            f.id = "h3_d4p0";
            f.target_description = "d'_{4,0}";
            f.kahler_description = "never";
            f.frame = StructCase::real_case;
            f.params = {"kappa", "zeta", "q", "r"};
            f.assignment = detail::parse_assignment({{"x1", "-kappa*q^2*r"},
                                                     {"x3", "-kappa*q*r^2"},
                                                     {"y2", "-kappa*r^3"},
                                                     {"z1", "zeta*q"},
                                                     {"z3", "zeta*r"},
                                                     {"u1", "kappa*q^3"},
                                                     {"u2", "-zeta*r"},
                                                     {"u3", "kappa*q^2*r"},
                                                     {"v1", "kappa*q^2*r"},
                                                     {"v2", "kappa*q*r^2"}});
            f.square_relations = {{"r", ScalarPoly::parse("1-q^2")}};
            f.claimed_id = [](const auto&) {
                return AlgebraId{"d4p_lambda", {Rational(0)}, 0, 0};
            };
            f.kahler_predicate = [](const auto&) { return false; };
            f.sample = [](Splitmix64& rng) {
                auto [q, r] = random_circle_point(rng);
                std::map<std::string, Rational> p;
                p["q"] = q;
                p["r"] = r;
                p["kappa"] = random_positive_rational(rng);
                p["zeta"] = random_positive_rational(rng);
                return p;
            };
            fs.push_back(std::move(f));
        }
        {
            FamilyDef f;
            f.id = "h3_final";
            f.target_description = "d'_{4,|kappa/(2 zeta)|} (zeta != 0) or d_{4,1/2} (zeta = 0)";
            f.kahler_description = "q = 0";
            f.frame = StructCase::real_case;
            f.params = {"kappa", "zeta", "q", "r"};
            f.assignment = detail::parse_assignment({{"x1", "-kappa*r*(1+q^2)"},
                                                     {"x3", "-kappa*q*r^2"},
                                                     {"y2", "-kappa*r^3"},
                                                     {"z1", "zeta*q"},
                                                     {"z2", "-1/2*kappa*r"},
                                                     {"z3", "zeta*r"},
                                                     {"u1", "kappa*q^3+1/2*kappa*q"},
                                                     {"u2", "-zeta*r"},
                                                     {"u3", "kappa*q^2*r-1/2*kappa*r"},
                                                     {"v1", "kappa*q^2*r"},
                                                     {"v2", "kappa*q*r^2"}});
            f.square_relations = {{"r", ScalarPoly::parse("1-q^2")}};
            f.claimed_id = [half](const std::map<std::string, Rational>& p) {
                const Rational& zeta = p.at("zeta");
                if (zeta.is_zero()) return AlgebraId{"d4_lambda", {half}, 0, 0};
                return AlgebraId{"d4p_lambda",
                                 {(p.at("kappa") / (Rational(2) * zeta)).abs()}, 0, 0};
            };
            f.kahler_predicate = [](const std::map<std::string, Rational>& p) {
                return p.at("q").is_zero();
            };
            f.sample = [](Splitmix64& rng) {
                std::map<std::string, Rational> p;
                if (rng.next_int(0, 2) == 0) {
                    p["q"] = Rational(0);
                    p["r"] = Rational(1);
                } else {
                    auto [q, r] = random_circle_point(rng);
                    p["q"] = q;
                    p["r"] = r;
                }
                p["kappa"] = random_positive_rational(rng);
                p["zeta"] = rng.next_int(0, 3) == 0 ? Rational(0)
                                                    : random_nonzero_rational(rng);
                return p;
            };
            fs.push_back(std::move(f));
        }
        return fs;
    }();
    return defs;
}

inline const FamilyDef& family_by_id(const std::string& id) {
    for (auto& f : skt_families())
        if (f.id == id) return f;
    throw std::invalid_argument("unknown family: " + id);
}

} // namespace sktforge
