#pragma once

#include "sktforge/hermitian.hpp"

#include <map>
#include <string>
#include <vector>

namespace sktforge {

// The two structural normal forms for an integrable Hermitian structure on a
// 4-dim solvable algebra, over the frame {a, Ja, b, Jb} = {e1, e2, e3, e4}.
enum class StructCase { complex_case, real_case };

struct GenericCase {
    StructCase tag;
    Hermitian herm;                  // symbolic algebra, standard J, frame metric
    std::vector<std::string> vars;   // structure-constant names (metric t excluded)
};

namespace detail {

inline std::vector<std::vector<ScalarPoly>> standard_j(int n) {
    std::vector<std::vector<ScalarPoly>> J(n, std::vector<ScalarPoly>(n, ScalarPoly(0)));
    for (int b = 0; b + 1 < n; b += 2) {
        J[b + 1][b] = ScalarPoly(1);  // J e_{b+1} = e_{b+2}
        J[b][b + 1] = ScalarPoly(-1); // J e_{b+2} = -e_{b+1}
    }
    return J;
}

inline void add_term(LieAlgebra& alg, int k, int i, int j, const ScalarPoly& c) {
    alg.d[k - 1].add(mask_from_indices({i, j}, alg.dim), c);
}

} // namespace detail

inline const GenericCase& generic_case(StructCase tag) {
    static const GenericCase complex_gc = [] {
        auto v = [](const char* s) { return ScalarPoly::var(s); };
        LieAlgebra alg(4);
        alg.name = "generic-complex";
        detail::add_term(alg, 2, 1, 2, v("x1"));
        detail::add_term(alg, 3, 1, 2, v("y1"));
        detail::add_term(alg, 3, 1, 3, v("y2"));
        detail::add_term(alg, 3, 1, 4, v("y3"));
        detail::add_term(alg, 3, 2, 3, ScalarPoly(0) - v("z1"));
        detail::add_term(alg, 3, 2, 4, v("z2"));
        detail::add_term(alg, 4, 1, 2, v("u1"));
        detail::add_term(alg, 4, 1, 3, v("u2"));
        detail::add_term(alg, 4, 1, 4, v("u3"));
        detail::add_term(alg, 4, 2, 3, ScalarPoly(0) - v("v1"));
        detail::add_term(alg, 4, 2, 4, v("v2"));
        detail::add_term(alg, 4, 3, 4, v("w1"));
        Metric g = identity_metric<ScalarPoly>(4);
        GenericCase gc{StructCase::complex_case,
                       make_hermitian(alg, detail::standard_j(4), g),
                       {"x1", "y1", "y2", "y3", "z1", "z2", "u1", "u2", "u3", "v1", "v2",
                        "w1"}};
        return gc;
    }();
    static const GenericCase real_gc = [] {
        auto v = [](const char* s) { return ScalarPoly::var(s); };
        LieAlgebra alg(4);
        alg.name = "generic-real";
        detail::add_term(alg, 2, 1, 2, v("x1"));
        detail::add_term(alg, 2, 1, 3, v("x2"));
        detail::add_term(alg, 2, 2, 4, v("x2"));
        detail::add_term(alg, 2, 1, 4, v("x3"));
        detail::add_term(alg, 2, 2, 3, ScalarPoly(0) - v("x3"));
        detail::add_term(alg, 2, 3, 4, v("y2"));
        detail::add_term(alg, 3, 1, 2, v("z1"));
        detail::add_term(alg, 3, 1, 3, v("z2"));
        detail::add_term(alg, 3, 1, 4, v("z3"));
        detail::add_term(alg, 4, 1, 2, v("u1"));
        detail::add_term(alg, 4, 1, 3, v("u2"));
        detail::add_term(alg, 4, 1, 4, v("u3"));
        detail::add_term(alg, 4, 2, 3, ScalarPoly(0) - v("v1"));
        detail::add_term(alg, 4, 3, 4, v("v2"));
        detail::add_term(alg, 4, 2, 4, v("w1"));
        Metric g = identity_metric<ScalarPoly>(4);
        ScalarPoly t = v("t");
        g.g[0][3] = ScalarPoly(0) - t;
        g.g[3][0] = ScalarPoly(0) - t;
        g.g[1][2] = t;
        g.g[2][1] = t;
        GenericCase gc{StructCase::real_case,
                       make_hermitian(alg, detail::standard_j(4), g),
                       {"x1", "x2", "x3", "y2", "z1", "z2", "z3", "u1", "u2", "u3", "v1",
                        "v2", "w1"}};
        return gc;
    }();
    return tag == StructCase::complex_case ? complex_gc : real_gc;
}

struct ConditionPolys {
    std::vector<ScalarPoly> integrability;
    std::vector<ScalarPoly> jacobi;
    ScalarPoly skt; // top-form coefficient of dc
};

inline const ConditionPolys& generic_condition_polys(StructCase tag) {
    static const ConditionPolys cached[2] = {
        [] {
            const GenericCase& gc = generic_case(StructCase::complex_case);
            ConditionPolys c;
            c.integrability = integrability_residual(gc.herm.alg, gc.herm.J);
            c.jacobi = jacobi_residuals(gc.herm.alg);
            c.skt = is_skt(gc.herm).residual;
            return c;
        }(),
        [] {
            const GenericCase& gc = generic_case(StructCase::real_case);
            ConditionPolys c;
            c.integrability = integrability_residual(gc.herm.alg, gc.herm.J);
            c.jacobi = jacobi_residuals(gc.herm.alg);
            c.skt = is_skt(gc.herm).residual;
            return c;
        }(),
    };
    return cached[tag == StructCase::complex_case ? 0 : 1];
}

// Coefficients of d omega on the generic case; their common zero locus is the
// Kaehler sub-locus.
inline const std::vector<ScalarPoly>& kahler_residual_polys(StructCase tag) {
    static const std::vector<ScalarPoly> cached[2] = {
        [] {
            std::vector<ScalarPoly> out;
            for (auto& [m, c] :
                 is_kahler(generic_case(StructCase::complex_case).herm).residual.coeffs)
                out.push_back(c);
            return out;
        }(),
        [] {
            std::vector<ScalarPoly> out;
            for (auto& [m, c] :
                 is_kahler(generic_case(StructCase::real_case).herm).residual.coeffs)
                out.push_back(c);
            return out;
        }(),
    };
    return cached[tag == StructCase::complex_case ? 0 : 1];
}

// The simplified vanishing-quantity list equivalent to SKT in each case.
inline const std::vector<ScalarPoly>& skt_condition_list(StructCase tag) {
    static const std::vector<ScalarPoly> complex_list = [] {
        std::vector<ScalarPoly> out;
        for (const char* s :
             {"y2-z2-u3+v1", "y3-z1+u2-v2", "x1*z1-y3*v1-z2*u2",
              "(x1-y2+u3)*z2-y3*(z1+v2)", "y2*w1", "y3*w1", "z1*w1", "z2*w1",
              "(x1+y2-u3)*v1-(z1+v2)*u2+u1*w1", "x1*v2+y1*w1-y3*v1-z2*u2",
              "(x1+y2+u3)*(y2+u3)+(z1-v2)^2-u1*w1"})
            out.push_back(ScalarPoly::parse(s));
        return out;
    }();
    static const std::vector<ScalarPoly> real_list = [] {
        std::vector<ScalarPoly> out;
        for (const char* s :
             {"z2-u3+v1", "z3+u2-w1", "x2*u2-x3*(z2-v1)-y2*u1",
              "(-x1+z2+u3)*y2+x2^2+x3*(x3-v2)", "x2*u3-x3*(w1+z3)+y2*z1",
              "(x1+z2-u3)*v1-(x3-v2)*u1-u2*w1", "x2*v2-y2*w1", "x3*z1+z3*v1",
              "y2*z1+z3*v2", "x2*z1+z3*w1", "x2*v1-x3*w1", "x2*w1+x3*v1-y2*u1+z2*v2",
              "x1*w1-x2*u1+z1*v2-z3*v1",
              "(x1+z2+u3)*(-y2+z2+u3)+x2*(x2-z1+t*z2)+(x3-u1+t*(u2-w1))*(x3+v2)+w1^2"})
            out.push_back(ScalarPoly::parse(s));
        return out;
    }();
    return tag == StructCase::complex_case ? complex_list : real_list;
}

// The additional vanishing conditions that reduce SKT to Kaehler.
inline const std::vector<ScalarPoly>& kahler_condition_list(StructCase tag) {
    static const std::vector<ScalarPoly> complex_list = [] {
        std::vector<ScalarPoly> out;
        for (const char* s : {"y1", "u1", "u3+y2", "v2-z1"}) out.push_back(ScalarPoly::parse(s));
        return out;
    }();
    static const std::vector<ScalarPoly> real_list = [] {
        std::vector<ScalarPoly> out;
        for (const char* s : {"x2-z1-t*(x1+u3)", "x3-u1+t*u2", "y2-z2-u3-t*x2",
                              "w1-t*(x3+v2)"})
            out.push_back(ScalarPoly::parse(s));
        return out;
    }();
    return tag == StructCase::complex_case ? complex_list : real_list;
}

// Decides the Kaehler reduction at a concrete assignment and cross-checks the
// shortcut against d omega computed directly.
inline bool kahler_condition_check(StructCase tag,
                                   const std::map<std::string, Rational>& assignment) {
    bool shortcut = true;
    for (auto& p : kahler_condition_list(tag))
        if (!p.eval(assignment).is_zero()) shortcut = false;
    HermitianQ h = evaluate(generic_case(tag).herm, assignment);
    bool direct = is_kahler(h).kahler;
    if (shortcut != direct)
        throw std::logic_error("Kaehler shortcut disagrees with the direct decision");
    return shortcut;
}

} // namespace sktforge
