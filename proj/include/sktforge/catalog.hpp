#pragma once

#include "sktforge/lie_algebra.hpp"
#include "sktforge/notation.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace sktforge {

// Identity of a model algebra: a family tag from the fixed catalog, the
// family's normalized parameters, and a count of extra trivial line factors.
struct AlgebraId {
    std::string family;            // "R^n","aff_R","h3","r3","r3_lambda","r3p_lambda",
                                   // "aff_R x aff_R","n4","aff_C","r4","r4_lambda",
                                   // "r4_mu_lambda","r4p_mu_lambda","d4","d4_lambda",
                                   // "d4p_lambda","h4"
    std::vector<Rational> params;  // lambda, or (mu, lambda)
    int rn = 0;                    // dimension when family == "R^n"
    int r_factors = 0;             // product with R^{r_factors}

    bool operator==(const AlgebraId&) const = default;

    std::string to_string() const {
        std::string base = family;
        if (family == "R^n") base = "R^" + std::to_string(rn);
        if (!params.empty()) {
            base += "(";
            for (size_t i = 0; i < params.size(); ++i) {
                if (i) base += ",";
                base += params[i].to_string();
            }
            base += ")";
        }
        for (int i = 0; i < r_factors; ++i) base = "R x " + base;
        return base;
    }
};

namespace detail {

inline const std::map<std::string, std::string>& catalog_strings() {
    static const std::map<std::string, std::string> m = {
        {"aff_R", "(0,21)"},
        {"h3", "(0,0,21)"},
        {"r3", "(0,21+31,31)"},
        {"r3_lambda", "(0,21,lambda31)"},
        {"r3p_lambda", "(0,lambda21+31,-21+lambda31)"},
        {"aff_R x aff_R", "(0,21,0,43)"},
        {"n4", "(0,0,21,31)"},
        {"aff_C", "(0,0,31-42,41+32)"},
        {"r4", "(0,21+31,31+41,41)"},
        {"r4_lambda", "(0,21,lambda31+41,lambda41)"},
        {"r4_mu_lambda", "(0,21,mu31,lambda41)"},
        {"r4p_mu_lambda", "(0,mu21,lambda31+41,-31+lambda41)"},
        {"d4", "(0,21,-31,32)"},
        {"d4_lambda", "(0,lambda21,(1-lambda)31,41+32)"},
        {"d4p_lambda", "(0,lambda21+31,-21+lambda31,2lambda.41+32)"},
        {"h4", "(0,21+31,31,2.41+32)"},
    };
    return m;
}

} // namespace detail

inline std::vector<std::string> catalog_param_names(const std::string& family) {
    if (family == "r3_lambda" || family == "r3p_lambda" || family == "r4_lambda" ||
        family == "d4_lambda" || family == "d4p_lambda")
        return {"lambda"};
    if (family == "r4_mu_lambda" || family == "r4p_mu_lambda") return {"mu", "lambda"};
    return {};
}

// Symbolic model algebra with its table parameters left as variables.
inline LieAlgebra catalog_symbolic(const std::string& family) {
    auto& m = detail::catalog_strings();
    auto it = m.find(family);
    if (it == m.end()) throw std::invalid_argument("unknown catalog family: " + family);
    LieAlgebra alg = parse_compact(it->second);
    alg.name = family;
    return alg;
}

// Table-side admissibility of normalized parameters.
inline bool id_admissible(const AlgebraId& id) {
    const auto& f = id.family;
    const auto& p = id.params;
    auto one = Rational(1);
    if (f == "R^n") return id.rn >= 0 && p.empty();
    if (f == "r3_lambda") return p.size() == 1 && p[0].abs() <= one;
    if (f == "r3p_lambda") return p.size() == 1 && p[0].sign() >= 0;
    if (f == "r4_lambda") return p.size() == 1;
    if (f == "r4_mu_lambda") {
        if (p.size() != 2) return false;
        const Rational &mu = p[0], &lambda = p[1];
        if (mu.abs() > one || lambda.abs() > one) return false;
        if (lambda < mu) return false;
        if (mu.is_zero() || lambda.is_zero()) return false;
        if (mu == -one && lambda.sign() >= 0) return false;
        return true;
    }
    if (f == "r4p_mu_lambda") return p.size() == 2 && p[0].sign() > 0;
    if (f == "d4_lambda") return p.size() == 1 && p[0] >= Rational(1, 2);
    if (f == "d4p_lambda") return p.size() == 1 && p[0].sign() >= 0;
    if (f == "aff_R" || f == "h3" || f == "r3" || f == "aff_R x aff_R" || f == "n4" ||
        f == "aff_C" || f == "r4" || f == "d4" || f == "h4")
        return p.empty();
    return false;
}

inline LieAlgebraQ construct_from_id(const AlgebraId& id) {
    if (!id_admissible(id))
        throw std::invalid_argument("inadmissible catalog parameters for " + id.to_string());
    LieAlgebraQ alg(0);
    if (id.family == "R^n") {
        alg = LieAlgebraQ(id.rn);
        alg.name = "R^" + std::to_string(id.rn);
    } else {
        LieAlgebra sym = catalog_symbolic(id.family);
        auto names = catalog_param_names(id.family);
        std::map<std::string, Rational> point;
        for (size_t i = 0; i < names.size(); ++i) point[names[i]] = id.params[i];
        alg = evaluate(sym, point);
        alg.name = id.family;
    }
    for (int i = 0; i < id.r_factors; ++i) alg = product_with_line(alg);
    alg.name = id.to_string();
    return alg;
}

} // namespace sktforge
