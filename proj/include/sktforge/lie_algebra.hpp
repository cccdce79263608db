#pragma once

#include "sktforge/form.hpp"
#include "sktforge/linalg.hpp"

#include <string>
#include <vector>

namespace sktforge {

// Lie algebra in dual form: d[i] is the Chevalley-Eilenberg differential of
// the dual basis covector e_{i+1}, a 2-form. The bracket is recovered from
// da(X,Y) = -a([X,Y]).
template <class R>
struct LieAlgebraT {
    int dim = 0;
    std::vector<Form<R>> d;
    std::string name;

    LieAlgebraT() = default;
    explicit LieAlgebraT(int n, std::string nm = "") : dim(n), name(std::move(nm)) {
        d.assign(n, Form<R>(n, 2));
    }
};

using LieAlgebra = LieAlgebraT<ScalarPoly>;
using LieAlgebraQ = LieAlgebraT<Rational>;
using LieAlgebraD = LieAlgebraT<double>;

// Anti-derivation extension of d to arbitrary grades. Coefficients are
// structure constants (invariant functions), so d acts on basis forms only.
template <class R>
Form<R> differential(const LieAlgebraT<R>& alg, const Form<R>& f) {
    if (f.dim != alg.dim) throw std::invalid_argument("differential: dimension mismatch");
    Form<R> r(alg.dim, f.grade + 1);
    for (auto& [mask, c] : f.coeffs) {
        std::vector<int> idx = indices_from_mask(mask);
        for (size_t p = 0; p < idx.size(); ++p) {
            uint32_t prefix = 0, suffix = 0;
            for (size_t q = 0; q < p; ++q) prefix |= 1u << (idx[q] - 1);
            for (size_t q = p + 1; q < idx.size(); ++q) suffix |= 1u << (idx[q] - 1);
            Form<R> pre(alg.dim, (int)p);
            pre.add(prefix, p % 2 ? R(0) - c : c);
            Form<R> suf(alg.dim, (int)(idx.size() - p - 1));
            suf.add(suffix, R(1));
            Form<R> term = wedge(pre, wedge(alg.d[idx[p] - 1], suf));
            for (auto& [mm, cc] : term.coeffs) r.add(mm, cc);
        }
    }
    return r;
}

// Bracket of coordinate vectors: [X,Y]^k = -de_k(X,Y).
template <class R>
std::vector<R> bracket(const LieAlgebraT<R>& alg, const std::vector<R>& x,
                       const std::vector<R>& y) {
    if ((int)x.size() != alg.dim || (int)y.size() != alg.dim)
        throw std::invalid_argument("bracket: vector dimension mismatch");
    std::vector<R> z(alg.dim, R(0));
    for (int k = 0; k < alg.dim; ++k) {
        R acc(0);
        for (auto& [mask, c] : alg.d[k].coeffs) {
            std::vector<int> ij = indices_from_mask(mask);
            int i = ij[0] - 1, j = ij[1] - 1;
            acc = acc + c * (x[i] * y[j] - x[j] * y[i]);
        }
        z[k] = R(0) - acc;
    }
    return z;
}

// Structure constant c^k_{ij} with i < j: [E_i, E_j] = sum_k c^k_{ij} E_k.
template <class R>
R structure_constant(const LieAlgebraT<R>& alg, int k, int i, int j) {
    return R(0) - alg.d[k - 1].coeff(mask_from_indices({i, j}, alg.dim));
}

// Matrix of ad_X in the chosen basis; column j holds [X, E_{j+1}].
template <class R>
std::vector<std::vector<R>> ad_matrix(const LieAlgebraT<R>& alg, const std::vector<R>& x) {
    std::vector<std::vector<R>> m(alg.dim, std::vector<R>(alg.dim, R(0)));
    for (int j = 0; j < alg.dim; ++j) {
        std::vector<R> ej(alg.dim, R(0));
        ej[j] = R(1);
        std::vector<R> col = bracket(alg, x, ej);
        for (int i = 0; i < alg.dim; ++i) m[i][j] = col[i];
    }
    return m;
}

// The 3-forms d(d(e_k)); all vanish exactly when the Jacobi identity holds.
template <class R>
std::vector<Form<R>> jacobi_forms(const LieAlgebraT<R>& alg) {
    std::vector<Form<R>> out;
    out.reserve(alg.dim);
    for (int k = 0; k < alg.dim; ++k) out.push_back(differential(alg, alg.d[k]));
    return out;
}

template <class R>
std::vector<R> jacobi_residuals(const LieAlgebraT<R>& alg) {
    std::vector<R> out;
    for (auto& f : jacobi_forms(alg))
        for (auto& [m, c] : f.coeffs) out.push_back(c);
    return out;
}

template <class R>
bool jacobi_ok(const LieAlgebraT<R>& alg) {
    for (auto& f : jacobi_forms(alg))
        if (!f.is_zero()) return false;
    return true;
}

inline LieAlgebraQ evaluate(const LieAlgebra& alg, const std::map<std::string, Rational>& point) {
    LieAlgebraQ out(alg.dim, alg.name);
    for (int k = 0; k < alg.dim; ++k)
        out.d[k] = map_coeffs<Rational>(alg.d[k], [&](const ScalarPoly& p) { return p.eval(point); });
    return out;
}

inline LieAlgebra widen(const LieAlgebraQ& alg) {
    LieAlgebra out(alg.dim, alg.name);
    for (int k = 0; k < alg.dim; ++k)
        out.d[k] = map_coeffs<ScalarPoly>(alg.d[k], [](const Rational& r) { return ScalarPoly(r); });
    return out;
}

inline LieAlgebraQ narrow(const LieAlgebra& alg) {
    LieAlgebraQ out(alg.dim, alg.name);
    for (int k = 0; k < alg.dim; ++k)
        out.d[k] = map_coeffs<Rational>(alg.d[k],
                                        [](const ScalarPoly& p) { return p.constant_value(); });
    return out;
}

inline LieAlgebraD to_numeric(const LieAlgebraQ& alg) {
    LieAlgebraD out(alg.dim, alg.name);
    for (int k = 0; k < alg.dim; ++k)
        out.d[k] = map_coeffs<double>(alg.d[k], [](const Rational& r) { return r.to_double(); });
    return out;
}

// Direct product with an abelian line: one extra closed covector e_{n+1}.
template <class R>
LieAlgebraT<R> product_with_line(const LieAlgebraT<R>& alg) {
    LieAlgebraT<R> out(alg.dim + 1, alg.name.empty() ? "" : alg.name + "xR");
    for (int k = 0; k < alg.dim; ++k) {
        Form<R> f(alg.dim + 1, 2);
        for (auto& [m, c] : alg.d[k].coeffs) f.add(m, c);
        out.d[k] = std::move(f);
    }
    return out;
}

inline bool is_parametric(const LieAlgebra& alg) {
    for (auto& f : alg.d)
        for (auto& [m, c] : f.coeffs)
            if (!c.is_constant()) return true;
    return false;
}

} // namespace sktforge
