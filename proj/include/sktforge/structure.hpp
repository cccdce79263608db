#pragma once

#include "sktforge/lie_algebra.hpp"
#include "sktforge/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace sktforge {

// A linear subspace given by a canonical (rref) row basis. Used both for
// subspaces of the algebra and of its dual; the ambient space is implicit.
struct Subspace {
    int ambient_dim = 0;
    QMat basis; // rref rows, one per dimension

    int dim() const { return (int)basis.size(); }
    bool contains(const QVec& v) const {
        if (basis.empty()) {
            for (auto& c : v)
                if (!c.is_zero()) return false;
            return true;
        }
        return q_in_row_space(basis, v);
    }
};

inline Subspace make_subspace(int ambient, const std::vector<QVec>& gens) {
    Subspace s;
    s.ambient_dim = ambient;
    if (!gens.empty()) s.basis = q_row_basis(gens);
    return s;
}

inline Subspace zero_space(int ambient) { return {ambient, {}}; }

inline Subspace full_space(int ambient) {
    std::vector<QVec> rows;
    for (int i = 0; i < ambient; ++i) {
        QVec r(ambient, Rational(0));
        r[i] = Rational(1);
        rows.push_back(r);
    }
    return make_subspace(ambient, rows);
}

inline bool subspace_equal(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim != b.ambient_dim || a.dim() != b.dim()) return false;
    return a.basis == b.basis; // rref rows are canonical
}

inline bool subspace_leq(const Subspace& a, const Subspace& b) {
    for (auto& r : a.basis)
        if (!b.contains(r)) return false;
    return true;
}

inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    std::vector<QVec> rows(a.basis.begin(), a.basis.end());
    rows.insert(rows.end(), b.basis.begin(), b.basis.end());
    return make_subspace(a.ambient_dim, rows);
}

inline Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
    if (a.dim() == 0 || b.dim() == 0) return zero_space(a.ambient_dim);
    // v = x^T a.basis = y^T b.basis: null vectors of [basisA^T | -basisB^T].
    int n = a.ambient_dim, ra = a.dim(), rb = b.dim();
    QMat m(n, QVec(ra + rb, Rational(0)));
    for (int i = 0; i < ra; ++i)
        for (int c = 0; c < n; ++c) m[c][i] = a.basis[i][c];
    for (int i = 0; i < rb; ++i)
        for (int c = 0; c < n; ++c) m[c][ra + i] = -b.basis[i][c];
    std::vector<QVec> gens;
    for (auto& z : q_nullspace(m)) {
        QVec v(n, Rational(0));
        for (int i = 0; i < ra; ++i)
            for (int c = 0; c < n; ++c) v[c] += z[i] * a.basis[i][c];
        gens.push_back(v);
    }
    return make_subspace(n, gens);
}

inline Subspace bracket_span(const LieAlgebraQ& alg, const Subspace& u, const Subspace& v) {
    std::vector<QVec> gens;
    for (auto& x : u.basis)
        for (auto& y : v.basis) gens.push_back(bracket(alg, x, y));
    return make_subspace(alg.dim, gens);
}

inline Subspace derived_subalgebra(const LieAlgebraQ& alg) {
    Subspace g = full_space(alg.dim);
    return bracket_span(alg, g, g);
}

inline std::vector<Subspace> derived_series(const LieAlgebraQ& alg) {
    std::vector<Subspace> chain{full_space(alg.dim)};
    for (;;) {
        Subspace next = bracket_span(alg, chain.back(), chain.back());
        if (subspace_equal(next, chain.back())) break;
        chain.push_back(next);
    }
    return chain;
}

inline std::vector<Subspace> lower_central_series(const LieAlgebraQ& alg) {
    Subspace g = full_space(alg.dim);
    std::vector<Subspace> chain{g};
    for (;;) {
        Subspace next = bracket_span(alg, g, chain.back());
        if (subspace_equal(next, chain.back())) break;
        chain.push_back(next);
    }
    return chain;
}

inline bool is_solvable(const LieAlgebraQ& alg) { return derived_series(alg).back().dim() == 0; }

inline bool is_nilpotent(const LieAlgebraQ& alg) {
    return lower_central_series(alg).back().dim() == 0;
}

inline Subspace center(const LieAlgebraQ& alg) {
    int n = alg.dim;
    // x is central iff [x, E_j] = 0 for all j; stack those linear conditions.
    QMat m(n * n, QVec(n, Rational(0)));
    for (int i = 1; i <= n; ++i) {
        QVec ei(n, Rational(0));
        ei[i - 1] = Rational(1);
        for (int j = 1; j <= n; ++j) {
            QVec col = bracket(alg, ei, [&] {
                QVec ej(n, Rational(0));
                ej[j - 1] = Rational(1);
                return ej;
            }());
            for (int k = 0; k < n; ++k) m[(j - 1) * n + k][i - 1] = col[k];
        }
    }
    return make_subspace(n, q_nullspace(m));
}

inline QVec chi_covector(const LieAlgebraQ& alg) {
    int n = alg.dim;
    QVec chi(n, Rational(0));
    for (int i = 1; i <= n; ++i) {
        QVec ei(n, Rational(0));
        ei[i - 1] = Rational(1);
        QMat ad = ad_matrix(alg, ei);
        for (int k = 0; k < n; ++k) chi[i - 1] += ad[k][k];
    }
    return chi;
}

inline bool is_unimodular(const LieAlgebraQ& alg) {
    for (auto& c : chi_covector(alg))
        if (!c.is_zero()) return false;
    return true;
}

inline Subspace unimodular_kernel(const LieAlgebraQ& alg) {
    QMat m{chi_covector(alg)};
    return make_subspace(alg.dim, q_nullspace(m));
}

inline bool is_ideal(const LieAlgebraQ& alg, const Subspace& s) {
    return subspace_leq(bracket_span(alg, full_space(alg.dim), s), s);
}

// Expresses the bracket restricted to a bracket-closed subspace in the
// subspace's own rref basis.
inline LieAlgebraQ subalgebra_on(const LieAlgebraQ& alg, const Subspace& s) {
    int m = s.dim();
    QMat basis_t(alg.dim, QVec(m, Rational(0)));
    for (int i = 0; i < m; ++i)
        for (int c = 0; c < alg.dim; ++c) basis_t[c][i] = s.basis[i][c];
    LieAlgebraQ sub(m);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            QVec br = bracket(alg, s.basis[i], s.basis[j]);
            auto coords = q_solve(basis_t, br);
            if (!coords) throw std::domain_error("subspace is not closed under the bracket");
            for (int k = 0; k < m; ++k) {
                if ((*coords)[k].is_zero()) continue;
                // d e_k picks up -c^k_{ij} e_i^e_j.
                sub.d[k].add(mask_from_indices({i + 1, j + 1}, m), -(*coords)[k]);
            }
        }
    }
    return sub;
}

namespace detail {

// Reduces v against rref rows (with the given pivot columns), in place.
inline QVec reduce_mod_rows(const QMat& rows, const std::vector<int>& pivots, QVec v) {
    for (size_t r = 0; r < rows.size(); ++r) {
        Rational f = v[pivots[r]]; // rref pivots are 1
        if (f.is_zero()) continue;
        for (size_t c = 0; c < v.size(); ++c) v[c] -= f * rows[r][c];
    }
    return v;
}

} // namespace detail

inline LieAlgebraQ quotient(const LieAlgebraQ& alg, const Subspace& ideal) {
    if (!is_ideal(alg, ideal)) throw std::domain_error("subspace is not an ideal");
    int n = alg.dim;
    auto rr = rref(ideal.basis.empty() ? QMat{QVec(n, Rational(0))} : ideal.basis);
    std::vector<int> pivots(rr.pivot_cols.begin(), rr.pivot_cols.end());
    QMat rows;
    for (int r = 0; r < rr.rank; ++r) rows.push_back(rr.mat[r]);
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free_cols.push_back(c);
    int m = (int)free_cols.size();
    LieAlgebraQ quo(m);
    quo.name = alg.name.empty() ? "" : alg.name + "/ideal";
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            QVec x(n, Rational(0)), y(n, Rational(0));
            x[free_cols[i]] = Rational(1);
            y[free_cols[j]] = Rational(1);
            QVec br = detail::reduce_mod_rows(rows, pivots, bracket(alg, x, y));
            for (int k = 0; k < m; ++k) {
                Rational c = br[free_cols[k]];
                if (!c.is_zero()) quo.d[k].add(mask_from_indices({i + 1, j + 1}, m), -c);
            }
        }
    }
    return quo;
}

// Dual filtrations: W_i is the largest subspace of the dual with
// dW_i inside W_{i-1}^(dual wedge); V_i refines it one dimension at a time.
struct SolvableFiltration {
    std::vector<Subspace> W; // strictly increasing, last = full dual
    std::vector<Subspace> V; // dims 1..n
};

namespace detail {

// Coordinates of a 2-form as a vector over masks with popcount 2 (ascending).
inline std::vector<uint32_t> two_form_masks(int n) {
    std::vector<uint32_t> masks;
    for (uint32_t m = 0; m < (1u << n); ++m)
        if (__builtin_popcount(m) == 2) masks.push_back(m);
    return masks;
}

inline QVec two_form_coords(const Form<Rational>& f, const std::vector<uint32_t>& masks) {
    QVec v(masks.size(), Rational(0));
    for (size_t i = 0; i < masks.size(); ++i) v[i] = f.coeff(masks[i]);
    return v;
}

// Span of { w ^ e_j : w in rows, j = 1..n } in 2-form coordinates.
inline QMat wedge_ideal_rows(const QMat& dual_rows, int n,
                             const std::vector<uint32_t>& masks) {
    std::vector<QVec> gens;
    for (auto& w : dual_rows) {
        Form<Rational> wf = zero_form<Rational>(n, 1);
        for (int k = 0; k < n; ++k) wf.add(1u << k, w[k]);
        for (int j = 1; j <= n; ++j) {
            auto wedge_j = wedge(wf, basis_covector<Rational>(n, j));
            gens.push_back(two_form_coords(wedge_j, masks));
        }
    }
    if (gens.empty()) return {};
    return q_row_basis(gens);
}

// Largest dual subspace whose image under d lies in span ^ dual.
inline Subspace filtration_step(const LieAlgebraQ& alg, const Subspace& prev,
                                const std::vector<uint32_t>& masks) {
    int n = alg.dim;
    QMat ideal_rows = wedge_ideal_rows(prev.basis, n, masks);
    auto rr_pivots = [&]() -> std::pair<QMat, std::vector<int>> {
        if (ideal_rows.empty()) return {{}, {}};
        auto rr = rref(ideal_rows);
        QMat rows(rr.mat.begin(), rr.mat.begin() + rr.rank);
        return {rows, std::vector<int>(rr.pivot_cols.begin(), rr.pivot_cols.end())};
    }();
    QMat residual((int)masks.size(), QVec(n, Rational(0)));
    for (int k = 0; k < n; ++k) {
        QVec r = two_form_coords(alg.d[k], masks);
        if (!rr_pivots.first.empty())
            r = reduce_mod_rows(rr_pivots.first, rr_pivots.second, r);
        for (size_t c = 0; c < masks.size(); ++c) residual[c][k] = r[c];
    }
    return make_subspace(n, q_nullspace(residual));
}

} // namespace detail

inline SolvableFiltration solvable_filtration(const LieAlgebraQ& alg) {
    int n = alg.dim;
    auto masks = detail::two_form_masks(n);
    SolvableFiltration out;
    Subspace prev = zero_space(n);
    for (;;) {
        Subspace next = detail::filtration_step(alg, prev, masks);
        if (next.dim() == prev.dim()) {
            if (next.dim() < n)
                throw std::domain_error("algebra is not solvable: filtration stabilizes early");
            break;
        }
        out.W.push_back(next);
        prev = next;
        if (prev.dim() == n) break;
    }
    // Refine layer by layer: once a full layer is present, each vector of the
    // next layer keeps its image inside the wedge ideal of what came before.
    Subspace cur = zero_space(n);
    for (auto& layer : out.W) {
        for (auto& w : layer.basis) {
            if (cur.contains(w)) continue;
            cur = subspace_sum(cur, make_subspace(n, {w}));
            out.V.push_back(cur);
        }
    }
    return out;
}

} // namespace sktforge
