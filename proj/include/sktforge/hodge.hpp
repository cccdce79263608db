#pragma once

#include "sktforge/form.hpp"
#include "sktforge/lie_algebra.hpp"
#include "sktforge/linalg.hpp"

#include <stdexcept>
#include <vector>

namespace sktforge {

template <class R>
struct MetricT {
    int dim = 0;
    std::vector<std::vector<R>> g; // symmetric, on vectors
};

using Metric = MetricT<ScalarPoly>;
using MetricQ = MetricT<Rational>;

template <class R>
MetricT<R> identity_metric(int n) {
    MetricT<R> m{n, std::vector<std::vector<R>>(n, std::vector<R>(n, R(0)))};
    for (int i = 0; i < n; ++i) m.g[i][i] = R(1);
    return m;
}

inline bool is_positive_definite(const MetricQ& m) {
    for (int k = 1; k <= m.dim; ++k) {
        QMat minor(k, QVec(k, Rational(0)));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) minor[i][j] = m.g[i][j];
        if (q_det(minor).sign() <= 0) return false;
    }
    return true;
}

inline MetricQ evaluate(const Metric& m, const std::map<std::string, Rational>& point) {
    MetricQ out{m.dim, QMat(m.dim, QVec(m.dim, Rational(0)))};
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j) out.g[i][j] = m.g[i][j].eval(point);
    return out;
}

inline Metric widen(const MetricQ& m) {
    Metric out{m.dim, std::vector<std::vector<ScalarPoly>>(
                          m.dim, std::vector<ScalarPoly>(m.dim, ScalarPoly(0)))};
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j) out.g[i][j] = ScalarPoly(m.g[i][j]);
    return out;
}

// J acting on a k-form: (J alpha)(X_1..X_k) = (-1)^k alpha(J X_1, .., J X_k).
template <class R>
Form<R> j_action(const std::vector<std::vector<R>>& J, const Form<R>& x) {
    Form<R> p = pullback(x, J);
    if (x.grade % 2 == 0) return p;
    return zero_form<R>(x.dim, x.grade) - p;
}

namespace detail {

inline Rational gram_inner(const QMat& ginv, uint32_t a, uint32_t b, int /*dim*/) {
    auto ia = indices_from_mask(a), ib = indices_from_mask(b);
    int k = (int)ia.size();
    if (k == 0) return Rational(1);
    QMat m(k, QVec(k, Rational(0)));
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) m[r][c] = ginv[ia[r] - 1][ib[c] - 1];
    return q_det(m);
}

} // namespace detail

// Hodge star with respect to an exact positive-definite metric whose volume
// normalization sqrt(det g) is rational (true for all frames used here).
inline Form<Rational> hodge_star(const MetricQ& m, const Form<Rational>& x,
                                 int orientation = 1) {
    if (m.dim != x.dim) throw std::invalid_argument("metric/form dimension mismatch");
    if (!is_positive_definite(m))
        throw std::domain_error("metric is not positive definite at this point");
    int n = m.dim, k = x.grade;
    QMat ginv = q_inverse(m.g);
    Rational vol = Rational(q_det(m.g)).sqrt_exact() * Rational(orientation);
    uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    Form<Rational> out = zero_form<Rational>(n, n - k);
    std::vector<uint32_t> kmasks;
    for (uint32_t mm = 0; mm <= full; ++mm)
        if (__builtin_popcount(mm) == k) kmasks.push_back(mm);
    for (auto& [mask, c] : x.coeffs) {
        for (uint32_t L : kmasks) {
            Rational inner = detail::gram_inner(ginv, L, mask, n);
            if (inner.is_zero()) continue;
            uint32_t comp = full & ~L;
            int sgn = merge_sign(L, comp);
            out.add(comp, c * inner * vol * Rational(sgn));
        }
    }
    return out;
}

// Orthonormal-frame star, valid for any coefficient ring.
template <class R>
Form<R> hodge_star_orthonormal(const Form<R>& x, int orientation = 1) {
    int n = x.dim, k = x.grade;
    uint32_t full = (1u << n) - 1;
    Form<R> out = zero_form<R>(n, n - k);
    for (auto& [mask, c] : x.coeffs) {
        uint32_t comp = full & ~mask;
        int sgn = merge_sign(mask, comp) * orientation;
        out.add(comp, sgn > 0 ? c : R(0) - c);
    }
    return out;
}

namespace detail {

inline int codiff_sign(int n, int k) {
    // d* on k-forms is (-1)^{n(k+1)+1} * d *.
    return (n * (k + 1) + 1) % 2 == 0 ? 1 : -1;
}

} // namespace detail

inline Form<Rational> codifferential(const LieAlgebraQ& alg, const MetricQ& m,
                                     const Form<Rational>& x) {
    int n = alg.dim, k = x.grade;
    if (k == 0) return zero_form<Rational>(n, 0);
    Form<Rational> sdsx = hodge_star(m, differential(alg, hodge_star(m, x)));
    int sgn = detail::codiff_sign(n, k);
    return sgn > 0 ? sdsx : zero_form<Rational>(n, k - 1) - sdsx;
}

template <class R>
Form<R> codifferential_orthonormal(const LieAlgebraT<R>& alg, const Form<R>& x) {
    int n = alg.dim, k = x.grade;
    if (k == 0) return zero_form<R>(n, 0);
    Form<R> sdsx = hodge_star_orthonormal(differential(alg, hodge_star_orthonormal(x)));
    int sgn = detail::codiff_sign(n, k);
    return sgn > 0 ? sdsx : zero_form<R>(n, k - 1) - sdsx;
}

} // namespace sktforge
