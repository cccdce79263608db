#pragma once

#include "sktforge/hodge.hpp"
#include "sktforge/lie_algebra.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace sktforge {

namespace detail {

template <class R>
bool matrix_is(const std::vector<std::vector<R>>& m, const std::vector<std::vector<R>>& w) {
    int n = (int)m.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!is_zero(m[i][j] - w[i][j])) return false;
    return true;
}

template <class R>
std::vector<std::vector<R>> mat_mul(const std::vector<std::vector<R>>& a,
                                    const std::vector<std::vector<R>>& b) {
    int n = (int)a.size();
    std::vector<std::vector<R>> c(n, std::vector<R>(n, R(0)));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

} // namespace detail

// An almost Hermitian structure: complex structure J and compatible metric g
// on the algebra's underlying vector space.
template <class R>
struct HermitianT {
    LieAlgebraT<R> alg;
    std::vector<std::vector<R>> J; // acts on vectors
    MetricT<R> g;
};

using Hermitian = HermitianT<ScalarPoly>;
using HermitianQ = HermitianT<Rational>;

template <class R>
HermitianT<R> make_hermitian(LieAlgebraT<R> alg, std::vector<std::vector<R>> J, MetricT<R> g) {
    int n = alg.dim;
    if ((int)J.size() != n || g.dim != n)
        throw std::invalid_argument("hermitian data has mismatched dimensions");
    if (n % 2 != 0) throw std::invalid_argument("complex structures need even dimension");
    std::vector<std::vector<R>> minus_id(n, std::vector<R>(n, R(0)));
    for (int i = 0; i < n; ++i) minus_id[i][i] = R(0) - R(1);
    if (!detail::matrix_is(detail::mat_mul(J, J), minus_id))
        throw std::invalid_argument("J does not square to -identity");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!is_zero(g.g[i][j] - g.g[j][i]))
                throw std::invalid_argument("metric is not symmetric");
    // J^T g J = g
    std::vector<std::vector<R>> jt(n, std::vector<R>(n, R(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) jt[i][j] = J[j][i];
    if (!detail::matrix_is(detail::mat_mul(jt, detail::mat_mul(g.g, J)), g.g))
        throw std::invalid_argument("metric is not J-compatible");
    return HermitianT<R>{std::move(alg), std::move(J), std::move(g)};
}

inline HermitianQ evaluate(const Hermitian& h, const std::map<std::string, Rational>& point) {
    int n = h.alg.dim;
    QMat J(n, QVec(n, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) J[i][j] = h.J[i][j].eval(point);
    return HermitianQ{evaluate(h.alg, point), J, evaluate(h.g, point)};
}

// omega = g(J., .)
template <class R>
Form<R> fundamental_form(const HermitianT<R>& h) {
    int n = h.alg.dim;
    Form<R> w = zero_form<R>(n, 2);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            R v(0);
            for (int k = 0; k < n; ++k) v += h.J[k][i - 1] * h.g.g[k][j - 1];
            w.add(mask_from_indices({i, j}, n), v);
        }
    }
    return w;
}

namespace detail {

// Complexified form: re + i im.
template <class R>
struct CForm {
    Form<R> re, im;
};

template <class R>
CForm<R> cwedge(const CForm<R>& a, const CForm<R>& b) {
    return {wedge(a.re, b.re) - wedge(a.im, b.im), wedge(a.re, b.im) + wedge(a.im, b.re)};
}

// Anti-holomorphic projector on a basis covector: pi^{0,1} e^i = (e^i + i J e^i)/2,
// doubled here to keep coefficients integral: returns e^i + i J e^i.
template <class R>
CForm<R> antiholo_doubled(const std::vector<std::vector<R>>& J, int dim, int i) {
    Form<R> e = basis_covector<R>(dim, i);
    return {e, j_action(J, e)};
}

} // namespace detail

// Real and imaginary coefficients of the (0,2)-parts of d of the holomorphic
// covectors; all zero exactly when J is integrable. Scaled by a harmless
// overall factor to keep entries polynomial.
template <class R>
std::vector<R> integrability_residual(const LieAlgebraT<R>& alg,
                                      const std::vector<std::vector<R>>& J) {
    int n = alg.dim;
    std::vector<R> out;
    // Precompute doubled pi^{0,1} e^i.
    std::vector<detail::CForm<R>> anti;
    for (int i = 1; i <= n; ++i) anti.push_back(detail::antiholo_doubled(J, n, i));
    for (int i = 1; i <= n; ++i) {
        // Doubled pi^{1,0} e^i = e^i - i J e^i.
        Form<R> e = basis_covector<R>(n, i);
        Form<R> je = j_action(J, e);
        detail::CForm<R> dphi{differential(alg, e), zero_form<R>(n, 2) - differential(alg, je)};
        // (0,2)-part: sum over increasing pairs of gamma_{jk} pi01 e^j ^ pi01 e^k.
        detail::CForm<R> proj{zero_form<R>(n, 2), zero_form<R>(n, 2)};
        for (auto part : {0, 1}) {
            const Form<R>& comp = part == 0 ? dphi.re : dphi.im;
            for (auto& [mask, c] : comp.coeffs) {
                auto ij = indices_from_mask(mask);
                auto w = detail::cwedge(anti[ij[0] - 1], anti[ij[1] - 1]);
                if (part == 0) {
                    proj.re = proj.re + c * w.re;
                    proj.im = proj.im + c * w.im;
                } else {
                    proj.re = proj.re - (c * w.im);
                    proj.im = proj.im + c * w.re;
                }
            }
        }
        for (auto& [mask, c] : proj.re.coeffs) out.push_back(c);
        for (auto& [mask, c] : proj.im.coeffs) out.push_back(c);
    }
    return out;
}

template <class R>
bool is_integrable(const HermitianT<R>& h) {
    for (auto& r : integrability_residual(h.alg, h.J))
        if (!is_zero(r)) return false;
    return true;
}

// c = -J(d omega), the torsion three-form of the Bismut connection.
template <class R>
Form<R> bismut_torsion(const HermitianT<R>& h) {
    Form<R> dw = differential(h.alg, fundamental_form(h));
    return zero_form<R>(h.alg.dim, 3) - j_action(h.J, dw);
}

template <class R>
struct SktDecision {
    bool skt = false;
    R residual;      // top-form coefficient of dc (dim 4)
    Form<R> dc;
};

template <class R>
SktDecision<R> is_skt(const HermitianT<R>& h) {
    Form<R> dc = differential(h.alg, bismut_torsion(h));
    SktDecision<R> out{dc.is_zero(), R(0), dc};
    int n = h.alg.dim;
    if (n == 4) out.residual = dc.coeff((1u << n) - 1);
    return out;
}

template <class R>
struct KahlerDecision {
    bool kahler = false;
    Form<R> residual; // d omega
};

template <class R>
KahlerDecision<R> is_kahler(const HermitianT<R>& h) {
    Form<R> dw = differential(h.alg, fundamental_form(h));
    return {dw.is_zero(), dw};
}

// theta = J(d* omega)
inline Form<Rational> lee_form(const HermitianQ& h) {
    Form<Rational> dstar_w = codifferential(h.alg, h.g, fundamental_form(h));
    return j_action(h.J, dstar_w);
}

inline bool lee_coclosed(const HermitianQ& h) {
    return codifferential(h.alg, h.g, lee_form(h)).is_zero();
}

} // namespace sktforge
