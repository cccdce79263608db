#pragma once

#include "sktforge/hodge.hpp"
#include "sktforge/lie_algebra.hpp"

#include <stdexcept>
#include <vector>

namespace sktforge {

// g is ad-invariant when g([x,y],z) + g(y,[x,z]) = 0 for all basis triples.
template <typename R>
bool is_ad_invariant(const LieAlgebraT<R>& alg, const MetricT<R>& metric) {
    if (metric.dim != alg.dim)
        throw std::invalid_argument("is_ad_invariant: dimension mismatch");
    int n = alg.dim;
    auto pair_with = [&](int i, int x, int j) {
        // g([E_i, E_x], E_j); structure_constant expects i < x
        R acc(0);
        if (i == x) return acc;
        bool flip = i > x;
        if (flip) std::swap(i, x);
        for (int k = 1; k <= n; ++k) {
            R c = structure_constant(alg, k, i, x);
            if (!is_zero(c)) acc += c * metric.g[k - 1][j - 1];
        }
        return flip ? R(0) - acc : acc;
    };
    for (int x = 1; x <= n; ++x)
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j)
                if (!is_zero(pair_with(x, i, j) + pair_with(x, j, i))) return false;
    return true;
}

// The canonical torsion three-form of an ad-invariant metric:
// c(x,y,z) = -g([x,y],z). Requires ad-invariance, otherwise the formula does
// not define an alternating form.
template <typename R>
Form<R> biinvariant_torsion(const LieAlgebraT<R>& alg, const MetricT<R>& metric) {
    if (!is_ad_invariant(alg, metric))
        throw std::invalid_argument(
            "biinvariant_torsion: metric is not ad-invariant for this algebra");
    int n = alg.dim;
    Form<R> c(n, 3);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                R acc(0);
                for (int l = 1; l <= n; ++l) {
                    R s = structure_constant(alg, l, i, j);
                    if (!is_zero(s)) acc += s * metric.g[l - 1][k - 1];
                }
                if (!is_zero(acc))
                    c.add(mask_from_indices({i, j, k}, n), R(0) - acc);
            }
    return c;
}

// Torsion form together with its closedness certificate.
template <typename R>
struct BiinvariantReport {
    Form<R> torsion;
    Form<R> dc;
    bool closed = false;
    bool nonzero = false;
};

template <typename R>
BiinvariantReport<R> biinvariant_report(const LieAlgebraT<R>& alg,
                                        const MetricT<R>& metric) {
    BiinvariantReport<R> rep{biinvariant_torsion(alg, metric),
                             Form<R>(alg.dim, 4)};
    rep.dc = differential(alg, rep.torsion);
    rep.closed = rep.dc.coeffs.empty();
    rep.nonzero = !rep.torsion.coeffs.empty();
    return rep;
}

} // namespace sktforge
