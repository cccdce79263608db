#pragma once

#include "sktforge/lie_algebra.hpp"
#include "sktforge/linalg.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace sktforge {

namespace detail {

inline std::vector<uint32_t> grade_masks(int n, int k) {
    std::vector<uint32_t> masks;
    for (uint32_t m = 0; m < (1u << n); ++m)
        if (__builtin_popcount(m) == k) masks.push_back(m);
    return masks;
}

// Matrix of d on grade-k elements, rows indexed by the k-masks.
inline QMat differential_matrix(const LieAlgebraQ& alg, int k) {
    auto rows_idx = grade_masks(alg.dim, k);
    auto cols_idx = grade_masks(alg.dim, k + 1);
    QMat m(rows_idx.size(), QVec(cols_idx.size(), Rational(0)));
    for (size_t r = 0; r < rows_idx.size(); ++r) {
        Form<Rational> basis = zero_form<Rational>(alg.dim, k);
        basis.add(rows_idx[r], Rational(1));
        Form<Rational> df = differential(alg, basis);
        for (size_t c = 0; c < cols_idx.size(); ++c) m[r][c] = df.coeff(cols_idx[c]);
    }
    return m;
}

} // namespace detail

// Betti numbers b_0..b_n of the dual differential complex.
inline std::vector<int> betti(const LieAlgebraQ& alg) {
    int n = alg.dim;
    std::vector<int> ranks(n + 1, 0);
    for (int k = 0; k <= n; ++k) {
        if (k == n) break; // d on the top grade is zero
        QMat m = detail::differential_matrix(alg, k);
        ranks[k] = m.empty() ? 0 : q_rank(m);
    }
    std::vector<int> b(n + 1, 0);
    for (int k = 0; k <= n; ++k) {
        int dim_k = (int)detail::grade_masks(n, k).size();
        int rank_prev = k == 0 ? 0 : ranks[k - 1];
        b[k] = dim_k - ranks[k] - rank_prev;
    }
    return b;
}

inline std::vector<int> betti(const LieAlgebra& alg,
                              const std::map<std::string, Rational>& point) {
    return betti(evaluate(alg, point));
}

inline std::vector<int> betti_checked(const LieAlgebra& alg) {
    if (is_parametric(alg))
        throw std::invalid_argument("parametric algebra requires an evaluation point");
    return betti(narrow(alg));
}

inline bool euler_check(const std::vector<int>& b) {
    if (b.size() <= 1) return true;
    int s = 0, sign = 1;
    for (int v : b) {
        s += sign * v;
        sign = -sign;
    }
    return s == 0;
}

// Generic Betti numbers from several evaluation points: majority vote,
// flagged inconsistent when the samples disagree.
struct GenericBetti {
    std::vector<int> b;
    bool consistent = true;
};

inline GenericBetti betti_generic(const LieAlgebra& alg,
                                  const std::vector<std::map<std::string, Rational>>& points) {
    std::vector<std::vector<int>> samples;
    for (auto& p : points) samples.push_back(betti(alg, p));
    GenericBetti out;
    if (samples.empty()) throw std::invalid_argument("no evaluation points supplied");
    int best = 0, best_count = 0;
    for (size_t i = 0; i < samples.size(); ++i) {
        int count = 0;
        for (auto& s : samples)
            if (s == samples[i]) ++count;
        if (count > best_count) { best_count = count; best = (int)i; }
    }
    out.b = samples[best];
    out.consistent = best_count == (int)samples.size();
    return out;
}

} // namespace sktforge
