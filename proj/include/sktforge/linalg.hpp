#pragma once

#include "sktforge/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace sktforge {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

inline QMat q_identity(size_t n) {
    QMat m(n, QVec(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = Rational(1);
    return m;
}

inline QMat q_mul(const QMat& a, const QMat& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    QMat r(n, QVec(m, Rational(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j) {
            if (a[i][j].is_zero()) continue;
            for (size_t c = 0; c < m; ++c) r[i][c] += a[i][j] * b[j][c];
        }
    return r;
}

inline QVec q_mul_vec(const QMat& a, const QVec& x) {
    QVec r(a.size(), Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) r[i] += a[i][j] * x[j];
    return r;
}

struct RrefResult {
    QMat mat;
    std::vector<size_t> pivot_cols;
    size_t rank = 0;
};

inline RrefResult rref(QMat m) {
    RrefResult res;
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        Rational lead = m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] /= lead;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rational f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        res.pivot_cols.push_back(c);
        ++r;
    }
    res.rank = r;
    res.mat = std::move(m);
    return res;
}

inline size_t q_rank(const QMat& m) { return rref(m).rank; }

// Basis of {x : Mx = 0}.
inline std::vector<QVec> q_nullspace(const QMat& m) {
    size_t cols = m.empty() ? 0 : m[0].size();
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : r.pivot_cols) is_pivot[c] = true;
    std::vector<QVec> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        QVec v(cols, Rational(0));
        v[free] = Rational(1);
        for (size_t p = 0; p < r.pivot_cols.size(); ++p)
            v[r.pivot_cols[p]] = -r.mat[p][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

// One solution of Ax = b, if consistent.
inline std::optional<QVec> q_solve(const QMat& a, const QVec& b) {
    size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    QMat aug = a;
    for (size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
    RrefResult r = rref(std::move(aug));
    for (size_t p = 0; p < r.pivot_cols.size(); ++p)
        if (r.pivot_cols[p] == cols) return std::nullopt;
    QVec x(cols, Rational(0));
    for (size_t p = 0; p < r.pivot_cols.size(); ++p) x[r.pivot_cols[p]] = r.mat[p][cols];
    return x;
}

inline Rational q_det(QMat m) {
    size_t n = m.size();
    Rational det(1);
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && m[piv][c].is_zero()) ++piv;
        if (piv == n) return Rational(0);
        if (piv != c) { std::swap(m[c], m[piv]); det = -det; }
        det *= m[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            if (m[i][c].is_zero()) continue;
            Rational f = m[i][c] / m[c][c];
            for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

inline QMat q_inverse(const QMat& a) {
    size_t n = a.size();
    QMat aug = a;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i].push_back(Rational(i == j ? 1 : 0));
    }
    RrefResult r = rref(std::move(aug));
    if (r.rank < n) throw std::domain_error("q_inverse: singular matrix");
    QMat inv(n, QVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = r.mat[i][n + j];
    return inv;
}

// Row-space basis in reduced echelon form; canonical for subspace comparison.
inline QMat q_row_basis(const QMat& m) {
    RrefResult r = rref(m);
    QMat basis(r.mat.begin(), r.mat.begin() + r.rank);
    return basis;
}

inline bool q_in_row_space(const QMat& basis, const QVec& v) {
    QMat m = basis;
    m.push_back(v);
    return q_rank(m) == basis.size();
}

inline bool q_same_row_space(const QMat& a, const QMat& b) {
    return q_row_basis(a) == q_row_basis(b);
}

} // namespace sktforge
