#pragma once

#include "sktforge/scalar_poly.hpp"

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <vector>

namespace sktforge {

// Index subsets of {1..n} as bitmasks; bit (i-1) encodes index i.
inline uint32_t mask_from_indices(const std::vector<int>& idx, int dim) {
    uint32_t m = 0;
    for (int i : idx) {
        if (i < 1 || i > dim) throw std::out_of_range("form index out of range");
        uint32_t b = 1u << (i - 1);
        if (m & b) throw std::invalid_argument("repeated form index");
        m |= b;
    }
    return m;
}

inline std::vector<int> indices_from_mask(uint32_t m) {
    std::vector<int> idx;
    for (int i = 0; m; ++i, m >>= 1)
        if (m & 1u) idx.push_back(i + 1);
    return idx;
}

// Sign of merging two disjoint increasing index sets into one increasing set.
inline int merge_sign(uint32_t a, uint32_t b) {
    int inversions = 0;
    for (uint32_t rest = b; rest;) {
        uint32_t low = rest & (~rest + 1u);
        inversions += std::popcount(a & ~(low | (low - 1u)));
        rest ^= low;
    }
    return inversions % 2 ? -1 : 1;
}

// Left-invariant k-form with coefficients in a commutative ring R (exact
// polynomial/rational coefficients, or double for the numeric layer).
template <class R>
struct Form {
    int dim = 0;
    int grade = 0;
    std::map<uint32_t, R> coeffs;

    Form() = default;
    Form(int n, int k) : dim(n), grade(k) {
        if (n < 0 || k < 0) throw std::invalid_argument("Form: negative dimension or grade");
    }

    bool is_zero() const {
        for (auto& [m, c] : coeffs)
            if (!sktforge::is_zero(c)) return false;
        return true;
    }

    void add(uint32_t mask, const R& c) {
        if (sktforge::is_zero(c)) return;
        auto it = coeffs.find(mask);
        if (it == coeffs.end()) {
            coeffs.emplace(mask, c);
        } else {
            it->second = it->second + c;
            if (sktforge::is_zero(it->second)) coeffs.erase(it);
        }
    }

    R coeff(uint32_t mask) const {
        auto it = coeffs.find(mask);
        return it == coeffs.end() ? R(0) : it->second;
    }
    R coeff_at(const std::vector<int>& idx) const { return coeff(mask_from_indices(idx, dim)); }

    friend Form operator+(const Form& a, const Form& b) {
        a.check_same(b);
        Form r = a;
        for (auto& [m, c] : b.coeffs) r.add(m, c);
        return r;
    }
    friend Form operator-(const Form& a, const Form& b) {
        a.check_same(b);
        Form r = a;
        for (auto& [m, c] : b.coeffs) r.add(m, R(0) - c);
        return r;
    }
    Form operator-() const {
        Form r(dim, grade);
        for (auto& [m, c] : coeffs) r.coeffs.emplace(m, R(0) - c);
        return r;
    }
    friend Form operator*(const R& s, const Form& f) {
        Form r(f.dim, f.grade);
        for (auto& [m, c] : f.coeffs) r.add(m, s * c);
        return r;
    }

    bool operator==(const Form& o) const {
        if (dim != o.dim || grade != o.grade) return false;
        return (*this - o).is_zero();
    }

    void check_same(const Form& o) const {
        if (dim != o.dim || grade != o.grade)
            throw std::invalid_argument("Form: dimension or grade mismatch");
    }
};

template <class R>
Form<R> zero_form(int dim, int grade) {
    return Form<R>(dim, grade);
}

// Dual basis covector e_i as a 1-form.
template <class R>
Form<R> basis_covector(int dim, int i) {
    Form<R> f(dim, 1);
    f.add(mask_from_indices({i}, dim), R(1));
    return f;
}

template <class R>
Form<R> form_from_terms(int dim, int grade,
                        std::initializer_list<std::pair<std::vector<int>, R>> terms) {
    Form<R> f(dim, grade);
    for (auto& [idx, c] : terms) {
        if ((int)idx.size() != grade) throw std::invalid_argument("form term grade mismatch");
        f.add(mask_from_indices(idx, dim), c);
    }
    return f;
}

// Wedge product. Grades past the ambient dimension give the zero form of the
// formal grade k1+k2 (it has no admissible index sets).
template <class R>
Form<R> wedge(const Form<R>& a, const Form<R>& b) {
    if (a.dim != b.dim) throw std::invalid_argument("wedge: ambient dimension mismatch");
    Form<R> r(a.dim, a.grade + b.grade);
    if (r.grade > a.dim) return r;
    for (auto& [ma, ca] : a.coeffs) {
        for (auto& [mb, cb] : b.coeffs) {
            if (ma & mb) continue;
            int s = merge_sign(ma, mb);
            R prod = ca * cb;
            r.add(ma | mb, s < 0 ? R(0) - prod : prod);
        }
    }
    return r;
}

// Pullback along a linear map of the underlying vector space: if M acts on
// vectors, (pullback(f, M))(X1,..,Xk) = f(M X1,..,M Xk). On covectors this
// sends e_i to sum_j M[i][j] e_j, and extends as an algebra morphism.
template <class R>
Form<R> pullback(const Form<R>& f, const std::vector<std::vector<R>>& m) {
    int n = f.dim;
    if ((int)m.size() != n) throw std::invalid_argument("pullback: matrix size mismatch");
    std::vector<Form<R>> images;
    images.reserve(n);
    for (int i = 0; i < n; ++i) {
        Form<R> img(n, 1);
        for (int j = 0; j < n; ++j) img.add(1u << j, m[i][j]);
        images.push_back(std::move(img));
    }
    Form<R> r(n, f.grade);
    for (auto& [mask, c] : f.coeffs) {
        Form<R> term(n, 0);
        term.add(0, c);
        for (int i : indices_from_mask(mask)) term = wedge(term, images[i - 1]);
        for (auto& [mm, cc] : term.coeffs) r.add(mm, cc);
    }
    return r;
}

template <class R2, class R1, class Fn>
Form<R2> map_coeffs(const Form<R1>& f, Fn&& fn) {
    Form<R2> r(f.dim, f.grade);
    for (auto& [m, c] : f.coeffs) r.add(m, fn(c));
    return r;
}

} // namespace sktforge
