#pragma once

#include "sktforge/hermitian.hpp"
#include "sktforge/lie_algebra.hpp"
#include "sktforge/rng.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace sktforge {

// Numerical search for an SKT structure on a four-dimensional algebra.
//
// Candidates are parametrized by an invertible frame matrix A through
// J = A J0 A^{-1} and g = A^{-T} A^{-1}: every compatible pair arises this
// way, J^2 = -I, symmetry, positivity and J-invariance of g hold identically,
// and rescaling A only rescales g, so the gauge |det A| = 1 loses nothing.
// The residual stacks the (0,2)-projection coefficients of d on the four
// holomorphic covectors (integrability) and the top coefficient of dc
// (torsion closedness); it vanishes exactly at SKT structures.

struct SearchConfig {
    uint64_t seed = 1;
    int restarts = 100;
    int max_iters = 150;
    double found_tol = 1e-12; // sup-norm at or below: structure found
    double floor_tol = 1e-10; // best sup-norm above: confidently not found
    double init_spread = 0.75;
};

using Mat4 = std::array<std::array<double, 4>, 4>;

struct SearchResult {
    bool found = false;
    // decisive = found, or every restart stayed above the floor; a best value
    // between the two thresholds is reported as inconclusive.
    bool decisive = false;
    double best_residual = std::numeric_limits<double>::infinity();
    int restarts_used = 0;
    int found_restart = -1;                // restart index that reached found_tol
    std::vector<double> restart_residuals; // best sup-norm within each restart
    Mat4 witness_A{}, witness_J{}, witness_g{};
    double witness_j_defect = 0;      // sup |J^2 + I|
    double witness_compat_defect = 0; // sup |J^T g J - g|
    bool witness_positive = false;    // g positive definite
};

namespace detail {

inline constexpr int kSearchResidualSize = 49;

inline std::vector<std::vector<double>> eigen_to_vv(const Eigen::Matrix4d& m) {
    std::vector<std::vector<double>> v(4, std::vector<double>(4, 0.0));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) v[i][j] = m(i, j);
    return v;
}

inline Mat4 eigen_to_arr(const Eigen::Matrix4d& m) {
    Mat4 a{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a[i][j] = m(i, j);
    return a;
}

inline Eigen::Matrix4d standard_j_numeric() {
    Eigen::Matrix4d j = Eigen::Matrix4d::Zero();
    j(1, 0) = 1;
    j(0, 1) = -1;
    j(3, 2) = 1;
    j(2, 3) = -1;
    return j;
}

// Fixed-layout residual: for each covector, the six grade-two coefficients of
// the real then imaginary part of the (0,2)-projection of its differential
// (4 x 12), then the top coefficient of dc.
inline void skt_residual_components(const LieAlgebraD& alg, const Eigen::Matrix4d& A,
                                    double* out) {
    Eigen::Matrix4d Ainv = A.inverse();
    Eigen::Matrix4d J = A * standard_j_numeric() * Ainv;
    Eigen::Matrix4d g = Ainv.transpose() * Ainv;
    auto Jv = eigen_to_vv(J);

    static const uint32_t pair_masks[6] = {
        mask_from_indices({1, 2}, 4), mask_from_indices({1, 3}, 4),
        mask_from_indices({1, 4}, 4), mask_from_indices({2, 3}, 4),
        mask_from_indices({2, 4}, 4), mask_from_indices({3, 4}, 4)};

    std::vector<CForm<double>> anti;
    for (int i = 1; i <= 4; ++i) anti.push_back(antiholo_doubled(Jv, 4, i));

    int k = 0;
    for (int i = 1; i <= 4; ++i) {
        Form<double> e = basis_covector<double>(4, i);
        Form<double> je = j_action(Jv, e);
        CForm<double> dphi{differential(alg, e),
                           zero_form<double>(4, 2) - differential(alg, je)};
        CForm<double> proj{zero_form<double>(4, 2), zero_form<double>(4, 2)};
        for (auto part : {0, 1}) {
            const Form<double>& comp = part == 0 ? dphi.re : dphi.im;
            for (auto& [mask, c] : comp.coeffs) {
                auto ij = indices_from_mask(mask);
                auto w = cwedge(anti[ij[0] - 1], anti[ij[1] - 1]);
                if (part == 0) {
                    proj.re = proj.re + c * w.re;
                    proj.im = proj.im + c * w.im;
                } else {
                    proj.re = proj.re - (c * w.im);
                    proj.im = proj.im + c * w.re;
                }
            }
        }
        for (auto m : pair_masks) out[k++] = proj.re.coeff(m);
        for (auto m : pair_masks) out[k++] = proj.im.coeff(m);
    }

    HermitianT<double> h{alg, Jv, MetricT<double>{4, eigen_to_vv(g)}};
    Form<double> c = bismut_torsion(h);
    Form<double> dc = differential(alg, c);
    out[k++] = dc.coeff(mask_from_indices({1, 2, 3, 4}, 4));
}

using SearchVec = Eigen::Matrix<double, kSearchResidualSize, 1>;
using ParamVec = Eigen::Matrix<double, 16, 1>;

inline Eigen::Matrix4d unpack_params(const ParamVec& p) {
    Eigen::Matrix4d A;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) A(i, j) = p(4 * i + j);
    return A;
}

inline ParamVec pack_params(const Eigen::Matrix4d& A) {
    ParamVec p;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) p(4 * i + j) = A(i, j);
    return p;
}

inline SearchVec residual_at(const LieAlgebraD& alg, const ParamVec& p) {
    SearchVec r;
    skt_residual_components(alg, unpack_params(p), r.data());
    return r;
}

// scale to |det A| = 1; leaves J unchanged and rescales g
inline bool normalize_gauge(ParamVec& p) {
    double det = unpack_params(p).determinant();
    double mag = std::abs(det);
    if (!(mag > 1e-9)) return false;
    p /= std::pow(mag, 0.25);
    return true;
}

} // namespace detail

// Sum of squares of all residual components at a given frame matrix. Exactly
// SKT instances evaluate at machine-epsilon scale; non-SKT structures stay
// bounded away from zero.
inline double skt_structure_residual(const LieAlgebraQ& alg, const Mat4& A) {
    if (alg.dim != 4)
        throw std::invalid_argument("skt_structure_residual expects dimension four");
    Eigen::Matrix4d Am;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) Am(i, j) = A[i][j];
    if (std::abs(Am.determinant()) < 1e-12)
        throw std::invalid_argument("frame matrix is singular");
    detail::SearchVec r;
    detail::skt_residual_components(to_numeric(alg), Am, r.data());
    return r.squaredNorm();
}

inline SearchResult search_skt(const LieAlgebraQ& alg, const SearchConfig& cfg = {}) {
    if (alg.dim != 4) throw std::invalid_argument("search_skt expects dimension four");
    LieAlgebraD num = to_numeric(alg);

    Splitmix64 rng(cfg.seed);
    SearchResult res;
    detail::ParamVec best_p = detail::pack_params(Eigen::Matrix4d::Identity());

    for (int restart = 0; restart < cfg.restarts && !res.found; ++restart) {
        res.restarts_used = restart + 1;
        Eigen::Matrix4d A0 = Eigen::Matrix4d::Identity();
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                A0(i, j) += cfg.init_spread * (2.0 * rng.next_unit() - 1.0);
        detail::ParamVec p = detail::pack_params(A0);
        if (!detail::normalize_gauge(p)) {
            res.restart_residuals.push_back(std::numeric_limits<double>::infinity());
            continue;
        }

        detail::SearchVec r = detail::residual_at(num, p);
        double cost = r.squaredNorm();
        double lambda = 1e-3;
        double restart_best = r.cwiseAbs().maxCoeff();

        for (int iter = 0; iter < cfg.max_iters; ++iter) {
            double sup = r.cwiseAbs().maxCoeff();
            restart_best = std::min(restart_best, sup);
            if (sup < res.best_residual) {
                res.best_residual = sup;
                best_p = p;
            }
            if (sup <= cfg.found_tol) {
                res.found = true;
                res.found_restart = restart;
                break;
            }

            // forward-difference Jacobian
            Eigen::Matrix<double, detail::kSearchResidualSize, 16> Jac;
            const double h = 1e-7;
            for (int c = 0; c < 16; ++c) {
                detail::ParamVec q = p;
                q(c) += h;
                Jac.col(c) = (detail::residual_at(num, q) - r) / h;
            }
            Eigen::Matrix<double, 16, 16> JtJ = Jac.transpose() * Jac;
            detail::ParamVec Jtr = Jac.transpose() * r;

            bool stepped = false;
            while (lambda <= 1e12) {
                Eigen::Matrix<double, 16, 16> M = JtJ;
                for (int d = 0; d < 16; ++d) M(d, d) += lambda;
                detail::ParamVec delta = M.ldlt().solve(-Jtr);
                detail::ParamVec q = p + delta;
                if (detail::normalize_gauge(q)) {
                    detail::SearchVec rq = detail::residual_at(num, q);
                    double cq = rq.squaredNorm();
                    if (cq < cost) {
                        p = q;
                        r = rq;
                        cost = cq;
                        lambda = std::max(lambda / 3.0, 1e-12);
                        stepped = true;
                        break;
                    }
                }
                lambda *= 8.0;
            }
            if (!stepped) break; // stagnated; next restart
        }
        double sup = r.cwiseAbs().maxCoeff();
        restart_best = std::min(restart_best, sup);
        res.restart_residuals.push_back(restart_best);
        if (sup < res.best_residual) {
            res.best_residual = sup;
            best_p = p;
        }
        if (res.best_residual <= cfg.found_tol) {
            res.found = true;
            if (res.found_restart < 0) res.found_restart = restart;
        }
    }

    Eigen::Matrix4d A = detail::unpack_params(best_p);
    Eigen::Matrix4d Ainv = A.inverse();
    Eigen::Matrix4d J = A * detail::standard_j_numeric() * Ainv;
    Eigen::Matrix4d g = Ainv.transpose() * Ainv;
    res.witness_A = detail::eigen_to_arr(A);
    res.witness_J = detail::eigen_to_arr(J);
    res.witness_g = detail::eigen_to_arr(g);
    res.witness_j_defect =
        (J * J + Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff();
    res.witness_compat_defect = (J.transpose() * g * J - g).cwiseAbs().maxCoeff();
    res.witness_positive = g.llt().info() == Eigen::Success;
    res.decisive = res.found || res.best_residual > cfg.floor_tol;
    return res;
}

} // namespace sktforge
