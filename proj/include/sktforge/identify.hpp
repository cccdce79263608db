#pragma once

#include "sktforge/catalog.hpp"
#include "sktforge/structure.hpp"

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sktforge {

enum class IdStatus { identified, ambiguous, unrecognized };

struct IdResult {
    IdStatus status = IdStatus::unrecognized;
    AlgebraId id;
    std::string message;

    static IdResult ok(AlgebraId id) { return {IdStatus::identified, std::move(id), ""}; }
    static IdResult ambiguous(std::string why) { return {IdStatus::ambiguous, {}, std::move(why)}; }
    static IdResult fail(std::string why) { return {IdStatus::unrecognized, {}, std::move(why)}; }
};

namespace detail {

inline std::optional<Rational> sqrt_if_square(const Rational& r) {
    if (r.sign() < 0) return std::nullopt;
    if (r.is_zero()) return Rational(0);
    BigInt n = r.numerator(), d = r.denominator();
    BigInt sn = boost::multiprecision::sqrt(n), sd = boost::multiprecision::sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Rational(sn, sd);
}

// Continued-fraction convergents of x with denominators up to max_den.
inline std::vector<Rational> convergents(double x, const BigInt& max_den) {
    std::vector<Rational> out;
    if (!std::isfinite(x)) return out;
    BigInt h0 = 1, k0 = 0;
    BigInt h1 = BigInt((long long)std::floor(x)), k1 = 1;
    out.push_back(Rational(h1, k1));
    double v = x - std::floor(x);
    for (int it = 0; it < 60 && v > 1e-14; ++it) {
        v = 1.0 / v;
        double fl = std::floor(v);
        if (fl > 9e17) break;
        v -= fl;
        BigInt a((long long)fl);
        BigInt h2 = a * h1 + h0, k2 = a * k1 + k0;
        if (k2 > max_den) break;
        out.push_back(Rational(h2, k2));
        h0 = h1; k0 = k1; h1 = h2; k1 = k2;
    }
    return out;
}

// Approximate real roots of x^3 + a x^2 + b x + c.
inline std::vector<double> cubic_real_roots_numeric(double a, double b, double c) {
    auto f = [&](double x) { return ((x + a) * x + b) * x + c; };
    double B = 1.0 + std::max({std::fabs(a), std::fabs(b), std::fabs(c)});
    std::vector<double> pts{-B};
    double disc = 4 * a * a - 12 * b;
    if (disc >= 0) {
        pts.push_back((-2 * a - std::sqrt(disc)) / 6.0);
        pts.push_back((-2 * a + std::sqrt(disc)) / 6.0);
    }
    pts.push_back(B);
    std::sort(pts.begin(), pts.end());
    std::vector<double> roots;
    double tiny = 1e-9 * (1.0 + B * B * B);
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        double lo = pts[i], hi = pts[i + 1];
        if (std::fabs(f(lo)) < tiny) roots.push_back(lo);
        if (f(lo) == 0.0 || f(lo) * f(hi) > 0) continue;
        for (int it = 0; it < 200; ++it) {
            double mid = 0.5 * (lo + hi);
            if (f(lo) * f(mid) <= 0) hi = mid;
            else lo = mid;
        }
        roots.push_back(0.5 * (lo + hi));
    }
    if (!pts.empty() && std::fabs(f(pts.back())) < tiny) roots.push_back(pts.back());
    return roots;
}

// One exact rational root of x^3 + a x^2 + b x + c, if any.
inline std::optional<Rational> rational_root_cubic(const Rational& a, const Rational& b,
                                                   const Rational& c) {
    auto eval = [&](const Rational& x) { return ((x + a) * x + b) * x + c; };
    static const Rational quick[] = {Rational(0),     Rational(1),  Rational(-1),
                                     Rational(2),     Rational(-2), Rational(1, 2),
                                     Rational(-1, 2), Rational(3),  Rational(-3)};
    for (auto& cand : quick)
        if (eval(cand).is_zero()) return cand;
    BigInt max_den = BigInt(1000000000000LL);
    for (double r : cubic_real_roots_numeric(a.to_double(), b.to_double(), c.to_double()))
        for (auto& cand : convergents(r, max_den))
            if (eval(cand).is_zero()) return cand;
    return std::nullopt;
}

struct Eigen2 {
    enum class Kind { real_pair, defective_double, complex_pair, irrational } kind;
    Rational r1, r2; // real_pair: roots; defective_double: r1; complex_pair: r1 +- i r2, r2 > 0
};

inline Eigen2 analyze_2x2(const QMat& m) {
    Rational tr = m[0][0] + m[1][1];
    Rational det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Rational D = tr * tr - Rational(4) * det;
    if (D.is_zero()) {
        Rational r = tr / Rational(2);
        bool scalar = (m[0][0] == r) && (m[1][1] == r) && m[0][1].is_zero() && m[1][0].is_zero();
        if (scalar) return {Eigen2::Kind::real_pair, r, r};
        return {Eigen2::Kind::defective_double, r, Rational(0)};
    }
    if (D.sign() > 0) {
        auto s = sqrt_if_square(D);
        if (!s) return {Eigen2::Kind::irrational, {}, {}};
        return {Eigen2::Kind::real_pair, (tr + *s) / Rational(2), (tr - *s) / Rational(2)};
    }
    auto s = sqrt_if_square(-D);
    if (!s) return {Eigen2::Kind::irrational, {}, {}};
    return {Eigen2::Kind::complex_pair, tr / Rational(2), *s / Rational(2)};
}

struct Eigen3 {
    enum class Kind { diag, j2_plus_1, j3, complex_plus_real, irrational } kind;
    // diag: 3 roots; j2_plus_1: {defective double, simple}; j3: {root};
    // complex_plus_real: {real root, alpha, beta > 0}
    std::vector<Rational> vals;
};

inline Eigen3 analyze_3x3(const QMat& m) {
    Rational tr = m[0][0] + m[1][1] + m[2][2];
    Rational m2 = m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] -
                  m[0][2] * m[2][0] + m[1][1] * m[2][2] - m[1][2] * m[2][1];
    Rational a = -tr, b = m2, c = -q_det(m);
    auto r0 = rational_root_cubic(a, b, c);
    if (!r0) return {Eigen3::Kind::irrational, {}};
    Rational p = a + *r0, q = b + *r0 * p;
    Rational D = p * p - Rational(4) * q;
    if (D.sign() < 0) {
        auto s = sqrt_if_square(-D);
        if (!s) return {Eigen3::Kind::irrational, {}};
        return {Eigen3::Kind::complex_plus_real, {*r0, -p / Rational(2), *s / Rational(2)}};
    }
    auto s = sqrt_if_square(D);
    if (!s) return {Eigen3::Kind::irrational, {}};
    std::vector<Rational> roots{*r0, (-p + *s) / Rational(2), (-p - *s) / Rational(2)};
    auto geo_mult = [&](const Rational& lam) {
        QMat sh = m;
        for (int i = 0; i < 3; ++i) sh[i][i] -= lam;
        return 3 - q_rank(sh);
    };
    std::vector<std::pair<Rational, int>> distinct;
    for (auto& r : roots) {
        bool found = false;
        for (auto& [v, cnt] : distinct)
            if (v == r) { ++cnt; found = true; }
        if (!found) distinct.push_back({r, 1});
    }
    if (distinct.size() == 3) return {Eigen3::Kind::diag, roots};
    if (distinct.size() == 2) {
        auto& dbl = distinct[0].second == 2 ? distinct[0] : distinct[1];
        auto& simple = distinct[0].second == 2 ? distinct[1] : distinct[0];
        if (geo_mult(dbl.first) == 2) return {Eigen3::Kind::diag, roots};
        return {Eigen3::Kind::j2_plus_1, {dbl.first, simple.first}};
    }
    int g = geo_mult(distinct[0].first);
    if (g == 3) return {Eigen3::Kind::diag, roots};
    if (g == 2) return {Eigen3::Kind::j2_plus_1, {distinct[0].first, distinct[0].first}};
    return {Eigen3::Kind::j3, {distinct[0].first}};
}

// Matrix of ad_X restricted to an ad-invariant proper subspace, with X the
// first standard basis vector outside it.
inline QMat ad_on_subspace(const LieAlgebraQ& alg, const Subspace& s) {
    int n = alg.dim, m = s.dim();
    QVec x(n, Rational(0));
    for (int i = 0; i < n; ++i) {
        QVec e(n, Rational(0));
        e[i] = Rational(1);
        if (!s.contains(e)) { x = e; break; }
    }
    QMat basis_t(n, QVec(m, Rational(0)));
    for (int i = 0; i < m; ++i)
        for (int c = 0; c < n; ++c) basis_t[c][i] = s.basis[i][c];
    QMat M(m, QVec(m, Rational(0)));
    for (int j = 0; j < m; ++j) {
        auto coords = q_solve(basis_t, bracket(alg, x, s.basis[j]));
        if (!coords) throw std::domain_error("subspace is not ad-invariant");
        for (int i = 0; i < m; ++i) M[i][j] = (*coords)[i];
    }
    return M;
}

inline IdResult identify_impl(const LieAlgebraQ& alg);

inline IdResult identify_dim3(const LieAlgebraQ& alg) {
    Subspace der = derived_subalgebra(alg);
    if (der.dim() == 0) return IdResult::ok({"R^n", {}, 3, 0});
    if (der.dim() == 1) {
        if (is_nilpotent(alg)) return IdResult::ok({"h3", {}, 0, 0});
        return IdResult::ok({"r3_lambda", {Rational(0)}, 0, 0});
    }
    if (der.dim() == 3) return IdResult::fail("derived algebra is everything: not solvable");
    if (bracket_span(alg, der, der).dim() != 0)
        return IdResult::fail("2-dim derived algebra is not abelian");
    auto e = analyze_2x2(ad_on_subspace(alg, der));
    switch (e.kind) {
    case Eigen2::Kind::real_pair: {
        if (e.r1.is_zero() || e.r2.is_zero())
            return IdResult::fail("singular adjoint action on the derived algebra");
        Rational lam = e.r1.abs() <= e.r2.abs() ? e.r1 / e.r2 : e.r2 / e.r1;
        return IdResult::ok({"r3_lambda", {lam}, 0, 0});
    }
    case Eigen2::Kind::defective_double:
        if (e.r1.is_zero()) return IdResult::fail("nilpotent defective adjoint action");
        return IdResult::ok({"r3", {}, 0, 0});
    case Eigen2::Kind::complex_pair:
        return IdResult::ok({"r3p_lambda", {(e.r1 / e.r2).abs()}, 0, 0});
    default:
        return IdResult::fail("irrational eigenvalue data");
    }
}

inline IdResult identify_dim4(const LieAlgebraQ& alg) {
    Subspace der = derived_subalgebra(alg);
    if (der.dim() == 0) return IdResult::ok({"R^n", {}, 4, 0});
    if (der.dim() == 1) {
        if (is_nilpotent(alg)) return IdResult::ok({"h3", {}, 0, 1});
        return IdResult::ok({"r3_lambda", {Rational(0)}, 0, 1});
    }
    if (der.dim() == 2) {
        Subspace z = center(alg);
        if (z.dim() == 0) {
            Subspace u = unimodular_kernel(alg);
            if (u.dim() != 3) return IdResult::fail("trivial center with unexpected trace form");
            IdResult inner = identify_impl(subalgebra_on(alg, u));
            if (inner.status != IdStatus::identified)
                return IdResult::fail("unrecognized unimodular kernel: " + inner.message);
            if (inner.id == AlgebraId{"r3_lambda", {Rational(-1)}, 0, 0})
                return IdResult::ok({"aff_R x aff_R", {}, 0, 0});
            if (inner.id == AlgebraId{"r3p_lambda", {Rational(0)}, 0, 0})
                return IdResult::ok({"aff_C", {}, 0, 0});
            if (inner.id == AlgebraId{"h3", {}, 0, 0})
                return IdResult::ok({"d4_lambda", {Rational(1)}, 0, 0});
            return IdResult::fail("unimodular kernel " + inner.id.to_string() +
                                  " matches no model");
        }
        if (is_nilpotent(alg)) return IdResult::ok({"n4", {}, 0, 0});
        LieAlgebraQ q = quotient(alg, z);
        if (q.dim != 3) return IdResult::fail("center too large for a model algebra");
        IdResult inner = identify_impl(q);
        if (inner.status != IdStatus::identified)
            return IdResult::fail("unrecognized central quotient: " + inner.message);
        if (inner.id.family == "r3") return IdResult::ok({"r3", {}, 0, 1});
        if (inner.id.family == "r3_lambda") {
            if (inner.id.params[0].is_zero())
                return IdResult::ok({"r4_lambda", {Rational(0)}, 0, 0});
            return IdResult::ok({"r3_lambda", inner.id.params, 0, 1});
        }
        if (inner.id.family == "r3p_lambda")
            return IdResult::ok({"r3p_lambda", inner.id.params, 0, 1});
        return IdResult::fail("central quotient " + inner.id.to_string() + " matches no model");
    }
    // dim g' = 3
    LieAlgebraQ derived_alg = subalgebra_on(alg, der);
    if (bracket_span(alg, der, der).dim() == 0) {
        auto e = analyze_3x3(ad_on_subspace(alg, der));
        switch (e.kind) {
        case Eigen3::Kind::diag: {
            std::vector<std::pair<Rational, Rational>> valid;
            for (int i = 0; i < 3; ++i) {
                if (e.vals[i].is_zero()) continue;
                Rational p = e.vals[(i + 1) % 3] / e.vals[i];
                Rational q = e.vals[(i + 2) % 3] / e.vals[i];
                Rational mu = p <= q ? p : q, lam = p <= q ? q : p;
                AlgebraId cand{"r4_mu_lambda", {mu, lam}, 0, 0};
                if (!id_admissible(cand)) continue;
                bool seen = false;
                for (auto& v : valid) seen |= (v.first == mu && v.second == lam);
                if (!seen) valid.push_back({mu, lam});
            }
            if (valid.empty()) return IdResult::fail("no admissible eigenvalue normalization");
            if (valid.size() > 1)
                return IdResult::ambiguous("multiple admissible eigenvalue normalizations");
            return IdResult::ok({"r4_mu_lambda", {valid[0].first, valid[0].second}, 0, 0});
        }
        case Eigen3::Kind::j2_plus_1: {
            if (e.vals[1].is_zero()) return IdResult::fail("singular adjoint action");
            return IdResult::ok({"r4_lambda", {e.vals[0] / e.vals[1]}, 0, 0});
        }
        case Eigen3::Kind::j3:
            if (e.vals[0].is_zero()) return IdResult::fail("nilpotent adjoint action");
            return IdResult::ok({"r4", {}, 0, 0});
        case Eigen3::Kind::complex_plus_real: {
            const Rational &rho = e.vals[0], &al = e.vals[1], &be = e.vals[2];
            if (rho.is_zero()) return IdResult::fail("singular adjoint action");
            Rational mu = (rho / be).abs();
            Rational lam = rho.sign() > 0 ? al / be : -(al / be);
            return IdResult::ok({"r4p_mu_lambda", {mu, lam}, 0, 0});
        }
        default:
            return IdResult::fail("irrational eigenvalue data");
        }
    }
    // g' should be the Heisenberg algebra; quotient by its center.
    if (!is_nilpotent(derived_alg) || derived_subalgebra(derived_alg).dim() != 1)
        return IdResult::fail("3-dim derived algebra of unexpected shape");
    Subspace zc = center(derived_alg);
    std::vector<QVec> lifted;
    for (auto& w : zc.basis) {
        QVec v(alg.dim, Rational(0));
        for (int k = 0; k < der.dim(); ++k)
            for (int c = 0; c < alg.dim; ++c) v[c] += w[k] * der.basis[k][c];
        lifted.push_back(v);
    }
    Subspace zg = make_subspace(alg.dim, lifted);
    if (zg.dim() != 1) return IdResult::fail("Heisenberg center of unexpected dimension");
    IdResult inner = identify_impl(quotient(alg, zg));
    if (inner.status != IdStatus::identified)
        return IdResult::fail("unrecognized quotient: " + inner.message);
    if (inner.id.family == "r3") return IdResult::ok({"h4", {}, 0, 0});
    if (inner.id.family == "r3_lambda") {
        Rational rho = inner.id.params[0];
        if (rho == Rational(-1)) return IdResult::ok({"d4", {}, 0, 0});
        if (rho.is_zero()) return IdResult::fail("quotient ratio collides with a 2-dim case");
        return IdResult::ok({"d4_lambda", {Rational(1) / (Rational(1) + rho)}, 0, 0});
    }
    if (inner.id.family == "r3p_lambda")
        return IdResult::ok({"d4p_lambda", inner.id.params, 0, 0});
    return IdResult::fail("quotient " + inner.id.to_string() + " matches no model");
}

inline IdResult identify_impl(const LieAlgebraQ& alg) {
    if (!jacobi_ok(alg)) return IdResult::fail("structure constants violate the Jacobi identity");
    if (alg.dim < 1 || alg.dim > 4) return IdResult::fail("only dimensions 1 through 4 are handled");
    if (!is_solvable(alg)) return IdResult::fail("algebra is not solvable");
    switch (alg.dim) {
    case 1: return IdResult::ok({"R^n", {}, 1, 0});
    case 2:
        if (derived_subalgebra(alg).dim() == 0) return IdResult::ok({"R^n", {}, 2, 0});
        return IdResult::ok({"aff_R", {}, 0, 0});
    case 3: return identify_dim3(alg);
    default: return identify_dim4(alg);
    }
}

} // namespace detail

inline IdResult identify(const LieAlgebraQ& alg) { return detail::identify_impl(alg); }

inline IdResult identify(const LieAlgebra& alg, const std::map<std::string, Rational>& point) {
    return detail::identify_impl(evaluate(alg, point));
}

} // namespace sktforge
