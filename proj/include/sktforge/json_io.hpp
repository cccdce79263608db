#pragma once

#include "sktforge/hermitian.hpp"
#include "sktforge/lie_algebra.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace sktforge {

// Field order is part of the output contract, so everything is emitted
// through ordered_json.
using json = nlohmann::ordered_json;

namespace detail {

inline std::string scalar_string(const Rational& r) { return r.to_string(); }
inline std::string scalar_string(const ScalarPoly& p) { return p.to_string(); }

inline ScalarPoly scalar_from_json(const json& v) {
    if (v.is_string()) return ScalarPoly::parse(v.get<std::string>());
    if (v.is_number_integer())
        return ScalarPoly(Rational(v.get<long long>()));
    throw std::invalid_argument("coefficient must be a string or an integer");
}

inline Rational rational_from_json(const json& v) {
    ScalarPoly p = scalar_from_json(v);
    if (!p.is_constant())
        throw std::invalid_argument("expected a constant coefficient, got " +
                                    p.to_string());
    return p.constant_value();
}

} // namespace detail

// {"grade":k,"terms":[{"idx":[i,j,...],"coef":"<poly-string>"}]}
template <class R>
json form_to_json(const Form<R>& f) {
    json terms = json::array();
    for (auto& [mask, c] : f.coeffs) {
        json t;
        t["idx"] = indices_from_mask(mask);
        t["coef"] = detail::scalar_string(c);
        terms.push_back(std::move(t));
    }
    json out;
    out["grade"] = f.grade;
    out["terms"] = std::move(terms);
    return out;
}

// {"dim":n,"d":[[{"coef":"<poly>","i":i,"j":j},...],...],"name":"..."}
template <class R>
json algebra_to_json(const LieAlgebraT<R>& alg) {
    json d = json::array();
    for (int k = 0; k < alg.dim; ++k) {
        json entries = json::array();
        for (auto& [mask, c] : alg.d[k].coeffs) {
            auto ij = indices_from_mask(mask);
            json e;
            e["coef"] = detail::scalar_string(c);
            e["i"] = ij[0];
            e["j"] = ij[1];
            entries.push_back(std::move(e));
        }
        d.push_back(std::move(entries));
    }
    json out;
    out["dim"] = alg.dim;
    out["d"] = std::move(d);
    out["name"] = alg.name;
    return out;
}

inline LieAlgebra algebra_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("d"))
        throw std::invalid_argument("algebra JSON needs \"dim\" and \"d\"");
    int n = j.at("dim").get<int>();
    if (n < 1 || n > 8) throw std::invalid_argument("algebra dimension out of range");
    const json& d = j.at("d");
    if (!d.is_array() || (int)d.size() != n)
        throw std::invalid_argument("\"d\" must list one entry set per covector");
    LieAlgebra alg(n);
    if (j.contains("name")) alg.name = j.at("name").get<std::string>();
    for (int k = 0; k < n; ++k) {
        for (const json& e : d[k]) {
            int i = e.at("i").get<int>();
            int jj = e.at("j").get<int>();
            if (i < 1 || jj <= i || jj > n)
                throw std::invalid_argument("entry indices must satisfy 1 <= i < j <= dim");
            ScalarPoly c = detail::scalar_from_json(e.at("coef"));
            if (!c.is_zero()) alg.d[k].add(mask_from_indices({i, jj}, n), c);
        }
    }
    return alg;
}

// {"J":[[...]],"g":[[...]]}
template <class R>
json hermitian_to_json(const HermitianT<R>& h) {
    auto mat = [](const std::vector<std::vector<R>>& m) {
        json rows = json::array();
        for (auto& r : m) {
            json row = json::array();
            for (auto& v : r) row.push_back(detail::scalar_string(v));
            rows.push_back(std::move(row));
        }
        return rows;
    };
    json out;
    out["J"] = mat(h.J);
    out["g"] = mat(h.g.g);
    return out;
}

// Rational-entry Hermitian data for a fixed algebra; validated on entry.
inline HermitianQ hermitian_from_json(const json& j, const LieAlgebraQ& alg) {
    if (!j.is_object() || !j.contains("J") || !j.contains("g"))
        throw std::invalid_argument("hermitian JSON needs \"J\" and \"g\"");
    auto mat = [&](const json& rows) {
        if (!rows.is_array() || (int)rows.size() != alg.dim)
            throw std::invalid_argument("matrix must be dim x dim");
        QMat m(alg.dim, QVec(alg.dim, Rational(0)));
        for (int a = 0; a < alg.dim; ++a) {
            if (!rows[a].is_array() || (int)rows[a].size() != alg.dim)
                throw std::invalid_argument("matrix must be dim x dim");
            for (int b = 0; b < alg.dim; ++b)
                m[a][b] = detail::rational_from_json(rows[a][b]);
        }
        return m;
    };
    return make_hermitian(alg, mat(j.at("J")), MetricQ{alg.dim, mat(j.at("g"))});
}

inline json betti_to_json(const std::vector<int>& betti, bool unimodular) {
    json out;
    out["betti"] = betti;
    out["unimodular"] = unimodular;
    return out;
}

} // namespace sktforge
