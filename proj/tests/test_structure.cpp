#include "support/oracles.hpp"

#include "sktforge/identify.hpp"
#include "sktforge/structure.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <vector>

using namespace sktforge;
using namespace sktforge::testing;

namespace {

// Center of the derived subalgebra, expressed in the ambient coordinates.
Subspace ambient_center_of_derived(const LieAlgebraQ& alg) {
    Subspace der = derived_subalgebra(alg);
    LieAlgebraQ sub = subalgebra_on(alg, der);
    Subspace zc = center(sub);
    std::vector<QVec> ambient;
    for (auto& row : zc.basis) {
        QVec v(alg.dim, Rational(0));
        for (int i = 0; i < (int)row.size(); ++i)
            for (int c = 0; c < alg.dim; ++c) v[c] += row[i] * der.basis[i][c];
        ambient.push_back(v);
    }
    return make_subspace(alg.dim, ambient);
}

AlgebraId must_identify(const LieAlgebraQ& alg) {
    IdResult r = identify(alg);
    INFO(r.message);
    REQUIRE(r.status == IdStatus::identified);
    return r.id;
}

} // namespace

TEST_CASE("derived and lower central series dimensions") {
    auto dims = [](const std::vector<Subspace>& chain) {
        std::vector<int> out;
        for (auto& s : chain) out.push_back(s.dim());
        return out;
    };
    LieAlgebraQ h3 = make_alg("(0,0,21)");
    CHECK(dims(derived_series(h3)) == std::vector<int>{3, 1, 0});
    CHECK(dims(lower_central_series(h3)) == std::vector<int>{3, 1, 0});
    CHECK(is_nilpotent(h3));
    CHECK(is_solvable(h3));

    LieAlgebraQ r3 = make_alg("(0,21+31,31)");
    CHECK(dims(derived_series(r3)) == std::vector<int>{3, 2, 0});
    CHECK(is_solvable(r3));
    CHECK(!is_nilpotent(r3));

    LieAlgebraQ su2r = make_alg("(-23,13,-12,0)");
    CHECK(!is_solvable(su2r));
    CHECK(!is_nilpotent(su2r));

    LieAlgebraQ n4 = make_alg("(0,0,21,31)");
    CHECK(is_nilpotent(n4));
    CHECK(dims(lower_central_series(n4)) == std::vector<int>{4, 2, 1, 0});
}

TEST_CASE("centers of standard examples") {
    CHECK(center(make_alg("(0,0,21)")).dim() == 1);
    CHECK(center(make_alg("(0,0,21)xR")).dim() == 2);
    CHECK(center(make_alg("(-23,13,-12,0)")).dim() == 1);
    CHECK(center(make_alg("(0,0,0,0)")).dim() == 4);
    CHECK(center(make_alg("(0,21)")).dim() == 0);
}

TEST_CASE("trace character and unimodularity") {
    LieAlgebraQ aff = make_alg("(0,21)");
    QVec chi = chi_covector(aff);
    CHECK(chi == QVec{Rational(1), Rational(0)});
    CHECK(!is_unimodular(aff));
    Subspace u = unimodular_kernel(aff);
    REQUIRE(u.dim() == 1);
    CHECK(u.contains(QVec{Rational(0), Rational(1)}));

    CHECK(is_unimodular(make_alg("(0,0,21)")));
    CHECK(is_unimodular(make_alg("(-23,13,-12,0)")));
    CHECK(is_unimodular(make_alg("(0,21,-31,32)")));
    CHECK(!is_unimodular(make_alg("(0,0,31-42,41+32)")));
    CHECK(!is_unimodular(make_alg("(0,21+31,31+41,41)")));
}

TEST_CASE("unimodular kernels identify as catalog algebras") {
    auto kernel_id = [](const AlgebraId& id) {
        LieAlgebraQ alg = construct_from_id(id);
        Subspace u = unimodular_kernel(alg);
        REQUIRE(u.dim() == alg.dim - 1);
        return must_identify(subalgebra_on(alg, u));
    };
    CHECK(kernel_id({"aff_R x aff_R", {}, 0, 0}) ==
          AlgebraId{"r3_lambda", {Rational(-1)}, 0, 0});
    CHECK(kernel_id({"d4_lambda", {Rational(1)}, 0, 0}) == AlgebraId{"h3", {}, 0, 0});
    CHECK(kernel_id({"aff_C", {}, 0, 0}) ==
          AlgebraId{"r3p_lambda", {Rational(0)}, 0, 0});
}

TEST_CASE("quotients by the center of the nilpotent derived subalgebra") {
    auto quotient_id = [](const AlgebraId& id) {
        LieAlgebraQ alg = construct_from_id(id);
        Subspace der = derived_subalgebra(alg);
        REQUIRE(der.dim() == 3);
        // The derived subalgebra of each of these is the Heisenberg algebra.
        CHECK(must_identify(subalgebra_on(alg, der)) == AlgebraId{"h3", {}, 0, 0});
        Subspace z = ambient_center_of_derived(alg);
        REQUIRE(z.dim() == 1);
        return must_identify(quotient(alg, z));
    };
    CHECK(quotient_id({"d4", {}, 0, 0}) == AlgebraId{"r3_lambda", {Rational(-1)}, 0, 0});
    CHECK(quotient_id({"d4_lambda", {Rational(2)}, 0, 0}) ==
          AlgebraId{"r3_lambda", {Rational(-1, 2)}, 0, 0});
    CHECK(quotient_id({"d4_lambda", {Rational(3)}, 0, 0}) ==
          AlgebraId{"r3_lambda", {Rational(-2, 3)}, 0, 0});
    CHECK(quotient_id({"d4_lambda", {Rational(1, 2)}, 0, 0}) ==
          AlgebraId{"r3_lambda", {Rational(1)}, 0, 0});
    CHECK(quotient_id({"d4p_lambda", {Rational(0)}, 0, 0}) ==
          AlgebraId{"r3p_lambda", {Rational(0)}, 0, 0});
    CHECK(quotient_id({"d4p_lambda", {Rational(1)}, 0, 0}) ==
          AlgebraId{"r3p_lambda", {Rational(1)}, 0, 0});
    CHECK(quotient_id({"d4p_lambda", {Rational(5, 2)}, 0, 0}) ==
          AlgebraId{"r3p_lambda", {Rational(5, 2)}, 0, 0});
    CHECK(quotient_id({"h4", {}, 0, 0}) == AlgebraId{"r3", {}, 0, 0});
}

TEST_CASE("ideal predicates guard the quotient construction") {
    LieAlgebraQ h3 = make_alg("(0,0,21)");
    Subspace e1_line = make_subspace(3, {{Rational(1), Rational(0), Rational(0)}});
    CHECK(!is_ideal(h3, e1_line));
    CHECK_THROWS_AS(quotient(h3, e1_line), std::domain_error);
    Subspace z = center(h3);
    CHECK(is_ideal(h3, z));
    LieAlgebraQ quo = quotient(h3, z);
    CHECK(quo.dim == 2);
    // h3 modulo its center is abelian.
    for (auto& f : quo.d) CHECK(f.coeffs.empty());
}

TEST_CASE("bracket-closed subspace extraction rejects non-subalgebras") {
    LieAlgebraQ su2r = make_alg("(-23,13,-12,0)");
    Subspace plane = make_subspace(
        4, {{Rational(1), Rational(0), Rational(0), Rational(0)},
            {Rational(0), Rational(1), Rational(0), Rational(0)}});
    CHECK_THROWS_AS(subalgebra_on(su2r, plane), std::domain_error);
}

TEST_CASE("solvable filtration refines to a full flag") {
    for (auto& spec : {"(0,21+31,31)", "(0,21,-31,32)", "(0,0,21,31)", "(0,21)"}) {
        LieAlgebraQ alg = make_alg(spec);
        SolvableFiltration f = solvable_filtration(alg);
        REQUIRE(!f.V.empty());
        CHECK(f.V.back().dim() == alg.dim);
        for (size_t i = 0; i < f.V.size(); ++i) {
            CHECK(f.V[i].dim() == (int)i + 1);
            if (i) CHECK(subspace_leq(f.V[i - 1], f.V[i]));
        }
        CHECK(f.W.back().dim() == alg.dim);
    }
    CHECK_THROWS_AS(solvable_filtration(make_alg("(-23,13,-12,0)")),
                    std::domain_error);
}
