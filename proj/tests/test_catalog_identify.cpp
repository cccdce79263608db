#include "support/oracles.hpp"

#include "sktforge/catalog.hpp"
#include "sktforge/identify.hpp"
#include "sktforge/rng.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <vector>

using namespace sktforge;
using namespace sktforge::testing;

namespace {

void expect_round_trip(const AlgebraId& id) {
    LieAlgebraQ alg = construct_from_id(id);
    IdResult r = identify(alg);
    INFO("constructed " << id.to_string() << ": " << r.message);
    REQUIRE(r.status == IdStatus::identified);
    CHECK(r.id == id);
}

AlgebraId rand_id(const std::string& family, Splitmix64& rng) {
    auto names = catalog_param_names(family);
    for (;;) {
        AlgebraId id{family, {}, 0, 0};
        for (size_t i = 0; i < names.size(); ++i)
            id.params.push_back(random_rational(rng, 5, 4));
        if (id_admissible(id)) return id;
    }
}

} // namespace

TEST_CASE("fixed catalog entries round-trip through identification") {
    for (auto& fam : {"aff_R", "h3", "r3", "aff_R x aff_R", "n4", "aff_C", "r4",
                      "d4", "h4"})
        expect_round_trip({fam, {}, 0, 0});
    for (int n = 1; n <= 4; ++n) expect_round_trip({"R^n", {}, n, 0});
    expect_round_trip({"h3", {}, 0, 1});
    expect_round_trip({"r3", {}, 0, 1});
}

TEST_CASE("aff_R stacked with lines normalizes to the r3_lambda(0) spelling") {
    // aff_R x R and r3_lambda(0) are the same algebra; identification prefers
    // the three-dimensional family name.
    IdResult one = identify(construct_from_id({"aff_R", {}, 0, 1}));
    REQUIRE(one.status == IdStatus::identified);
    CHECK(one.id == AlgebraId{"r3_lambda", {Rational(0)}, 0, 0});
    IdResult two = identify(construct_from_id({"aff_R", {}, 0, 2}));
    REQUIRE(two.status == IdStatus::identified);
    CHECK(two.id == AlgebraId{"r3_lambda", {Rational(0)}, 0, 1});
}

TEST_CASE("pinned parametric entries round-trip through identification") {
    expect_round_trip({"r3_lambda", {Rational(-1)}, 0, 0});
    expect_round_trip({"r3_lambda", {Rational(0)}, 0, 0});
    expect_round_trip({"r3_lambda", {Rational(1)}, 0, 0});
    expect_round_trip({"r3_lambda", {Rational(-1, 2)}, 0, 1});
    expect_round_trip({"r3p_lambda", {Rational(0)}, 0, 0});
    expect_round_trip({"r3p_lambda", {Rational(2, 7)}, 0, 1});
    expect_round_trip({"r3p_lambda", {Rational(5)}, 0, 0});
    expect_round_trip({"r4_lambda", {Rational(-1, 2)}, 0, 0});
    expect_round_trip({"r4_lambda", {Rational(1)}, 0, 0});
    expect_round_trip({"r4_lambda", {Rational(0)}, 0, 0});
    expect_round_trip({"r4_mu_lambda", {Rational(-3, 4), Rational(-1, 4)}, 0, 0});
    expect_round_trip({"r4_mu_lambda", {Rational(-1, 2), Rational(-1, 2)}, 0, 0});
    expect_round_trip({"r4_mu_lambda", {Rational(1, 3), Rational(1, 3)}, 0, 0});
    expect_round_trip({"r4_mu_lambda", {Rational(-1, 2), Rational(1)}, 0, 0});
    expect_round_trip({"r4_mu_lambda", {Rational(-1), Rational(-1, 2)}, 0, 0});
    expect_round_trip({"r4p_mu_lambda", {Rational(1), Rational(0)}, 0, 0});
    expect_round_trip({"r4p_mu_lambda", {Rational(2), Rational(-1)}, 0, 0});
    expect_round_trip({"r4p_mu_lambda", {Rational(1, 2), Rational(1, 4)}, 0, 0});
    expect_round_trip({"d4_lambda", {Rational(1, 2)}, 0, 0});
    expect_round_trip({"d4_lambda", {Rational(1)}, 0, 0});
    expect_round_trip({"d4_lambda", {Rational(2)}, 0, 0});
    expect_round_trip({"d4p_lambda", {Rational(0)}, 0, 0});
    expect_round_trip({"d4p_lambda", {Rational(1, 4)}, 0, 0});
    expect_round_trip({"d4p_lambda", {Rational(3)}, 0, 0});
}

TEST_CASE("random admissible parameters round-trip through identification") {
    Splitmix64 rng(31);
    for (auto& fam : {"r3_lambda", "r3p_lambda", "r4_lambda", "r4_mu_lambda",
                      "r4p_mu_lambda", "d4_lambda", "d4p_lambda"})
        for (int it = 0; it < 25; ++it) expect_round_trip(rand_id(fam, rng));
}

TEST_CASE("identification normalizes out-of-range table parameters") {
    // (0,21,lambda31) with |lambda| > 1 is isomorphic to the 1/lambda model.
    LieAlgebraQ stretched =
        evaluate(catalog_symbolic("r3_lambda"), {{"lambda", Rational(2)}});
    IdResult r = identify(stretched);
    REQUIRE(r.status == IdStatus::identified);
    CHECK(r.id == AlgebraId{"r3_lambda", {Rational(1, 2)}, 0, 0});

    LieAlgebraQ negative =
        evaluate(catalog_symbolic("r3_lambda"), {{"lambda", Rational(-3)}});
    r = identify(negative);
    REQUIRE(r.status == IdStatus::identified);
    CHECK(r.id == AlgebraId{"r3_lambda", {Rational(-1, 3)}, 0, 0});
}

TEST_CASE("identification is invariant under rational basis changes") {
    Splitmix64 rng(32);
    std::vector<AlgebraId> targets = {
        {"h3", {}, 0, 0},
        {"r3_lambda", {Rational(-1, 2)}, 0, 0},
        {"d4", {}, 0, 0},
        {"aff_C", {}, 0, 0},
        {"n4", {}, 0, 0},
        {"r4", {}, 0, 0},
        {"d4p_lambda", {Rational(2)}, 0, 0},
    };
    for (auto& id : targets) {
        LieAlgebraQ alg = construct_from_id(id);
        for (int it = 0; it < 3; ++it) {
            int n = alg.dim;
            // Random unit-determinant triangular-times-permutation-free change.
            QMat P(n, QVec(n, Rational(0)));
            for (int i = 0; i < n; ++i) {
                P[i][i] = Rational(1);
                for (int j = i + 1; j < n; ++j) P[i][j] = random_rational(rng, 2, 2);
            }
            LieAlgebraQ moved = conjugate_algebra(alg, P);
            IdResult r = identify(moved);
            INFO(id.to_string() << " after basis change: " << r.message);
            REQUIRE(r.status == IdStatus::identified);
            CHECK(r.id == id);
        }
    }
}

TEST_CASE("admissibility rejects out-of-table parameters") {
    CHECK(!id_admissible({"r3_lambda", {Rational(2)}, 0, 0}));
    CHECK(!id_admissible({"r3p_lambda", {Rational(-1)}, 0, 0}));
    CHECK(!id_admissible({"r4_mu_lambda", {Rational(0), Rational(1)}, 0, 0}));
    CHECK(!id_admissible({"r4_mu_lambda", {Rational(1), Rational(1, 2)}, 0, 0}));
    CHECK(!id_admissible({"r4_mu_lambda", {Rational(-1), Rational(1, 2)}, 0, 0}));
    CHECK(!id_admissible({"r4p_mu_lambda", {Rational(-1), Rational(0)}, 0, 0}));
    CHECK(!id_admissible({"d4_lambda", {Rational(0)}, 0, 0}));
    CHECK(!id_admissible({"d4p_lambda", {Rational(-1)}, 0, 0}));
    CHECK(!id_admissible({"h3", {Rational(1)}, 0, 0}));
    CHECK_THROWS_AS(construct_from_id({"r3_lambda", {Rational(2)}, 0, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(construct_from_id({"nope", {}, 0, 0}), std::invalid_argument);
}

TEST_CASE("identification reports failure modes rather than guessing") {
    // Not in the table: a five-dimensional abelian-by-line stack is fine, but
    // the rotation algebra never appears among the solvable families.
    IdResult r = identify(make_alg("(-23,13,-12,0)"));
    CHECK(r.status != IdStatus::identified);
    CHECK(!r.message.empty());
}

TEST_CASE("identity strings are stable") {
    CHECK(AlgebraId{"r3_lambda", {Rational(-1, 2)}, 0, 1}.to_string() ==
          "R x r3_lambda(-1/2)");
    CHECK(AlgebraId{"R^n", {}, 3, 0}.to_string() == "R^3");
    CHECK(AlgebraId{"r4_mu_lambda", {Rational(1, 3), Rational(1, 2)}, 0, 0}
              .to_string() == "r4_mu_lambda(1/3,1/2)");
}
