#include "sktforge/families.hpp"
#include "sktforge/rng.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <stdexcept>
#include <string>

using namespace sktforge;

TEST_CASE("the twelve families are present with unique identifiers") {
    const auto& defs = skt_families();
    REQUIRE(defs.size() == 12);
    std::set<std::string> ids;
    for (auto& d : defs) ids.insert(d.id);
    CHECK(ids.size() == 12);
    CHECK_NOTHROW(family_by_id("abelian"));
    CHECK_NOTHROW(family_by_id("h3_d42"));
    CHECK_THROWS_AS(family_by_id("no_such_family"), std::invalid_argument);
}

TEST_CASE("every family verifies symbolically") {
    for (const auto& def : skt_families()) {
        FamilySymbolicCheck check = verify_family_symbolic(def);
        INFO(def.id);
        CHECK(check.jacobi_zero);
        CHECK(check.integrability_zero);
        CHECK(check.skt_zero);
        CHECK(check.ok());
    }
}

TEST_CASE("sampled family points construct, identify, and classify correctly") {
    Splitmix64 rng(71);
    for (const auto& def : skt_families()) {
        for (int it = 0; it < 20; ++it) {
            auto params = def.sample(rng);
            FamilyPointReport rep = check_family_point(def, params);
            INFO(def.id << ": " << rep.message << " claimed " << rep.claimed.to_string()
                        << " found " << rep.found.to_string());
            CHECK(rep.skt);
            CHECK(rep.identified);
            CHECK(rep.id_match);
            CHECK(rep.kahler == rep.kahler_expected);
            CHECK(rep.ok());
        }
    }
}

TEST_CASE("Kaehler sub-loci are hit exactly") {
    Splitmix64 rng(72);

    // p = 0 is the Kaehler locus of the one-parameter r_{3,0} family.
    const FamilyDef& r30 = family_by_id("oneDim_r30");
    for (int it = 0; it < 30; ++it) {
        auto params = r30.sample(rng);
        FamilyPointReport rep = check_family_point(r30, params);
        CHECK(rep.kahler == (params.at("p").is_zero()));
    }

    const FamilyDef& ck = family_by_id("complexKernel");
    for (int it = 0; it < 30; ++it) {
        auto params = ck.sample(rng);
        CHECK(check_family_point(ck, params).kahler == params.at("u1").is_zero());
    }

    const FamilyDef& aff2 = family_by_id("realKernel_affaff");
    for (int it = 0; it < 30; ++it) {
        auto params = aff2.sample(rng);
        CHECK(check_family_point(aff2, params).kahler == params.at("t").is_zero());
    }

    const FamilyDef& d42 = family_by_id("h3_d42");
    for (int it = 0; it < 30; ++it) {
        auto params = d42.sample(rng);
        bool expect = params.at("y1").is_zero() && params.at("u1").is_zero();
        CHECK(check_family_point(d42, params).kahler == expect);
    }

    const FamilyDef& fin = family_by_id("h3_final");
    for (int it = 0; it < 30; ++it) {
        auto params = fin.sample(rng);
        CHECK(check_family_point(fin, params).kahler == params.at("q").is_zero());
    }

    for (auto* never : {"oneDim_nilpotent", "threeDimAb_y3zero", "threeDimAb_general",
                        "h3_d4", "h3_d4p0"}) {
        const FamilyDef& def = family_by_id(never);
        for (int it = 0; it < 10; ++it)
            CHECK(!check_family_point(def, def.sample(rng)).kahler);
    }

    const FamilyDef& ab = family_by_id("abelian");
    for (int it = 0; it < 5; ++it)
        CHECK(check_family_point(ab, ab.sample(rng)).kahler);
}

TEST_CASE("claimed identities carry the sampled parameters") {
    const FamilyDef& gen = family_by_id("threeDimAb_general");
    std::map<std::string, Rational> params = {
        {"y1", Rational(0)}, {"y2", Rational(-3)}, {"y3", Rational(2)}};
    AlgebraId id = gen.claimed_id(params);
    CHECK(id.family == "r4p_mu_lambda");
    REQUIRE(id.params.size() == 2);
    CHECK(id.params[0] == Rational(3));      // 2 * |y2/y3|
    CHECK(id.params[1] == Rational(-3, 2));  // -|y2/y3|

    const FamilyDef& fin = family_by_id("h3_final");
    std::map<std::string, Rational> zeta_zero = {
        {"kappa", Rational(1)}, {"zeta", Rational(0)}, {"q", Rational(0)},
        {"r", Rational(1)}};
    CHECK(fin.claimed_id(zeta_zero) ==
          AlgebraId{"d4_lambda", {Rational(1, 2)}, 0, 0});
    std::map<std::string, Rational> zeta_two = {
        {"kappa", Rational(3)}, {"zeta", Rational(2)}, {"q", Rational(0)},
        {"r", Rational(1)}};
    CHECK(fin.claimed_id(zeta_two) ==
          AlgebraId{"d4p_lambda", {Rational(3, 4)}, 0, 0});
}

TEST_CASE("samplers are deterministic given the seed") {
    for (const auto& def : skt_families()) {
        Splitmix64 a(99), b(99);
        for (int it = 0; it < 5; ++it) {
            auto pa = def.sample(a);
            auto pb = def.sample(b);
            CHECK(pa == pb);
        }
    }
}

TEST_CASE("family instances sit inside the declared generic frame") {
    Splitmix64 rng(73);
    for (const auto& def : skt_families()) {
        auto params = def.sample(rng);
        HermitianQ h = family_instance(def, params);
        CHECK(h.alg.dim == 4);
        CHECK(is_integrable(h));
        CHECK(is_positive_definite(h.g));
        CHECK(jacobi_ok(h.alg));
    }
}
