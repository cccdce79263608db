#include "sktforge/generic_case.hpp"
#include "sktforge/membership.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <vector>

using namespace sktforge;

namespace {

// Everything the generic frame forces to vanish: closure of the structure
// table, integrability of J, and closure of the torsion form.
std::vector<ScalarPoly> computed_residuals(StructCase tag) {
    const ConditionPolys& cp = generic_condition_polys(tag);
    std::vector<ScalarPoly> out = cp.integrability;
    for (auto& p : cp.jacobi)
        if (!p.is_zero()) out.push_back(p);
    out.push_back(cp.skt);
    return out;
}

} // namespace

TEST_CASE("degree-bounded membership certificates") {
    ScalarPoly target = ScalarPoly::parse("x^2 - 1");
    std::vector<ScalarPoly> gens = {ScalarPoly::parse("x - 1")};
    MembershipCert cert = poly_linear_membership(target, gens, 2);
    REQUIRE(cert.member);
    CHECK(certificate_valid(cert, target, gens));
    // The combination must reconstruct (x + 1) * (x - 1).
    ScalarPoly rebuilt(0);
    for (auto& term : cert.combination) {
        ScalarPoly mono(term.coeff);
        for (auto& [v, e] : term.multiplier.factors) mono *= ScalarPoly::var(v, e);
        rebuilt += mono * gens[term.generator];
    }
    CHECK((rebuilt - target).is_zero());

    CHECK(!poly_linear_membership(ScalarPoly::parse("x"), {ScalarPoly::parse("x^2")}, 3)
               .member);
    // Degree bounds are honest: x^2-1 needs a degree-2 product.
    CHECK(!poly_linear_membership(target, gens, 0).member);
    CHECK(!poly_linear_membership(target, gens, 1).member);
}

TEST_CASE("certificates survive echelon collisions between generators") {
    // x and x + y share a leading monomial, so inserting the second generator
    // reduces against the first; the certificate for y must still replay.
    std::vector<ScalarPoly> gens = {ScalarPoly::parse("x"), ScalarPoly::parse("x + y")};
    ScalarPoly target = ScalarPoly::parse("y");
    MembershipCert cert = poly_linear_membership(target, gens, 1);
    REQUIRE(cert.member);
    CHECK(certificate_valid(cert, target, gens));

    // Same effect one degree up, with three overlapping quadratics.
    std::vector<ScalarPoly> quads = {ScalarPoly::parse("x^2 + x"),
                                     ScalarPoly::parse("x^2 - y"),
                                     ScalarPoly::parse("x^2 + y^2")};
    ScalarPoly t2 = ScalarPoly::parse("x - y - 2*y^2");
    MembershipCert c2 = poly_linear_membership(t2, quads, 2);
    REQUIRE(c2.member);
    CHECK(certificate_valid(c2, t2, quads));
}

TEST_CASE("membership certificates validate only for their own target") {
    ScalarPoly target = ScalarPoly::parse("y^2 - 4");
    std::vector<ScalarPoly> gens = {ScalarPoly::parse("y - 2")};
    MembershipCert cert = poly_linear_membership(target, gens, 2);
    REQUIRE(cert.member);
    CHECK(certificate_valid(cert, target, gens));
    CHECK(!certificate_valid(cert, ScalarPoly::parse("y^2"), gens));
}

TEST_CASE("condition lists have the counts fixed by the structural frames") {
    CHECK(skt_condition_list(StructCase::complex_case).size() == 11);
    CHECK(skt_condition_list(StructCase::real_case).size() == 14);
    CHECK(kahler_condition_list(StructCase::complex_case).size() == 4);
    CHECK(kahler_condition_list(StructCase::real_case).size() == 4);
    CHECK((skt_condition_list(StructCase::complex_case)[0] -
           ScalarPoly::parse("y2 - z2 - u3 + v1"))
              .is_zero());
}

TEST_CASE("computed residual sets match the recorded condition lists") {
    for (auto tag : {StructCase::complex_case, StructCase::real_case}) {
        std::vector<ScalarPoly> computed = computed_residuals(tag);
        std::vector<ScalarPoly> listed = skt_condition_list(tag);
        ListComparison cmp = compare_condition_lists(computed, listed, 3);
        INFO((tag == StructCase::complex_case ? "complex" : "real") << " frame");
        CHECK(cmp.forward_failures.empty());
        CHECK(cmp.backward_failures.empty());
        CHECK(cmp.ok());
        // Every certificate the comparison returned must be replayable.
        for (size_t i = 0; i < computed.size(); ++i)
            CHECK(certificate_valid(cmp.forward[i], computed[i], listed));
        for (size_t j = 0; j < listed.size(); ++j)
            CHECK(certificate_valid(cmp.backward[j], listed[j], computed));
    }
}

TEST_CASE("Kaehler residuals match the recorded Kaehler lists") {
    for (auto tag : {StructCase::complex_case, StructCase::real_case}) {
        std::vector<ScalarPoly> computed = kahler_residual_polys(tag);
        std::vector<ScalarPoly> listed = kahler_condition_list(tag);
        ListComparison cmp = compare_condition_lists(computed, listed, 3);
        CHECK(cmp.ok());
    }
}

TEST_CASE("a listed quadratic is reachable from the computed residuals") {
    // y2*w1 sits in the complex list; it must lie in the degree-3 span of the
    // computed residuals, with a replayable certificate.
    std::vector<ScalarPoly> computed = computed_residuals(StructCase::complex_case);
    ScalarPoly target = ScalarPoly::parse("y2*w1");
    MembershipCert cert = poly_linear_membership(target, computed, 3);
    REQUIRE(cert.member);
    CHECK(certificate_valid(cert, target, computed));
}

TEST_CASE("list comparison names the offending entries") {
    std::vector<ScalarPoly> first = {ScalarPoly::parse("x"), ScalarPoly::parse("y^3")};
    std::vector<ScalarPoly> second = {ScalarPoly::parse("x")};
    ListComparison cmp = compare_condition_lists(first, second, 2);
    CHECK(!cmp.ok());
    REQUIRE(cmp.forward_failures.size() == 1);
    CHECK(cmp.forward_failures[0] == 1); // y^3 is not spanned by {x}
    CHECK(cmp.backward_failures.empty());
}

TEST_CASE("integrability residuals of the generic frames are the two linear items") {
    for (auto tag : {StructCase::complex_case, StructCase::real_case}) {
        const ConditionPolys& cp = generic_condition_polys(tag);
        auto listed = skt_condition_list(tag);
        for (auto& p : cp.integrability) {
            if (p.is_zero()) continue;
            bool matches = (p - listed[0]).is_zero() || (p + listed[0]).is_zero() ||
                           (p - listed[1]).is_zero() || (p + listed[1]).is_zero();
            INFO("residual " << p.to_string());
            CHECK(matches);
        }
    }
}

TEST_CASE("condition polynomials are memoized") {
    const ConditionPolys& a = generic_condition_polys(StructCase::complex_case);
    const ConditionPolys& b = generic_condition_polys(StructCase::complex_case);
    CHECK(&a == &b);
    const GenericCase& g1 = generic_case(StructCase::real_case);
    const GenericCase& g2 = generic_case(StructCase::real_case);
    CHECK(&g1 == &g2);
}

TEST_CASE("Kaehler condition check agrees with the direct evaluation") {
    // kahler_condition_check throws if the two routes ever disagree; sweep a
    // grid of assignments through it for both frames.
    for (auto tag : {StructCase::complex_case, StructCase::real_case}) {
        const GenericCase& g = generic_case(tag);
        std::vector<Rational> values = {Rational(0), Rational(1), Rational(-1, 2)};
        for (auto& v1 : values) {
            for (auto& v2 : values) {
                std::map<std::string, Rational> point;
                bool flip = false;
                for (auto& var : g.vars) {
                    point[var] = flip ? v1 : v2;
                    flip = !flip;
                }
                if (tag == StructCase::real_case) point["t"] = Rational(1, 3);
                CHECK_NOTHROW(kahler_condition_check(tag, point));
            }
        }
    }
}
