#include "sktforge/catalog.hpp"
#include "sktforge/notation.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <string>

using namespace sktforge;

namespace {

bool same_structure(const LieAlgebra& a, const LieAlgebra& b) {
    if (a.dim != b.dim) return false;
    for (int k = 0; k < a.dim; ++k) {
        for (uint32_t m = 0; m < (1u << a.dim); ++m)
            if (!(a.d[k].coeff(m) - b.d[k].coeff(m)).is_zero()) return false;
    }
    return true;
}

} // namespace

TEST_CASE("compact notation stores signed coefficient-index pairs") {
    LieAlgebra a = parse_compact("(0,21)");
    REQUIRE(a.dim == 2);
    CHECK(a.d[0].coeffs.empty());
    // 21 means e2^e1 = -e12.
    CHECK(a.d[1].coeff(0b11u).is_constant());
    CHECK(a.d[1].coeff(0b11u).constant_value() == Rational(-1));

    LieAlgebra c = parse_compact("(0,0,31-42,41+32)");
    REQUIRE(c.dim == 4);
    CHECK(c.d[2].coeff(mask_from_indices({1, 3}, 4)).constant_value() == Rational(-1));
    CHECK(c.d[2].coeff(mask_from_indices({2, 4}, 4)).constant_value() == Rational(1));
    CHECK(c.d[3].coeff(mask_from_indices({1, 4}, 4)).constant_value() == Rational(-1));
    CHECK(c.d[3].coeff(mask_from_indices({2, 3}, 4)).constant_value() == Rational(-1));
}

TEST_CASE("parametric coefficients parse as polynomials") {
    LieAlgebra a = parse_compact("(0,21,lambda31)");
    ScalarPoly c = a.d[2].coeff(mask_from_indices({1, 3}, 3));
    CHECK((c + ScalarPoly::var("lambda")).is_zero());

    LieAlgebra d = parse_compact("(0,lambda21+31,-21+lambda31)");
    CHECK((d.d[1].coeff(0b011u) + ScalarPoly::var("lambda")).is_zero());
    CHECK((d.d[2].coeff(0b011u) - ScalarPoly(1)).is_zero());
}

TEST_CASE("print and parse are mutually inverse on the whole catalog") {
    for (const char* fam :
         {"aff_R", "h3", "r3", "r3_lambda", "r3p_lambda", "aff_R x aff_R", "n4",
          "aff_C", "r4", "r4_lambda", "r4_mu_lambda", "r4p_mu_lambda", "d4",
          "d4_lambda", "d4p_lambda", "h4"}) {
        LieAlgebra alg = catalog_symbolic(fam);
        std::string printed = print_compact(alg);
        LieAlgebra re = parse_compact(printed);
        INFO(fam << " printed as " << printed);
        CHECK(same_structure(alg, re));
        // Printing is idempotent once normalized.
        CHECK(print_compact(re) == printed);
    }
}

TEST_CASE("line-factor suffix extends the algebra by trivial directions") {
    LieAlgebra a = parse_algebra_spec("(0,0,21)xR");
    REQUIRE(a.dim == 4);
    CHECK(a.d[3].coeffs.empty());
    CHECK(a.d[2].coeff(0b011u).constant_value() == Rational(-1));

    LieAlgebra b = parse_algebra_spec("(0,21)xRxR");
    REQUIRE(b.dim == 4);
    CHECK(b.d[2].coeffs.empty());
    CHECK(b.d[3].coeffs.empty());
}

TEST_CASE("malformed compact strings are rejected") {
    for (const char* bad : {"", "(", "(0", "(0,21", "(0,21,)", "(0,99)", "(0,11)",
                            "(0,21)x", "abc", "(0,0,0,0,0,0,0,0,0,0)",
                            "(0,2)", "(0,21+)", "(0,,21)"}) {
        INFO("input: " << bad);
        CHECK_THROWS_AS(parse_algebra_spec(bad), NotationError);
    }
}

TEST_CASE("digits refer to basis covectors within the declared dimension") {
    CHECK_THROWS_AS(parse_compact("(0,31)"), NotationError);
    CHECK_THROWS_AS(parse_compact("(41,0,0)"), NotationError);
}
