#include "sktforge/rng.hpp"
#include "sktforge/scalar_poly.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

using namespace sktforge;

namespace {

ScalarPoly random_poly(Splitmix64& rng, int max_terms = 4) {
    static const std::vector<std::string> names = {"x", "y", "z"};
    ScalarPoly p(0);
    int terms = rng.next_int(1, max_terms);
    for (int t = 0; t < terms; ++t) {
        ScalarPoly m(random_rational(rng));
        for (auto& v : names)
            if (rng.next_bool()) m *= ScalarPoly::var(v, rng.next_int(1, 2));
        p += m;
    }
    return p;
}

} // namespace

TEST_CASE("polynomial parse and print round-trip") {
    for (const char* s : {"x^2 - 2*x*y + y^2", "3/4*x - 1", "-x*y*z + 7", "0", "5",
                          "x^3 + x^2 + x + 1", "2*(x + y)", "-(x - y)/2"}) {
        ScalarPoly p = ScalarPoly::parse(s);
        ScalarPoly back = ScalarPoly::parse(p.to_string());
        CHECK((p - back).is_zero());
    }
    CHECK(ScalarPoly::parse("(x+y)^2 - (x^2 + 2*x*y + y^2)").is_zero());
    CHECK(ScalarPoly::parse("x - x").is_zero());
}

TEST_CASE("polynomial ring identities on random elements") {
    Splitmix64 rng(7);
    for (int it = 0; it < 60; ++it) {
        ScalarPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a * b - b * a).is_zero());
        CHECK(((a + b) * c - (a * c + b * c)).is_zero());
        CHECK((a.pow(3) - a * a * a).is_zero());
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("evaluation agrees with full substitution") {
    Splitmix64 rng(8);
    for (int it = 0; it < 40; ++it) {
        ScalarPoly p = random_poly(rng);
        std::map<std::string, Rational> point;
        for (auto& v : p.variables()) point[v] = random_rational(rng);
        ScalarPoly sub = p.substitute_rationals(point);
        REQUIRE(sub.is_constant());
        CHECK(sub.constant_value() == p.eval(point));
    }
}

TEST_CASE("substitution is a ring homomorphism") {
    Splitmix64 rng(9);
    std::map<std::string, ScalarPoly> repl = {{"x", ScalarPoly::parse("y + 1")},
                                              {"y", ScalarPoly::parse("z^2")},
                                              {"z", ScalarPoly::parse("-1/2")}};
    for (int it = 0; it < 40; ++it) {
        ScalarPoly a = random_poly(rng), b = random_poly(rng);
        CHECK(((a * b).substitute(repl) - a.substitute(repl) * b.substitute(repl)).is_zero());
        CHECK(((a + b).substitute(repl) - (a.substitute(repl) + b.substitute(repl))).is_zero());
    }
}

TEST_CASE("degree and variable bookkeeping") {
    ScalarPoly p = ScalarPoly::parse("x^2*y - z + 4");
    CHECK(p.degree() == 3);
    CHECK(p.variables() == std::set<std::string>{"x", "y", "z"});
    CHECK(ScalarPoly(0).is_zero());
    CHECK(ScalarPoly::parse("7").is_constant());
    CHECK(ScalarPoly::parse("7").constant_value() == Rational(7));
}

TEST_CASE("square reduction rewrites even powers against a relation") {
    // r^2 -> 1 - q^2, the circle relation used by the parametrized families.
    ScalarPoly rhs = ScalarPoly::parse("1 - q^2");
    CHECK((ScalarPoly::parse("r^2*q").reduce_square("r", rhs) -
           ScalarPoly::parse("q - q^3"))
              .is_zero());
    CHECK((ScalarPoly::parse("r^3").reduce_square("r", rhs) -
           ScalarPoly::parse("r - r*q^2"))
              .is_zero());
    CHECK(ScalarPoly::parse("r^2 + q^2 - 1").reduce_square("r", rhs).is_zero());
    // Odd leftover power stays linear in the reduced variable.
    ScalarPoly reduced = ScalarPoly::parse("r^5").reduce_square("r", rhs);
    for (auto& t : reduced.terms()) {
        int e = 0;
        for (auto& [v, k] : t.first.factors)
            if (v == "r") e = k;
        CHECK(e <= 1);
    }
}

TEST_CASE("exact division by a variable") {
    ScalarPoly p = ScalarPoly::parse("2*t*x + t^2");
    CHECK((p.divexact_var("t") - ScalarPoly::parse("2*x + t")).is_zero());
    CHECK_THROWS(ScalarPoly::parse("t + 1").divexact_var("t"));
}

TEST_CASE("parser rejects malformed input") {
    CHECK_THROWS(ScalarPoly::parse("x +"));
    CHECK_THROWS(ScalarPoly::parse("(x"));
    CHECK_THROWS(ScalarPoly::parse("x ** 2"));
    CHECK_THROWS(ScalarPoly::parse(""));
}
