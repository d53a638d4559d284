#include <doctest.h>

#include "woundlab/expr.hpp"
#include "woundlab/poly.hpp"
#include "woundlab/rng.hpp"

using namespace woundlab;

namespace {
RatFunc rf(const std::string& text, int p = 3) { return parse_ratfunc(text, p); }
} // namespace

TEST_CASE("field arithmetic over F_3(t)") {
    CHECK(rf("t/(t+1)") + rf("1/(t+1)") == rf("1"));
    CHECK(rf("(t+1)/t").inv() == rf("t/(t+1)"));
    CHECK(rf("t") * rf("t^2") == rf("t^3"));
    CHECK_THROWS(rf("0").inv());
}

TEST_CASE("field axioms on seeded random triples") {
    Sampler rng(11);
    for (int i = 0; i < 1000; ++i) {
        RatFunc a = rng.ratfunc(3, "t", 3, 3);
        RatFunc b = rng.ratfunc(3, "t", 3, 3);
        RatFunc c = rng.ratfunc(3, "t", 3, 3);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == RatFunc(3));
        if (!a.is_zero()) CHECK(a * a.inv() == RatFunc::constant(3, 1));
    }
}

TEST_CASE("derivatives") {
    CHECK(rf("t^3").derivative("t").is_zero());
    CHECK(rf("t^2").derivative("t") == rf("2*t"));
    CHECK(rf("1/t").derivative("t") == rf("-1/t^2"));

    // Frobenius powers are derivative constants: (f^p g)' = f^p g'
    Sampler rng(12);
    for (int i = 0; i < 200; ++i) {
        RatFunc f = rng.nonzero_ratfunc(3, "t", 3, 3);
        RatFunc g = rng.ratfunc(3, "t", 3, 3);
        RatFunc fp = f.frobenius();
        CHECK((fp * g).derivative("t") == fp * g.derivative("t"));
    }
}

TEST_CASE("p-th roots") {
    CHECK(rf("t^3+t^6").pth_root() == rf("t+t^2"));
    CHECK(rf("t+t^2").frobenius() == rf("t^3+t^6")); // the brute-force direction
    CHECK(!rf("t").pth_root().has_value());
    CHECK(rf("1").pth_root() == rf("1"));

    Sampler rng(13);
    for (int i = 0; i < 500; ++i) {
        RatFunc f = rng.ratfunc(3, "t", 3, 4);
        auto root = f.frobenius().pth_root();
        REQUIRE(root.has_value());
        CHECK(*root == f);
    }
    int rejected = 0;
    for (int i = 0; i < 500; ++i) {
        RatFunc f = rng.nonzero_ratfunc(3, "t", 3, 4);
        // force an exponent not divisible by p
        RatFunc g = f.frobenius() * RatFunc::variable(3, "t");
        if (!g.pth_root().has_value()) ++rejected;
    }
    CHECK(rejected == 500);
}

TEST_CASE("reduction and equality") {
    // univariate fractions reduce fully, denominator monic
    RatFunc f = rf("(t^2-1)/(t-1)");
    CHECK(f == rf("t+1"));
    CHECK(f.den() == MultiPoly::constant(3, 1));
    RatFunc g(MultiPoly::variable(3, "t"), MultiPoly::variable(3, "t").scaled(2));
    CHECK(g.den().leading_coeff() == 1);
    // multivariate equality cross-multiplies
    RatFunc h1(MultiPoly::variable(3, "a"), MultiPoly::variable(3, "b"));
    RatFunc h2(MultiPoly::variable(3, "a") * MultiPoly::variable(3, "a"),
               MultiPoly::variable(3, "b") * MultiPoly::variable(3, "a"));
    CHECK(h1 == h2);
}

TEST_CASE("canonical printing is graded-lex with folded signs") {
    CHECK(rf("1 - t").str() == "1 + 2*t");
    CHECK(rf("t^2 + t + 1").str() == "1 + t + t^2");
    CHECK((MultiPoly::variable(3, "t") * MultiPoly::variable(3, "a")).str() == "t*a");
    CHECK(rf("1/t").str() == "1/t");
    CHECK(rf("(1+t)/(t^2)").str() == "(1 + t)/t^2");
    // canonical variable order: t before s before a before b
    MultiPoly m(5);
    m.add_term({{"b", 1}, {"t", 1}, {"a", 2}}, 3);
    CHECK(m.str() == "3*t*a^2*b");
}

TEST_CASE("expression parser") {
    CHECK(rf("2*t^2 - t + 1") == rf("1") - rf("t") + rf("2") * rf("t^2"));
    CHECK(rf("-(t+1)^2") == -(rf("t+1") * rf("t+1")));
    CHECK(rf("4", 3) == rf("1", 3));
    CHECK_THROWS_AS(rf("t +"), ParseError);
    CHECK_THROWS_AS(rf("(t"), ParseError);
    CHECK_THROWS_AS(rf("t^(-1)"), ParseError);
}

TEST_CASE("prime guard") {
    CHECK_THROWS(MultiPoly(4));
    CHECK_THROWS(MultiPoly(1));
    CHECK_THROWS(MultiPoly(67)); // above the cap
    CHECK_NOTHROW(MultiPoly(61));
}
