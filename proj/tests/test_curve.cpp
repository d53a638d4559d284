#include <doctest.h>

#include <sstream>

#include "woundlab/curve.hpp"
#include "woundlab/expr.hpp"
#include "woundlab/rng.hpp"

using namespace woundlab;

namespace {
MultiPoly mp(const std::string& text, int p) {
    RatFunc f = parse_ratfunc(text, p);
    REQUIRE(f.is_polynomial());
    return f.num().scaled(fp_inv(f.den().constant_value(), p));
}
} // namespace

TEST_CASE("arithmetic genus") {
    CHECK(arithmetic_genus(3) == 2);
    CHECK(arithmetic_genus(5) == 3);
    CHECK(arithmetic_genus(7) == 4);
    CHECK_THROWS_AS(arithmetic_genus(2), CurveError);
}

TEST_CASE("pullback coefficients match the binomial closed form") {
    // p = 3: (-u, 1)
    auto c3 = pullback_coefficients(3);
    REQUIRE(c3.size() == 2);
    CHECK(c3[0] == TowerElement(1, parse_ratfunc("-s", 3)));
    CHECK(c3[1] == TowerElement::constant(3, 1));
    // p = 5: (u^2, 3u, 1)
    auto c5 = pullback_coefficients(5);
    REQUIRE(c5.size() == 3);
    CHECK(c5[0] == TowerElement(1, parse_ratfunc("s^2", 5)));
    CHECK(c5[1] == TowerElement(1, parse_ratfunc("3*s", 5)));
    CHECK(c5[2] == TowerElement::constant(5, 1));
    // p = 7 is validated internally against the closed form
    CHECK(pullback_coefficients(7).size() == 4);
    // the top coefficient is always 1
    for (int p : {3, 5, 7}) CHECK(pullback_coefficients(p).back() == TowerElement::constant(p, 1));
}

TEST_CASE("independence over k") {
    for (int p : {3, 5, 7}) CHECK(independence_over_k(pullback_coefficients(p)));
    // u^3 = t is already in k: dependent with 1
    std::vector<TowerElement> dep{TowerElement::constant(3, 1),
                                  TowerElement(1, parse_ratfunc("s^3", 3))};
    CHECK_FALSE(independence_over_k(dep));
    CHECK(independence_over_k({}));
}

TEST_CASE("curve jacobian criterion is empty") {
    for (int p : {3, 5, 7}) {
        CurveModel curve(p);
        auto res = jacobian_criterion({curve.defining_polynomial()}, {"x", "y"}, {"t"});
        CHECK(res.empty);
        CHECK(!res.trace.empty());
    }
    // the p=3 trace enumerates the roots of x(x-1)
    CurveModel c3(3);
    auto res = jacobian_criterion({c3.defining_polynomial()}, {"x", "y"}, {"t"});
    bool saw_enumeration = false;
    for (const auto& line : res.trace)
        if (line.find("x in {0,1}") != std::string::npos) saw_enumeration = true;
    CHECK(saw_enumeration);
}

TEST_CASE("projective surface system is empty") {
    // w^(p-1), x^p, y^p and the original x w^(p-1) + a x^p + b y^p + z^p
    int p = 3;
    MultiPoly f = mp("x*w^2 + a*x^3 + b*y^3 + z^3", p);
    auto res = jacobian_criterion({f}, {"w", "x", "y", "z"}, {"a", "b"}, true);
    CHECK(res.empty);
}

TEST_CASE("planted cusp has a singular witness") {
    // y^2 = x^3 over F_5: the cusp at the origin survives the criterion
    MultiPoly f = mp("y^2 - x^3", 5);
    auto res = jacobian_criterion({f}, {"x", "y"}, {});
    CHECK_FALSE(res.empty);
    REQUIRE(res.witness.size() == 2);
    CHECK(res.witness[0].second == "0");
    CHECK(res.witness[1].second == "0");
}

TEST_CASE("seeded singular plants yield verified witnesses") {
    // translates of the cusp: y^2 = (x - c)^3 is singular at (c, 0)
    Sampler rng(61);
    for (int i = 0; i < 20; ++i) {
        int c = rng.uniform(0, 4);
        std::ostringstream os;
        os << "y^2 - (x - " << c << ")^3";
        MultiPoly f = mp(os.str(), 5);
        auto res = jacobian_criterion({f}, {"x", "y"}, {});
        REQUIRE_FALSE(res.empty);
        // substitute the witness back into every equation and derivative
        std::vector<MultiPoly> sys{f, f.derivative("x"), f.derivative("y")};
        for (auto& eq : sys) {
            MultiPoly val = eq;
            for (const auto& [var, value] : res.witness) {
                RatFunc v = parse_ratfunc(value, 5);
                REQUIRE(v.is_polynomial());
                val = val.substitute(var, v.num());
            }
            CHECK(val.is_zero());
        }
    }
}

TEST_CASE("points at infinity") {
    // curve closure slice z = 0: y^3 + t x^3 needs t to be a cube
    MultiPoly closure = mp("y^3 - x*z^2 + t*x^3", 3);
    auto res = points_at_infinity(closure, {"x", "y", "z"}, "z", {"t"}, 2);
    CHECK(res.certified_empty);
    CHECK_FALSE(res.searched_only);

    // dim-2 slice w = 0: a x^3 + b y^3 + z^3, independence of {a, b, 1}
    MultiPoly surface = mp("x*w^2 + a*x^3 + b*y^3 + z^3", 3);
    auto res2 = points_at_infinity(surface, {"w", "x", "y", "z"}, "w", {"a", "b"}, 2);
    CHECK(res2.certified_empty);

    // a tame slice with an obvious point
    MultiPoly tame = mp("x + y + z + w^2", 3);
    auto res3 = points_at_infinity(tame, {"w", "x", "y", "z"}, "w", {}, 1);
    CHECK_FALSE(res3.certified_empty);
    CHECK_FALSE(res3.points.empty());

    // dependent diagonal slice: t^3 x^3 + y^3 has the point (1, -t)
    MultiPoly dep = mp("t^3*x^3 + y^3 + z*x^2", 3);
    auto res4 = points_at_infinity(dep, {"x", "y", "z"}, "z", {"t"}, 2);
    CHECK_FALSE(res4.certified_empty);
    REQUIRE(res4.points.size() == 2);
}

TEST_CASE("tate gap congruence") {
    for (int p : {3, 5, 7, 11, 13, 61}) {
        if (p == 2) continue;
        CHECK(tate_gap_check((p + 1) / 2, 1, p));
        CHECK(tate_gap_check(4, 4, p));
    }
    CHECK(tate_gap_check(2, 0, 5));
    CHECK_FALSE(tate_gap_check(2, 1, 7));
    CHECK_THROWS_AS(tate_gap_check(1, 2, 5), CurveError);
}

TEST_CASE("defining polynomial shape") {
    CurveModel c(3);
    CHECK(c.defining_polynomial() == mp("y^2 - x*(x-1)*(x^3-t)", 3));
    CHECK_THROWS_AS(CurveModel(2), CurveError);
}
