#include <doctest.h>

#include "woundlab/oracle.hpp"
#include "woundlab/semilinear.hpp"

using namespace woundlab;

TEST_CASE("search space cap") {
    CHECK(SearchSpace{1, 0, 3}.cardinality() == 3);
    CHECK(SearchSpace{2, 1, 3}.cardinality() == 81);
    CHECK_THROWS_AS((SearchSpace{6, 2, 7}.cardinality()), SpaceTooLarge);
    CHECK_THROWS_AS((SearchSpace{0, 0, 3}.cardinality()), SpaceTooLarge);
}

TEST_CASE("fermat predicate c^3 = c over F_3") {
    SearchSpace space{1, 0, 3};
    auto sols = enumerate_solutions(
        [](const std::vector<RatFunc>& tup) {
            return tup[0].frobenius() == tup[0];
        },
        space);
    REQUIRE(sols.size() == 3);
    // enumeration order: 0, 1, 2
    CHECK(sols[0][0].is_zero());
    CHECK(sols[1][0] == RatFunc::constant(3, 1));
    CHECK(sols[2][0] == RatFunc::constant(3, 2));
}

TEST_CASE("KMT system p=3 over degree <= 1: only the zero tuple") {
    auto sys = kmt_system(3);
    SearchSpace space{2, 1, 3};
    auto sols = enumerate_solutions(
        [&](const std::vector<RatFunc>& tup) { return sys.satisfied(tup); }, space);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0][0].is_zero());
    CHECK(sols[0][1].is_zero());
    // matches the solver
    CHECK(kernel_bounded(sys, 1).dimension() == 0);
}

TEST_CASE("principal part t x^3 + y^3: only the zero tuple up to degree 2") {
    SearchSpace space{2, 2, 3};
    auto t = RatFunc::variable(3, "t");
    auto sols = enumerate_solutions(
        [&](const std::vector<RatFunc>& tup) {
            return (t * tup[0].frobenius() + tup[1].frobenius()).is_zero();
        },
        space);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0][0].is_zero());
    CHECK(sols[0][1].is_zero());
}

TEST_CASE("deterministic lexicographic order") {
    SearchSpace space{1, 1, 3};
    auto all = enumerate_solutions([](const std::vector<RatFunc>&) { return true; }, space);
    REQUIRE(all.size() == 9);
    // first unknown coefficient vector counts up lexicographically:
    // 0, t, 2t, 1, 1+t, ...  (constant digit is most significant)
    CHECK(all[0][0].is_zero());
    CHECK(all[1][0] == RatFunc::variable(3, "t"));
    CHECK(all[3][0] == RatFunc::constant(3, 1));
}
