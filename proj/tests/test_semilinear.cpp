#include <doctest.h>

#include "woundlab/expr.hpp"
#include "woundlab/linalg.hpp"
#include "woundlab/oracle.hpp"
#include "woundlab/semilinear.hpp"

using namespace woundlab;

TEST_CASE("kmt system shape") {
    auto s3 = kmt_system(3); // c1 - c0^3 - t c1^3 = 0
    CHECK(s3.nunknowns == 2);
    REQUIRE(s3.equations.size() == 1);
    CHECK(s3.satisfied({RatFunc(3), RatFunc(3)}));
    // c = (1, 1) misses: 1 - 1 - t != 0
    CHECK_FALSE(s3.satisfied({RatFunc::constant(3, 1), RatFunc::constant(3, 1)}));

    auto s5 = kmt_system(5); // c3 - c0^5 - t c1^5 - t^2 c2^5 - t^3 c3^5 = 0
    CHECK(s5.nunknowns == 4);
    CHECK(s5.satisfied({RatFunc(5), RatFunc(5), RatFunc(5), RatFunc(5)}));
    CHECK_THROWS_AS(kmt_system(2), SemilinearError);
}

TEST_CASE("kernel of c0^p - c0") {
    SemilinearSystem sys;
    sys.p = 3;
    sys.nunknowns = 1;
    sys.equations.push_back({{0, 1, RatFunc::constant(3, 1)}, {0, 0, RatFunc::constant(3, -1)}});
    auto basis = kernel_bounded(sys, 2);
    REQUIRE(basis.dimension() == 1);
    CHECK(basis.basis[0][0] == RatFunc::constant(3, 1));

    // enumeration over all 27 coefficient tuples agrees: solutions = F_3
    SearchSpace space{1, 2, 3};
    auto sols = enumerate_solutions(
        [&](const std::vector<RatFunc>& tup) { return sys.satisfied(tup); }, space);
    CHECK(sols.size() == 3);
}

TEST_CASE("empty system has a full kernel") {
    SemilinearSystem sys;
    sys.p = 3;
    sys.nunknowns = 1;
    auto basis = kernel_bounded(sys, 0);
    CHECK(basis.dimension() == 1);
}

TEST_CASE("KMT kernel is zero for all bounded degrees") {
    for (int p : {3, 5, 7}) {
        auto sys = kmt_system(p);
        int prev = 0;
        for (int d : {0, 1, 2, 5, 10}) {
            auto basis = kernel_bounded(sys, d);
            CHECK(basis.dimension() == 0);
            CHECK(basis.dimension() >= prev); // monotone in the bound
            prev = basis.dimension();
        }
    }
}

TEST_CASE("KMT degree bound proof trace") {
    for (int p : {3, 5, 7}) {
        auto res = kmt_degree_bound(p);
        CHECK(res.bound == 0);
        CHECK(res.proved());
        CHECK(res.note == Completeness::CompleteByBoundProof);
        REQUIRE(res.trace.size() == 3);
        CHECK(res.trace[0].name == "independence");
        CHECK(res.trace[1].name == "derivative_identity");
        CHECK(res.trace[2].name == "degree_comparison");
    }
}

TEST_CASE("solver agrees with enumeration on small systems") {
    // a two-unknown coupled system: c0^3 = c1, c1^3 = 0
    SemilinearSystem sys;
    sys.p = 3;
    sys.nunknowns = 2;
    sys.equations.push_back({{0, 1, RatFunc::constant(3, 1)}, {1, 0, RatFunc::constant(3, -1)}});
    sys.equations.push_back({{1, 1, RatFunc::constant(3, 1)}});
    auto basis = kernel_bounded(sys, 1);
    SearchSpace space{2, 1, 3};
    auto sols = enumerate_solutions(
        [&](const std::vector<RatFunc>& tup) { return sys.satisfied(tup); }, space);
    long long expect = 1;
    for (int i = 0; i < basis.dimension(); ++i) expect *= 3;
    CHECK(static_cast<long long>(sols.size()) == expect);
    for (const auto& v : basis.basis) CHECK(sys.satisfied(v));
}

TEST_CASE("p-th power independence") {
    auto one = RatFunc::constant(3, 1);
    auto t = RatFunc::variable(3, "t");
    auto t2 = RatFunc::variable(3, "t", 2);
    auto t3 = RatFunc::variable(3, "t", 3);
    CHECK(pth_power_independence({one, t, t2}, 1, {"t"}).independent);
    CHECK_FALSE(pth_power_independence({one, t3}, 1, {"t"}).independent);
    CHECK(pth_power_independence({t, t + t3}, 1, {"t"}).independent);
    // a nonzero singleton is always independent: c^p * f = 0 forces c = 0
    CHECK(pth_power_independence({t3}, 1, {"t"}).independent);
    CHECK(pth_power_independence({t}, 1, {"t"}).independent);
    // dependence witnesses re-verify
    auto res = pth_power_independence({one, t3}, 1, {"t"});
    REQUIRE(res.dependence.size() == 2);
    RatFunc acc(3);
    for (size_t i = 0; i < 2; ++i)
        acc = acc + res.dependence[i].frobenius() * std::vector<RatFunc>{one, t3}[i];
    CHECK(acc.is_zero());
    bool nonzero = !res.dependence[0].is_zero() || !res.dependence[1].is_zero();
    CHECK(nonzero);
}
