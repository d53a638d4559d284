#ifndef WOUNDLAB_SEMILINEAR_HPP
#define WOUNDLAB_SEMILINEAR_HPP

#include <string>
#include <vector>

#include "woundlab/poly.hpp"

namespace woundlab {

struct SemilinearError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Frobenius-semilinear system over F_p(t): each equation is a sum of
/// terms coeff * c_j^(p^i) that must vanish. The solution set over any
/// degree bound is an F_p-vector space since Frobenius fixes F_p.
struct SemilinearSystem {
    int p = 3;
    int nunknowns = 0;
    struct Term {
        int unknown;
        int frob;
        RatFunc coeff;
    };
    std::vector<std::vector<Term>> equations;

    /// exact substitution check
    bool satisfied(const std::vector<RatFunc>& values) const;
};

enum class Completeness { CompleteByBoundProof, BoundedOnly };

struct SolutionBasis {
    int degree_bound = 0;
    Completeness note = Completeness::BoundedOnly;
    std::vector<std::vector<RatFunc>> basis; // polynomial entries, degree <= bound
    int dimension() const { return static_cast<int>(basis.size()); }
};

/// F_p-basis of polynomial solutions of degree <= D, by linearizing on
/// coefficient vectors (p-th powers permute monomials and fix F_p).
SolutionBasis kernel_bounded(const SemilinearSystem& sys, int degree_bound);

/// The Kambayashi-Miyanishi-Takeuchi system for the wound group
/// y^p = x - t x^p: single equation c_(p-2) = sum_j t^j c_j^p in p-1
/// unknowns. Requires p >= 3.
SemilinearSystem kmt_system(int p);

struct BoundProofStep {
    std::string name;
    std::string detail;
    bool ok = false;
};

struct DegreeBoundResult {
    int bound = 0;
    Completeness note = Completeness::BoundedOnly;
    std::vector<BoundProofStep> trace;
    bool proved() const;
};

/// Machine-checked instantiation of the degree-bound argument for the
/// KMT system: independence of 1..t^(p-3) over k^p, the derivative
/// identity c_(p-2)^((p-2)) = (p-2)! c_(p-2)^p, and the degree
/// comparison forcing degree 0. Returns D = 0 with CompleteByBoundProof.
DegreeBoundResult kmt_degree_bound(int p);

} // namespace woundlab

#endif
