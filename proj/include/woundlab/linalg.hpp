#ifndef WOUNDLAB_LINALG_HPP
#define WOUNDLAB_LINALG_HPP

#include <optional>
#include <vector>

#include "woundlab/poly.hpp"

namespace woundlab {

/// Rank of a matrix with polynomial entries over the fraction field,
/// by fraction-free elimination (exact zero tests, no division).
int poly_matrix_rank(std::vector<std::vector<MultiPoly>> m);

/// Basis of the right nullspace of a matrix over the fraction field.
/// Entries and results are rational functions; deterministic pivoting
/// (first nonzero) so bases are reproducible.
std::vector<std::vector<RatFunc>> ratfunc_nullspace(std::vector<std::vector<RatFunc>> m, int p);

/// Right nullspace basis of an F_p matrix (row echelon, first-nonzero pivots).
std::vector<std::vector<int>> fp_nullspace(std::vector<std::vector<int>> m, int ncols, int p);

/// Decide F_p(...)^{p^d}-linear independence of rational functions by
/// expanding in the monomial basis of k over k^{p^d} in the given base
/// variables. On dependence, also returns a witness h with
/// Sum_m (h[m] * den_m)^{p^d} * elements[m] = 0, den_m the m-th denominator.
struct IndependenceResult {
    bool independent = true;
    int rank = 0;
    std::vector<RatFunc> dependence; // empty when independent
};
IndependenceResult pth_power_independence(const std::vector<RatFunc>& elements, int d,
                                          const std::vector<std::string>& base_vars);

} // namespace woundlab

#endif
