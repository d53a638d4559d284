#ifndef WOUNDLAB_ORACLE_HPP
#define WOUNDLAB_ORACLE_HPP

#include <functional>
#include <vector>

#include "woundlab/poly.hpp"

namespace woundlab {

struct SpaceTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Brute-force search space: tuples of polynomials in t over F_p with
/// `count` entries of degree <= `bound`, enumerated lexicographically on
/// the flattened coefficient vector (first unknown's constant term is
/// the most significant digit).
struct SearchSpace {
    int count = 1;
    int bound = 0;
    int p = 3;

    long long cardinality() const;
};

using TuplePredicate = std::function<bool(const std::vector<RatFunc>&)>;

/// Exhaustive enumeration; the exact list of satisfying tuples in
/// enumeration order. Independent of every solver in the library, so it
/// can be used as a test oracle against them.
std::vector<std::vector<RatFunc>> enumerate_solutions(const TuplePredicate& predicate,
                                                      const SearchSpace& space);

} // namespace woundlab

#endif
