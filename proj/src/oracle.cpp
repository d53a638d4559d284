#include "woundlab/oracle.hpp"

namespace woundlab {

long long SearchSpace::cardinality() const {
    check_prime(p);
    if (count < 1 || bound < 0) throw SpaceTooLarge("need count >= 1 and bound >= 0");
    long long card = 1;
    for (int i = 0; i < count * (bound + 1); ++i) {
        card *= p;
        if (card > 1000000) throw SpaceTooLarge("search space exceeds 10^6 tuples");
    }
    return card;
}

std::vector<std::vector<RatFunc>> enumerate_solutions(const TuplePredicate& predicate,
                                                      const SearchSpace& space) {
    space.cardinality(); // enforce the cap
    int n = space.count * (space.bound + 1);
    std::vector<int> digits(static_cast<size_t>(n), 0);
    std::vector<std::vector<RatFunc>> out;
    for (;;) {
        std::vector<RatFunc> tuple;
        for (int j = 0; j < space.count; ++j) {
            std::vector<int> dense(digits.begin() + j * (space.bound + 1),
                                   digits.begin() + (j + 1) * (space.bound + 1));
            tuple.emplace_back(MultiPoly::from_dense(space.p, "t", dense));
        }
        if (predicate(tuple)) out.push_back(std::move(tuple));
        // lexicographic successor: the last digit is least significant
        int i = n;
        while (i > 0 && ++digits[static_cast<size_t>(i - 1)] == space.p)
            digits[static_cast<size_t>(--i)] = 0;
        if (i == 0) break;
    }
    return out;
}

} // namespace woundlab
