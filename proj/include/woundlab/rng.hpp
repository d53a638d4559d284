#ifndef WOUNDLAB_RNG_HPP
#define WOUNDLAB_RNG_HPP

#include <cstdint>
#include <random>
#include <string>

#include "woundlab/poly.hpp"

namespace woundlab {

/// Deterministic sampler for property runs. Uniform sparse polynomials
/// with a configurable term count and degree; fixed seed, fixed stream.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : eng_(seed) {}

    int uniform(int lo, int hi) { // inclusive
        return std::uniform_int_distribution<int>(lo, hi)(eng_);
    }

    MultiPoly poly(int p, const std::string& var, int max_terms, int max_deg) {
        MultiPoly r(p);
        int nterms = uniform(1, max_terms);
        for (int i = 0; i < nterms; ++i)
            r.add_term({{var, uniform(0, max_deg)}}, uniform(0, p - 1));
        return r;
    }

    MultiPoly nonzero_poly(int p, const std::string& var, int max_terms, int max_deg) {
        for (;;) {
            MultiPoly r = poly(p, var, max_terms, max_deg);
            if (!r.is_zero()) return r;
        }
    }

    RatFunc ratfunc(int p, const std::string& var, int max_terms, int max_deg,
                    bool with_denominator = true) {
        MultiPoly n = poly(p, var, max_terms, max_deg);
        if (!with_denominator) return RatFunc(n);
        MultiPoly d = nonzero_poly(p, var, max_terms, max_deg);
        return RatFunc(n, d);
    }

    RatFunc nonzero_ratfunc(int p, const std::string& var, int max_terms, int max_deg,
                            bool with_denominator = true) {
        for (;;) {
            RatFunc r = ratfunc(p, var, max_terms, max_deg, with_denominator);
            if (!r.is_zero()) return r;
        }
    }

private:
    std::mt19937_64 eng_;
};

} // namespace woundlab

#endif
