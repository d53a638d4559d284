#ifndef WOUNDLAB_EXPR_HPP
#define WOUNDLAB_EXPR_HPP

#include <string>

#include "woundlab/poly.hpp"

namespace woundlab {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parse an expression in the shared grammar: integer coefficients mod p,
/// variables t, s, a, b, x0..xN (any lowercase identifier), operators
/// + - * / ^ and parentheses. `^` takes a nonnegative integer exponent.
RatFunc parse_ratfunc(const std::string& text, int p);

} // namespace woundlab

#endif
