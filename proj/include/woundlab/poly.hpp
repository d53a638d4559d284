#ifndef WOUNDLAB_POLY_HPP
#define WOUNDLAB_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "woundlab/fp.hpp"

namespace woundlab {

using Exps = std::vector<int>;

// Canonical variable order used for merging and graded-lex printing:
// t < s < a < b < everything else (alpha prefix, then numeric suffix).
int var_rank(const std::string& v);
bool var_less(const std::string& u, const std::string& v);

/// Sparse multivariate polynomial over F_p. Variables are kept sorted in
/// the canonical order; exponent vectors are aligned with `vars`.
/// No zero coefficients are stored.
class MultiPoly {
public:
    explicit MultiPoly(int p) : p_(p) { check_prime(p); }
    static MultiPoly constant(int p, long long c);
    static MultiPoly variable(int p, const std::string& name, int exp = 1);

    int prime() const { return p_; }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Exps, int>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // constant term as F_p residue (0 if absent)
    int constant_value() const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly scaled(int c) const;
    MultiPoly pow(long long e) const;
    MultiPoly derivative(const std::string& var) const;

    // degree in one variable; -1 for the zero polynomial
    int degree(const std::string& var) const;
    int total_degree() const;

    bool uses(const std::string& var) const;
    // variables actually occurring with positive exponent
    std::vector<std::string> support() const;

    // true when every exponent of every variable is divisible by d
    bool exponents_divisible(int d) const;
    // divide all exponents by d (caller checked divisibility);
    // in characteristic p with d = p^k this is the p^k-th root
    MultiPoly exponent_quotient(int d) const;
    // multiply all exponents by d: Frobenius power when d = p^k
    MultiPoly exponent_scale(int d) const;

    // replace `var` by `repl` (polynomial substitution)
    MultiPoly substitute(const std::string& var, const MultiPoly& repl) const;
    // replace `var`^e by `newvar`^(e*k); used for tower level shifts
    MultiPoly rename_power(const std::string& var, const std::string& newvar, int k) const;

    // leading coefficient under graded lex (0 for zero poly)
    int leading_coeff() const;

    void add_term(const std::vector<std::pair<std::string, int>>& monomial, long long coeff);

    std::string str() const;

    // dense coefficient list (constant first) when univariate in `var`
    // (or constant); nullopt otherwise
    std::optional<std::vector<int>> dense_univariate(const std::string& var) const;
    static MultiPoly from_dense(int p, const std::string& var, const std::vector<int>& coeffs);

private:
    friend class RatFunc;
    void insert(const Exps& e, long long c);
    void ensure_var(const std::string& name); // extends vars_, realigns terms
    static void align(MultiPoly& a, MultiPoly& b);

    int p_;
    std::vector<std::string> vars_;
    std::map<Exps, int> terms_;
};

/// Reduced fraction of MultiPoly. Univariate fractions are fully reduced
/// (gcd 1, monic denominator); multivariate denominators are only
/// normalized to leading coefficient 1, and equality cross-multiplies.
class RatFunc {
public:
    explicit RatFunc(int p) : num_(MultiPoly(p)), den_(MultiPoly::constant(p, 1)) {}
    RatFunc(MultiPoly num, MultiPoly den);
    explicit RatFunc(MultiPoly num);
    static RatFunc constant(int p, long long c);
    static RatFunc variable(int p, const std::string& name, int exp = 1);

    int prime() const { return num_.prime(); }
    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc operator-() const;
    bool operator==(const RatFunc& o) const;
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc inv() const;
    RatFunc pow(long long e) const;
    RatFunc derivative(const std::string& var) const;

    // p^k-th power via exponent scaling (coefficients are Frobenius-fixed)
    RatFunc frobenius(int k = 1) const;
    // g with g^(p^k) = *this, when it exists
    std::optional<RatFunc> pth_root(int k = 1) const;

    bool uses(const std::string& var) const { return num_.uses(var) || den_.uses(var); }
    // substitute a rational function for a variable
    RatFunc substitute(const std::string& var, const RatFunc& repl) const;
    RatFunc rename_power(const std::string& var, const std::string& newvar, int k) const;

    std::string str() const;

private:
    void reduce();
    MultiPoly num_, den_;
};

// univariate helpers over F_p (dense, constant term first)
std::vector<int> dense_trim(std::vector<int> v);
std::vector<int> dense_mul(const std::vector<int>& a, const std::vector<int>& b, int p);
std::vector<int> dense_mod(std::vector<int> a, const std::vector<int>& b, int p);
std::vector<int> dense_gcd(std::vector<int> a, std::vector<int> b, int p);
std::vector<int> dense_div(const std::vector<int>& a, const std::vector<int>& b, int p);

} // namespace woundlab

#endif
