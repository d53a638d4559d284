#ifndef WOUNDLAB_PPOLY_HPP
#define WOUNDLAB_PPOLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "woundlab/linalg.hpp"
#include "woundlab/rng.hpp"
#include "woundlab/tower.hpp"

namespace woundlab {

struct PPolyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Additive polynomial Sum a_{j,i} x_j^(p^i) with coefficients in the
/// tower (level 0 covers F_p(t) and F_p(a,b)). Evaluation is an additive
/// map (G_a)^n -> G_a.
class PPolynomial {
public:
    PPolynomial(int p, int nvars) : p_(p), nvars_(nvars) { check_prime(p); }

    int prime() const { return p_; }
    int nvars() const { return nvars_; }
    const std::map<std::pair<int, int>, TowerElement>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    void add_term(int var, int frob, const TowerElement& coeff);
    void add_term(int var, int frob, const RatFunc& coeff) {
        add_term(var, frob, TowerElement::base(coeff));
    }

    TowerElement evaluate(const std::vector<TowerElement>& pt) const;
    /// terms with Frobenius power 0
    PPolynomial degree1_part() const;
    /// per-variable top Frobenius term (imported convention)
    PPolynomial principal_part() const;

    bool uses_var(int j) const;
    /// Frobenius powers at which variable j occurs
    std::vector<int> frob_powers(int j) const;

    PPolynomial operator+(const PPolynomial& o) const;
    PPolynomial operator-() const;

    std::string str(const std::vector<std::string>& names) const;

private:
    int p_, nvars_;
    std::map<std::pair<int, int>, TowerElement> terms_;
};

/// p-polynomial equation with an affine right-hand side: "= 0" for
/// subgroup equations, "= 1" for mu_p-type norm equations, "= x_j" when
/// the linear term is displayed on the right (Oesterle presentations).
struct AffinePEquation {
    enum class Rhs { Zero, One, Var };
    PPolynomial lhs;
    Rhs rhs = Rhs::Zero;
    int rhs_var = -1;

    /// lhs - rhs as a single p-polynomial; throws for "= 1"
    PPolynomial homogeneous() const;
    bool satisfied(const std::vector<TowerElement>& pt) const;
    std::string str(const std::vector<std::string>& names) const;
};

/// Subgroup of (G_a)^n cut out by p-polynomial equations.
struct GroupPresentation {
    int p = 3;
    std::vector<std::string> var_names;
    std::vector<PPolynomial> equations; // all "= 0"

    int nvars() const { return static_cast<int>(var_names.size()); }
    bool contains(const std::vector<TowerElement>& pt) const;
};

/// Sample a point of G: prefer a designated variable occurring at a
/// single Frobenius power in a single equation (solved linearly or by
/// tower radicals); resample up to a retry cap, then fail loudly.
std::vector<TowerElement> random_point(const GroupPresentation& g, int degree_bound, Sampler& rng);

struct WoundVerdict {
    enum class Kind { WoundCertified, NotWound, UnknownAtBound };
    Kind kind = Kind::UnknownAtBound;
    std::string certificate;       // trace of the decision
    std::vector<RatFunc> witness;  // NotWound: nonzero vector annihilating the principal part
};

/// Build a hypersurface presentation {expr = 0} from an expression in
/// x0..xN with coefficients in the base variables (t, a, b). Every
/// monomial must be coeff * x_j^(p^i). `nvars` may extend the ambient
/// dimension past the highest index used (0 keeps the inferred count).
GroupPresentation hypersurface_from_expr(const std::string& text, int p, int nvars = 0);

/// Woundness test for hypersurface presentations. When all principal
/// terms share one Frobenius power d, decides exactly via p^d-power
/// independence of the coefficients; otherwise searches coefficient
/// degrees <= bound for a nontrivial principal-part zero.
WoundVerdict wound_test(const GroupPresentation& g, int bound);

} // namespace woundlab

#endif
