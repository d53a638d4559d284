#ifndef WOUNDLAB_WEIL_HPP
#define WOUNDLAB_WEIL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "woundlab/ppoly.hpp"
#include "woundlab/tower.hpp"

namespace woundlab {

struct WeilError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The purely inseparable extension l = k(u), u = t^(1/p^r), with its
/// k-basis u^0 .. u^(p^r - 1).
struct InsepExtension {
    int p;
    int r;
    InsepExtension(int p, int r);
    int dim() const; // p^r
};

/// Coordinates of a tower element of level <= r in the basis u^i over k.
std::vector<RatFunc> basis_expand(const TowerElement& e, const InsepExtension& ext);
TowerElement from_coordinates(const std::vector<RatFunc>& coords, const InsepExtension& ext);

/// Class of a nonzero tower element in l^*/k^*, normalized so the
/// lowest-index nonzero basis coefficient equals 1.
class MultClass {
public:
    MultClass(const TowerElement& e, int r);
    const TowerElement& rep() const { return rep_; }
    bool is_identity() const { return rep_.level() == 0; }
    MultClass operator*(const MultClass& o) const { return MultClass(rep_ * o.rep_, r_); }

private:
    int r_;
    TowerElement rep_;
};

/// Symbolic equation bundle for one of the shipped constructions.
struct PresentationBundle {
    int p = 3;
    int r = 1;
    std::string provenance; // alpha_p | mu_p | oesterle_r | fiber_supersingular | fiber_ordinary
    std::vector<std::string> var_names;
    std::vector<AffinePEquation> equations;
    // non-additive matching equations (fiber_ordinary), fraction-cleared
    // polynomials in the bundle variables and t
    std::vector<MultiPoly> general_equations;

    bool satisfied(const std::vector<TowerElement>& pt) const;
    GroupPresentation group() const; // drops "= 1" bundles with an error
    std::vector<std::string> equation_strings() const;
};

/// Equations of R_{l/k} alpha_p obtained by expanding (sum a_i u^i)^p = 0
/// in the basis; r = 1 gives the single hypersurface
/// a_0^p + t a_1^p + ... + t^(p-1) a_(p-1)^p = 0.
PresentationBundle weil_alpha_p(int p, int r);
/// Same expansion with "= 1" on the norm equation; only r = 1 is shipped.
PresentationBundle weil_mu_p(int p, int r = 1);
/// The Oesterle quotient group U_r. r = 1:
/// x_0^p + t x_1^p + ... + t^(p-1) x_(p-1)^p = x_(p-1); general r expands
/// the k(v)-coefficient hypersurface over the k-basis of k(v).
PresentationBundle oesterle_group(int p, int r);

/// Coordinates in U_r of a multiplicative class: the logarithmic
/// derivative with respect to the level-r root variable, expanded over k.
/// Additive homomorphism with kernel the classes from level r-1;
/// anchor u = t^(1/p) maps to (0,...,0,1/t) for r = 1.
std::vector<RatFunc> log_derivative_coords(const MultClass& lambda, int p, int r);

enum class FiberKind { Supersingular, Ordinary };

/// The fiber-product groups H: supersingular r=1 degenerates to
/// weil_alpha_p(1); otherwise combined variables with the p^(r-1)-power
/// comparison equations plus each factor's defining equations.
PresentationBundle fiber_h(FiberKind kind, int p, int r);

struct TrivialityReport {
    int trials = 0;
    int hypothesis_held = 0;
    int violations = 0;
    std::string counterexample;
};

/// Rational-point surrogate for H(k_s) = 1 over F = F_p(t): samples y at
/// level r; whenever y^(p^(r-1)) lies in F the class must be trivial.
TrivialityReport h_triviality_check(FiberKind kind, int p, int r, int trials, int degree_bound,
                                    std::uint64_t seed);

} // namespace woundlab

#endif
