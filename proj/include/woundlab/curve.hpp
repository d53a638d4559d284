#ifndef WOUNDLAB_CURVE_HPP
#define WOUNDLAB_CURVE_HPP

#include <optional>
#include <string>
#include <vector>

#include "woundlab/linalg.hpp"
#include "woundlab/tower.hpp"

namespace woundlab {

struct CurveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The hyperelliptic model y^2 = x(x-1)(x^p - t) over F_p(t), p odd.
struct CurveModel {
    int p;
    explicit CurveModel(int p);
    /// y^2 - x(x-1)(x^p - t) as a polynomial in x, y, t
    MultiPoly defining_polynomial() const;
};

/// (p+1)/2, the arithmetic genus of the regular compactification.
int arithmetic_genus(int p);

/// Coefficients of (x-u)^((p-1)/2) * dx/y in the basis x^i dx/y, by
/// direct expansion; checked against the closed form
/// binom((p-1)/2, i) (-u)^((p-1)/2 - i). Entries live at tower level 1.
std::vector<TowerElement> pullback_coefficients(int p);

/// k-linear independence of tower elements via expansion over the basis
/// of k(u)/k and exact rank (computed by elimination and, as a cross
/// check, by minor expansion).
bool independence_over_k(const std::vector<TowerElement>& coeffs);

struct EmptinessResult {
    bool empty = false;
    std::vector<std::string> trace;
    // witness as var -> value strings when nonempty
    std::vector<std::pair<std::string, std::string>> witness;
};

/// Decide emptiness of a polynomial system by factor case-splitting over
/// F_p roots and p-th-power membership certificates. `parameter_vars`
/// are transcendentals (t, a, b): a nonzero function of them is a
/// contradiction. In projective mode the all-zero point is discarded.
EmptinessResult solve_system(std::vector<MultiPoly> equations, std::vector<std::string> coord_vars,
                             std::vector<std::string> parameter_vars, bool projective);

/// Regularity via the Jacobian criterion: appends all partial
/// derivatives (including with respect to the parameters) and decides
/// emptiness of the combined system.
EmptinessResult jacobian_criterion(const std::vector<MultiPoly>& equations,
                                   const std::vector<std::string>& coord_vars,
                                   const std::vector<std::string>& parameter_vars,
                                   bool projective = false);

struct InfinityResult {
    bool certified_empty = false;
    bool searched_only = false; // "empty up to height bound", not a proof
    std::vector<std::string> trace;
    std::vector<std::pair<std::string, std::string>> points;
};

/// k-points on the slice {slice_var = 0} of a projective hypersurface.
/// Diagonal p-power slices are decided exactly by p-power independence;
/// anything else is searched up to the height bound.
InfinityResult points_at_infinity(const MultiPoly& closure, const std::vector<std::string>& coord_vars,
                                  const std::string& slice_var,
                                  const std::vector<std::string>& parameter_vars, int height_bound);

/// Tate's genus-gap congruence: arithmetic minus geometric genus is a
/// multiple of (p-1)/2.
bool tate_gap_check(int g_arith, int g_geom, int p);

} // namespace woundlab

#endif
