#ifndef WOUNDLAB_TOWER_HPP
#define WOUNDLAB_TOWER_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "woundlab/poly.hpp"

namespace woundlab {

constexpr int kMaxTowerLevel = 8;

struct TowerError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Element of the purely inseparable tower k = F_p(t) < k(t^{1/p}) < ...
/// At level r >= 1 the representation is a rational function of the root
/// variable s with s = t^{1/p^r}; at level 0 it is a rational function
/// of t (or of other base variables, for elements that never enter the
/// tower). Values are immutable; `normalized()` returns the minimal level.
class TowerElement {
public:
    TowerElement(int level, RatFunc repr);
    static TowerElement base(RatFunc f) { return TowerElement(0, std::move(f)); }
    static TowerElement constant(int p, long long c) {
        return TowerElement(0, RatFunc::constant(p, c));
    }

    int level() const { return level_; }
    const RatFunc& repr() const { return repr_; }
    int prime() const { return repr_.prime(); }
    bool is_zero() const { return repr_.is_zero(); }

    /// Same element re-expressed at a higher level r' (s -> s^(p^(r'-r))).
    TowerElement lift(int target_level) const;
    /// Minimal-level form: strips p-th-power structure from the root variable.
    TowerElement normalized() const;
    /// True iff the element lies in k(t^{1/p^j}).
    bool member(int j) const { return normalized().level() <= j; }

    /// e^p, normalized.
    TowerElement frobenius() const;
    /// The unique p-th root, one level up, normalized.
    TowerElement tower_pth_root() const;

    TowerElement operator+(const TowerElement& o) const;
    TowerElement operator-(const TowerElement& o) const;
    TowerElement operator*(const TowerElement& o) const;
    TowerElement operator/(const TowerElement& o) const;
    TowerElement operator-() const;
    bool operator==(const TowerElement& o) const;
    bool operator!=(const TowerElement& o) const { return !(*this == o); }

    TowerElement inv() const;
    TowerElement pow(long long e) const;

    std::string str() const;

private:
    int level_;
    RatFunc repr_;
};

struct IntersectionReport {
    int trials = 0;
    int hypothesis_held = 0; // samples with y^(p^(r-1)) in F
    int violations = 0;
    std::string counterexample; // empty when none
};

/// Executable form of the field-intersection lemma over F = F_p(t):
/// for random y in k(t^{1/p^r}) of bounded degree, y^(p^(r-1)) in F
/// implies y in k(t^{1/p^(r-1)}).
IntersectionReport intersection_property(int p, int r, int trials, int degree_bound,
                                         std::uint64_t seed);

} // namespace woundlab

#endif
