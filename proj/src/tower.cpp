#include "woundlab/tower.hpp"

#include <sstream>

#include "woundlab/rng.hpp"

namespace woundlab {

TowerElement::TowerElement(int level, RatFunc repr) : level_(level), repr_(std::move(repr)) {
    if (level < 0) throw TowerError("negative tower level");
    if (level > kMaxTowerLevel) throw TowerError("tower level exceeds maximum");
    if (level >= 1) {
        // levels >= 1 live in the single-variable tower over t
        for (const auto& v : repr_.num().support())
            if (v != "s") throw TowerError("tower repr at level >= 1 must be univariate in s");
        for (const auto& v : repr_.den().support())
            if (v != "s") throw TowerError("tower repr at level >= 1 must be univariate in s");
    } else {
        if (repr_.uses("s")) throw TowerError("level-0 element cannot use the root variable s");
    }
}

TowerElement TowerElement::lift(int target_level) const {
    if (target_level < level_) throw TowerError("lift cannot decrease level");
    if (target_level > kMaxTowerLevel) throw TowerError("tower level exceeds maximum");
    if (target_level == level_) return *this;
    int p = prime();
    int q = 1;
    for (int i = level_; i < target_level; ++i) q *= p;
    if (level_ == 0) {
        // towers are anchored to t; multivariate bases never lift
        for (const auto& v : repr_.num().support())
            if (v != "t") throw TowerError("cannot lift an element outside F_p(t) into the tower");
        for (const auto& v : repr_.den().support())
            if (v != "t") throw TowerError("cannot lift an element outside F_p(t) into the tower");
        return TowerElement(target_level, repr_.rename_power("t", "s", q));
    }
    return TowerElement(target_level, repr_.rename_power("s", "s", q));
}

TowerElement TowerElement::normalized() const {
    TowerElement e = *this;
    while (e.level_ >= 1) {
        // k(s^p) = k(s)^p: descend iff repr is a p-th power in F_p(s)
        auto root = e.repr_.pth_root(1);
        if (!root) break;
        int next = e.level_ - 1;
        RatFunc rep = next == 0 ? root->rename_power("s", "t", 1) : *root;
        e = TowerElement(next, rep);
    }
    return e;
}

TowerElement TowerElement::frobenius() const {
    return TowerElement(level_, repr_.frobenius(1)).normalized();
}

TowerElement TowerElement::tower_pth_root() const {
    if (level_ + 1 > kMaxTowerLevel) throw TowerError("tower level cap reached");
    // the same expression read one level deeper is the root:
    // (f(s'))^p = f(s'^p) since coefficients in F_p are Frobenius-fixed
    if (level_ == 0) return TowerElement(1, repr_.rename_power("t", "s", 1)).normalized();
    return TowerElement(level_ + 1, repr_).normalized();
}

static std::pair<RatFunc, RatFunc> at_common_level(const TowerElement& x, const TowerElement& y,
                                                   int& lvl) {
    lvl = std::max(x.level(), y.level());
    return {x.lift(lvl).repr(), y.lift(lvl).repr()};
}

TowerElement TowerElement::operator+(const TowerElement& o) const {
    int lvl;
    auto [a, b] = at_common_level(*this, o, lvl);
    return TowerElement(lvl, a + b).normalized();
}
TowerElement TowerElement::operator-(const TowerElement& o) const {
    int lvl;
    auto [a, b] = at_common_level(*this, o, lvl);
    return TowerElement(lvl, a - b).normalized();
}
TowerElement TowerElement::operator*(const TowerElement& o) const {
    int lvl;
    auto [a, b] = at_common_level(*this, o, lvl);
    return TowerElement(lvl, a * b).normalized();
}
TowerElement TowerElement::operator/(const TowerElement& o) const {
    int lvl;
    auto [a, b] = at_common_level(*this, o, lvl);
    return TowerElement(lvl, a / b).normalized();
}
TowerElement TowerElement::operator-() const { return TowerElement(level_, -repr_); }

bool TowerElement::operator==(const TowerElement& o) const {
    int lvl;
    auto [a, b] = at_common_level(*this, o, lvl);
    return a == b;
}

TowerElement TowerElement::inv() const { return TowerElement(level_, repr_.inv()); }

TowerElement TowerElement::pow(long long e) const {
    return TowerElement(level_, repr_.pow(e)).normalized();
}

std::string TowerElement::str() const {
    if (level_ == 0) return repr_.str();
    std::ostringstream os;
    os << repr_.str() << "  [s = t^(1/p^" << level_ << ")]";
    return os.str();
}

IntersectionReport intersection_property(int p, int r, int trials, int degree_bound,
                                         std::uint64_t seed) {
    if (r < 1) throw TowerError("intersection property needs r >= 1");
    IntersectionReport rep;
    Sampler rng(seed);
    for (int i = 0; i < trials; ++i) {
        RatFunc f = rng.nonzero_ratfunc(p, "s", degree_bound + 1, degree_bound);
        TowerElement y(r, f);
        TowerElement z = y;
        for (int j = 0; j < r - 1; ++j) z = z.frobenius();
        ++rep.trials;
        if (z.member(0)) {
            ++rep.hypothesis_held;
            if (!y.member(r - 1)) {
                ++rep.violations;
                if (rep.counterexample.empty()) rep.counterexample = f.str();
            }
        }
    }
    return rep;
}

} // namespace woundlab
