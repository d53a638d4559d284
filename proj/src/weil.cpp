#include "woundlab/weil.hpp"

#include <algorithm>
#include <sstream>

#include "woundlab/rng.hpp"

namespace woundlab {

InsepExtension::InsepExtension(int p, int r_) : p(p), r(r_) {
    check_prime(p);
    if (r < 1 || r > kMaxTowerLevel) throw WeilError("extension level out of range");
}

int InsepExtension::dim() const {
    int q = 1;
    for (int i = 0; i < r; ++i) q *= p;
    return q;
}

std::vector<RatFunc> basis_expand(const TowerElement& e, const InsepExtension& ext) {
    if (e.level() > ext.r) throw WeilError("element level exceeds extension level");
    int p = ext.p;
    int q = ext.dim();
    TowerElement lifted = e.lift(ext.r);
    const MultiPoly& n = lifted.repr().num();
    const MultiPoly& d = lifted.repr().den();
    // 1/d = d^(q-1) / d^q and d^q = d with s^q read as t
    MultiPoly big = n * d.pow(q - 1);
    MultiPoly den_t = d.rename_power("s", "t", 1); // (sum c s^e)^q = sum c t^e
    std::vector<MultiPoly> coord_num(static_cast<size_t>(q), MultiPoly(p));
    auto dense = big.dense_univariate("s");
    if (!dense) throw WeilError("tower element is not univariate in the root variable");
    for (size_t ee = 0; ee < dense->size(); ++ee) {
        if ((*dense)[ee] == 0) continue;
        int i = static_cast<int>(ee % static_cast<size_t>(q));
        int tpow = static_cast<int>(ee / static_cast<size_t>(q));
        MultiPoly term(p);
        term.add_term({{"t", tpow}}, (*dense)[ee]);
        coord_num[static_cast<size_t>(i)] = coord_num[static_cast<size_t>(i)] + term;
    }
    std::vector<RatFunc> out;
    out.reserve(static_cast<size_t>(q));
    for (int i = 0; i < q; ++i)
        out.emplace_back(coord_num[static_cast<size_t>(i)], den_t);
    return out;
}

TowerElement from_coordinates(const std::vector<RatFunc>& coords, const InsepExtension& ext) {
    int p = ext.p;
    int q = ext.dim();
    if (static_cast<int>(coords.size()) != q) throw WeilError("coordinate count mismatch");
    RatFunc acc(p);
    for (int i = 0; i < q; ++i) {
        RatFunc ci = coords[static_cast<size_t>(i)].rename_power("t", "s", q);
        acc = acc + ci * RatFunc::variable(p, "s", i == 0 ? 0 : i);
    }
    return TowerElement(ext.r, acc).normalized();
}

MultClass::MultClass(const TowerElement& e, int r) : r_(r) , rep_(TowerElement::constant(e.prime(), 1)) {
    if (e.is_zero()) throw WeilError("zero element has no multiplicative class");
    TowerElement norm = e.normalized();
    if (norm.level() > r) throw WeilError("element level exceeds r");
    if (norm.level() == 0) return; // identity class, rep = 1
    InsepExtension ext(e.prime(), norm.level());
    auto coords = basis_expand(norm, ext);
    for (const auto& c : coords) {
        if (c.is_zero()) continue;
        rep_ = (norm / TowerElement::base(c)).normalized();
        return;
    }
    throw WeilError("unreachable: nonzero element with zero expansion");
}

bool PresentationBundle::satisfied(const std::vector<TowerElement>& pt) const {
    for (const auto& eq : equations)
        if (!eq.satisfied(pt)) return false;
    for (const auto& ge : general_equations) {
        // general equations are polynomials in t and the bundle variables
        TowerElement acc = TowerElement::constant(p, 0);
        const auto& vars = ge.vars();
        for (const auto& [exps, c] : ge.terms()) {
            TowerElement term = TowerElement::constant(p, c);
            for (size_t i = 0; i < exps.size(); ++i) {
                if (exps[i] == 0) continue;
                if (vars[i] == "t") {
                    term = term * TowerElement::base(RatFunc::variable(p, "t", exps[i]));
                } else {
                    auto it = std::find(var_names.begin(), var_names.end(), vars[i]);
                    if (it == var_names.end()) throw WeilError("unknown variable in equation");
                    term = term * pt.at(static_cast<size_t>(it - var_names.begin())).pow(exps[i]);
                }
            }
            acc = acc + term;
        }
        if (!acc.is_zero()) return false;
    }
    return true;
}

GroupPresentation PresentationBundle::group() const {
    if (!general_equations.empty())
        throw WeilError("bundle with non-additive equations is not a subgroup of G_a^n");
    GroupPresentation g;
    g.p = p;
    g.var_names = var_names;
    for (const auto& eq : equations) g.equations.push_back(eq.homogeneous());
    return g;
}

std::vector<std::string> PresentationBundle::equation_strings() const {
    std::vector<std::string> out;
    for (const auto& eq : equations) out.push_back(eq.str(var_names));
    for (const auto& ge : general_equations) out.push_back(ge.str() + " = 0");
    return out;
}

PresentationBundle weil_alpha_p(int p, int r) {
    InsepExtension ext(p, r);
    int q = ext.dim();
    PresentationBundle b;
    b.p = p;
    b.r = r;
    b.provenance = "alpha_p";
    for (int i = 0; i < q; ++i) b.var_names.push_back("a" + std::to_string(i));
    // (sum a_i u^i)^p = sum a_i^p u^(i p); u^E = t^(E div p^r) u^(E mod p^r)
    std::map<int, PPolynomial> eqs; // basis exponent -> lhs
    for (int i = 0; i < q; ++i) {
        int E = i * p;
        int bexp = E % q;
        int tpow = E / q;
        auto it = eqs.find(bexp);
        if (it == eqs.end()) it = eqs.emplace(bexp, PPolynomial(p, q)).first;
        it->second.add_term(i, 1, RatFunc::variable(p, "t", tpow));
    }
    for (auto& [bexp, lhs] : eqs) {
        AffinePEquation eq{std::move(lhs), AffinePEquation::Rhs::Zero, -1};
        b.equations.push_back(std::move(eq));
    }
    return b;
}

PresentationBundle weil_mu_p(int p, int r) {
    if (r != 1)
        throw WeilError("mu_p restriction is shipped for r = 1 only; use oesterle_group for r > 1");
    PresentationBundle b = weil_alpha_p(p, 1);
    b.provenance = "mu_p";
    b.equations[0].rhs = AffinePEquation::Rhs::One; // the norm equation
    return b;
}

PresentationBundle oesterle_group(int p, int r) {
    check_prime(p);
    if (r < 1 || r > kMaxTowerLevel) throw WeilError("level out of range");
    int qprev = 1;
    for (int i = 0; i < r - 1; ++i) qprev *= p;
    int nvars = p * qprev;
    PresentationBundle b;
    b.p = p;
    b.r = r;
    b.provenance = "oesterle_r";
    for (int i = 0; i < nvars; ++i) b.var_names.push_back("x" + std::to_string(i));
    // over k(v): sum_i v^i x_i^p = x_(p-1), x_i = sum_m x_{i,m} v^m;
    // v^(i+mp) = t^((i+mp) div p^(r-1)) v^((i+mp) mod p^(r-1))
    for (int bexp = 0; bexp < qprev; ++bexp) {
        PPolynomial lhs(p, nvars);
        for (int i = 0; i < p; ++i)
            for (int m = 0; m < qprev; ++m) {
                int e = i + m * p;
                if (e % qprev != bexp) continue;
                lhs.add_term(i * qprev + m, 1, RatFunc::variable(p, "t", e / qprev));
            }
        AffinePEquation eq{std::move(lhs), AffinePEquation::Rhs::Var, (p - 1) * qprev + bexp};
        b.equations.push_back(std::move(eq));
    }
    return b;
}

std::vector<RatFunc> log_derivative_coords(const MultClass& lambda, int p, int r) {
    InsepExtension ext(p, r);
    TowerElement rep = lambda.rep().lift(r);
    const RatFunc& f = rep.repr();
    RatFunc y = f.derivative("s") / f;
    auto coords = basis_expand(TowerElement(r, y), ext);
    // U_r variable (i, m) at index i*p^(r-1)+m carries the w-basis
    // coefficient with exponent i + m p
    int qprev = ext.dim() / p;
    std::vector<RatFunc> out;
    out.reserve(coords.size());
    for (int n = 0; n < static_cast<int>(coords.size()); ++n) {
        int i = n / qprev;
        int m = n % qprev;
        out.push_back(coords[static_cast<size_t>(i + m * p)]);
    }
    return out;
}

PresentationBundle fiber_h(FiberKind kind, int p, int r) {
    check_prime(p);
    if (r < 1 || r > kMaxTowerLevel) throw WeilError("level out of range");
    int qprev = 1;
    for (int i = 0; i < r - 1; ++i) qprev *= p;

    if (kind == FiberKind::Supersingular) {
        if (r == 1) {
            // H is the Weil restriction itself in this case
            PresentationBundle b = weil_alpha_p(p, 1);
            b.provenance = "fiber_supersingular";
            return b;
        }
        // left factor: classes in k(w)/k(v), Weil-restricted to k:
        // variables c_{i,m}, i = 1..p-1, m = 0..p^(r-1)-1 (w^0 component killed)
        PresentationBundle b;
        b.p = p;
        b.r = r;
        b.provenance = "fiber_supersingular";
        int nleft = (p - 1) * qprev;
        for (int i = 0; i < nleft; ++i) b.var_names.push_back("x" + std::to_string(i));
        for (int i = 0; i < p; ++i) b.var_names.push_back("a" + std::to_string(i));
        int nvars = nleft + p;
        auto left_index = [&](int i, int m) { return (i - 1) * qprev + m; };
        // matching: coefficient of u^n in y^(p^(r-1)) equals a_n, n = 1..p-1
        for (int n = 1; n < p; ++n) {
            PPolynomial lhs(p, nvars);
            for (int m = 0; m < qprev; ++m)
                lhs.add_term(left_index(n, m), r - 1, RatFunc::variable(p, "t", m));
            lhs.add_term(nleft + n, 0, RatFunc::constant(p, -1));
            b.equations.push_back({std::move(lhs), AffinePEquation::Rhs::Zero, -1});
        }
        // the alpha_p factor's defining equation
        PPolynomial norm(p, nvars);
        for (int i = 0; i < p; ++i) norm.add_term(nleft + i, 1, RatFunc::variable(p, "t", i));
        b.equations.push_back({std::move(norm), AffinePEquation::Rhs::Zero, -1});
        return b;
    }

    // ordinary: U_r x-coordinates, middle U_1 y-coordinates (r >= 2 only),
    // mu_p restriction a-coordinates
    PresentationBundle b;
    b.p = p;
    b.r = r;
    b.provenance = "fiber_ordinary";
    PresentationBundle ur = oesterle_group(p, r);
    int nx = static_cast<int>(ur.var_names.size());
    b.var_names = ur.var_names;
    bool middle = (r >= 2);
    int ny = middle ? p : 0;
    if (middle)
        for (int i = 0; i < p; ++i) b.var_names.push_back("y" + std::to_string(i));
    for (int i = 0; i < p; ++i) b.var_names.push_back("a" + std::to_string(i));
    int nvars = nx + ny + p;
    auto widen = [&](const AffinePEquation& eq) {
        PPolynomial lhs(p, nvars);
        for (const auto& [key, coeff] : eq.lhs.terms()) lhs.add_term(key.first, key.second, coeff);
        return AffinePEquation{std::move(lhs), eq.rhs, eq.rhs_var};
    };
    for (const auto& eq : ur.equations) b.equations.push_back(widen(eq));

    int ybase = nx; // index of the U_1-side coordinate vector
    if (middle) {
        // the middle quotient (R_{k(u)/k}G_m)/G_m is U_1 in y-coordinates
        PPolynomial lhs(p, nvars);
        for (int i = 0; i < p; ++i) lhs.add_term(ybase + i, 1, RatFunc::variable(p, "t", i));
        b.equations.push_back({std::move(lhs), AffinePEquation::Rhs::Var, ybase + p - 1});
        // p^(r-1)-power comparison from the U_r side:
        // y_n = sum_m t^m x_{n,m}^(p^(r-1))
        for (int n = 0; n < p; ++n) {
            PPolynomial m_lhs(p, nvars);
            for (int m = 0; m < qprev; ++m)
                m_lhs.add_term(n * qprev + m, r - 1, RatFunc::variable(p, "t", m));
            m_lhs.add_term(ybase + n, 0, RatFunc::constant(p, -1));
            b.equations.push_back({std::move(m_lhs), AffinePEquation::Rhs::Zero, -1});
        }
    } else {
        ybase = 0; // at r = 1 the comparison map is the identity on U_1
    }
    int abase = nx + ny;
    // the mu_p factor's norm equation
    {
        PPolynomial norm(p, nvars);
        for (int i = 0; i < p; ++i) norm.add_term(abase + i, 1, RatFunc::variable(p, "t", i));
        b.equations.push_back({std::move(norm), AffinePEquation::Rhs::One, -1});
    }
    // matching on the mu_p side: with lambda = sum a_i u^i and
    // y = log-derivative coordinates, lambda * y - D(lambda) = 0 expanded
    // over the basis u^0..u^(p-1) gives p bilinear equations
    for (int n = 0; n < p; ++n) {
        MultiPoly eq(p);
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j) {
                if ((i + j) % p != n) continue;
                eq.add_term({{"t", (i + j) / p},
                             {b.var_names[static_cast<size_t>(abase + i)], 1},
                             {b.var_names[static_cast<size_t>(ybase + j)], 1}},
                            1);
            }
        if (n + 1 <= p - 1)
            eq.add_term({{b.var_names[static_cast<size_t>(abase + n + 1)], 1}}, -(n + 1));
        b.general_equations.push_back(std::move(eq));
    }
    return b;
}

TrivialityReport h_triviality_check(FiberKind kind, int p, int r, int trials, int degree_bound,
                                    std::uint64_t seed) {
    if (r < 1) throw WeilError("r must be >= 1");
    TrivialityReport rep;
    Sampler rng(seed);
    for (int n = 0; n < trials; ++n) {
        MultiPoly poly = rng.poly(p, "s", degree_bound + 1, degree_bound);
        if (kind == FiberKind::Supersingular) {
            // additive class representative: kill the k(v)-component
            // (monomials with s-exponent divisible by p)
            MultiPoly cls(p);
            auto dense = poly.dense_univariate("s");
            for (size_t e = 0; e < dense->size(); ++e)
                if (e % static_cast<size_t>(p) != 0 && (*dense)[e] != 0)
                    cls.add_term({{"s", static_cast<int>(e)}}, (*dense)[e]);
            TowerElement y(r, RatFunc(cls));
            TowerElement z = y;
            for (int i = 0; i < r - 1; ++i) z = z.frobenius();
            ++rep.trials;
            if (z.member(0)) {
                ++rep.hypothesis_held;
                if (!y.member(r - 1)) {
                    ++rep.violations;
                    if (rep.counterexample.empty()) rep.counterexample = cls.str();
                }
            }
        } else {
            if (poly.is_zero()) poly = MultiPoly::constant(p, 1);
            TowerElement y(r, RatFunc(poly));
            TowerElement z = y;
            for (int i = 0; i < r - 1; ++i) z = z.frobenius();
            ++rep.trials;
            if (z.member(0)) {
                ++rep.hypothesis_held;
                if (!y.member(r - 1)) {
                    ++rep.violations;
                    if (rep.counterexample.empty()) rep.counterexample = poly.str();
                }
            }
        }
    }
    return rep;
}

} // namespace woundlab
