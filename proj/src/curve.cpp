#include "woundlab/curve.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "woundlab/weil.hpp"

namespace woundlab {

CurveModel::CurveModel(int p_) : p(p_) {
    check_prime(p);
    if (p == 2) throw CurveError("the curve model requires an odd prime");
}

MultiPoly CurveModel::defining_polynomial() const {
    MultiPoly x = MultiPoly::variable(p, "x");
    MultiPoly y = MultiPoly::variable(p, "y");
    MultiPoly t = MultiPoly::variable(p, "t");
    MultiPoly one = MultiPoly::constant(p, 1);
    return y * y - x * (x - one) * (MultiPoly::variable(p, "x", p) - t);
}

int arithmetic_genus(int p) {
    check_prime(p);
    if (p == 2) throw CurveError("the genus formula requires an odd prime");
    return (p + 1) / 2;
}

std::vector<TowerElement> pullback_coefficients(int p) {
    check_prime(p);
    if (p == 2) throw CurveError("requires an odd prime");
    int g = (p - 1) / 2;
    // direct expansion of (x - u)^g, u = s at tower level 1
    MultiPoly expansion =
        (MultiPoly::variable(p, "x") - MultiPoly::variable(p, "s")).pow(g);
    std::vector<TowerElement> out;
    for (int i = 0; i <= g; ++i) {
        // coefficient of x^i as a polynomial in s
        MultiPoly ci(p);
        const auto& vars = expansion.vars();
        auto xi = std::find(vars.begin(), vars.end(), "x");
        auto si = std::find(vars.begin(), vars.end(), "s");
        for (const auto& [e, c] : expansion.terms()) {
            if (e[static_cast<size_t>(xi - vars.begin())] != i) continue;
            int se = si == vars.end() ? 0 : e[static_cast<size_t>(si - vars.begin())];
            ci.add_term({{"s", se}}, c);
        }
        out.push_back(TowerElement(1, RatFunc(ci)).normalized().lift(1));
    }
    // closed form binom(g, i) (-u)^(g-i)
    std::vector<long long> binom(static_cast<size_t>(g) + 1, 0);
    binom[0] = 1;
    for (int row = 1; row <= g; ++row)
        for (int i = row; i >= 1; --i) binom[static_cast<size_t>(i)] += binom[static_cast<size_t>(i) - 1];
    for (int i = 0; i <= g; ++i) {
        MultiPoly cf(p);
        int sign = ((g - i) % 2 == 0) ? 1 : -1;
        cf.add_term({{"s", g - i}}, sign * binom[static_cast<size_t>(i)]);
        if (out[static_cast<size_t>(i)] != TowerElement(1, RatFunc(cf)).normalized().lift(1))
            throw CurveError("pullback expansion disagrees with the binomial closed form");
    }
    return out;
}

bool independence_over_k(const std::vector<TowerElement>& coeffs) {
    if (coeffs.empty()) return true;
    int p = coeffs[0].prime();
    InsepExtension ext(p, 1);
    std::vector<std::vector<RatFunc>> mat;
    for (const auto& c : coeffs) mat.push_back(basis_expand(c, ext));
    size_t rows = mat.size(), cols = mat[0].size();

    // route 1: fraction-free elimination on cleared entries
    std::vector<std::vector<MultiPoly>> cleared(rows, std::vector<MultiPoly>(cols, MultiPoly(p)));
    for (size_t i = 0; i < rows; ++i) {
        MultiPoly common = MultiPoly::constant(p, 1);
        for (size_t j = 0; j < cols; ++j) common = common * mat[i][j].den();
        for (size_t j = 0; j < cols; ++j) {
            // multiply by the product of the other denominators
            MultiPoly v = mat[i][j].num();
            for (size_t k = 0; k < cols; ++k)
                if (k != j) v = v * mat[i][k].den();
            cleared[i][j] = v;
        }
    }
    int rank1 = poly_matrix_rank(cleared);

    // route 2: maximal nonzero minor by Laplace expansion
    std::function<RatFunc(const std::vector<std::vector<RatFunc>>&)> det =
        [&](const std::vector<std::vector<RatFunc>>& m) -> RatFunc {
        size_t n = m.size();
        if (n == 1) return m[0][0];
        RatFunc acc(p);
        for (size_t j = 0; j < n; ++j) {
            if (m[0][j].is_zero()) continue;
            std::vector<std::vector<RatFunc>> sub;
            for (size_t i = 1; i < n; ++i) {
                std::vector<RatFunc> row;
                for (size_t k = 0; k < n; ++k)
                    if (k != j) row.push_back(m[i][k]);
                sub.push_back(std::move(row));
            }
            RatFunc term = m[0][j] * det(sub);
            acc = (j % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    };
    int rank2 = 0;
    for (size_t sz = std::min(rows, cols); sz >= 1; --sz) {
        // all column subsets of size sz against the first sz.. use all row
        // subsets too; matrices here are tiny
        std::vector<size_t> rsel(sz), csel(sz);
        std::function<bool(size_t, size_t)> pick_cols;
        std::function<bool(size_t, size_t)> pick_rows = [&](size_t start, size_t depth) -> bool {
            if (depth == sz) {
                std::function<bool(size_t, size_t)> pc = [&](size_t cstart, size_t cdepth) -> bool {
                    if (cdepth == sz) {
                        std::vector<std::vector<RatFunc>> sub;
                        for (size_t i = 0; i < sz; ++i) {
                            std::vector<RatFunc> row;
                            for (size_t j = 0; j < sz; ++j) row.push_back(mat[rsel[i]][csel[j]]);
                            sub.push_back(std::move(row));
                        }
                        return !det(sub).is_zero();
                    }
                    for (size_t c = cstart; c < cols; ++c) {
                        csel[cdepth] = c;
                        if (pc(c + 1, cdepth + 1)) return true;
                    }
                    return false;
                };
                return pc(0, 0);
            }
            for (size_t rr = start; rr < rows; ++rr) {
                rsel[depth] = rr;
                if (pick_rows(rr + 1, depth + 1)) return true;
            }
            return false;
        };
        if (pick_rows(0, 0)) {
            rank2 = static_cast<int>(sz);
            break;
        }
    }
    if (rank1 != rank2) throw CurveError("rank routes disagree");
    return rank1 == static_cast<int>(rows);
}

namespace {

bool is_param_only(const MultiPoly& f, const std::vector<std::string>& coords) {
    for (const auto& v : f.support())
        if (std::find(coords.begin(), coords.end(), v) != coords.end()) return false;
    return true;
}

MultiPoly substitute_ratfunc(const MultiPoly& f, const std::string& var, const RatFunc& val,
                             int p) {
    // substitute and clear the denominator (zero set is unchanged)
    RatFunc acc(p);
    const auto& vars = f.vars();
    for (const auto& [e, c] : f.terms()) {
        RatFunc term = RatFunc::constant(p, c);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (vars[i] == var)
                term = term * val.pow(e[i]);
            else
                term = term * RatFunc::variable(p, vars[i], e[i]);
        }
        acc = acc + term;
    }
    return acc.num();
}

struct Solver {
    int p;
    std::vector<std::string> coords;
    std::vector<std::string> params;
    bool projective;
    EmptinessResult result;

    bool is_coord(const std::string& v) const {
        return std::find(coords.begin(), coords.end(), v) != coords.end();
    }

    void note(int depth, const std::string& msg) {
        result.trace.push_back(std::string(static_cast<size_t>(depth) * 2, ' ') + msg);
    }

    // returns true when a witness was found (search stops)
    bool run(std::vector<MultiPoly> eqs, std::map<std::string, RatFunc> assigned, int depth) {
        if (depth > 32) throw CurveError("case split too deep");
        // cleanup: drop zeros, detect parameter-only contradictions
        std::vector<MultiPoly> live;
        for (const auto& f : eqs) {
            if (f.is_zero()) continue;
            if (is_param_only(f, coords)) {
                note(depth, "equation reduces to the nonzero function " + f.str() +
                                ": contradiction, branch empty");
                return false;
            }
            live.push_back(f);
        }
        if (live.empty()) {
            // all equations satisfied: assemble a witness
            std::map<std::string, RatFunc> w = assigned;
            bool all_zero = true;
            bool has_free = false;
            for (const auto& v : coords) {
                auto it = w.find(v);
                if (it == w.end()) {
                    has_free = true;
                    continue;
                }
                if (!it->second.is_zero()) all_zero = false;
            }
            if (projective && all_zero && !has_free) {
                note(depth, "all coordinates vanish: no projective point on this branch");
                return false;
            }
            for (const auto& v : coords) {
                if (w.count(v)) continue;
                w.emplace(v, RatFunc::constant(p, projective && all_zero ? 1 : 0));
                all_zero = false;
            }
            result.witness.clear();
            for (const auto& v : coords) result.witness.emplace_back(v, w.at(v).str());
            note(depth, "all equations vanish: witness found");
            return true;
        }

        // rule 1: univariate in a coordinate with constant coefficients
        for (size_t idx = 0; idx < live.size(); ++idx) {
            for (const auto& v : coords) {
                if (assigned.count(v)) continue;
                auto dense = live[idx].dense_univariate(v);
                if (!dense || dense->empty()) continue;
                // enumerate F_p roots, deflating to check the factor splits
                std::vector<int> roots;
                std::vector<int> work = *dense;
                for (int rt = 0; rt < p; ++rt) {
                    for (;;) {
                        long long val = 0, pw = 1;
                        for (int c : work) {
                            val = fp_norm(val + c * pw, p);
                            pw = fp_mul(static_cast<int>(pw), rt, p);
                        }
                        if (val != 0) break;
                        roots.push_back(rt);
                        work = dense_div(work, {fp_neg(rt, p), 1}, p);
                        if (work.size() <= 1) break;
                    }
                    if (work.size() <= 1) break;
                }
                if (work.size() > 1)
                    throw CurveError("univariate factor does not split over F_p: unsupported");
                std::sort(roots.begin(), roots.end());
                roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
                note(depth, live[idx].str() + " = 0 forces " + v + " in {" +
                                [&] {
                                    std::string s;
                                    for (size_t i = 0; i < roots.size(); ++i)
                                        s += (i ? "," : "") + std::to_string(roots[i]);
                                    return s;
                                }() +
                                "}");
                for (int rt : roots) {
                    note(depth, "case " + v + " = " + std::to_string(rt) + ":");
                    std::vector<MultiPoly> next;
                    for (const auto& f : live)
                        next.push_back(substitute_ratfunc(f, v, RatFunc::constant(p, rt), p));
                    auto na = assigned;
                    na.emplace(v, RatFunc::constant(p, rt));
                    if (run(std::move(next), std::move(na), depth + 1)) return true;
                }
                return false;
            }
        }

        // rule 2: single monomial involving coordinates: some coordinate is 0
        for (size_t idx = 0; idx < live.size(); ++idx) {
            if (live[idx].terms().size() != 1) continue;
            std::vector<std::string> mono_coords;
            for (const auto& v : live[idx].support())
                if (is_coord(v)) mono_coords.push_back(v);
            if (mono_coords.empty()) continue;
            note(depth, live[idx].str() + " = 0 forces a vanishing factor");
            for (const auto& v : mono_coords) {
                note(depth, "case " + v + " = 0:");
                std::vector<MultiPoly> next;
                for (const auto& f : live)
                    next.push_back(substitute_ratfunc(f, v, RatFunc(MultiPoly(p)), p));
                auto na = assigned;
                na.emplace(v, RatFunc(MultiPoly(p)));
                if (run(std::move(next), std::move(na), depth + 1)) return true;
            }
            return false;
        }

        // rule 3: c(params) * x^(p^d) + g(params) = 0: p-th-power membership
        for (size_t idx = 0; idx < live.size(); ++idx) {
            std::string var;
            MultiPoly coeff(p), rest(p);
            int power = -1;
            bool shape_ok = true;
            const auto& vars = live[idx].vars();
            for (const auto& [e, c] : live[idx].terms()) {
                std::string tv;
                int te = 0;
                for (size_t i = 0; i < e.size(); ++i) {
                    if (e[i] == 0 || !is_coord(vars[i])) continue;
                    if (!tv.empty()) shape_ok = false;
                    tv = vars[i];
                    te = e[i];
                }
                MultiPoly mono(p);
                std::vector<std::pair<std::string, int>> mv;
                for (size_t i = 0; i < e.size(); ++i)
                    if (e[i] > 0 && !is_coord(vars[i])) mv.emplace_back(vars[i], e[i]);
                mono.add_term(mv, c);
                if (tv.empty()) {
                    rest = rest + mono;
                } else {
                    if (!var.empty() && (tv != var || te != power)) shape_ok = false;
                    var = tv;
                    power = te;
                    coeff = coeff + mono;
                }
            }
            if (!shape_ok || var.empty() || rest.is_zero()) continue;
            int d = 0, q = 1;
            while (q < power) {
                q *= p;
                ++d;
            }
            if (q != power) continue;
            RatFunc target = -(RatFunc(rest) / RatFunc(coeff));
            auto root = target.pth_root(d);
            if (!root) {
                note(depth, live[idx].str() + " = 0 needs " + target.str() + " to be a p^" +
                                std::to_string(d) + "-th power, which it is not: branch empty");
                return false;
            }
            note(depth, live[idx].str() + " = 0 solved by " + var + " = " + root->str());
            std::vector<MultiPoly> next;
            for (const auto& f : live) next.push_back(substitute_ratfunc(f, var, *root, p));
            auto na = assigned;
            na.emplace(var, *root);
            return run(std::move(next), std::move(na), depth + 1);
        }

        throw CurveError("case splitting stalled: unsupported system");
    }
};

} // namespace

EmptinessResult solve_system(std::vector<MultiPoly> equations, std::vector<std::string> coord_vars,
                             std::vector<std::string> parameter_vars, bool projective) {
    if (equations.empty()) throw CurveError("empty system");
    int p = equations[0].prime();
    Solver s{p, std::move(coord_vars), std::move(parameter_vars), projective, {}};
    bool witness = s.run(std::move(equations), {}, 0);
    s.result.empty = !witness;
    return s.result;
}

EmptinessResult jacobian_criterion(const std::vector<MultiPoly>& equations,
                                   const std::vector<std::string>& coord_vars,
                                   const std::vector<std::string>& parameter_vars,
                                   bool projective) {
    std::vector<MultiPoly> sys = equations;
    for (const auto& f : equations) {
        for (const auto& v : coord_vars) sys.push_back(f.derivative(v));
        for (const auto& v : parameter_vars) sys.push_back(f.derivative(v));
    }
    return solve_system(std::move(sys), coord_vars, parameter_vars, projective);
}

InfinityResult points_at_infinity(const MultiPoly& closure, const std::vector<std::string>& coord_vars,
                                  const std::string& slice_var,
                                  const std::vector<std::string>& parameter_vars, int height_bound) {
    InfinityResult out;
    int p = closure.prime();
    MultiPoly slice = substitute_ratfunc(closure, slice_var, RatFunc(MultiPoly(p)), p);
    std::vector<std::string> coords;
    for (const auto& v : coord_vars)
        if (v != slice_var) coords.push_back(v);
    out.trace.push_back("slice " + slice_var + " = 0: " + slice.str() + " = 0");

    // diagonal p-power shape: every term is c_j(params) * x_j^(p^d)
    {
        bool diagonal = true;
        int power = -1;
        std::map<std::string, MultiPoly> diag;
        const auto& vars = slice.vars();
        for (const auto& [e, c] : slice.terms()) {
            std::string tv;
            int te = 0;
            bool multi = false;
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (std::find(coords.begin(), coords.end(), vars[i]) == coords.end()) continue;
                if (!tv.empty()) multi = true;
                tv = vars[i];
                te = e[i];
            }
            if (tv.empty() || multi) {
                diagonal = false;
                break;
            }
            if (power < 0) power = te;
            if (te != power) {
                diagonal = false;
                break;
            }
            MultiPoly mono(p);
            std::vector<std::pair<std::string, int>> mv;
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0 && std::find(coords.begin(), coords.end(), vars[i]) == coords.end())
                    mv.emplace_back(vars[i], e[i]);
            mono.add_term(mv, c);
            auto it = diag.find(tv);
            if (it == diag.end())
                diag.emplace(tv, mono);
            else
                it->second = it->second + mono;
        }
        int d = 0, q = 1;
        while (diagonal && power > 0 && q < power) {
            q *= p;
            ++d;
        }
        if (diagonal && power == q && d >= 1 && !diag.empty()) {
            std::vector<RatFunc> cs;
            std::vector<std::string> order;
            for (const auto& [v, c] : diag) {
                cs.emplace_back(c);
                order.push_back(v);
            }
            auto res = pth_power_independence(cs, d, parameter_vars);
            if (res.independent) {
                out.certified_empty = true;
                out.trace.push_back(
                    "diagonal coefficients are independent over k^(p^" + std::to_string(d) +
                    "): certified empty");
                return out;
            }
            out.trace.push_back("diagonal coefficients are dependent over k^(p^" +
                                std::to_string(d) + "): point constructed");
            for (size_t i = 0; i < order.size(); ++i)
                out.points.emplace_back(order[i],
                                        (res.dependence[i] * RatFunc(cs[i].den())).str());
            return out;
        }
    }

    // fallback: bounded search over small coordinate tuples
    std::vector<RatFunc> pool;
    for (int c = 0; c < p; ++c) pool.push_back(RatFunc::constant(p, c));
    if (height_bound >= 1 && !parameter_vars.empty())
        for (int c = 1; c < p; ++c)
            pool.push_back(RatFunc::variable(p, parameter_vars[0]) * RatFunc::constant(p, c));
    size_t n = coords.size();
    std::vector<size_t> odo(n, 0);
    for (;;) {
        bool nonzero = std::any_of(odo.begin(), odo.end(), [](size_t i) { return i != 0; });
        if (nonzero) {
            MultiPoly val = slice;
            for (size_t i = 0; i < n; ++i) val = substitute_ratfunc(val, coords[i], pool[odo[i]], p);
            if (val.is_zero()) {
                for (size_t i = 0; i < n; ++i) out.points.emplace_back(coords[i], pool[odo[i]].str());
                out.trace.push_back("search found a point");
                return out;
            }
        }
        size_t i = 0;
        while (i < n && ++odo[i] == pool.size()) odo[i++] = 0;
        if (i == n) break;
    }
    out.searched_only = true;
    out.trace.push_back("no point up to the height bound (not a proof of emptiness)");
    return out;
}

bool tate_gap_check(int g_arith, int g_geom, int p) {
    check_prime(p);
    if (p == 2) throw CurveError("requires an odd prime");
    if (g_geom < 0 || g_arith < g_geom) throw CurveError("need g_arith >= g_geom >= 0");
    return (g_arith - g_geom) % ((p - 1) / 2) == 0;
}

} // namespace woundlab
