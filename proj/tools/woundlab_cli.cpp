// woundlab: exact computer algebra for wound unipotent groups over F_p(t).
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "woundlab/curve.hpp"
#include "woundlab/expr.hpp"
#include "woundlab/oracle.hpp"
#include "woundlab/ppoly.hpp"
#include "woundlab/semilinear.hpp"
#include "woundlab/tower.hpp"
#include "woundlab/verify.hpp"
#include "woundlab/weil.hpp"

using json = nlohmann::ordered_json;
using namespace woundlab;

namespace {

json json_header(const std::string& command) {
    json j;
    j["schema"] = "woundlab/1";
    j["command"] = command;
    return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string completeness_str(Completeness c) {
    return c == Completeness::CompleteByBoundProof ? "CompleteByBoundProof" : "BoundedOnly";
}

int run_verify(int p, std::uint64_t seed, bool as_json) {
    auto rep = verify_all(p, seed);
    if (as_json) {
        json j = json_header("verify");
        j["parameters"] = {{"p", p}, {"seed", seed}};
        j["checks"] = json::array();
        for (const auto& c : rep.checks)
            j["checks"].push_back({{"name", c.name},
                                   {"anchor", c.anchor},
                                   {"status", status_str(c.status)},
                                   {"details", c.details}});
        emit(j);
    } else {
        for (const auto& c : rep.checks)
            std::cout << "[" << status_str(c.status) << "] " << c.name << ": " << c.details
                      << "\n";
        std::cout << (rep.all_passed() ? "all checks passed" : "CHECK FAILURES PRESENT") << "\n";
    }
    return rep.all_passed() ? 0 : 1;
}

int run_ext1(int p, int degree, bool degree_given, bool as_json, bool cross_check) {
    auto sys = kmt_system(p);
    auto proof = kmt_degree_bound(p);
    int used = degree_given ? degree : proof.bound;
    auto basis = kernel_bounded(sys, used);
    Completeness note =
        (proof.proved() && used >= proof.bound) ? Completeness::CompleteByBoundProof
                                                : Completeness::BoundedOnly;

    bool cross_ok = true;
    std::string cross_note;
    if (cross_check) {
        SearchSpace space{sys.nunknowns, used, p};
        try {
            auto sols = enumerate_solutions(
                [&](const std::vector<RatFunc>& tup) { return sys.satisfied(tup); }, space);
            long long expect = 1;
            for (int i = 0; i < basis.dimension(); ++i) expect *= p;
            cross_ok = static_cast<long long>(sols.size()) == expect;
            std::ostringstream os;
            os << sols.size() << " tuples by enumeration vs p^" << basis.dimension()
               << " from the solver";
            cross_note = os.str();
        } catch (const SpaceTooLarge& e) {
            cross_note = std::string("enumeration skipped: ") + e.what();
        }
    }

    if (as_json) {
        json j = json_header("ext1");
        j["parameters"] = {{"p", p}, {"degree", used}};
        j["dimension"] = basis.dimension();
        j["completeness_note"] = completeness_str(note);
        j["basis"] = json::array();
        for (const auto& sol : basis.basis) {
            json row = json::array();
            for (const auto& c : sol) row.push_back(c.str());
            j["basis"].push_back(row);
        }
        j["bound_proof"] = json::array();
        for (const auto& step : proof.trace)
            j["bound_proof"].push_back({{"name", step.name}, {"detail", step.detail}, {"ok", step.ok}});
        if (cross_check) j["cross_check"] = {{"ok", cross_ok}, {"detail", cross_note}};
        emit(j);
    } else {
        std::cout << "Ext^1 dimension: " << basis.dimension() << "\n";
        std::cout << "degree bound: " << used << " (" << completeness_str(note) << ")\n";
        for (const auto& step : proof.trace)
            std::cout << "  [" << (step.ok ? "ok" : "FAIL") << "] " << step.name << ": "
                      << step.detail << "\n";
        if (cross_check) std::cout << "cross-check: " << (cross_ok ? "ok" : "MISMATCH") << " ("
                                   << cross_note << ")\n";
    }
    return cross_ok ? 0 : 1;
}

int run_weil(int p, int r, const std::string& kind, bool as_json) {
    PresentationBundle b;
    if (kind == "alpha_p")
        b = weil_alpha_p(p, r);
    else if (kind == "mu_p")
        b = weil_mu_p(p, r);
    else if (kind == "oesterle")
        b = oesterle_group(p, r);
    else if (kind == "fiber-ss")
        b = fiber_h(FiberKind::Supersingular, p, r);
    else if (kind == "fiber-ord")
        b = fiber_h(FiberKind::Ordinary, p, r);
    else
        throw CLI::ValidationError("--kind must be one of alpha_p, mu_p, oesterle, fiber-ss, fiber-ord");

    if (as_json) {
        json j = json_header("weil");
        j["parameters"] = {{"p", p}, {"r", r}, {"kind", kind}};
        j["provenance"] = b.provenance;
        j["variables"] = b.var_names;
        j["equations"] = b.equation_strings();
        emit(j);
    } else {
        for (const auto& eq : b.equation_strings()) std::cout << eq << "\n";
    }
    return 0;
}

int run_oesterle_map(int p, int r, const std::string& lambda, bool as_json) {
    RatFunc f = parse_ratfunc(lambda, p);
    TowerElement e = f.uses("s") ? TowerElement(r, f) : TowerElement::base(f);
    MultClass cls(e, r);
    auto coords = log_derivative_coords(cls, p, r);
    if (as_json) {
        json j = json_header("oesterle-map");
        j["parameters"] = {{"p", p}, {"r", r}, {"lambda", lambda}};
        j["coordinates"] = json::array();
        for (const auto& c : coords) j["coordinates"].push_back(c.str());
        emit(j);
    } else {
        std::cout << "(";
        for (size_t i = 0; i < coords.size(); ++i) std::cout << (i ? ", " : "") << coords[i].str();
        std::cout << ")\n";
    }
    return 0;
}

int run_wound(int p, const std::string& poly, int bound, int nvars, bool as_json,
              bool cross_check) {
    auto g = hypersurface_from_expr(poly, p, nvars);
    auto v = wound_test(g, bound);
    std::string kind = v.kind == WoundVerdict::Kind::WoundCertified ? "WoundCertified"
                       : v.kind == WoundVerdict::Kind::NotWound     ? "NotWound"
                                                                    : "UnknownAtBound";
    bool cross_ok = true;
    std::string cross_note;
    if (cross_check) {
        // enumeration of bounded principal-part zeros, independent of the test
        const PPolynomial pp = g.equations.at(0).principal_part();
        SearchSpace space{g.nvars(), bound, p};
        try {
            auto zeros = enumerate_solutions(
                [&](const std::vector<RatFunc>& tup) {
                    std::vector<TowerElement> pt;
                    bool nonzero = false;
                    for (const auto& c : tup) {
                        nonzero = nonzero || !c.is_zero();
                        pt.push_back(TowerElement::base(c));
                    }
                    return nonzero && pp.evaluate(pt).is_zero();
                },
                space);
            bool enum_says_wound = zeros.empty();
            if (v.kind == WoundVerdict::Kind::WoundCertified) cross_ok = enum_says_wound;
            if (v.kind == WoundVerdict::Kind::NotWound && !v.witness.empty()) {
                bool poly_witness = std::all_of(v.witness.begin(), v.witness.end(),
                                                [](const RatFunc& w) { return w.is_polynomial(); });
                int maxdeg = 0;
                for (const auto& w : v.witness) maxdeg = std::max(maxdeg, w.num().total_degree());
                if (poly_witness && maxdeg <= bound) cross_ok = !enum_says_wound;
            }
            std::ostringstream os;
            os << zeros.size() << " bounded principal-part zeros by enumeration";
            cross_note = os.str();
        } catch (const SpaceTooLarge& e) {
            cross_note = std::string("enumeration skipped: ") + e.what();
        }
    }

    if (as_json) {
        json j = json_header("wound");
        j["parameters"] = {{"p", p}, {"poly", poly}, {"bound", bound}};
        j["verdict"] = kind;
        j["certificate"] = v.certificate;
        j["witness"] = json::array();
        for (const auto& w : v.witness) j["witness"].push_back(w.str());
        if (cross_check) j["cross_check"] = {{"ok", cross_ok}, {"detail", cross_note}};
        emit(j);
    } else {
        std::cout << kind << "\n" << v.certificate << "\n";
        if (!v.witness.empty()) {
            std::cout << "witness: (";
            for (size_t i = 0; i < v.witness.size(); ++i)
                std::cout << (i ? ", " : "") << v.witness[i].str();
            std::cout << ")\n";
        }
        if (cross_check) std::cout << "cross-check: " << (cross_ok ? "ok" : "MISMATCH") << " ("
                                   << cross_note << ")\n";
    }
    return cross_ok ? 0 : 1;
}

int run_curve(int p, bool as_json) {
    CurveModel curve(p);
    int genus = arithmetic_genus(p);
    auto coeffs = pullback_coefficients(p);
    bool indep = independence_over_k(coeffs);
    auto jac = jacobian_criterion({curve.defining_polynomial()}, {"x", "y"}, {"t"});
    bool tate = tate_gap_check(genus, 1, p);

    bool ok = indep && jac.empty && tate;
    if (as_json) {
        json j = json_header("curve");
        j["parameters"] = {{"p", p}};
        j["model"] = curve.defining_polynomial().str() + " = 0";
        j["genus"] = genus;
        j["pullback_coefficients"] = json::array();
        for (const auto& c : coeffs) j["pullback_coefficients"].push_back(c.str());
        j["independent_over_k"] = indep;
        j["jacobian"] = {{"empty", jac.empty}, {"trace", jac.trace}};
        j["tate_gap"] = tate;
        emit(j);
    } else {
        std::cout << "model: " << curve.defining_polynomial().str() << " = 0\n";
        std::cout << "arithmetic genus: " << genus << "\n";
        std::cout << "pullback coefficients:";
        for (const auto& c : coeffs) std::cout << " [" << c.str() << "]";
        std::cout << "\nindependent over k: " << (indep ? "yes" : "no") << "\n";
        std::cout << "singular locus empty: " << (jac.empty ? "yes" : "no") << "\n";
        for (const auto& line : jac.trace) std::cout << "  " << line << "\n";
        std::cout << "genus gap divisible by (p-1)/2: " << (tate ? "yes" : "no") << "\n";
    }
    return ok ? 0 : 1;
}

int run_tower_member(int p, int level, const std::string& expr, int target, bool as_json) {
    RatFunc f = parse_ratfunc(expr, p);
    TowerElement e = level == 0 ? TowerElement::base(f) : TowerElement(level, f);
    bool member = e.member(target);
    auto norm = e.normalized();
    if (as_json) {
        json j = json_header("tower");
        j["parameters"] = {{"p", p}, {"level", level}, {"expr", expr}, {"target", target}};
        j["member"] = member;
        j["minimal_level"] = norm.level();
        j["normalized"] = norm.str();
        emit(j);
    } else {
        std::cout << (member ? "yes" : "no") << " (minimal level " << norm.level() << ": "
                  << norm.str() << ")\n";
    }
    return 0;
}

int run_semilinear_solve(int p, const std::string& file, int degree, bool as_json) {
    std::ifstream in(file);
    if (!in) throw CLI::ValidationError("cannot open " + file);
    json spec = json::parse(in);
    SemilinearSystem sys;
    sys.p = p;
    sys.nunknowns = spec.at("unknowns").get<int>();
    for (const auto& eq : spec.at("equations")) {
        std::vector<SemilinearSystem::Term> terms;
        for (const auto& term : eq)
            terms.push_back({term.at(0).get<int>(), term.at(1).get<int>(),
                             parse_ratfunc(term.at(2).get<std::string>(), p)});
        sys.equations.push_back(std::move(terms));
    }
    auto basis = kernel_bounded(sys, degree);
    if (as_json) {
        json j = json_header("semilinear");
        j["parameters"] = {{"p", p}, {"file", file}, {"degree", degree}};
        j["dimension"] = basis.dimension();
        j["completeness_note"] = completeness_str(basis.note);
        j["basis"] = json::array();
        for (const auto& sol : basis.basis) {
            json row = json::array();
            for (const auto& c : sol) row.push_back(c.str());
            j["basis"].push_back(row);
        }
        emit(j);
    } else {
        std::cout << "dimension " << basis.dimension() << " at degree <= " << degree << "\n";
        for (const auto& sol : basis.basis) {
            std::cout << "  (";
            for (size_t i = 0; i < sol.size(); ++i) std::cout << (i ? ", " : "") << sol[i].str();
            std::cout << ")\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"woundlab: exact arithmetic for wound unipotent groups over F_p(t)"};
    app.require_subcommand(1);

    int p = 3, r = 1, degree = 0, bound = 2, nvars = 0, level = 1, target = 0;
    std::uint64_t seed = 0;
    bool as_json = false, cross_check = false;
    std::string kind = "alpha_p", lambda, poly, expr, file;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", as_json, "emit a JSON report");
        return sub;
    };

    auto* verify = add_common(app.add_subcommand("verify", "run every anchored check"));
    verify->add_option("--p", p, "prime");
    verify->add_option("--seed", seed, "sampler seed");

    auto* ext1 = add_common(app.add_subcommand("ext1", "Ext^1(U, G_m) via the KMT kernel"));
    ext1->add_option("--p", p, "prime");
    auto* deg_opt = ext1->add_option("--degree", degree, "solution degree bound");
    ext1->add_flag("--cross-check", cross_check, "compare with brute-force enumeration");

    auto* weil = add_common(app.add_subcommand("weil", "restriction-of-scalars presentations"));
    weil->add_option("--p", p, "prime");
    weil->add_option("--r", r, "tower level");
    weil->add_option("--kind", kind, "alpha_p | mu_p | oesterle | fiber-ss | fiber-ord");

    auto* omap = add_common(app.add_subcommand("oesterle-map", "coordinates of a class in U_r"));
    omap->add_option("--p", p, "prime");
    omap->add_option("--r", r, "tower level");
    omap->add_option("--lambda", lambda, "class representative, rational in s")->required();

    auto* wound = add_common(app.add_subcommand("wound", "woundness of a hypersurface group"));
    wound->add_option("--p", p, "prime");
    wound->add_option("--poly", poly, "p-polynomial in x0..xN")->required();
    wound->add_option("--bound", bound, "search degree bound");
    wound->add_option("--nvars", nvars, "ambient dimension (default: inferred)");
    wound->add_flag("--cross-check", cross_check, "compare with brute-force enumeration");

    auto* curve = add_common(app.add_subcommand("curve", "the hyperelliptic pipeline"));
    curve->add_option("--p", p, "prime");

    auto* tower = app.add_subcommand("tower", "tower arithmetic");
    tower->require_subcommand(1);
    auto* member = add_common(tower->add_subcommand("member", "subfield membership"));
    member->add_option("--p", p, "prime");
    member->add_option("--level", level, "level of the input representation");
    member->add_option("--expr", expr, "element, rational in s (or t at level 0)")->required();
    member->add_option("--target", target, "membership level to test");

    auto* semi = app.add_subcommand("semilinear", "Frobenius-semilinear systems");
    semi->require_subcommand(1);
    auto* solve = add_common(semi->add_subcommand("solve", "bounded kernel of a system"));
    solve->add_option("--p", p, "prime");
    solve->add_option("--file", file, "system description (JSON)")->required();
    solve->add_option("--degree", degree, "solution degree bound")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(verify)) return run_verify(p, seed, as_json);
        if (app.got_subcommand(ext1))
            return run_ext1(p, degree, deg_opt->count() > 0, as_json, cross_check);
        if (app.got_subcommand(weil)) return run_weil(p, r, kind, as_json);
        if (app.got_subcommand(omap)) return run_oesterle_map(p, r, lambda, as_json);
        if (app.got_subcommand(wound)) return run_wound(p, poly, bound, nvars, as_json, cross_check);
        if (app.got_subcommand(curve)) return run_curve(p, as_json);
        if (app.got_subcommand(tower)) return run_tower_member(p, level, expr, target, as_json);
        if (app.got_subcommand(semi)) return run_semilinear_solve(p, file, degree, as_json);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
