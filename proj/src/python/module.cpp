#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "woundlab/curve.hpp"
#include "woundlab/expr.hpp"
#include "woundlab/ppoly.hpp"
#include "woundlab/semilinear.hpp"
#include "woundlab/tower.hpp"
#include "woundlab/verify.hpp"
#include "woundlab/weil.hpp"

namespace py = pybind11;
using namespace woundlab;

namespace {

PresentationBundle bundle_for(const std::string& kind, int p, int r) {
    if (kind == "alpha_p") return weil_alpha_p(p, r);
    if (kind == "mu_p") return weil_mu_p(p, r);
    if (kind == "oesterle") return oesterle_group(p, r);
    if (kind == "fiber-ss") return fiber_h(FiberKind::Supersingular, p, r);
    if (kind == "fiber-ord") return fiber_h(FiberKind::Ordinary, p, r);
    throw std::invalid_argument("unknown kind: " + kind);
}

} // namespace

PYBIND11_MODULE(_woundlab, m) {
    m.doc() = "exact arithmetic for wound unipotent groups over F_p(t)";

    m.def(
        "simplify",
        [](const std::string& expr, int p) { return parse_ratfunc(expr, p).str(); },
        py::arg("expr"), py::arg("p") = 3,
        "canonical form of a rational expression over F_p");

    m.def(
        "weil_equations",
        [](const std::string& kind, int p, int r) { return bundle_for(kind, p, r).equation_strings(); },
        py::arg("kind"), py::arg("p") = 3, py::arg("r") = 1,
        "defining equations of a restriction-of-scalars presentation");

    m.def(
        "oesterle_map",
        [](const std::string& lambda, int p, int r) {
            RatFunc f = parse_ratfunc(lambda, p);
            TowerElement e = f.uses("s") ? TowerElement(r, f) : TowerElement::base(f);
            auto coords = log_derivative_coords(MultClass(e, r), p, r);
            std::vector<std::string> out;
            for (const auto& c : coords) out.push_back(c.str());
            return out;
        },
        py::arg("lambda_"), py::arg("p") = 3, py::arg("r") = 1,
        "coordinates of a multiplicative class in U_r");

    m.def(
        "wound_test",
        [](const std::string& poly, int p, int bound, int nvars) {
            auto v = wound_test(hypersurface_from_expr(poly, p, nvars), bound);
            py::dict d;
            d["verdict"] = v.kind == WoundVerdict::Kind::WoundCertified ? "WoundCertified"
                           : v.kind == WoundVerdict::Kind::NotWound    ? "NotWound"
                                                                       : "UnknownAtBound";
            d["certificate"] = v.certificate;
            std::vector<std::string> w;
            for (const auto& x : v.witness) w.push_back(x.str());
            d["witness"] = w;
            return d;
        },
        py::arg("poly"), py::arg("p") = 3, py::arg("bound") = 2, py::arg("nvars") = 0,
        "woundness of the hypersurface {poly = 0} in x0..xN");

    m.def(
        "ext1_dimension",
        [](int p) {
            auto proof = kmt_degree_bound(p);
            auto basis = kernel_bounded(kmt_system(p), proof.bound);
            py::dict d;
            d["dimension"] = basis.dimension();
            d["degree_bound"] = proof.bound;
            d["complete"] = proof.proved();
            return d;
        },
        py::arg("p") = 3, "dimension of Ext^1(U, G_m) for the KMT group");

    m.def(
        "tower_member",
        [](const std::string& expr, int p, int level, int target) {
            RatFunc f = parse_ratfunc(expr, p);
            TowerElement e = level == 0 ? TowerElement::base(f) : TowerElement(level, f);
            return e.member(target);
        },
        py::arg("expr"), py::arg("p") = 3, py::arg("level") = 1, py::arg("target") = 0,
        "does the element lie in k(t^(1/p^target))?");

    m.def(
        "curve_pipeline",
        [](int p) {
            CurveModel curve(p);
            auto coeffs = pullback_coefficients(p);
            auto jac = jacobian_criterion({curve.defining_polynomial()}, {"x", "y"}, {"t"});
            py::dict d;
            d["genus"] = arithmetic_genus(p);
            std::vector<std::string> cs;
            for (const auto& c : coeffs) cs.push_back(c.str());
            d["pullback_coefficients"] = cs;
            d["independent_over_k"] = independence_over_k(coeffs);
            d["regular"] = jac.empty;
            d["trace"] = jac.trace;
            d["tate_gap"] = tate_gap_check(arithmetic_genus(p), 1, p);
            return d;
        },
        py::arg("p") = 3, "the full hyperelliptic-model pipeline");

    m.def(
        "verify",
        [](int p, std::uint64_t seed) {
            auto rep = verify_all(p, seed);
            py::list out;
            for (const auto& c : rep.checks) {
                py::dict d;
                d["name"] = c.name;
                d["anchor"] = c.anchor;
                d["status"] = status_str(c.status);
                d["details"] = c.details;
                out.append(d);
            }
            return out;
        },
        py::arg("p") = 3, py::arg("seed") = 0, "run every anchored check");
}
