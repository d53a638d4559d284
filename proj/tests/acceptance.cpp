// Acceptance suite: one pass/fail line per criterion. Expects the path
// to the CLI binary as argv[1].
#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "woundlab/curve.hpp"
#include "woundlab/expr.hpp"
#include "woundlab/oracle.hpp"
#include "woundlab/ppoly.hpp"
#include "woundlab/semilinear.hpp"
#include "woundlab/tower.hpp"
#include "woundlab/weil.hpp"

using namespace woundlab;

namespace {

std::string g_cli;

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    CliResult res;
    std::string cmd = g_cli + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return res;
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), n);
    int status = pclose(pipe);
    res.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return res;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int g_failures = 0;

void report(int index, const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << index << " (" << name << ")"
              << (detail.empty() ? "" : ": " + detail) << "\n";
    if (!ok) ++g_failures;
}

std::string norm_equation(int p, const std::string& rhs) {
    std::ostringstream os;
    for (int i = 0; i < p; ++i) {
        if (i) os << " + ";
        if (i == 1)
            os << "t*";
        else if (i > 1)
            os << "t^" << i << "*";
        os << "a" << i << "^" << p;
    }
    os << " = " << rhs;
    return os.str();
}

void criterion1() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (int p : {3, 5, 7}) {
        auto a = run_cli("weil --kind alpha_p --p " + std::to_string(p) + " --r 1");
        auto m = run_cli("weil --kind mu_p --p " + std::to_string(p) + " --r 1");
        if (a.exit_code != 0 || a.out != norm_equation(p, "0") + "\n") ok = false;
        if (m.exit_code != 0 || m.out != norm_equation(p, "1") + "\n") ok = false;
    }
    double el = seconds_since(start);
    if (el >= 3 * 1.0) ok = false; // < 1 s per invocation pair set
    std::ostringstream d;
    d << "equation reproduction for p in {3,5,7}, " << el << " s";
    report(1, "equation reproduction", ok, d.str());
}

void criterion2() {
    auto start = std::chrono::steady_clock::now();
    auto res = run_cli("oesterle-map --p 3 --lambda \"s\"");
    bool ok = res.exit_code == 0 && res.out == "(0, 0, 1/t)\n";
    // homomorphism property on 200 seeded random pairs
    Sampler rng(2024);
    int failures = 0;
    for (int i = 0; i < 200; ++i) {
        MultClass a(TowerElement(1, RatFunc(rng.nonzero_poly(3, "s", 3, 4))), 1);
        MultClass b(TowerElement(1, RatFunc(rng.nonzero_poly(3, "s", 3, 4))), 1);
        auto ca = log_derivative_coords(a, 3, 1);
        auto cb = log_derivative_coords(b, 3, 1);
        auto cab = log_derivative_coords(a * b, 3, 1);
        for (size_t j = 0; j < ca.size(); ++j)
            if (cab[j] != ca[j] + cb[j]) {
                ++failures;
                break;
            }
    }
    double el = seconds_since(start);
    ok = ok && failures == 0 && el < 5.0;
    std::ostringstream d;
    d << "anchor (0, 0, 1/t), " << failures << " homomorphism failures of 200, " << el << " s";
    report(2, "anchor and homomorphism", ok, d.str());
}

void criterion3() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    for (int p : {3, 5, 7}) {
        auto res = run_cli("ext1 --p " + std::to_string(p) + " --json");
        if (res.exit_code != 0) ok = false;
        if (res.out.find("\"dimension\": 0") == std::string::npos) ok = false;
        if (res.out.find("CompleteByBoundProof") == std::string::npos) ok = false;
    }
    auto cross = run_cli("ext1 --p 3 --degree 1 --cross-check");
    if (cross.exit_code != 0 || cross.out.find("cross-check: ok") == std::string::npos) ok = false;
    auto p7start = std::chrono::steady_clock::now();
    auto deep = run_cli("ext1 --p 7 --degree 10 --json");
    double p7el = seconds_since(p7start);
    if (deep.exit_code != 0 || deep.out.find("\"dimension\": 0") == std::string::npos) ok = false;
    if (p7el >= 10.0) ok = false;
    std::ostringstream d;
    d << "dimension 0 with bound proof for p in {3,5,7}; oracle agreement at p=3, D=1; p=7 D=10 in "
      << p7el << " s (total " << seconds_since(start) << " s)";
    report(3, "Ext^1 vanishing", ok, d.str());
}

void criterion4() {
    bool ok = true;
    std::ostringstream d;
    for (int p : {3, 5, 7}) {
        auto start = std::chrono::steady_clock::now();
        std::ostringstream expr;
        expr << "x1^" << p << " - x0 + t*x0^" << p;
        auto res = run_cli("wound --p " + std::to_string(p) + " --poly \"" + expr.str() + "\"");
        double el = seconds_since(start);
        if (res.exit_code != 0 || res.out.find("WoundCertified") == std::string::npos) ok = false;
        if (el >= 5.0) ok = false;
    }
    {
        auto start = std::chrono::steady_clock::now();
        auto res = run_cli("wound --p 3 --poly \"x0 + a*x0^3 + b*x1^3 + x2^3\"");
        if (res.exit_code != 0 || res.out.find("WoundCertified") == std::string::npos) ok = false;
        if (seconds_since(start) >= 5.0) ok = false;
    }
    auto axis = run_cli("wound --p 3 --poly \"x1\" --nvars 2");
    if (axis.exit_code != 0 || axis.out.find("NotWound") == std::string::npos) ok = false;
    // certificates re-verify: a NotWound witness kills the principal part
    auto g = hypersurface_from_expr("x0 + x0^3 + t^3*x1^3", 3);
    auto v = wound_test(g, 2);
    if (v.kind != WoundVerdict::Kind::NotWound) ok = false;
    std::vector<TowerElement> pt;
    bool nonzero = false;
    for (const auto& w : v.witness) {
        nonzero = nonzero || !w.is_zero();
        pt.push_back(TowerElement::base(w));
    }
    if (!nonzero || !g.equations[0].principal_part().evaluate(pt).is_zero()) ok = false;
    report(4, "woundness certificates", ok,
           "KMT groups wound for p in {3,5,7}; surface wound; hyperplane flagged; witnesses verified");
}

void criterion5() {
    bool ok = true;
    double worst = 0;
    for (int p : {3, 5, 7}) {
        auto start = std::chrono::steady_clock::now();
        auto res = run_cli("curve --p " + std::to_string(p));
        double el = seconds_since(start);
        worst = std::max(worst, el);
        if (res.exit_code != 0) ok = false;
        std::ostringstream genus;
        genus << "arithmetic genus: " << (p + 1) / 2;
        if (res.out.find(genus.str()) == std::string::npos) ok = false;
        if (res.out.find("independent over k: yes") == std::string::npos) ok = false;
        if (res.out.find("singular locus empty: yes") == std::string::npos) ok = false;
        if (res.out.find("genus gap divisible by (p-1)/2: yes") == std::string::npos) ok = false;
        if (el >= 10.0) ok = false;
    }
    std::ostringstream d;
    d << "genus, pullback, independence, regularity, Tate gap for p in {3,5,7}; worst " << worst
      << " s";
    report(5, "curve pipeline", ok, d.str());
}

void criterion6() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    for (int r : {1, 2}) {
        auto rep = intersection_property(3, r, 200, 4, 5);
        if (rep.trials < 200 || rep.violations != 0) ok = false;
        for (auto kind : {FiberKind::Supersingular, FiberKind::Ordinary}) {
            auto h = h_triviality_check(kind, 3, r, 200, 4, 5);
            if (h.trials < 200 || h.violations != 0) ok = false;
        }
    }
    double el = seconds_since(start);
    if (el >= 30.0) ok = false;
    std::ostringstream d;
    d << "intersection + triviality, 200 samples each, r in {1,2}, " << el << " s";
    report(6, "tower properties", ok, d.str());
}

void criterion7() {
    bool ok = true;
    // kernel_bounded vs enumeration on every in-cap system used in tests
    std::vector<SemilinearSystem> systems;
    systems.push_back(kmt_system(3));
    {
        SemilinearSystem s;
        s.p = 3;
        s.nunknowns = 1;
        s.equations.push_back({{0, 1, RatFunc::constant(3, 1)}, {0, 0, RatFunc::constant(3, -1)}});
        systems.push_back(s);
        SemilinearSystem s2;
        s2.p = 3;
        s2.nunknowns = 2;
        s2.equations.push_back({{0, 1, RatFunc::constant(3, 1)}, {1, 0, RatFunc::constant(3, -1)}});
        s2.equations.push_back({{1, 1, RatFunc::constant(3, 1)}});
        systems.push_back(s2);
    }
    for (const auto& sys : systems) {
        for (int d = 0; d <= 1; ++d) {
            SearchSpace space{sys.nunknowns, d, sys.p};
            auto sols = enumerate_solutions(
                [&](const std::vector<RatFunc>& tup) { return sys.satisfied(tup); }, space);
            auto basis = kernel_bounded(sys, d);
            long long expect = 1;
            for (int i = 0; i < basis.dimension(); ++i) expect *= sys.p;
            if (static_cast<long long>(sols.size()) != expect) ok = false;
        }
    }
    // wound_test bounded agreement at p=3, B=2
    for (const std::string& text :
         {std::string("x1^3 - x0 + t*x0^3"), std::string("x0 + x0^3 + t^3*x1^3"),
          std::string("x0 + x0^3 + x1^3")}) {
        auto g = hypersurface_from_expr(text, 3);
        auto v = wound_test(g, 2);
        const PPolynomial pp = g.equations[0].principal_part();
        SearchSpace space{g.nvars(), 2, 3};
        auto zeros = enumerate_solutions(
            [&](const std::vector<RatFunc>& tup) {
                bool nonzero = false;
                std::vector<TowerElement> pt;
                for (const auto& c : tup) {
                    nonzero = nonzero || !c.is_zero();
                    pt.push_back(TowerElement::base(c));
                }
                return nonzero && pp.evaluate(pt).is_zero();
            },
            space);
        bool wound = v.kind == WoundVerdict::Kind::WoundCertified;
        if (wound != zeros.empty()) ok = false;
        if (v.kind == WoundVerdict::Kind::UnknownAtBound) ok = false;
    }
    report(7, "oracle equivalence", ok, "solver vs enumeration on all in-cap systems");
}

void criterion8() {
    auto a = run_cli("verify --p 3 --seed 1 --json");
    auto b = run_cli("verify --p 3 --seed 1 --json");
    bool ok = a.exit_code == 0 && b.exit_code == 0 && a.out == b.out && !a.out.empty();
    std::ostringstream d;
    d << "two verify runs, " << a.out.size() << " bytes, byte-identical: "
      << (a.out == b.out ? "yes" : "no");
    report(8, "determinism", ok, d.str());
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli>\n";
        return 2;
    }
    g_cli = argv[1];
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    if (g_failures) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all 8 criteria passed\n";
    return 0;
}
