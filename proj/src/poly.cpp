#include "woundlab/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace woundlab {

int var_rank(const std::string& v) {
    if (v == "t") return 0;
    if (v == "s") return 1;
    if (v == "a") return 2;
    if (v == "b") return 3;
    return 4;
}

bool var_less(const std::string& u, const std::string& v) {
    int ru = var_rank(u), rv = var_rank(v);
    if (ru != rv) return ru < rv;
    // split into alpha prefix and numeric suffix so x2 < x10
    auto split = [](const std::string& s) {
        size_t i = s.size();
        while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
        long long n = -1;
        if (i < s.size()) n = std::stoll(s.substr(i));
        return std::make_pair(s.substr(0, i), n);
    };
    auto [pu, nu] = split(u);
    auto [pv, nv] = split(v);
    if (pu != pv) return pu < pv;
    return nu < nv;
}

MultiPoly MultiPoly::constant(int p, long long c) {
    MultiPoly r(p);
    int cv = fp_norm(c, p);
    if (cv != 0) r.terms_[{}] = cv;
    return r;
}

MultiPoly MultiPoly::variable(int p, const std::string& name, int exp) {
    MultiPoly r(p);
    if (exp < 0) throw std::invalid_argument("negative exponent");
    if (exp == 0) return constant(p, 1);
    r.vars_ = {name};
    r.terms_[{exp}] = 1 % p;
    return r;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const Exps& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

int MultiPoly::constant_value() const {
    for (const auto& [e, c] : terms_)
        if (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; })) return c;
    return 0;
}

void MultiPoly::insert(const Exps& e, long long c) {
    int cv = fp_norm(c, p_);
    if (cv == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_[e] = cv;
    } else {
        int s = fp_add(it->second, cv, p_);
        if (s == 0)
            terms_.erase(it);
        else
            it->second = s;
    }
}

void MultiPoly::ensure_var(const std::string& name) {
    auto pos = std::lower_bound(vars_.begin(), vars_.end(), name, var_less);
    if (pos != vars_.end() && *pos == name) return;
    size_t idx = static_cast<size_t>(pos - vars_.begin());
    vars_.insert(pos, name);
    std::map<Exps, int> nt;
    for (auto& [e, c] : terms_) {
        Exps ne = e;
        ne.insert(ne.begin() + static_cast<long>(idx), 0);
        nt[ne] = c;
    }
    terms_ = std::move(nt);
}

void MultiPoly::align(MultiPoly& a, MultiPoly& b) {
    for (const auto& v : b.vars_) a.ensure_var(v);
    for (const auto& v : a.vars_) b.ensure_var(v);
}

void MultiPoly::add_term(const std::vector<std::pair<std::string, int>>& monomial, long long coeff) {
    for (const auto& [v, e] : monomial) {
        if (e < 0) throw std::invalid_argument("negative exponent");
        if (e > 0) ensure_var(v);
    }
    Exps e(vars_.size(), 0);
    for (const auto& [v, exp] : monomial) {
        if (exp == 0) continue;
        auto it = std::find(vars_.begin(), vars_.end(), v);
        e[static_cast<size_t>(it - vars_.begin())] += exp;
    }
    insert(e, coeff);
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly a = *this, b = o;
    align(a, b);
    for (const auto& [e, c] : b.terms_) a.insert(e, c);
    return a;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = fp_neg(c, p_);
    return r;
}

MultiPoly MultiPoly::scaled(int c) const {
    c = fp_norm(c, p_);
    MultiPoly r(p_);
    if (c == 0) return r;
    r.vars_ = vars_;
    for (const auto& [e, cc] : terms_) r.terms_[e] = fp_mul(cc, c, p_);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly a = *this, b = o;
    align(a, b);
    MultiPoly r(p_);
    r.vars_ = a.vars_;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exps e = ea;
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            r.insert(e, static_cast<long long>(ca) * cb);
        }
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    MultiPoly a = *this, b = o;
    align(a, b);
    return a.terms_ == b.terms_;
}

MultiPoly MultiPoly::pow(long long e) const {
    if (e < 0) throw std::invalid_argument("negative power of a polynomial");
    MultiPoly r = constant(p_, 1), base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

MultiPoly MultiPoly::derivative(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    MultiPoly r(p_);
    if (it == vars_.end()) return r;
    size_t idx = static_cast<size_t>(it - vars_.begin());
    r.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        if (e[idx] == 0) continue;
        Exps ne = e;
        ne[idx] -= 1;
        r.insert(ne, static_cast<long long>(c) * e[idx]);
    }
    return r;
}

int MultiPoly::degree(const std::string& var) const {
    if (terms_.empty()) return -1;
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return 0;
    size_t idx = static_cast<size_t>(it - vars_.begin());
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
    return d;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

bool MultiPoly::uses(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return false;
    size_t idx = static_cast<size_t>(it - vars_.begin());
    for (const auto& [e, c] : terms_)
        if (e[idx] > 0) return true;
    return false;
}

std::vector<std::string> MultiPoly::support() const {
    std::vector<std::string> out;
    for (size_t i = 0; i < vars_.size(); ++i)
        for (const auto& [e, c] : terms_)
            if (e[i] > 0) {
                out.push_back(vars_[i]);
                break;
            }
    return out;
}

bool MultiPoly::exponents_divisible(int d) const {
    for (const auto& [e, c] : terms_)
        for (int x : e)
            if (x % d != 0) return false;
    return true;
}

MultiPoly MultiPoly::exponent_quotient(int d) const {
    MultiPoly r(p_);
    r.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        Exps ne = e;
        for (int& x : ne) x /= d;
        r.terms_[ne] = c;
    }
    return r;
}

MultiPoly MultiPoly::exponent_scale(int d) const {
    MultiPoly r(p_);
    r.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        Exps ne = e;
        for (int& x : ne) x *= d;
        r.terms_[ne] = c;
    }
    return r;
}

MultiPoly MultiPoly::substitute(const std::string& var, const MultiPoly& repl) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return *this;
    size_t idx = static_cast<size_t>(it - vars_.begin());
    MultiPoly r(p_);
    for (const auto& [e, c] : terms_) {
        MultiPoly term = MultiPoly::constant(p_, c);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (i == idx)
                term = term * repl.pow(e[i]);
            else
                term = term * MultiPoly::variable(p_, vars_[i], e[i]);
        }
        r = r + term;
    }
    return r;
}

MultiPoly MultiPoly::rename_power(const std::string& var, const std::string& newvar, int k) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return *this;
    size_t idx = static_cast<size_t>(it - vars_.begin());
    MultiPoly r(p_);
    for (const auto& [e, c] : terms_) {
        std::vector<std::pair<std::string, int>> mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (i == idx)
                mono.emplace_back(newvar, e[i] * k);
            else
                mono.emplace_back(vars_[i], e[i]);
        }
        MultiPoly term(p_);
        term.add_term(mono, c);
        r = r + term;
    }
    return r;
}

int MultiPoly::leading_coeff() const {
    if (terms_.empty()) return 0;
    // graded lex: max total degree, ties by exponent vector
    auto best = terms_.begin();
    auto deg = [](const Exps& e) {
        int s = 0;
        for (int x : e) s += x;
        return s;
    };
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
        int da = deg(it->first), db = deg(best->first);
        if (da > db || (da == db && it->first > best->first)) best = it;
    }
    return best->second;
}

std::optional<std::vector<int>> MultiPoly::dense_univariate(const std::string& var) const {
    size_t idx = vars_.size();
    for (size_t i = 0; i < vars_.size(); ++i) {
        bool used = false;
        for (const auto& [e, c] : terms_)
            if (e[i] > 0) used = true;
        if (!used) continue;
        if (vars_[i] != var) return std::nullopt;
        idx = i;
    }
    std::vector<int> out;
    if (idx == vars_.size()) { // constant
        int c = constant_value();
        if (c != 0) out.push_back(c);
        return out;
    }
    for (const auto& [e, c] : terms_) {
        size_t d = static_cast<size_t>(e[idx]);
        if (out.size() <= d) out.resize(d + 1, 0);
        out[d] = c;
    }
    return out;
}

MultiPoly MultiPoly::from_dense(int p, const std::string& var, const std::vector<int>& coeffs) {
    MultiPoly r(p);
    for (size_t i = 0; i < coeffs.size(); ++i)
        if (fp_norm(coeffs[i], p) != 0) r.add_term({{var, static_cast<int>(i)}}, coeffs[i]);
    return r;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    // graded lex ascending: total degree, then exponent vector
    std::vector<std::pair<Exps, int>> ts(terms_.begin(), terms_.end());
    auto deg = [](const Exps& e) {
        int s = 0;
        for (int x : e) s += x;
        return s;
    };
    std::sort(ts.begin(), ts.end(), [&](const auto& a, const auto& b) {
        int da = deg(a.first), db = deg(b.first);
        if (da != db) return da < db;
        return a.first < b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : ts) {
        if (!first) os << " + ";
        first = false;
        std::vector<std::string> factors;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (e[i] == 1)
                factors.push_back(vars_[i]);
            else
                factors.push_back(vars_[i] + "^" + std::to_string(e[i]));
        }
        if (factors.empty()) {
            os << c;
        } else {
            if (c != 1) os << c << "*";
            for (size_t i = 0; i < factors.size(); ++i) {
                if (i) os << "*";
                os << factors[i];
            }
        }
    }
    return os.str();
}

// ---- dense univariate helpers ----

std::vector<int> dense_trim(std::vector<int> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

std::vector<int> dense_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
    if (a.empty() || b.empty()) return {};
    std::vector<int> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = fp_norm(r[i + j] + static_cast<long long>(a[i]) * b[j], p);
    return dense_trim(r);
}

std::vector<int> dense_mod(std::vector<int> a, const std::vector<int>& b, int p) {
    a = dense_trim(a);
    if (b.empty()) throw std::domain_error("mod by zero polynomial");
    int lb = b.back();
    int lbi = fp_inv(lb, p);
    while (a.size() >= b.size()) {
        int q = fp_mul(a.back(), lbi, p);
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = fp_sub(a[shift + i], fp_mul(q, b[i], p), p);
        a = dense_trim(a);
        if (a.empty()) break;
    }
    return a;
}

std::vector<int> dense_div(const std::vector<int>& a0, const std::vector<int>& b, int p) {
    std::vector<int> a = dense_trim(a0);
    if (b.empty()) throw std::domain_error("divide by zero polynomial");
    if (a.size() < b.size()) return {};
    std::vector<int> q(a.size() - b.size() + 1, 0);
    int lbi = fp_inv(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
        int c = fp_mul(a.back(), lbi, p);
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = fp_sub(a[shift + i], fp_mul(c, b[i], p), p);
        a = dense_trim(a);
    }
    return dense_trim(q);
}

std::vector<int> dense_gcd(std::vector<int> a, std::vector<int> b, int p) {
    a = dense_trim(a);
    b = dense_trim(b);
    while (!b.empty()) {
        auto r = dense_mod(a, b, p);
        a = b;
        b = r;
    }
    if (!a.empty()) {
        int li = fp_inv(a.back(), p);
        for (int& c : a) c = fp_mul(c, li, p);
    }
    return a;
}

// ---- RatFunc ----

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    reduce();
}

RatFunc::RatFunc(MultiPoly num)
    : num_(std::move(num)), den_(MultiPoly::constant(num_.prime(), 1)) {}

RatFunc RatFunc::constant(int p, long long c) { return RatFunc(MultiPoly::constant(p, c)); }

RatFunc RatFunc::variable(int p, const std::string& name, int exp) {
    return RatFunc(MultiPoly::variable(p, name, exp));
}

void RatFunc::reduce() {
    int p = num_.prime();
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(p, 1);
        return;
    }
    // find a common single variable (or pure constants)
    std::vector<std::string> sup = num_.support();
    for (const auto& v : den_.support())
        if (std::find(sup.begin(), sup.end(), v) == sup.end()) sup.push_back(v);
    if (sup.size() <= 1) {
        std::string var = sup.empty() ? std::string("t") : sup[0];
        auto dn = num_.dense_univariate(var);
        auto dd = den_.dense_univariate(var);
        if (dn && dd) {
            auto g = dense_gcd(*dn, *dd, p);
            if (g.size() > 1 || (g.size() == 1 && g[0] != 1)) {
                *dn = dense_div(*dn, g, p);
                *dd = dense_div(*dd, g, p);
            }
            // monic denominator
            int li = fp_inv(dd->back(), p);
            for (int& c : *dn) c = fp_mul(c, li, p);
            for (int& c : *dd) c = fp_mul(c, li, p);
            num_ = MultiPoly::from_dense(p, var, *dn);
            den_ = MultiPoly::from_dense(p, var, *dd);
            return;
        }
    }
    // multivariate: only scale so the denominator's leading coefficient is 1
    int lc = den_.leading_coeff();
    if (lc != 1) {
        int li = fp_inv(lc, p);
        num_ = num_.scaled(li);
        den_ = den_.scaled(li);
    }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }
RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}
RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inv(); }
RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

bool RatFunc::operator==(const RatFunc& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

RatFunc RatFunc::inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long long e) const {
    if (e < 0) return inv().pow(-e);
    RatFunc r = RatFunc::constant(prime(), 1), base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

RatFunc RatFunc::derivative(const std::string& var) const {
    // quotient rule; denominator squared
    MultiPoly dn = num_.derivative(var) * den_ - num_ * den_.derivative(var);
    return RatFunc(dn, den_ * den_);
}

RatFunc RatFunc::frobenius(int k) const {
    int q = 1;
    for (int i = 0; i < k; ++i) q *= prime();
    return RatFunc(num_.exponent_scale(q), den_.exponent_scale(q));
}

std::optional<RatFunc> RatFunc::pth_root(int k) const {
    int q = 1;
    for (int i = 0; i < k; ++i) q *= prime();
    if (q == 1) return *this;
    if (is_zero()) return *this;
    // reduced form: f = n/d is a q-th power iff all exponents of n and d
    // are divisible by q (coefficients in F_p are fixed by Frobenius)
    if (num_.exponents_divisible(q) && den_.exponents_divisible(q))
        return RatFunc(num_.exponent_quotient(q), den_.exponent_quotient(q));
    // univariate reduced fractions are canonical so the test is exact;
    // multivariate inputs here are always polynomials in practice
    return std::nullopt;
}

RatFunc RatFunc::substitute(const std::string& var, const RatFunc& repl) const {
    int p = prime();
    auto sub_poly = [&](const MultiPoly& mp) {
        RatFunc acc(p);
        auto vars = mp.vars();
        for (const auto& [e, c] : mp.terms()) {
            RatFunc term = RatFunc::constant(p, c);
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (vars[i] == var)
                    term = term * repl.pow(e[i]);
                else
                    term = term * RatFunc::variable(p, vars[i], e[i]);
            }
            acc = acc + term;
        }
        return acc;
    };
    return sub_poly(num_) / sub_poly(den_);
}

RatFunc RatFunc::rename_power(const std::string& var, const std::string& newvar, int k) const {
    return RatFunc(num_.rename_power(var, newvar, k), den_.rename_power(var, newvar, k));
}

std::string RatFunc::str() const {
    if (is_polynomial()) return num_.str();
    auto wrap = [](const MultiPoly& m) {
        std::string s = m.str();
        if (m.terms().size() > 1) return "(" + s + ")";
        return s;
    };
    return wrap(num_) + "/" + wrap(den_);
}

} // namespace woundlab
