#include "woundlab/linalg.hpp"

#include <algorithm>
#include <map>

namespace woundlab {

int poly_matrix_rank(std::vector<std::vector<MultiPoly>> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rows;
        for (size_t r = rank; r < rows; ++r)
            if (!m[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        for (size_t r = rank + 1; r < rows; ++r) {
            if (m[r][col].is_zero()) continue;
            MultiPoly f = m[r][col];
            for (size_t c = col; c < cols; ++c)
                m[r][c] = m[r][c] * m[rank][col] - f * m[rank][c];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

std::vector<std::vector<RatFunc>> ratfunc_nullspace(std::vector<std::vector<RatFunc>> m, int p) {
    size_t rows = m.size();
    size_t cols = rows == 0 ? 0 : m[0].size();
    std::vector<long long> pivot_col;
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rows;
        for (size_t r = rank; r < rows; ++r)
            if (!m[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        RatFunc inv = m[rank][col].inv();
        for (size_t c = col; c < cols; ++c) m[rank][c] = m[rank][c] * inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            RatFunc f = m[r][col];
            for (size_t c = col; c < cols; ++c) m[r][c] = m[r][c] - f * m[rank][c];
        }
        pivot_col.push_back(static_cast<long long>(col));
        ++rank;
    }
    std::vector<std::vector<RatFunc>> basis;
    for (size_t col = 0; col < cols; ++col) {
        if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<long long>(col)) !=
            pivot_col.end())
            continue;
        std::vector<RatFunc> v(cols, RatFunc(MultiPoly(p)));
        v[col] = RatFunc::constant(p, 1);
        for (size_t r = 0; r < rank; ++r)
            v[static_cast<size_t>(pivot_col[r])] = -m[r][col];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<int>> fp_nullspace(std::vector<std::vector<int>> m, int ncols, int p) {
    size_t rows = m.size();
    size_t cols = static_cast<size_t>(ncols);
    std::vector<long long> pivot_col;
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rows;
        for (size_t r = rank; r < rows; ++r)
            if (m[r][col] % p != 0) {
                piv = r;
                break;
            }
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        int inv = fp_inv(m[rank][col], p);
        for (size_t c = col; c < cols; ++c) m[rank][c] = fp_mul(m[rank][c], inv, p);
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || fp_norm(m[r][col], p) == 0) continue;
            int f = fp_norm(m[r][col], p);
            for (size_t c = col; c < cols; ++c)
                m[r][c] = fp_sub(m[r][c], fp_mul(f, m[rank][c], p), p);
        }
        pivot_col.push_back(static_cast<long long>(col));
        ++rank;
    }
    std::vector<std::vector<int>> basis;
    for (size_t col = 0; col < cols; ++col) {
        if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<long long>(col)) !=
            pivot_col.end())
            continue;
        std::vector<int> v(cols, 0);
        v[col] = 1;
        for (size_t r = 0; r < rank; ++r)
            v[static_cast<size_t>(pivot_col[r])] = fp_neg(m[r][col], p);
        basis.push_back(std::move(v));
    }
    return basis;
}

IndependenceResult pth_power_independence(const std::vector<RatFunc>& elements, int d,
                                          const std::vector<std::string>& base_vars) {
    IndependenceResult out;
    if (elements.empty()) return out;
    int p = elements[0].prime();
    long long q = 1;
    for (int i = 0; i < d; ++i) q *= p;

    // Scale each element by its denominator to the q-th power (a q-th power
    // scale does not change dependence over k^q), leaving a polynomial.
    // Then split every monomial by exponent residues mod q: the residue
    // class is the basis monomial, the quotient part carries the q-th root
    // of the k^q coefficient.
    size_t m = elements.size();
    std::map<Exps, size_t> columns;
    struct Cell {
        size_t row, col;
        MultiPoly val;
    };
    std::vector<std::map<size_t, MultiPoly>> rows(m);
    for (size_t i = 0; i < m; ++i) {
        const RatFunc& e = elements[i];
        MultiPoly scaled = e.num() * e.den().pow(q - 1);
        for (const auto& [exps, c] : scaled.terms()) {
            // map exponents into base_vars order
            Exps full(base_vars.size(), 0);
            const auto& svars = scaled.vars();
            for (size_t k = 0; k < exps.size(); ++k) {
                if (exps[k] == 0) continue;
                auto it = std::find(base_vars.begin(), base_vars.end(), svars[k]);
                if (it == base_vars.end())
                    throw std::invalid_argument("element uses variable outside the base field");
                full[static_cast<size_t>(it - base_vars.begin())] = exps[k];
            }
            Exps res(full.size()), quot(full.size());
            for (size_t k = 0; k < full.size(); ++k) {
                res[k] = static_cast<int>(full[k] % q);
                quot[k] = static_cast<int>(full[k] / q);
            }
            auto [cit, fresh] = columns.try_emplace(res, columns.size());
            size_t col = cit->second;
            MultiPoly mono(p);
            std::vector<std::pair<std::string, int>> mv;
            for (size_t k = 0; k < quot.size(); ++k)
                if (quot[k] > 0) mv.emplace_back(base_vars[k], quot[k]);
            mono.add_term(mv, c);
            auto rit = rows[i].find(col);
            if (rit == rows[i].end())
                rows[i].emplace(col, mono);
            else
                rit->second = rit->second + mono;
        }
    }
    size_t ncols = columns.size();
    std::vector<std::vector<MultiPoly>> mat(m, std::vector<MultiPoly>(ncols, MultiPoly(p)));
    for (size_t i = 0; i < m; ++i)
        for (const auto& [col, val] : rows[i]) mat[i][col] = val;
    out.rank = poly_matrix_rank(mat);
    out.independent = (out.rank == static_cast<int>(m));
    if (!out.independent) {
        // left nullspace = right nullspace of the transpose
        std::vector<std::vector<RatFunc>> tr(ncols, std::vector<RatFunc>(m, RatFunc(MultiPoly(p))));
        for (size_t i = 0; i < m; ++i)
            for (const auto& [col, val] : rows[i]) tr[col][i] = RatFunc(val);
        auto ns = ratfunc_nullspace(std::move(tr), p);
        if (!ns.empty()) out.dependence = ns.front();
    }
    return out;
}

} // namespace woundlab
