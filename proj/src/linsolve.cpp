#include "linsolve.hpp"

#include <algorithm>

#include "error.hpp"

namespace diffdep {

namespace {

// Divide a row by its rational content and common monomial factor.
void reduce_row(std::vector<DiffPoly>& row) {
    Rational c(0);
    for (const auto& p : row) c = Rational::content_gcd(c, p.content());
    if (!c.is_zero() && !c.is_one())
        for (auto& p : row) p = p.divide_scalar(c);
    DiffMonomial g;
    bool first = true;
    for (const auto& p : row) {
        if (p.is_zero()) continue;
        g = first ? p.monomial_content() : DiffMonomial::gcd(g, p.monomial_content());
        first = false;
        if (g.is_one()) break;
    }
    if (!first && !g.is_one())
        for (auto& p : row)
            if (!p.is_zero()) p = p.divide_monomial(g);
}

size_t term_weight(const std::vector<DiffPoly>& row) {
    size_t w = 0;
    for (const auto& p : row) w += p.term_count();
    return w;
}

}  // namespace

Echelon echelon_fraction_free(std::vector<std::vector<DiffPoly>> mat) {
    Echelon e;
    e.cols = mat.empty() ? 0 : mat.front().size();
    for (auto& row : mat) reduce_row(row);
    size_t next_row = 0;
    std::optional<DiffPoly> prev_pivot;
    for (size_t col = 0; col < e.cols && next_row < mat.size(); ++col) {
        // Lightest nonzero entry in this column among the remaining rows.
        std::optional<size_t> pick;
        for (size_t r = next_row; r < mat.size(); ++r) {
            if (mat[r][col].is_zero()) continue;
            if (!pick || term_weight(mat[r]) < term_weight(mat[*pick])) pick = r;
        }
        if (!pick) continue;
        std::swap(mat[next_row], mat[*pick]);
        const DiffPoly pivot = mat[next_row][col];
        for (size_t r = next_row + 1; r < mat.size(); ++r) {
            if (mat[r][col].is_zero()) continue;
            const DiffPoly factor = mat[r][col];
            for (size_t j = 0; j < e.cols; ++j) {
                DiffPoly upd = pivot.mul(mat[r][j]).sub(factor.mul(mat[next_row][j]));
                // Bareiss: exact division by the previous pivot bounds growth.
                if (prev_pivot) {
                    if (auto q = upd.divide_exact(*prev_pivot)) upd = std::move(*q);
                }
                mat[r][j] = std::move(upd);
            }
            reduce_row(mat[r]);
        }
        e.pivots.emplace_back(next_row, col);
        prev_pivot = pivot;
        ++next_row;
    }
    e.mat = std::move(mat);
    return e;
}

size_t matrix_rank(std::vector<std::vector<DiffPoly>> mat) {
    return echelon_fraction_free(std::move(mat)).pivots.size();
}

std::optional<std::vector<RatFunc>> first_kernel_vector(const Echelon& e) {
    if (e.pivots.size() >= e.cols) return std::nullopt;
    if (e.mat.empty() || e.mat.front().empty())
        throw Error(ErrKind::Internal, "kernel of an empty matrix");
    Signature sig = e.mat.front().front().sig();

    std::vector<bool> is_pivot_col(e.cols, false);
    for (auto [r, c] : e.pivots) is_pivot_col[c] = true;
    size_t free_col = 0;
    while (free_col < e.cols && is_pivot_col[free_col]) ++free_col;

    std::vector<RatFunc> v(e.cols, RatFunc::zero(sig));
    v[free_col] = RatFunc::one(sig);
    for (size_t k = e.pivots.size(); k-- > 0;) {
        auto [r, c] = e.pivots[k];
        RatFunc acc = RatFunc::zero(sig);
        for (size_t j = c + 1; j < e.cols; ++j) {
            if (e.mat[r][j].is_zero() || v[j].is_zero()) continue;
            acc = acc.add(RatFunc(e.mat[r][j]).mul(v[j]));
        }
        v[c] = acc.neg().div(RatFunc(e.mat[r][c]));
    }
    return v;
}

std::vector<DiffPoly> normalize_to_polynomial(const std::vector<RatFunc>& v) {
    if (v.empty()) return {};
    Signature sig = v.front().sig();
    // Clear denominators: multiply through by each distinct denominator,
    // then divide each entry by its own (the quotient is exact).
    std::vector<DiffPoly> dens;
    for (const auto& r : v) {
        if (r.is_zero() || r.is_polynomial()) continue;
        bool seen = false;
        for (const auto& d : dens)
            if (d == r.den()) { seen = true; break; }
        if (!seen) dens.push_back(r.den());
    }
    DiffPoly scale = DiffPoly::constant(sig, 1);
    for (const auto& d : dens) scale = scale.mul(d);
    std::vector<DiffPoly> out;
    out.reserve(v.size());
    for (const auto& r : v) {
        auto q = r.num().mul(scale).divide_exact(r.den());
        if (!q) throw Error(ErrKind::Internal, "denominator clearing failed");
        out.push_back(std::move(*q));
    }
    // Joint content reduction.
    Rational c(0);
    for (const auto& p : out) c = Rational::content_gcd(c, p.content());
    DiffMonomial g;
    bool first = true;
    for (const auto& p : out) {
        if (p.is_zero()) continue;
        g = first ? p.monomial_content() : DiffMonomial::gcd(g, p.monomial_content());
        first = false;
    }
    int sign = 0;
    for (auto& p : out) {
        if (p.is_zero()) continue;
        if (!c.is_zero() && !c.is_one()) p = p.divide_scalar(c);
        if (!g.is_one()) p = p.divide_monomial(g);
        if (sign == 0) sign = p.leading_coeff().sign();
    }
    if (sign < 0)
        for (auto& p : out) p = p.neg();
    return out;
}

}  // namespace diffdep
