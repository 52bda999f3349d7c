#include "depsolve.hpp"

#include <algorithm>
#include <set>

#include "error.hpp"
#include "linsolve.hpp"

namespace diffdep {

namespace {

// Pivot preference: minimal operator order, then minimal total coefficient
// degree, then row index.
std::pair<int64_t, int64_t> pivot_key(const OrePoly& e) {
    int64_t ord = e.order().value_or(0);
    int64_t deg = 0;
    for (const auto& [theta, r] : e.coeffs()) {
        for (const auto& [u, c] : r.num().terms()) deg = std::max(deg, u.var_degree());
        for (const auto& [u, c] : r.den().terms()) deg = std::max(deg, u.var_degree());
    }
    return {ord, deg};
}

// Divide a whole row (and its transformation row) by the row's common
// rational content and monomial factor; legal since left multiplication by
// a nonzero scalar of B preserves left dependence.
void reduce_row_pair(std::vector<OrePoly>& row, std::vector<OrePoly>& trow) {
    bool polynomial = true;
    for (const auto& e : row)
        if (!e.has_polynomial_coeffs()) { polynomial = false; break; }
    if (!polynomial) return;
    Rational c(0);
    DiffMonomial g;
    bool first = true;
    for (const auto& e : row) {
        for (const auto& [theta, r] : e.coeffs()) {
            c = Rational::content_gcd(c, r.num().content());
            g = first ? r.num().monomial_content()
                      : DiffMonomial::gcd(g, r.num().monomial_content());
            first = false;
        }
    }
    if (first) return;  // zero row
    if (c.is_one() && g.is_one()) return;
    RatFunc scalar(DiffPoly::from_monomial(row.front().sig(), g, c));
    RatFunc inv = scalar.inv();
    for (auto& e : row) e = e.scale(inv);
    for (auto& e : trow) e = e.scale(inv);
}

// Certificate cleanup: polynomial entries, joint content removed, first
// nonzero entry's leading coefficient positive.
std::vector<OrePoly> normalize_certificate(std::vector<OrePoly> cert) {
    if (cert.empty()) return cert;
    const Signature sig = cert.front().sig();
    std::vector<DiffPoly> dens;
    for (const auto& e : cert) {
        for (const auto& [theta, r] : e.coeffs()) {
            if (r.is_polynomial()) continue;
            bool seen = false;
            for (const auto& d : dens)
                if (d == r.den()) { seen = true; break; }
            if (!seen) dens.push_back(r.den());
        }
    }
    DiffPoly scale = DiffPoly::constant(sig, 1);
    for (const auto& d : dens) scale = scale.mul(d);
    Rational content(0);
    DiffMonomial mono;
    bool first = true;
    std::vector<std::vector<std::pair<DerivOp, DiffPoly>>> cleared(cert.size());
    for (size_t i = 0; i < cert.size(); ++i) {
        for (const auto& [theta, r] : cert[i].coeffs()) {
            auto q = r.num().mul(scale).divide_exact(r.den());
            if (!q) throw Error(ErrKind::Internal, "denominator clearing failed");
            content = Rational::content_gcd(content, q->content());
            mono = first ? q->monomial_content()
                         : DiffMonomial::gcd(mono, q->monomial_content());
            first = false;
            cleared[i].emplace_back(theta, std::move(*q));
        }
    }
    if (first) return cert;  // all zero: nothing to normalize
    int sign = 0;
    std::vector<OrePoly> out;
    out.reserve(cert.size());
    for (auto& entries : cleared) {
        OrePoly e(sig);
        for (auto& [theta, p] : entries) {
            if (!content.is_zero() && !content.is_one()) p = p.divide_scalar(content);
            if (!mono.is_one()) p = p.divide_monomial(mono);
            e = e.add(OrePoly::term(sig, theta, RatFunc(std::move(p))));
        }
        if (sign == 0 && !e.is_zero())
            sign = e.coeffs().rbegin()->second.num().leading_coeff().sign();
        out.push_back(std::move(e));
    }
    if (sign < 0)
        for (auto& e : out) e = e.neg();
    return out;
}

}  // namespace

DependenceVerdict left_dependent(const OreMatrix& m, uint32_t max_ore_order) {
    const Signature sig = m.sig();
    const size_t nrows = m.rows(), ncols = m.cols();
    std::vector<std::vector<OrePoly>> rows;
    rows.reserve(nrows);
    for (size_t i = 0; i < nrows; ++i) rows.push_back(m.row(i));
    // Transformation matrix: trans[i] expresses rows[i] in the originals.
    std::vector<std::vector<OrePoly>> trans(
        nrows, std::vector<OrePoly>(nrows, OrePoly::zero(sig)));
    for (size_t i = 0; i < nrows; ++i) trans[i][i] = OrePoly::one(sig);

    DependenceVerdict verdict;
    auto is_zero_row = [](const std::vector<OrePoly>& row) {
        for (const auto& e : row)
            if (!e.is_zero()) return false;
        return true;
    };
    auto finish_dependent = [&](size_t i) {
        verdict.dependent = true;
        verdict.certificate = normalize_certificate(std::move(trans[i]));
    };
    for (size_t i = 0; i < nrows; ++i) {
        if (is_zero_row(rows[i])) {
            finish_dependent(i);
            return verdict;
        }
    }

    std::vector<bool> locked(nrows, false);
    for (size_t col = 0; col < ncols; ++col) {
        // Pick the pivot among surviving rows with a nonzero entry here.
        std::optional<size_t> pivot;
        for (size_t i = 0; i < nrows; ++i) {
            if (locked[i] || rows[i][col].is_zero()) continue;
            if (!pivot || pivot_key(rows[i][col]) < pivot_key(rows[*pivot][col]))
                pivot = i;
        }
        if (!pivot) continue;
        const size_t p = *pivot;
        locked[p] = true;
        verdict.pivots.emplace_back(static_cast<int>(p), static_cast<int>(col));
        for (size_t i = 0; i < nrows; ++i) {
            if (i == p || locked[i] || rows[i][col].is_zero()) continue;
            auto cm = ore_common_multiple(rows[p][col], rows[i][col], max_ore_order);
            // c*pivot_entry = d*entry, so c*row_p - d*row_i kills the column.
            for (size_t j = 0; j < ncols; ++j)
                rows[i][j] = cm.c.mul(rows[p][j]).sub(cm.d.mul(rows[i][j]));
            for (size_t j = 0; j < nrows; ++j)
                trans[i][j] = cm.c.mul(trans[p][j]).sub(cm.d.mul(trans[i][j]));
            reduce_row_pair(rows[i], trans[i]);
            if (is_zero_row(rows[i])) {
                finish_dependent(i);
                return verdict;
            }
        }
    }
    verdict.dependent = false;
    return verdict;
}

DependenceVerdict diff_alg_dependent(const std::vector<DiffPoly>& fs,
                                     uint32_t max_ore_order) {
    if (fs.empty())
        throw Error(ErrKind::InvalidArgument, "dependence of an empty family");
    return left_dependent(jacobian(fs), max_ore_order);
}

bool verify_certificate(const std::vector<DiffPoly>& fs,
                        const std::vector<OrePoly>& cert) {
    if (fs.size() != cert.size())
        throw Error(ErrKind::Arity, "certificate length does not match inputs");
    bool nontrivial = false;
    for (const auto& b : cert)
        if (!b.is_zero()) { nontrivial = true; break; }
    if (!nontrivial) return false;
    const Signature sig = fs.front().sig();
    std::vector<OrePoly> acc(sig.num_vars, OrePoly::zero(sig));
    for (size_t i = 0; i < fs.size(); ++i) {
        FoxGradient g = fox_gradient(fs[i]);
        for (uint32_t j = 0; j < sig.num_vars; ++j)
            acc[j] = acc[j].add(cert[i].mul(g[j]));
    }
    for (const auto& e : acc)
        if (!e.is_zero()) return false;
    return true;
}

ProlongationRank prolongation_rank(const std::vector<DiffPoly>& fs, uint32_t s) {
    if (fs.empty())
        throw Error(ErrKind::InvalidArgument, "dependence of an empty family");
    const Signature sig = fs.front().sig();
    for (const auto& f : fs) require_same(sig, f.sig());
    std::vector<DerivOp> thetas = DerivOp::up_to_order(sig.num_derivations, s);

    std::vector<DiffPoly> prolonged;
    prolonged.reserve(fs.size() * thetas.size());
    for (const auto& f : fs)
        for (const auto& th : thetas) prolonged.push_back(f.apply_theta(th));

    std::set<DiffVar> vars;
    for (const auto& p : prolonged) p.collect_vars(vars);
    std::vector<DiffVar> cols(vars.begin(), vars.end());

    ProlongationRank out;
    out.count = static_cast<int64_t>(prolonged.size());
    if (cols.empty()) {
        out.rank = 0;  // all prolongations constant
        return out;
    }
    std::vector<std::vector<DiffPoly>> mat;
    mat.reserve(prolonged.size());
    for (const auto& p : prolonged) {
        std::vector<DiffPoly> row;
        row.reserve(cols.size());
        for (const auto& v : cols) row.push_back(p.partial(v));
        mat.push_back(std::move(row));
    }
    out.rank = static_cast<int64_t>(matrix_rank(std::move(mat)));
    return out;
}

}  // namespace diffdep
