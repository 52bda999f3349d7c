#include <algorithm>

#include "linsolve.hpp"
#include "orepoly.hpp"

namespace diffdep {

namespace {

// Unknowns are c_theta then d_theta, both enumerated in the graded order;
// one equation per derivative operator occurring in any product.
std::optional<std::pair<OrePoly, OrePoly>> search_level(
    const OrePoly& a, const OrePoly& b,
    const std::vector<OrePoly>& prod_a, const std::vector<OrePoly>& prod_b,
    const std::vector<DerivOp>& thetas) {
    const Signature sig = a.sig();
    std::vector<DerivOp> rows;
    {
        std::map<DerivOp, size_t, DerivOpLess> index;
        for (const auto& p : prod_a)
            for (const auto& [s, r] : p.coeffs()) index.emplace(s, 0);
        for (const auto& p : prod_b)
            for (const auto& [s, r] : p.coeffs()) index.emplace(s, 0);
        size_t i = 0;
        for (auto& [s, idx] : index) {
            idx = i++;
            rows.push_back(s);
        }
    }
    const size_t n_theta = thetas.size();
    const size_t n_cols = 2 * n_theta;
    std::vector<std::vector<DiffPoly>> mat(
        rows.size(), std::vector<DiffPoly>(n_cols, DiffPoly::zero(sig)));
    std::vector<std::vector<RatFunc>> ratrows(
        rows.size(), std::vector<RatFunc>(n_cols, RatFunc::zero(sig)));
    auto row_of = [&](const DerivOp& s) {
        return static_cast<size_t>(
            std::lower_bound(rows.begin(), rows.end(), s) - rows.begin());
    };
    for (size_t t = 0; t < n_theta; ++t) {
        for (const auto& [s, r] : prod_a[t].coeffs()) ratrows[row_of(s)][t] = r;
        for (const auto& [s, r] : prod_b[t].coeffs())
            ratrows[row_of(s)][n_theta + t] = r.neg();
    }
    // Scale each equation by its denominators to keep the matrix polynomial.
    for (size_t i = 0; i < ratrows.size(); ++i) {
        std::vector<DiffPoly> dens;
        for (const auto& r : ratrows[i]) {
            if (r.is_zero() || r.is_polynomial()) continue;
            bool seen = false;
            for (const auto& d : dens)
                if (d == r.den()) { seen = true; break; }
            if (!seen) dens.push_back(r.den());
        }
        DiffPoly scale = DiffPoly::constant(sig, 1);
        for (const auto& d : dens) scale = scale.mul(d);
        for (size_t j = 0; j < n_cols; ++j) {
            const RatFunc& r = ratrows[i][j];
            if (r.is_zero()) continue;
            auto q = r.num().mul(scale).divide_exact(r.den());
            if (!q) throw Error(ErrKind::Internal, "denominator clearing failed");
            mat[i][j] = std::move(*q);
        }
    }

    auto ech = echelon_fraction_free(std::move(mat));
    auto kern = first_kernel_vector(ech);
    if (!kern) return std::nullopt;
    std::vector<DiffPoly> sol = normalize_to_polynomial(*kern);
    OrePoly c(sig), d(sig);
    for (size_t t = 0; t < n_theta; ++t) {
        if (!sol[t].is_zero())
            c = c.add(OrePoly::term(sig, thetas[t], RatFunc(sol[t])));
        if (!sol[n_theta + t].is_zero())
            d = d.add(OrePoly::term(sig, thetas[t], RatFunc(sol[n_theta + t])));
    }
    return std::make_pair(std::move(c), std::move(d));
}

}  // namespace

std::optional<std::pair<OrePoly, OrePoly>> ore_common_multiple_at(
    const OrePoly& a, const OrePoly& b, uint32_t s) {
    require_same(a.sig(), b.sig());
    if (a.is_zero() || b.is_zero())
        throw Error(ErrKind::InvalidArgument, "common multiple of a zero operator");
    std::vector<DerivOp> thetas =
        DerivOp::up_to_order(a.sig().num_derivations, s);
    std::vector<OrePoly> prod_a, prod_b;
    prod_a.reserve(thetas.size());
    prod_b.reserve(thetas.size());
    for (const auto& th : thetas) {
        OrePoly op = OrePoly::term(a.sig(), th, RatFunc::one(a.sig()));
        prod_a.push_back(op.mul(a));
        prod_b.push_back(op.mul(b));
    }
    return search_level(a, b, prod_a, prod_b, thetas);
}

OreCommonMultiple ore_common_multiple(const OrePoly& a, const OrePoly& b,
                                      uint32_t max_order) {
    require_same(a.sig(), b.sig());
    if (a.is_zero() || b.is_zero())
        throw Error(ErrKind::InvalidArgument, "common multiple of a zero operator");
    for (uint32_t s = 0; s <= max_order; ++s) {
        if (auto cd = ore_common_multiple_at(a, b, s))
            return OreCommonMultiple{std::move(cd->first), std::move(cd->second), s};
    }
    throw Error(ErrKind::Resource,
                "common left multiple search exceeded order cap " +
                    std::to_string(max_order));
}

}  // namespace diffdep
