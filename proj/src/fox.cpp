#include "fox.hpp"

#include "error.hpp"

namespace diffdep {

FoxGradient fox_gradient(const DiffPoly& f) {
    const Signature sig = f.sig();
    FoxGradient g(sig.num_vars, OrePoly::zero(sig));
    for (const auto& [u, c] : f.terms()) {
        // Product rule over the factors: each x_j^theta contributes
        // e * (u / x_j^theta) * theta in slot j.
        for (const auto& [v, e] : u.factors()) {
            DiffPoly coeff =
                DiffPoly::from_monomial(sig, u.without_one(v),
                                        c * Rational(static_cast<long>(e)));
            g[v.var - 1] = g[v.var - 1].add(
                OrePoly::term(sig, v.theta, RatFunc(std::move(coeff))));
        }
    }
    return g;
}

FoxGradient fox_gradient(const RatFunc& f) {
    // d(p/q) = (1/q) d(p) - (p/q^2) d(q), with scalars acting on the left.
    const Signature sig = f.sig();
    FoxGradient gp = fox_gradient(f.num());
    if (f.is_polynomial()) return gp;
    FoxGradient gq = fox_gradient(f.den());
    RatFunc inv_q = RatFunc(f.den()).inv();
    RatFunc p_over_q2 = RatFunc(f.num(), f.den().mul(f.den()));
    FoxGradient g(sig.num_vars, OrePoly::zero(sig));
    for (uint32_t j = 0; j < sig.num_vars; ++j)
        g[j] = gp[j].scale(inv_q).sub(gq[j].scale(p_over_q2));
    return g;
}

OreMatrix jacobian(const std::vector<DiffPoly>& fs) {
    if (fs.empty()) throw Error(ErrKind::InvalidArgument, "jacobian of nothing");
    std::vector<std::vector<OrePoly>> rows;
    rows.reserve(fs.size());
    for (const auto& f : fs) {
        require_same(fs.front().sig(), f.sig());
        rows.push_back(fox_gradient(f));
    }
    return OreMatrix(std::move(rows));
}

OreMatrix jacobian(const std::vector<RatFunc>& fs) {
    if (fs.empty()) throw Error(ErrKind::InvalidArgument, "jacobian of nothing");
    std::vector<std::vector<OrePoly>> rows;
    rows.reserve(fs.size());
    for (const auto& f : fs) {
        require_same(fs.front().sig(), f.sig());
        rows.push_back(fox_gradient(f));
    }
    return OreMatrix(std::move(rows));
}

std::vector<OrePoly> row_times_matrix(const std::vector<OrePoly>& row,
                                      const OreMatrix& m) {
    if (row.size() != m.rows())
        throw Error(ErrKind::Arity, "row length does not match matrix rows");
    std::vector<OrePoly> out;
    out.reserve(m.cols());
    for (size_t j = 0; j < m.cols(); ++j) {
        OrePoly acc = OrePoly::zero(m.sig());
        for (size_t i = 0; i < row.size(); ++i) acc = acc.add(row[i].mul(m.at(i, j)));
        out.push_back(std::move(acc));
    }
    return out;
}

}  // namespace diffdep
