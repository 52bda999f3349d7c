#include "orepoly.hpp"

#include "error.hpp"

namespace diffdep {

OrePoly OrePoly::one(Signature sig) {
    return term(sig, DerivOp(sig.num_derivations), RatFunc::one(sig));
}

OrePoly OrePoly::scalar(RatFunc r) {
    Signature sig = r.sig();
    return term(sig, DerivOp(sig.num_derivations), std::move(r));
}

OrePoly OrePoly::delta(Signature sig, uint32_t i) {
    return term(sig, DerivOp::delta(sig.num_derivations, i), RatFunc::one(sig));
}

OrePoly OrePoly::term(Signature sig, DerivOp theta, RatFunc coeff) {
    require_same(sig, coeff.sig());
    if (theta.arity() != sig.num_derivations)
        throw Error(ErrKind::SignatureMismatch, "derivative operator arity mismatch");
    OrePoly p(sig);
    if (!coeff.is_zero()) p.coeffs_.emplace(std::move(theta), std::move(coeff));
    return p;
}

std::optional<uint32_t> OrePoly::order() const {
    if (is_zero()) return std::nullopt;
    uint32_t o = 0;
    for (const auto& [theta, r] : coeffs_) o = std::max(o, theta.order());
    return o;
}

bool OrePoly::has_polynomial_coeffs() const {
    for (const auto& [theta, r] : coeffs_)
        if (!r.is_polynomial()) return false;
    return true;
}

void OrePoly::add_term(const DerivOp& theta, const RatFunc& r) {
    if (r.is_zero()) return;
    auto it = coeffs_.find(theta);
    if (it == coeffs_.end()) {
        coeffs_.emplace(theta, r);
    } else {
        RatFunc s = it->second.add(r);
        if (s.is_zero())
            coeffs_.erase(it);
        else
            it->second = std::move(s);
    }
}

OrePoly OrePoly::add(const OrePoly& o) const {
    require_same(sig_, o.sig_);
    OrePoly r = *this;
    for (const auto& [theta, c] : o.coeffs_) r.add_term(theta, c);
    return r;
}

OrePoly OrePoly::sub(const OrePoly& o) const {
    require_same(sig_, o.sig_);
    OrePoly r = *this;
    for (const auto& [theta, c] : o.coeffs_) r.add_term(theta, c.neg());
    return r;
}

OrePoly OrePoly::neg() const {
    OrePoly r(sig_);
    for (const auto& [theta, c] : coeffs_) r.coeffs_.emplace(theta, c.neg());
    return r;
}

OrePoly OrePoly::mul(const OrePoly& o) const {
    require_same(sig_, o.sig_);
    const uint32_t m = sig_.num_derivations;
    OrePoly out(sig_);
    for (const auto& [theta, r] : coeffs_) {
        for (const auto& [sigma, s] : o.coeffs_) {
            // theta * s = sum over tau <= theta of binom(theta,tau) * tau(s)
            // * (theta/tau), expanded componentwise over the m derivations.
            struct Item {
                std::vector<uint32_t> tau;
                Rational coeff;
                RatFunc value;
            };
            std::vector<Item> items{{std::vector<uint32_t>(m, 0), Rational(1), s}};
            for (uint32_t slot = 0; slot < m; ++slot) {
                std::vector<Item> next;
                for (const auto& it : items) {
                    RatFunc value = it.value;
                    for (uint32_t j = 0; j <= theta.exp(slot); ++j) {
                        Item ni = it;
                        ni.tau[slot] = j;
                        ni.coeff = it.coeff * Rational::binomial(theta.exp(slot), j);
                        ni.value = value;
                        next.push_back(std::move(ni));
                        if (j < theta.exp(slot)) value = value.derive(slot + 1);
                    }
                }
                items = std::move(next);
            }
            for (const auto& it : items) {
                DerivOp tau(it.tau);
                DerivOp rest = theta.divide_by(tau).times(sigma);
                out.add_term(rest, r.mul(it.value.scale(it.coeff)));
            }
        }
    }
    return out;
}

OrePoly OrePoly::pow(uint64_t e) const {
    OrePoly r = one(sig_);
    OrePoly base = *this;
    while (e > 0) {
        if (e & 1) r = r.mul(base);
        e >>= 1;
        if (e) base = base.mul(base);
    }
    return r;
}

OrePoly OrePoly::scale(const RatFunc& r) const {
    require_same(sig_, r.sig());
    OrePoly out(sig_);
    if (r.is_zero()) return out;
    for (const auto& [theta, c] : coeffs_) out.add_term(theta, r.mul(c));
    return out;
}

RatFunc OrePoly::apply(const RatFunc& f) const {
    require_same(sig_, f.sig());
    RatFunc out = RatFunc::zero(sig_);
    for (const auto& [theta, r] : coeffs_) out = out.add(r.mul(f.apply_theta(theta)));
    return out;
}

std::string OrePoly::str() const {
    if (is_zero()) return "0";
    std::string s;
    // Highest operator first.
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const DerivOp& theta = it->first;
        const RatFunc& c = it->second;
        bool neg = false;
        std::string cs;
        if (c.is_polynomial()) {
            const DiffPoly& p = c.num();
            if (p.term_count() == 1) {
                DiffPoly a = p.leading_coeff().sign() < 0 ? p.neg() : p;
                neg = p.leading_coeff().sign() < 0;
                cs = a.str();
            } else {
                cs = "(" + p.str() + ")";
            }
        } else {
            cs = c.str();
        }
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        if (theta.is_identity()) {
            s += cs;
        } else if (cs == "1") {
            s += theta.str();
        } else {
            s += cs + "*" + theta.str();
        }
    }
    return s;
}

OreMatrix::OreMatrix(std::vector<std::vector<OrePoly>> rows) : rows_(std::move(rows)) {
    if (rows_.empty() || rows_.front().empty())
        throw Error(ErrKind::InvalidArgument, "matrix must be nonempty");
    sig_ = rows_.front().front().sig();
    for (const auto& row : rows_) {
        if (row.size() != rows_.front().size())
            throw Error(ErrKind::InvalidArgument, "matrix rows have unequal length");
        for (const auto& e : row) require_same(sig_, e.sig());
    }
}

}  // namespace diffdep
