#include "diffpoly.hpp"

#include <algorithm>

#include "error.hpp"

namespace diffdep {

std::string DiffVar::str(uint32_t num_derivations) const {
    std::string s = "x" + std::to_string(var);
    uint32_t ord = theta.order();
    if (ord == 0) return s;
    if (num_derivations == 1) {
        s.append(ord, '\'');
        return s;
    }
    s += "^[";
    for (uint32_t i = 0; i < num_derivations; ++i) {
        if (i) s += ",";
        s += std::to_string(theta.exp(i));
    }
    s += "]";
    return s;
}

DiffMonomial DiffMonomial::var(DiffVar v, uint32_t exp) {
    DiffMonomial u;
    if (exp > 0) u.factors_.push_back({std::move(v), exp});
    return u;
}

DiffMonomial DiffMonomial::times(const DiffMonomial& o) const {
    DiffMonomial r;
    r.factors_.reserve(factors_.size() + o.factors_.size());
    size_t i = 0, j = 0;
    while (i < factors_.size() && j < o.factors_.size()) {
        int c = DiffVar::cmp(factors_[i].first, o.factors_[j].first);
        if (c > 0) {
            r.factors_.push_back(factors_[i++]);
        } else if (c < 0) {
            r.factors_.push_back(o.factors_[j++]);
        } else {
            r.factors_.push_back({factors_[i].first,
                                  factors_[i].second + o.factors_[j].second});
            ++i, ++j;
        }
    }
    for (; i < factors_.size(); ++i) r.factors_.push_back(factors_[i]);
    for (; j < o.factors_.size(); ++j) r.factors_.push_back(o.factors_[j]);
    return r;
}

bool DiffMonomial::divides(const DiffMonomial& o) const {
    size_t j = 0;
    for (const auto& [v, e] : factors_) {
        while (j < o.factors_.size() && DiffVar::cmp(o.factors_[j].first, v) > 0) ++j;
        if (j >= o.factors_.size() || !(o.factors_[j].first == v) ||
            o.factors_[j].second < e)
            return false;
    }
    return true;
}

DiffMonomial DiffMonomial::divide_by(const DiffMonomial& o) const {
    DiffMonomial r;
    size_t j = 0;
    for (const auto& [v, e] : factors_) {
        uint32_t sub = 0;
        while (j < o.factors_.size() && DiffVar::cmp(o.factors_[j].first, v) > 0)
            throw Error(ErrKind::Internal, "monomial does not divide");
        if (j < o.factors_.size() && o.factors_[j].first == v) sub = o.factors_[j++].second;
        if (sub > e) throw Error(ErrKind::Internal, "monomial does not divide");
        if (e - sub > 0) r.factors_.push_back({v, e - sub});
    }
    if (j < o.factors_.size()) throw Error(ErrKind::Internal, "monomial does not divide");
    return r;
}

DiffMonomial DiffMonomial::gcd(const DiffMonomial& a, const DiffMonomial& b) {
    DiffMonomial r;
    size_t i = 0, j = 0;
    while (i < a.factors_.size() && j < b.factors_.size()) {
        int c = DiffVar::cmp(a.factors_[i].first, b.factors_[j].first);
        if (c > 0) {
            ++i;
        } else if (c < 0) {
            ++j;
        } else {
            r.factors_.push_back({a.factors_[i].first,
                                  std::min(a.factors_[i].second, b.factors_[j].second)});
            ++i, ++j;
        }
    }
    return r;
}

DiffMonomial DiffMonomial::without_one(const DiffVar& v) const {
    DiffMonomial r;
    bool found = false;
    for (const auto& f : factors_) {
        if (f.first == v) {
            found = true;
            if (f.second > 1) r.factors_.push_back({f.first, f.second - 1});
        } else {
            r.factors_.push_back(f);
        }
    }
    if (!found) throw Error(ErrKind::Internal, "factor not present in monomial");
    return r;
}

uint32_t DiffMonomial::exponent_of(const DiffVar& v) const {
    for (const auto& f : factors_)
        if (f.first == v) return f.second;
    return 0;
}

int64_t DiffMonomial::var_degree() const {
    int64_t d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
}

int64_t DiffMonomial::deriv_weight() const {
    int64_t d = 0;
    for (const auto& f : factors_)
        d += static_cast<int64_t>(f.second) * f.first.theta.order();
    return d;
}

int64_t DiffMonomial::degree_in_var(uint32_t var) const {
    int64_t d = 0;
    for (const auto& f : factors_)
        if (f.first.var == var) d += f.second;
    return d;
}

int DiffMonomial::cmp(const DiffMonomial& a, const DiffMonomial& b) {
    int64_t da = a.var_degree(), db = b.var_degree();
    if (da != db) return da < db ? -1 : 1;
    size_t i = 0;
    for (; i < a.factors_.size() && i < b.factors_.size(); ++i) {
        int c = DiffVar::cmp(a.factors_[i].first, b.factors_[i].first);
        if (c != 0) return c;
        if (a.factors_[i].second != b.factors_[i].second)
            return a.factors_[i].second < b.factors_[i].second ? -1 : 1;
    }
    if (i < a.factors_.size()) return 1;
    if (i < b.factors_.size()) return -1;
    return 0;
}

std::string DiffMonomial::str(uint32_t num_derivations) const {
    if (is_one()) return "1";
    std::string s;
    for (const auto& [v, e] : factors_) {
        if (!s.empty()) s += "*";
        s += v.str(num_derivations);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

DiffPoly DiffPoly::constant(Signature sig, Rational c) {
    DiffPoly p(sig);
    if (!c.is_zero()) p.terms_.emplace(DiffMonomial::one(), std::move(c));
    return p;
}

DiffPoly DiffPoly::variable(Signature sig, uint32_t var) {
    return from_var(sig, DiffVar{var, DerivOp(sig.num_derivations)});
}

DiffPoly DiffPoly::from_var(Signature sig, DiffVar v) {
    if (v.var < 1 || v.var > sig.num_vars)
        throw Error(ErrKind::InvalidArgument, "variable index out of range");
    if (v.theta.arity() != sig.num_derivations)
        throw Error(ErrKind::SignatureMismatch, "derivative operator arity mismatch");
    return from_monomial(sig, DiffMonomial::var(std::move(v)), Rational(1));
}

DiffPoly DiffPoly::from_monomial(Signature sig, DiffMonomial u, Rational c) {
    DiffPoly p(sig);
    if (!c.is_zero()) p.terms_.emplace(std::move(u), std::move(c));
    return p;
}

bool DiffPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

void DiffPoly::add_term(DiffMonomial u, Rational c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(std::move(u), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiffPoly DiffPoly::add(const DiffPoly& o) const {
    require_same(sig_, o.sig_);
    DiffPoly r = *this;
    for (const auto& [u, c] : o.terms_) r.add_term(u, c);
    return r;
}

DiffPoly DiffPoly::sub(const DiffPoly& o) const {
    require_same(sig_, o.sig_);
    DiffPoly r = *this;
    for (const auto& [u, c] : o.terms_) r.add_term(u, -c);
    return r;
}

DiffPoly DiffPoly::neg() const {
    DiffPoly r(sig_);
    for (const auto& [u, c] : terms_) r.terms_.emplace(u, -c);
    return r;
}

DiffPoly DiffPoly::mul(const DiffPoly& o) const {
    require_same(sig_, o.sig_);
    DiffPoly r(sig_);
    for (const auto& [u, c] : terms_)
        for (const auto& [v, d] : o.terms_) r.add_term(u.times(v), c * d);
    return r;
}

DiffPoly DiffPoly::pow(uint64_t e) const {
    DiffPoly r = constant(sig_, 1);
    DiffPoly base = *this;
    while (e > 0) {
        if (e & 1) r = r.mul(base);
        e >>= 1;
        if (e) base = base.mul(base);
    }
    return r;
}

DiffPoly DiffPoly::scale(const Rational& c) const {
    DiffPoly r(sig_);
    if (c.is_zero()) return r;
    for (const auto& [u, k] : terms_) r.terms_.emplace(u, k * c);
    return r;
}

DiffPoly DiffPoly::mul_monomial(const DiffMonomial& u, const Rational& c) const {
    DiffPoly r(sig_);
    if (c.is_zero()) return r;
    for (const auto& [v, k] : terms_) r.terms_.emplace(v.times(u), k * c);
    return r;
}

DiffPoly DiffPoly::derive(uint32_t i) const {
    if (i < 1 || i > sig_.num_derivations)
        throw Error(ErrKind::InvalidArgument, "derivation index out of range");
    DiffPoly r(sig_);
    for (const auto& [u, c] : terms_) {
        // Leibniz over the factors of u.
        for (const auto& [v, e] : u.factors()) {
            DiffVar bumped{v.var, v.theta.times_delta(i)};
            DiffMonomial rest = u.without_one(v);
            r.add_term(rest.times(DiffMonomial::var(bumped)), c * Rational(static_cast<long>(e)));
        }
    }
    return r;
}

DiffPoly DiffPoly::apply_theta(const DerivOp& theta) const {
    if (theta.arity() != sig_.num_derivations)
        throw Error(ErrKind::SignatureMismatch, "derivative operator arity mismatch");
    DiffPoly r = *this;
    for (uint32_t i = 1; i <= theta.arity(); ++i)
        for (uint32_t k = 0; k < theta.exp(i - 1); ++k) r = r.derive(i);
    return r;
}

DiffPoly DiffPoly::partial(const DiffVar& v) const {
    DiffPoly r(sig_);
    for (const auto& [u, c] : terms_) {
        uint32_t e = u.exponent_of(v);
        if (e == 0) continue;
        r.add_term(u.without_one(v), c * Rational(static_cast<long>(e)));
    }
    return r;
}

DiffPoly DiffPoly::substitute(const std::vector<DiffPoly>& fs) const {
    if (fs.size() != sig_.num_vars)
        throw Error(ErrKind::Arity, "substitution arity mismatch");
    for (const auto& f : fs) {
        require_same(fs.front().sig(), f.sig());
        if (f.sig().num_derivations != sig_.num_derivations)
            throw Error(ErrKind::SignatureMismatch,
                        "substitution requires matching derivation count");
    }
    Signature target = fs.front().sig();
    // Cache of theta-derivatives of the fs, filled on demand.
    std::map<DiffVar, DiffPoly> cache;
    auto image = [&](const DiffVar& v) -> const DiffPoly& {
        auto it = cache.find(v);
        if (it == cache.end())
            it = cache.emplace(v, fs[v.var - 1].apply_theta(v.theta)).first;
        return it->second;
    };
    DiffPoly r(target);
    for (const auto& [u, c] : terms_) {
        DiffPoly t = DiffPoly::constant(target, c);
        for (const auto& [v, e] : u.factors()) t = t.mul(image(v).pow(e));
        r = r.add(t);
    }
    return r;
}

Degrees DiffPoly::degrees() const {
    if (is_zero())
        throw Error(ErrKind::Domain, "degrees of the zero polynomial are undefined");
    Degrees d;
    auto it = terms_.begin();
    int64_t deg = it->first.var_degree();
    int64_t wt = it->first.deriv_weight();
    int64_t rho = it->first.rho();
    bool deg_h = true, wt_h = true, rho_h = true;
    for (++it; it != terms_.end(); ++it) {
        deg_h = deg_h && it->first.var_degree() == deg;
        wt_h = wt_h && it->first.deriv_weight() == wt;
        rho_h = rho_h && it->first.rho() == rho;
    }
    if (deg_h) d.var_degree = deg;
    if (wt_h) d.deriv_weight = wt;
    if (rho_h) d.rho = rho;
    return d;
}

int64_t DiffPoly::degree_in_var(uint32_t var) const {
    if (is_zero())
        throw Error(ErrKind::Domain, "degrees of the zero polynomial are undefined");
    int64_t d = 0;
    for (const auto& [u, c] : terms_) d = std::max(d, u.degree_in_var(var));
    return d;
}

std::vector<std::pair<int64_t, DiffPoly>> DiffPoly::rho_components() const {
    std::map<int64_t, DiffPoly> parts;
    for (const auto& [u, c] : terms_) {
        auto [it, inserted] = parts.try_emplace(u.rho(), sig_);
        it->second.add_term(u, c);
    }
    std::vector<std::pair<int64_t, DiffPoly>> out;
    out.reserve(parts.size());
    for (auto& [rho, p] : parts) out.emplace_back(rho, std::move(p));
    return out;
}

const DiffMonomial& DiffPoly::leading_monomial() const {
    if (is_zero()) throw Error(ErrKind::Domain, "zero polynomial has no leading term");
    return terms_.rbegin()->first;
}

const Rational& DiffPoly::leading_coeff() const {
    if (is_zero()) throw Error(ErrKind::Domain, "zero polynomial has no leading term");
    return terms_.rbegin()->second;
}

Rational DiffPoly::content() const {
    Rational g(0);
    for (const auto& [u, c] : terms_) g = Rational::content_gcd(g, c);
    return g;
}

DiffMonomial DiffPoly::monomial_content() const {
    if (is_zero()) return DiffMonomial::one();
    auto it = terms_.begin();
    DiffMonomial g = it->first;
    for (++it; it != terms_.end() && !g.is_one(); ++it)
        g = DiffMonomial::gcd(g, it->first);
    return g;
}

DiffPoly DiffPoly::divide_monomial(const DiffMonomial& u) const {
    DiffPoly r(sig_);
    for (const auto& [v, c] : terms_) r.terms_.emplace(v.divide_by(u), c);
    return r;
}

std::optional<DiffPoly> DiffPoly::divide_exact(const DiffPoly& q) const {
    require_same(sig_, q.sig_);
    if (q.is_zero()) return std::nullopt;
    DiffPoly rem = *this;
    DiffPoly quot(sig_);
    const DiffMonomial& qlm = q.leading_monomial();
    const Rational& qlc = q.leading_coeff();
    while (!rem.is_zero()) {
        const DiffMonomial& rlm = rem.leading_monomial();
        if (!qlm.divides(rlm)) return std::nullopt;
        DiffMonomial m = rlm.divide_by(qlm);
        Rational c = rem.leading_coeff() / qlc;
        quot.add_term(m, c);
        rem = rem.sub(q.mul_monomial(m, c));
    }
    return quot;
}

void DiffPoly::collect_vars(std::set<DiffVar>& out) const {
    for (const auto& [u, c] : terms_)
        for (const auto& f : u.factors()) out.insert(f.first);
}

std::string DiffPoly::str() const {
    if (is_zero()) return "0";
    std::string s;
    // Leading term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [u, c] = *it;
        Rational a = c.abs();
        if (s.empty()) {
            if (c.sign() < 0) s += "-";
        } else {
            s += c.sign() < 0 ? " - " : " + ";
        }
        if (u.is_one()) {
            s += a.str();
        } else if (a.is_one()) {
            s += u.str(sig_.num_derivations);
        } else {
            s += a.str() + "*" + u.str(sig_.num_derivations);
        }
    }
    return s;
}

}  // namespace diffdep
