#include "ratfunc.hpp"

#include "error.hpp"

namespace diffdep {

RatFunc::RatFunc(DiffPoly num)
    : num_(std::move(num)), den_(DiffPoly::constant(num_.sig(), 1)) {}

RatFunc::RatFunc(DiffPoly num, DiffPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    require_same(num_.sig(), den_.sig());
    if (den_.is_zero()) throw Error(ErrKind::Domain, "zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = DiffPoly::constant(num_.sig(), 1);
        return;
    }
    DiffMonomial mg = DiffMonomial::gcd(num_.monomial_content(), den_.monomial_content());
    if (!mg.is_one()) {
        num_ = num_.divide_monomial(mg);
        den_ = den_.divide_monomial(mg);
    }
    Rational c = Rational::content_gcd(num_.content(), den_.content());
    if (den_.leading_coeff().sign() < 0) c = -c;
    if (!c.is_one()) {
        num_ = num_.divide_scalar(c);
        den_ = den_.divide_scalar(c);
    }
}

bool RatFunc::is_polynomial() const {
    return den_ == DiffPoly::constant(den_.sig(), 1);
}

RatFunc RatFunc::add(const RatFunc& o) const {
    return RatFunc(num_.mul(o.den_).add(o.num_.mul(den_)), den_.mul(o.den_));
}

RatFunc RatFunc::sub(const RatFunc& o) const {
    return RatFunc(num_.mul(o.den_).sub(o.num_.mul(den_)), den_.mul(o.den_));
}

RatFunc RatFunc::neg() const {
    RatFunc r = *this;
    r.num_ = r.num_.neg();
    return r;
}

RatFunc RatFunc::mul(const RatFunc& o) const {
    return RatFunc(num_.mul(o.num_), den_.mul(o.den_));
}

RatFunc RatFunc::div(const RatFunc& o) const {
    if (o.is_zero()) throw Error(ErrKind::Domain, "division by zero");
    return RatFunc(num_.mul(o.den_), den_.mul(o.num_));
}

RatFunc RatFunc::inv() const {
    if (is_zero()) throw Error(ErrKind::Domain, "division by zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::scale(const Rational& c) const {
    return RatFunc(num_.scale(c), den_);
}

RatFunc RatFunc::derive(uint32_t i) const {
    // (n/d)' = (n'd - n d')/d^2
    return RatFunc(num_.derive(i).mul(den_).sub(num_.mul(den_.derive(i))),
                   den_.mul(den_));
}

RatFunc RatFunc::apply_theta(const DerivOp& theta) const {
    RatFunc r = *this;
    for (uint32_t i = 1; i <= theta.arity(); ++i)
        for (uint32_t k = 0; k < theta.exp(i - 1); ++k) r = r.derive(i);
    return r;
}

bool RatFunc::equals(const RatFunc& o) const {
    if (!(sig() == o.sig())) return false;
    return num_.mul(o.den_) == o.num_.mul(den_);
}

std::string RatFunc::str() const {
    if (is_polynomial()) return num_.str();
    std::string n = num_.str(), d = den_.str();
    return "(" + n + ")/(" + d + ")";
}

}  // namespace diffdep
