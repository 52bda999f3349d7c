#pragma once

#include <string>

#include "diffpoly.hpp"

namespace diffdep {

// Rational differential function num/den. Not kept in fully reduced form
// (no multivariate gcd); normalization is limited to sign of the
// denominator's leading coefficient, joint integer content and a common
// monomial factor. Zero tests and equality go through cross
// multiplication, which is exact regardless of the representation.
class RatFunc {
  public:
    explicit RatFunc(DiffPoly num);
    RatFunc(DiffPoly num, DiffPoly den);

    static RatFunc zero(Signature sig) { return RatFunc(DiffPoly::zero(sig)); }
    static RatFunc one(Signature sig) {
        return RatFunc(DiffPoly::constant(sig, 1));
    }
    static RatFunc constant(Signature sig, Rational c) {
        return RatFunc(DiffPoly::constant(sig, std::move(c)));
    }

    const Signature& sig() const { return num_.sig(); }
    const DiffPoly& num() const { return num_; }
    const DiffPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const;

    RatFunc add(const RatFunc& o) const;
    RatFunc sub(const RatFunc& o) const;
    RatFunc neg() const;
    RatFunc mul(const RatFunc& o) const;
    RatFunc div(const RatFunc& o) const;
    RatFunc inv() const;
    RatFunc scale(const Rational& c) const;

    // Extension of the derivation Di by the quotient rule.
    RatFunc derive(uint32_t i) const;
    RatFunc apply_theta(const DerivOp& theta) const;

    // Mathematical equality via cross multiplication.
    bool equals(const RatFunc& o) const;
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.equals(b);
    }

    std::string str() const;

  private:
    void normalize();

    DiffPoly num_;
    DiffPoly den_;
};

}  // namespace diffdep
