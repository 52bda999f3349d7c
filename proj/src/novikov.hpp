#pragma once

#include <memory>
#include <string>
#include <vector>

#include "depsolve.hpp"

namespace diffdep {

// Element of the free Novikov algebra with identity, realized inside the
// differential polynomial algebra with one derivation: a formal scalar
// plus a body all of whose monomials have rho = 1.
class NovikovElement {
  public:
    NovikovElement(Rational scalar, DiffPoly body);
    static NovikovElement variable(Signature sig, uint32_t var);
    static NovikovElement constant(Signature sig, Rational c);

    const Rational& scalar() const { return scalar_; }
    const DiffPoly& body() const { return body_; }
    const Signature& sig() const { return body_.sig(); }
    bool is_zero() const { return scalar_.is_zero() && body_.is_zero(); }

    NovikovElement add(const NovikovElement& o) const;
    NovikovElement sub(const NovikovElement& o) const;
    NovikovElement neg() const;
    NovikovElement scale(const Rational& c) const;

    friend bool operator==(const NovikovElement& a, const NovikovElement& b) {
        return a.scalar_ == b.scalar_ && a.body_ == b.body_;
    }

  private:
    Rational scalar_;
    DiffPoly body_;
};

// The product f o g = f * g' on bodies; the adjoined identity acts as a
// two-sided unit.
NovikovElement nov_product(const NovikovElement& f, const NovikovElement& g);

// Expression tree over the variables: scalars, +, -, unary -, scalar
// multiplication and the non-associative product. Tree shape is
// significant; parsing requires explicit parentheses around nested
// products.
class NovikovExpr {
  public:
    enum class Kind { Scalar, Var, Add, Sub, Neg, Mul, Circ };

    static NovikovExpr scalar(Rational c);
    static NovikovExpr var(uint32_t index);
    static NovikovExpr node(Kind k, NovikovExpr lhs, NovikovExpr rhs);
    static NovikovExpr neg(NovikovExpr operand);

    NovikovExpr(const NovikovExpr& o) { *this = o; }
    NovikovExpr& operator=(const NovikovExpr& o);
    NovikovExpr(NovikovExpr&&) = default;
    NovikovExpr& operator=(NovikovExpr&&) = default;

    Kind kind() const { return kind_; }
    const Rational& value() const { return value_; }
    uint32_t var_index() const { return var_; }
    const NovikovExpr& lhs() const { return *lhs_; }
    const NovikovExpr& rhs() const { return *rhs_; }

    friend bool operator==(const NovikovExpr& a, const NovikovExpr& b);

    std::string str() const;

  private:
    NovikovExpr() = default;

    Kind kind_ = Kind::Scalar;
    Rational value_;
    uint32_t var_ = 0;
    std::unique_ptr<NovikovExpr> lhs_;
    std::unique_ptr<NovikovExpr> rhs_;
};

// Evaluates a tree in the Novikov algebra on n variables (m must be 1).
NovikovElement embed(const NovikovExpr& e, Signature sig);

// All basis monomials of variable degree w, i.e. monomials on n variables
// with rho = 1, in ascending monomial order.
std::vector<DiffMonomial> nov_basis(uint32_t n, uint32_t w);

// True iff every monomial of f has rho = 1 (true for 0).
bool is_in_N0(const DiffPoly& f);

// Novikov dependence via the differential-polynomial representation;
// scalar parts are discarded first.
DependenceVerdict novikov_dependent(const std::vector<NovikovElement>& es,
                                    uint32_t max_ore_order = 10);

enum class WitnessMode { Differentiate, Multiply };

// Moves a rho-homogeneous relation witness into the rho = 1 span:
// differentiate applies the derivation rho(u)-1 times (requires rho > 1),
// multiply appends x1^(|rho|+1) (requires rho < 1).
DiffPoly witness_transform(const DiffPoly& u, WitnessMode mode);

}  // namespace diffdep
