#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "derivop.hpp"
#include "rational.hpp"
#include "signature.hpp"

namespace diffdep {

// A formal derivative x_i^theta of one of the variables. Ordered by
// variable index first, then by the operator order on theta; for one
// derivation this is the usual x < x' < x'' < ... within a variable.
struct DiffVar {
    uint32_t var;  // 1-based
    DerivOp theta;

    static int cmp(const DiffVar& a, const DiffVar& b) {
        if (a.var != b.var) return a.var < b.var ? -1 : 1;
        return DerivOp::cmp(a.theta, b.theta);
    }
    friend bool operator==(const DiffVar& a, const DiffVar& b) {
        return a.var == b.var && a.theta == b.theta;
    }
    friend bool operator<(const DiffVar& a, const DiffVar& b) { return cmp(a, b) < 0; }

    std::string str(uint32_t num_derivations) const;
};

// Commutative power product of DiffVars, kept sorted with the largest
// DiffVar first. The empty product is 1.
class DiffMonomial {
  public:
    using Factor = std::pair<DiffVar, uint32_t>;

    DiffMonomial() = default;
    static DiffMonomial one() { return {}; }
    static DiffMonomial var(DiffVar v, uint32_t exp = 1);

    bool is_one() const { return factors_.empty(); }
    const std::vector<Factor>& factors() const { return factors_; }

    DiffMonomial times(const DiffMonomial& o) const;
    bool divides(const DiffMonomial& o) const;
    DiffMonomial divide_by(const DiffMonomial& o) const;
    static DiffMonomial gcd(const DiffMonomial& a, const DiffMonomial& b);

    // Removes one power of v; v must occur.
    DiffMonomial without_one(const DiffVar& v) const;
    uint32_t exponent_of(const DiffVar& v) const;

    int64_t var_degree() const;    // total degree in the variables
    int64_t deriv_weight() const;  // total weight of the derivations
    int64_t rho() const { return var_degree() - deriv_weight(); }
    int64_t degree_in_var(uint32_t var) const;

    // Graded (by var_degree) lexicographic order on the factor sequences.
    static int cmp(const DiffMonomial& a, const DiffMonomial& b);
    friend bool operator==(const DiffMonomial& a, const DiffMonomial& b) {
        return a.factors_ == b.factors_;
    }
    friend bool operator<(const DiffMonomial& a, const DiffMonomial& b) {
        return cmp(a, b) < 0;
    }

    std::string str(uint32_t num_derivations) const;

  private:
    std::vector<Factor> factors_;  // descending DiffVar order, exponents > 0
};

struct MonomialLess {
    bool operator()(const DiffMonomial& a, const DiffMonomial& b) const {
        return DiffMonomial::cmp(a, b) < 0;
    }
};

// Degrees of a polynomial; a field is empty when the polynomial is not
// homogeneous in that grading.
struct Degrees {
    std::optional<int64_t> var_degree;
    std::optional<int64_t> deriv_weight;
    std::optional<int64_t> rho;
};

// Differential polynomial over Q: an exact linear combination of
// differential monomials, stored in canonical form (no zero coefficients,
// terms keyed by the monomial order). Values are immutable; every
// operation returns a fresh polynomial.
class DiffPoly {
  public:
    using TermMap = std::map<DiffMonomial, Rational, MonomialLess>;

    explicit DiffPoly(Signature sig) : sig_(sig) {}
    static DiffPoly zero(Signature sig) { return DiffPoly(sig); }
    static DiffPoly constant(Signature sig, Rational c);
    static DiffPoly variable(Signature sig, uint32_t var);  // x_var
    static DiffPoly from_var(Signature sig, DiffVar v);
    static DiffPoly from_monomial(Signature sig, DiffMonomial u, Rational c);

    const Signature& sig() const { return sig_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    size_t term_count() const { return terms_.size(); }

    DiffPoly add(const DiffPoly& o) const;
    DiffPoly sub(const DiffPoly& o) const;
    DiffPoly neg() const;
    DiffPoly mul(const DiffPoly& o) const;
    DiffPoly pow(uint64_t e) const;
    DiffPoly scale(const Rational& c) const;
    DiffPoly mul_monomial(const DiffMonomial& u, const Rational& c) const;

    friend bool operator==(const DiffPoly& a, const DiffPoly& b) {
        return a.sig_ == b.sig_ && a.terms_ == b.terms_;
    }

    // Action of the basic derivation Di (1-based), extended by Leibniz.
    DiffPoly derive(uint32_t i) const;
    DiffPoly apply_theta(const DerivOp& theta) const;

    // Commutative partial derivative with the DiffVars treated as
    // independent polynomial variables.
    DiffPoly partial(const DiffVar& v) const;

    // Substitutes fs[j-1] for variable x_j; this polynomial's signature
    // must have num_vars == fs.size() and the same number of derivations.
    DiffPoly substitute(const std::vector<DiffPoly>& fs) const;

    Degrees degrees() const;  // error on the zero polynomial
    int64_t degree_in_var(uint32_t var) const;
    // rho-homogeneous components, ascending; empty for 0.
    std::vector<std::pair<int64_t, DiffPoly>> rho_components() const;

    const DiffMonomial& leading_monomial() const;
    const Rational& leading_coeff() const;
    // gcd of |coefficients| (0 for the zero polynomial).
    Rational content() const;
    // gcd of the monomials of all terms.
    DiffMonomial monomial_content() const;
    DiffPoly divide_scalar(const Rational& c) const { return scale(c.inv()); }
    DiffPoly divide_monomial(const DiffMonomial& u) const;
    // Exact polynomial division; empty when the division is not exact.
    std::optional<DiffPoly> divide_exact(const DiffPoly& q) const;

    void collect_vars(std::set<DiffVar>& out) const;

    std::string str() const;

  private:
    void add_term(DiffMonomial u, Rational c);

    Signature sig_;
    TermMap terms_;
};

}  // namespace diffdep
