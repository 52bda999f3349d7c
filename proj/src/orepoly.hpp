#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ratfunc.hpp"

namespace diffdep {

// Differential operator with rational-function coefficients: a finite sum
// of terms r * theta with the commutation rule Di*r = r*Di + Di(r). The
// coefficient always sits to the left of its derivative operator.
class OrePoly {
  public:
    explicit OrePoly(Signature sig) : sig_(sig) {}
    static OrePoly zero(Signature sig) { return OrePoly(sig); }
    static OrePoly one(Signature sig);
    static OrePoly scalar(RatFunc r);
    static OrePoly scalar_poly(DiffPoly p) { return scalar(RatFunc(std::move(p))); }
    static OrePoly delta(Signature sig, uint32_t i);
    static OrePoly term(Signature sig, DerivOp theta, RatFunc coeff);

    const Signature& sig() const { return sig_; }
    const std::map<DerivOp, RatFunc, DerivOpLess>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::optional<uint32_t> order() const;
    // True when every coefficient has denominator 1.
    bool has_polynomial_coeffs() const;

    OrePoly add(const OrePoly& o) const;
    OrePoly sub(const OrePoly& o) const;
    OrePoly neg() const;
    // Noncommutative product; left-linear in *this.
    OrePoly mul(const OrePoly& o) const;
    OrePoly pow(uint64_t e) const;
    // Left multiplication by a scalar of B.
    OrePoly scale(const RatFunc& r) const;

    // Module action on B: sum of r_theta * theta(f).
    RatFunc apply(const RatFunc& f) const;

    // Mathematical equality (difference is the zero operator).
    bool equals(const OrePoly& o) const { return sub(o).is_zero(); }
    friend bool operator==(const OrePoly& a, const OrePoly& b) { return a.equals(b); }

    std::string str() const;

  private:
    void add_term(const DerivOp& theta, const RatFunc& r);

    Signature sig_;
    std::map<DerivOp, RatFunc, DerivOpLess> coeffs_;
};

// Rectangular matrix of operators; rows come from Fox gradients.
class OreMatrix {
  public:
    explicit OreMatrix(std::vector<std::vector<OrePoly>> rows);

    size_t rows() const { return rows_.size(); }
    size_t cols() const { return rows_.empty() ? 0 : rows_.front().size(); }
    const std::vector<OrePoly>& row(size_t i) const { return rows_[i]; }
    const OrePoly& at(size_t i, size_t j) const { return rows_[i][j]; }
    const Signature& sig() const { return sig_; }

  private:
    std::vector<std::vector<OrePoly>> rows_;
    Signature sig_;
};

// Common left multiple search: minimal s such that the operators
// theta*a, theta*b with |theta| <= s admit a nontrivial B-linear relation,
// together with the witnesses c, d satisfying c*a = d*b != 0.
struct OreCommonMultiple {
    OrePoly c;
    OrePoly d;
    uint32_t s;
};

OreCommonMultiple ore_common_multiple(const OrePoly& a, const OrePoly& b,
                                      uint32_t max_order = 10);

// Single level of the search; empty when no relation exists at order s.
std::optional<std::pair<OrePoly, OrePoly>> ore_common_multiple_at(
    const OrePoly& a, const OrePoly& b, uint32_t s);

}  // namespace diffdep
