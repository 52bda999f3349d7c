#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace diffdep {

// Derivative operator D1^i1 * ... * Dm^im, stored as the exponent vector
// (i1,...,im). The identity is the zero vector. Total order: by order()
// first, then reverse lexicographic on the exponents so that D1 < D2 < ...
// within one grade.
class DerivOp {
  public:
    explicit DerivOp(uint32_t arity) : e_(arity, 0) {}
    explicit DerivOp(std::vector<uint32_t> exps) : e_(std::move(exps)) {}

    // The basic derivation Di (1-based).
    static DerivOp delta(uint32_t arity, uint32_t i);

    uint32_t arity() const { return static_cast<uint32_t>(e_.size()); }
    uint32_t order() const;
    bool is_identity() const { return order() == 0; }
    uint32_t exp(uint32_t i) const { return e_[i]; }  // 0-based slot
    const std::vector<uint32_t>& exps() const { return e_; }

    DerivOp times(const DerivOp& o) const;
    DerivOp times_delta(uint32_t i) const;  // bump slot of Di (1-based)
    bool divides(const DerivOp& o) const;   // componentwise <=
    DerivOp divide_by(const DerivOp& o) const;

    static int cmp(const DerivOp& a, const DerivOp& b);
    friend bool operator==(const DerivOp& a, const DerivOp& b) { return a.e_ == b.e_; }
    friend bool operator<(const DerivOp& a, const DerivOp& b) { return cmp(a, b) < 0; }

    // All operators of order <= s, ascending in the order above.
    static std::vector<DerivOp> up_to_order(uint32_t arity, uint32_t s);

    // "D1^2*D2" style; identity renders as "1".
    std::string str() const;

  private:
    std::vector<uint32_t> e_;
};

struct DerivOpLess {
    bool operator()(const DerivOp& a, const DerivOp& b) const {
        return DerivOp::cmp(a, b) < 0;
    }
};

}  // namespace diffdep
