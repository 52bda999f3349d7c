#include "derivop.hpp"

#include <algorithm>

#include "error.hpp"

namespace diffdep {

DerivOp DerivOp::delta(uint32_t arity, uint32_t i) {
    if (i < 1 || i > arity)
        throw Error(ErrKind::InvalidArgument, "derivation index out of range");
    DerivOp d(arity);
    d.e_[i - 1] = 1;
    return d;
}

uint32_t DerivOp::order() const {
    uint32_t s = 0;
    for (uint32_t x : e_) s += x;
    return s;
}

DerivOp DerivOp::times(const DerivOp& o) const {
    DerivOp r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

DerivOp DerivOp::times_delta(uint32_t i) const {
    DerivOp r = *this;
    r.e_[i - 1] += 1;
    return r;
}

bool DerivOp::divides(const DerivOp& o) const {
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

DerivOp DerivOp::divide_by(const DerivOp& o) const {
    DerivOp r = *this;
    for (size_t i = 0; i < e_.size(); ++i) {
        if (o.e_[i] > e_[i])
            throw Error(ErrKind::Internal, "derivative operator does not divide");
        r.e_[i] -= o.e_[i];
    }
    return r;
}

int DerivOp::cmp(const DerivOp& a, const DerivOp& b) {
    uint32_t oa = a.order(), ob = b.order();
    if (oa != ob) return oa < ob ? -1 : 1;
    // Same grade: compare from the last derivation backwards, so D1 < D2.
    for (size_t i = a.e_.size(); i-- > 0;) {
        if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i] ? -1 : 1;
    }
    return 0;
}

std::vector<DerivOp> DerivOp::up_to_order(uint32_t arity, uint32_t s) {
    std::vector<DerivOp> out;
    std::vector<uint32_t> cur(arity, 0);
    // Enumerate exponent vectors of each total order 0..s recursively.
    auto rec = [&](auto&& self, uint32_t slot, uint32_t remaining) -> void {
        if (slot == arity - 1) {
            cur[slot] = remaining;
            out.emplace_back(cur);
            return;
        }
        for (uint32_t v = 0; v <= remaining; ++v) {
            cur[slot] = v;
            self(self, slot + 1, remaining - v);
        }
    };
    for (uint32_t ord = 0; ord <= s; ++ord) rec(rec, 0, ord);
    // Recursion emits each grade in some lex order; sort into the canonical one.
    std::sort(out.begin(), out.end());
    return out;
}

std::string DerivOp::str() const {
    if (is_identity()) return "1";
    std::string s;
    for (size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "D" + std::to_string(i + 1);
        if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
    }
    return s;
}

}  // namespace diffdep
