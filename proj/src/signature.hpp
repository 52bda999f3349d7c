#pragma once

#include <cstdint>

#include "error.hpp"

namespace diffdep {

// Shape of the ambient algebra: n differential variables x1..xn and m
// pairwise commuting derivations D1..Dm. Every value carries its signature
// and mixed-signature arithmetic is rejected.
struct Signature {
    uint32_t num_vars = 1;
    uint32_t num_derivations = 1;

    Signature() = default;
    Signature(uint32_t n, uint32_t m) : num_vars(n), num_derivations(m) {
        if (n < 1 || m < 1)
            throw Error(ErrKind::InvalidArgument,
                        "signature requires at least one variable and one derivation");
    }

    friend bool operator==(const Signature&, const Signature&) = default;
};

inline void require_same(const Signature& a, const Signature& b) {
    if (!(a == b))
        throw Error(ErrKind::SignatureMismatch,
                    "operands have different signatures");
}

}  // namespace diffdep
