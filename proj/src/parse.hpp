#pragma once

#include <string_view>

#include "novikov.hpp"
#include "orepoly.hpp"

namespace diffdep {

// Concrete syntax shared by all value kinds:
//   rationals        2, -3/2
//   variables        x1..xN (plain "x" is x1 when n = 1)
//   derivatives      postfix primes x1'' (one derivation only) or a
//                    multi-index x1^[i1,...,im]
//   operators        + - * ^ with the usual precedence, ^ takes a
//                    nonnegative integer exponent
//   Ore symbols      D1..Dm, commuting with each other but not with the
//                    variables; any product is normalized to the
//                    coefficient-first form via the commutation rule
//   Novikov product  @, non-associative: chains need explicit parentheses
// Errors carry 1-based line/column positions.
DiffPoly parse_diffpoly(std::string_view src, const Signature& sig);
OrePoly parse_orepoly(std::string_view src, const Signature& sig);
NovikovExpr parse_novikov(std::string_view src, const Signature& sig);

}  // namespace diffdep
