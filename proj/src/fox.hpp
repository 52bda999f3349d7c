#pragma once

#include <vector>

#include "orepoly.hpp"

namespace diffdep {

// Gradient of the universal derivation: entry j is the operator
// coefficient of the j-th variable slot, an element of B[Delta].
using FoxGradient = std::vector<OrePoly>;

FoxGradient fox_gradient(const DiffPoly& f);
FoxGradient fox_gradient(const RatFunc& f);

OreMatrix jacobian(const std::vector<DiffPoly>& fs);
OreMatrix jacobian(const std::vector<RatFunc>& fs);

// Row vector times matrix over B[Delta]; used by the chain rule.
std::vector<OrePoly> row_times_matrix(const std::vector<OrePoly>& row,
                                      const OreMatrix& m);

}  // namespace diffdep
