#pragma once

#include <cstdint>
#include <vector>

#include "fox.hpp"

namespace diffdep {

// Outcome of a left-dependence decision. A dependent verdict always
// carries an operator certificate (b_1..b_k), not all zero, satisfying
// sum b_i * row_i = 0 exactly.
struct DependenceVerdict {
    bool dependent = false;
    std::vector<OrePoly> certificate;           // empty when independent
    std::vector<std::pair<int, int>> pivots;    // (row, column) used
};

// Decides left dependence of the rows over B[Delta] by triangulation with
// Ore cross multiples. max_ore_order caps every inner common-multiple
// search; exceeding it raises a resource error, never a verdict.
DependenceVerdict left_dependent(const OreMatrix& rows, uint32_t max_ore_order = 10);

// Differential-algebraic dependence of polynomials via their Fox Jacobian.
DependenceVerdict diff_alg_dependent(const std::vector<DiffPoly>& fs,
                                     uint32_t max_ore_order = 10);

// True iff some b_i is nonzero and sum b_i * d(f_i) vanishes identically.
bool verify_certificate(const std::vector<DiffPoly>& fs,
                        const std::vector<OrePoly>& cert);

struct ProlongationRank {
    int64_t rank = 0;
    int64_t count = 0;
    bool conclusive() const { return rank < count; }
};

// Commutative cross-check: ranks the classical Jacobian of all derivatives
// f_i^theta with |theta| <= s over the variables that actually occur.
// rank < count certifies dependence; equality is inconclusive.
ProlongationRank prolongation_rank(const std::vector<DiffPoly>& fs, uint32_t s);

}  // namespace diffdep
