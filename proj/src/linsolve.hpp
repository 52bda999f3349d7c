#pragma once

#include <optional>
#include <vector>

#include "ratfunc.hpp"

namespace diffdep {

// Exact linear algebra over the fraction field of the differential
// polynomial ring. Equations are kept fraction free: rows are scaled by
// their denominators up front and reduced by rational content and common
// monomial factors after every update, so all entries stay polynomial.

struct Echelon {
    std::vector<std::vector<DiffPoly>> mat;
    // (row, col) per pivot, in elimination order. Pivot columns are the
    // column rank profile, independent of the row pivoting strategy.
    std::vector<std::pair<size_t, size_t>> pivots;
    size_t cols = 0;
};

Echelon echelon_fraction_free(std::vector<std::vector<DiffPoly>> mat);

size_t matrix_rank(std::vector<std::vector<DiffPoly>> mat);

// Kernel vector for the first free column (that column's unknown set to 1,
// later free unknowns 0, pivot unknowns back-substituted). Empty when the
// kernel is trivial.
std::optional<std::vector<RatFunc>> first_kernel_vector(const Echelon& e);

// Scales a vector over B to polynomial entries: multiplies by the distinct
// denominators, divides by joint rational content and joint monomial
// factor, and flips signs so the first nonzero entry has a positive
// leading coefficient.
std::vector<DiffPoly> normalize_to_polynomial(const std::vector<RatFunc>& v);

}  // namespace diffdep
