#pragma once

#include <vector>

#include "umc/rational.hpp"

namespace umc {

/// Dense exact-rational matrix, row major.
struct RatMatrix {
    std::vector<std::vector<Rat>> rows;

    std::size_t row_count() const { return rows.size(); }
    std::size_t col_count() const { return rows.empty() ? 0 : rows[0].size(); }
};

/// Reduced row echelon form; returns the pivot column of each nonzero row.
std::vector<std::size_t> rref(RatMatrix& m);

std::size_t rank(RatMatrix m);

/// Basis of the right kernel {v : M v = 0}, one vector per row of the result.
RatMatrix kernel(const RatMatrix& m);

/// True iff v lies in the row span of m.
bool in_row_span(const RatMatrix& m, const std::vector<Rat>& v);

/// True iff every row of sub lies in the row span of m.
bool row_span_contains(const RatMatrix& m, const RatMatrix& sub);

RatMatrix vstack(const RatMatrix& a, const RatMatrix& b);

}  // namespace umc
