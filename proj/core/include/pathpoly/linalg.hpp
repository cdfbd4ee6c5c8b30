#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pathpoly/numeric.hpp"

namespace pathpoly {

/** Exact rank. Denominators are cleared row-wise, then the integer matrix is
    reduced by fraction-free (Bareiss) elimination. */
std::size_t rank_exact(std::vector<QVec> rows);

struct Rref {
  std::vector<QVec> rows;  // nonzero rows, pivot entries 1, pivot columns clean
  std::vector<std::size_t> pivot_cols;  // ascending, one per row
};

/** Reduced row echelon form over the rationals. Depends only on the row
    space, so it is a canonical certificate for span comparisons. */
Rref rref(std::vector<QVec> rows);

/** Canonical basis of {a : M a = 0}, one vector per free column of rref(M),
    ordered by free column index. */
std::vector<QVec> nullspace_basis(const std::vector<QVec>& rows,
                                  std::size_t cols);

/** Gauss-Jordan inverse; nullopt when the matrix is singular. */
std::optional<std::vector<QVec>> inverse(std::vector<QVec> square);

}  // namespace pathpoly
