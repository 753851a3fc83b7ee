#pragma once

#include "tropsl/matrix.hpp"
#include "tropsl/rational.hpp"

#include <vector>

namespace tropsl {

using RationalMatrix = Matrix<Rational>;

Rational determinant(RationalMatrix a);

// Rank of the row set.
std::size_t rank(const std::vector<RationalVector>& rows, std::size_t cols);

// Reduced row echelon form of the row set; zero rows dropped. Pivot columns
// are returned in `pivots` when non-null.
std::vector<RationalVector> rref(std::vector<RationalVector> rows, std::size_t cols,
                                 std::vector<std::size_t>* pivots = nullptr);

// Basis of {x : r.x = 0 for all rows r}.
std::vector<RationalVector> nullspace(const std::vector<RationalVector>& rows, std::size_t cols);

// Subtracts multiples of the RREF rows so that v vanishes on every pivot
// column: a canonical representative of v modulo the row space.
RationalVector reduce_modulo(RationalVector v, const std::vector<RationalVector>& rref_rows,
                             const std::vector<std::size_t>& pivots);

}  // namespace tropsl
