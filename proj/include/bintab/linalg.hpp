#pragma once

// Exact Gauss-Jordan elimination over the rationals.

#include "bintab/rational.hpp"

#include <cstddef>
#include <vector>

namespace bintab::linalg {

using Matrix = std::vector<std::vector<Rational>>;

struct Echelon {
    Matrix rows;                       ///< reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;   ///< pivot column of each row
};

/// Reduced row echelon form of `m` (all rows must share one length).
Echelon rref(Matrix m, std::size_t columns);

std::size_t rank(const Matrix& m, std::size_t columns);

/// Basis of {x : m x = 0}, one vector per free column, with a 1 in that
/// column.
Matrix kernel_basis(const Matrix& m, std::size_t columns);

}  // namespace bintab::linalg
