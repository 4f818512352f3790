#pragma once

// Dense Gaussian elimination over the Scalar field, plus integer factoring
// helpers for the dimension-function analysis.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cuntz/scalar.hpp"

namespace cuntz::linalg {

using Matrix = std::vector<std::vector<Scalar>>;

struct Echelon {
  Matrix rref;
  std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};

/// Reduced row echelon form. Exact scalars pivot on the first nonzero entry,
/// float scalars on the largest one above tolerance.
Echelon row_reduce(Matrix m, std::size_t cols);

std::size_t rank(const Matrix& m, std::size_t cols);

/// Basis of {v : m v = 0}, one vector per free column in increasing order;
/// each has a 1 in its free column.
std::vector<std::vector<Scalar>> nullspace(const Matrix& m, std::size_t cols);

/// The nullspace vector of the first free column, if any.
std::optional<std::vector<Scalar>> first_null_vector(const Matrix& m, std::size_t cols);

/// Prime factorization p -> exponent; n >= 1.
std::map<std::uint64_t, int> factorize(std::uint64_t n);

}  // namespace cuntz::linalg
