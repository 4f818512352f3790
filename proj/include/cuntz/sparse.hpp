#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>

#include "cuntz/scalar.hpp"

namespace cuntz {

/// Sparse Scalar matrix, entries keyed row-major; zero entries are never stored.
class SparseMatrix {
 public:
  using Key = std::pair<std::uint64_t, std::uint64_t>;
  using Entries = std::map<Key, Scalar>;

  SparseMatrix() = default;
  SparseMatrix(std::uint64_t rows, std::uint64_t cols) : rows_(rows), cols_(cols) {}

  static SparseMatrix identity(std::uint64_t n);

  std::uint64_t rows() const { return rows_; }
  std::uint64_t cols() const { return cols_; }
  std::size_t nnz() const { return entries_.size(); }
  const Entries& entries() const { return entries_; }

  Scalar at(std::uint64_t r, std::uint64_t c) const;
  void add(std::uint64_t r, std::uint64_t c, const Scalar& v);
  void set(std::uint64_t r, std::uint64_t c, const Scalar& v);

  bool is_zero() const { return entries_.empty(); }
  Scalar trace() const;
  SparseMatrix adjoint() const;
  SparseMatrix scaled(const Scalar& s) const;

  SparseMatrix& operator+=(const SparseMatrix& o);
  SparseMatrix& operator-=(const SparseMatrix& o);
  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
  friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

  /// `rows cols nnz` header then `row col scalar` lines.
  std::string to_triplets() const;
  /// Row-major dense text, one row per line.
  std::string to_dense() const;

 private:
  std::uint64_t rows_ = 0;
  std::uint64_t cols_ = 0;
  Entries entries_;
};

/// Exact positive-semidefiniteness test of a Hermitian matrix by symmetric
/// pivoting (LDL* with diagonal pivots). Requires exact scalars.
bool is_positive_semidefinite(const SparseMatrix& m);

}  // namespace cuntz
