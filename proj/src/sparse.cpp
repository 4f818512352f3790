#include "cuntz/sparse.hpp"

#include <sstream>
#include <vector>

#include "cuntz/errors.hpp"

namespace cuntz {

SparseMatrix SparseMatrix::identity(std::uint64_t n) {
  SparseMatrix m(n, n);
  for (std::uint64_t i = 0; i < n; ++i) m.entries_.emplace(Key{i, i}, Scalar::one());
  return m;
}

Scalar SparseMatrix::at(std::uint64_t r, std::uint64_t c) const {
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Scalar::zero() : it->second;
}

void SparseMatrix::add(std::uint64_t r, std::uint64_t c, const Scalar& v) {
  if (r >= rows_ || c >= cols_) throw DomainError("sparse entry out of range");
  if (v.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace({r, c}, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

void SparseMatrix::set(std::uint64_t r, std::uint64_t c, const Scalar& v) {
  if (r >= rows_ || c >= cols_) throw DomainError("sparse entry out of range");
  if (v.is_zero()) {
    entries_.erase({r, c});
  } else {
    entries_[{r, c}] = v;
  }
}

Scalar SparseMatrix::trace() const {
  Scalar t = Scalar::zero();
  for (const auto& [key, v] : entries_)
    if (key.first == key.second) t += v;
  return t;
}

SparseMatrix SparseMatrix::adjoint() const {
  SparseMatrix m(cols_, rows_);
  for (const auto& [key, v] : entries_) m.entries_.emplace(Key{key.second, key.first}, v.conj());
  return m;
}

SparseMatrix SparseMatrix::scaled(const Scalar& s) const {
  SparseMatrix m(rows_, cols_);
  if (s.is_zero()) return m;
  for (const auto& [key, v] : entries_) m.add(key.first, key.second, v * s);
  return m;
}

SparseMatrix& SparseMatrix::operator+=(const SparseMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("sparse matrix shape mismatch");
  for (const auto& [key, v] : o.entries_) add(key.first, key.second, v);
  return *this;
}

SparseMatrix& SparseMatrix::operator-=(const SparseMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("sparse matrix shape mismatch");
  for (const auto& [key, v] : o.entries_) add(key.first, key.second, -v);
  return *this;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("sparse matrix product shape mismatch");
  SparseMatrix out(a.rows_, b.cols_);
  // Entries are row-major, so each row of b is a contiguous range.
  for (const auto& [ka, va] : a.entries_) {
    auto it = b.entries_.lower_bound({ka.second, 0});
    for (; it != b.entries_.end() && it->first.first == ka.second; ++it)
      out.add(ka.first, it->first.second, va * it->second);
  }
  return out;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  return (a - b).is_zero();
}

std::string SparseMatrix::to_triplets() const {
  std::ostringstream os;
  os << rows_ << " " << cols_ << " " << entries_.size() << "\n";
  for (const auto& [key, v] : entries_) os << key.first << " " << key.second << " " << v << "\n";
  return os.str();
}

std::string SparseMatrix::to_dense() const {
  std::ostringstream os;
  for (std::uint64_t r = 0; r < rows_; ++r) {
    for (std::uint64_t c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c);
    os << "\n";
  }
  return os.str();
}

bool is_positive_semidefinite(const SparseMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("positivity test needs a square matrix");
  // Work on the dense support only: rows/cols that carry an entry.
  std::vector<std::uint64_t> support;
  {
    std::map<std::uint64_t, bool> seen;
    for (const auto& [key, v] : m.entries()) {
      seen[key.first] = true;
      seen[key.second] = true;
    }
    for (const auto& [i, _] : seen) support.push_back(i);
  }
  const std::size_t n = support.size();
  std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(n, Scalar::zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(support[i], support[j]);

  for (std::size_t p = 0; p < n; ++p) {
    Scalar d = a[p][p];
    if (d.is_float()) throw DomainError("positivity test requires exact scalars");
    Rational dr = d.real_rational();
    if (sgn(dr) < 0) return false;
    if (sgn(dr) == 0) {
      // A zero pivot forces the whole pivot row to vanish.
      for (std::size_t j = p + 1; j < n; ++j)
        if (!a[p][j].is_zero()) return false;
      continue;
    }
    for (std::size_t i = p + 1; i < n; ++i) {
      if (a[i][p].is_zero()) continue;
      Scalar f = a[i][p] / d;
      for (std::size_t j = p + 1; j < n; ++j) {
        if (a[p][j].is_zero()) continue;
        a[i][j] -= f * a[p][j];
      }
    }
  }
  return true;
}

}  // namespace cuntz
