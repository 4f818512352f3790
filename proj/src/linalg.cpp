#include "cuntz/linalg.hpp"

#include <cmath>

#include "cuntz/errors.hpp"

namespace cuntz::linalg {

namespace {

bool negligible(const Scalar& s) {
  if (s.is_float()) return std::abs(s.to_complex()) <= kFloatTolerance;
  return s.is_zero();
}

}  // namespace

Echelon row_reduce(Matrix m, std::size_t cols) {
  for (const auto& row : m)
    if (row.size() != cols) throw DomainError("ragged matrix");
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t best = m.size();
    double best_abs = 0.0;
    for (std::size_t i = r; i < m.size(); ++i) {
      if (negligible(m[i][c])) continue;
      if (!m[i][c].is_float()) {
        best = i;
        break;
      }
      const double a = std::abs(m[i][c].to_complex());
      if (a > best_abs) {
        best_abs = a;
        best = i;
      }
    }
    if (best == m.size()) continue;
    std::swap(m[r], m[best]);
    const Scalar inv = m[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || negligible(m[i][c])) continue;
      const Scalar f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
      m[i][c] = Scalar::zero();
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.rref = std::move(m);
  return e;
}

std::size_t rank(const Matrix& m, std::size_t cols) { return row_reduce(m, cols).pivots.size(); }

std::vector<std::vector<Scalar>> nullspace(const Matrix& m, std::size_t cols) {
  const Echelon e = row_reduce(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols, Scalar::zero());
    v[free] = Scalar::one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rref[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Scalar>> first_null_vector(const Matrix& m, std::size_t cols) {
  auto basis = nullspace(m, cols);
  if (basis.empty()) return std::nullopt;
  return std::move(basis.front());
}

std::map<std::uint64_t, int> factorize(std::uint64_t n) {
  if (n == 0) throw DomainError("cannot factor zero");
  std::map<std::uint64_t, int> f;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++f[p];
      n /= p;
    }
  if (n > 1) ++f[n];
  return f;
}

}  // namespace cuntz::linalg
