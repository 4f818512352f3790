#pragma once

// The dense *-subalgebra of O_E spanned by monomials i(x) i(y)*.
//
// An AlgebraElement is a finite sum of terms c * x y* with x, y basis
// monomials. Storage is canonical: terms sorted by degree p(x) - p(y), then
// left fiber, then indices; no duplicate (x, y) pairs; no zero coefficients.
// Structural equality is therefore a sufficient (not necessary) test for
// equality in O_E. Equality in O_E is decided by normal forms.

#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "cuntz/sparse.hpp"
#include "cuntz/system.hpp"

namespace cuntz {

struct Term {
  Scalar coeff;
  BasisMonomial left;
  BasisMonomial right;

  Degree degree() const { return degree_between(left.fiber, right.fiber); }
};

struct MonomialPair {
  BasisMonomial left;
  BasisMonomial right;
};

/// Degree first, then left fiber, then left index, then right index.
struct MonomialPairLess {
  bool operator()(const MonomialPair& a, const MonomialPair& b) const;
};

class AlgebraElement {
 public:
  using Storage = std::map<MonomialPair, Scalar, MonomialPairLess>;

  AlgebraElement() = default;

  static AlgebraElement identity(int k);
  static AlgebraElement scalar(int k, const Scalar& c);
  /// c * x y*
  static AlgebraElement monomial(const BasisMonomial& x, const BasisMonomial& y,
                                 const Scalar& c = Scalar::one());
  /// The isometry i(x) = x 1*.
  static AlgebraElement generator(const BasisMonomial& x);
  /// i(v) = sum_j v_j i(s, delta_j).
  static AlgebraElement vector(const FiberVector& v);
  /// i(v) i(w)*.
  static AlgebraElement rank_one(const FiberVector& v, const FiberVector& w);
  /// sum_j e(s;j) e(s;j)*
  static AlgebraElement cuntz_sum(const SystemSpec& spec, const SemigroupElement& s);

  void add_term(const Scalar& c, const BasisMonomial& x, const BasisMonomial& y);
  void add(const AlgebraElement& other, const Scalar& factor = Scalar::one());

  const Storage& storage() const { return terms_; }
  std::vector<Term> terms() const;
  std::size_t size() const { return terms_.size(); }
  /// Structurally zero (no terms). Use `equals` for zero in O_E.
  bool empty() const { return terms_.empty(); }

  AlgebraElement scaled(const Scalar& c) const;
  AlgebraElement operator-() const { return scaled(Scalar::integer(-1)); }
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    a.add(b);
    return a;
  }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
    a.add(b, Scalar::integer(-1));
    return a;
  }
  /// Structural equality of canonical storage.
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

  /// Printed in the expression grammar; `0` when empty.
  std::string to_string() const;

 private:
  Storage terms_;
};

std::ostream& operator<<(std::ostream& os, const AlgebraElement& a);

AlgebraElement adjoint(const AlgebraElement& a);

/// i(y')* i(x') expanded as sum_{x in B_s, y in B_t} <x'y, y'x> x y*,
/// s = p(x'), t = p(y').
AlgebraElement rewrite_pair(const SystemSpec& spec, const BasisMonomial& y_prime,
                            const BasisMonomial& x_prime);

/// i(y)* i(x) as a short expansion: a single monomial when p(x), p(y) are
/// comparable, the rewrite_pair sum otherwise.
AlgebraElement adjoint_times(const SystemSpec& spec, const BasisMonomial& y, const BasisMonomial& x);

/// Accumulates (c1 x1 y1*)(c2 x2 y2*) into `out`.
void multiply_terms_into(const SystemSpec& spec, const Term& a, const Term& b, AlgebraElement& out);

AlgebraElement multiply(const SystemSpec& spec, const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement multiply(const SystemSpec& spec, const std::vector<AlgebraElement>& factors);

/// One degree's coefficient matrix at bidegree (left_level, left_level - degree).
struct NormalBlock {
  SemigroupElement left_level;
  SemigroupElement right_level;
  SparseMatrix matrix;
};

class NormalForm {
 public:
  using Blocks = std::map<Degree, NormalBlock>;

  Blocks& blocks() { return blocks_; }
  const Blocks& blocks() const { return blocks_; }
  bool is_zero() const;
  /// Largest |entry| over all blocks, in floating point.
  double max_abs_entry() const;
  std::string to_string() const;

 private:
  Blocks blocks_;
};

/// Re-expresses the term c x y* at left level `level` (p(x) <= level) and
/// accumulates its entries into `block`.
void raise_term_into(const SystemSpec& spec, const Term& t, const SemigroupElement& level,
                     SparseMatrix& block);

/// Raises a block matrix to a higher left level within its degree.
NormalBlock raise_block(const SystemSpec& spec, const NormalBlock& b, const SemigroupElement& level);

NormalForm normal_form(const SystemSpec& spec, const AlgebraElement& a);
/// The normal form read back as an AlgebraElement (sum of its block entries).
AlgebraElement expand(const NormalForm& nf);

/// Block-by-block comparison after raising to common levels.
bool same_normal_form(const SystemSpec& spec, const NormalForm& a, const NormalForm& b);

bool equals(const SystemSpec& spec, const AlgebraElement& a, const AlgebraElement& b);
bool is_zero(const SystemSpec& spec, const AlgebraElement& a);

/// Degree-zero part.
AlgebraElement gauge_expectation(const AlgebraElement& a);

/// sum_{f in B_s} e(s;f) a e(s;f)*
AlgebraElement alpha(const SystemSpec& spec, const SemigroupElement& s, const AlgebraElement& a);

/// Left fibers' coordinatewise maximum among the terms of each degree.
std::map<Degree, SemigroupElement> canonical_levels(const AlgebraElement& a);

}  // namespace cuntz
