#pragma once

// Exact finite model of the distinguished Cuntz representation of E(d) on
// L^2(T), restricted to step-function levels.
//
// V_N is spanned by e_i^N = sqrt(N) * indicator[i/N, (i+1)/N). The generator
// S(r, delta_j) maps V_N into V_{N d(r)} by e_i^N -> e_{jN+i}^{N d(r)}, so
// every matrix entry is 0 or 1 (times a coefficient) and no square roots ever
// appear. Its adjoint maps V_M to V_{M/d(r)} and is only defined at levels
// divisible by d(r).

#include <map>
#include <string>
#include <vector>

#include "cuntz/algebra.hpp"

namespace cuntz {

/// Matrix of an operator V_{level_in} -> V_{level_out}.
class StepOperator {
 public:
  StepOperator() = default;
  StepOperator(Index level_in, Index level_out)
      : level_in_(level_in), level_out_(level_out), matrix_(level_out, level_in) {}
  StepOperator(Index level_in, Index level_out, SparseMatrix m);

  static StepOperator identity(Index level) { return {level, level, SparseMatrix::identity(level)}; }

  Index level_in() const { return level_in_; }
  Index level_out() const { return level_out_; }
  const SparseMatrix& matrix() const { return matrix_; }
  SparseMatrix& matrix() { return matrix_; }
  bool is_zero() const { return matrix_.is_zero(); }

  /// Conjugate transpose with level roles swapped.
  StepOperator adjoint() const;
  /// Contains only 0/1 entries with at most one nonzero per row and column.
  bool is_partial_permutation() const;

  friend StepOperator operator*(const StepOperator& a, const StepOperator& b);
  friend StepOperator operator+(const StepOperator& a, const StepOperator& b);
  friend StepOperator operator-(const StepOperator& a, const StepOperator& b);
  friend bool operator==(const StepOperator& a, const StepOperator& b);

  /// `N_out N_in nnz` header, then `row col scalar` triplets.
  std::string serialize() const { return matrix_.to_triplets(); }

 private:
  Index level_in_ = 1;
  Index level_out_ = 1;
  SparseMatrix matrix_;
};

/// Evaluation of an element at input level N0, one operator per output level.
/// Terms whose output levels coincide are summed into the same operator.
struct StepFamily {
  Index level_in = 1;
  std::map<Index, StepOperator> by_level_out;

  bool is_zero() const;
  /// The single operator of a family with exactly one output level (or the
  /// zero operator V_N0 -> V_N0 when the family is empty).
  StepOperator single() const;
  std::string serialize() const;

  /// Same input level and the same nonzero operator at every output level.
  friend bool operator==(const StepFamily& a, const StepFamily& b);
};

/// A character lambda of Z^k given by its values on the generators.
struct CharacterTwist {
  std::vector<Scalar> lambda;

  static CharacterTwist trivial(int k) { return {std::vector<Scalar>(k, Scalar::one())}; }
  /// lambda(s) = prod lambda_a^{s_a}
  Scalar value(const SemigroupElement& s) const;
  /// |lambda_a| = 1 for all a (exact, or within 1e-9 for floats).
  bool is_unitary() const;
};

StepOperator rep_generator(const SystemSpec& spec, const BasisMonomial& x, Index level);
StepOperator rep_vector(const SystemSpec& spec, const FiberVector& v, Index level);

/// Smallest N0 divisor making every adjoint step of `a` integral:
/// lcm over terms of d(p(y)).
Index required_level_divisor(const SystemSpec& spec, const AlgebraElement& a);

/// Accumulates the operator of c x y* (times `factor`) at input level n0.
void eval_term_into(const SystemSpec& spec, const Term& t, Index n0, const Scalar& factor,
                    SparseMatrix& out);

StepFamily eval_element(const SystemSpec& spec, const AlgebraElement& a, Index n0);
StepFamily eval_twisted(const SystemSpec& spec, const CharacterTwist& lambda,
                        const AlgebraElement& a, Index n0);

/// Levels checked by default: the minimal valid level and its multiples by
/// each generator dimension.
std::vector<Index> default_levels(const SystemSpec& spec, const AlgebraElement& a);

/// Vector of V_level with value coeffs / sqrt(radicand).
struct StepVector {
  Index level = 1;
  std::vector<Scalar> coeffs;
  Index radicand = 1;

  static StepVector basis(Index level, Index i);
};

/// c / sqrt(radicand), radicand square-free after simplification.
struct RadicalScalar {
  Scalar coeff;
  Index radicand = 1;
  friend bool operator==(const RadicalScalar& a, const RadicalScalar& b);
};

/// Inclusion V_N -> V_{NM}: each coefficient duplicated M times, radicand * M.
StepVector refine_vector(const StepVector& v, Index factor);
RadicalScalar inner_product(const StepVector& v, const StepVector& w);
StepVector apply(const StepOperator& op, const StepVector& v);

}  // namespace cuntz
