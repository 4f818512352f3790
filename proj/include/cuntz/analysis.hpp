#pragma once

// Simplicity decisions for lexicographic systems, non-simplicity witnesses,
// and the kill-vector construction used in the pure-infiniteness argument.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cuntz/steprep.hpp"

namespace cuntz {

using WitnessPair = std::pair<SemigroupElement, SemigroupElement>;

struct InjectivityReport {
  bool injective = false;
  std::optional<WitnessPair> witness;
  std::vector<std::uint64_t> primes;         ///< row labels of the exponent matrix
  std::vector<std::vector<int>> exponents;   ///< exponents[p][a] = ord_p(m_a)
  std::size_t rank = 0;                      ///< rank over Q
  std::optional<std::vector<long>> kernel;   ///< primitive integer kernel vector
};

/// d(s) = prod m_a^{s_a} is injective on N^k iff the prime-exponent matrix
/// has rank k (which also excludes m_a = 1).
InjectivityReport dimension_injective(const SystemSpec& spec);

struct LogRelation {
  std::uint64_t l = 0;
  int a = 0;
  int b = 0;
  bool operator==(const LogRelation&) const = default;
};

/// m = l^a, n = l^b with gcd(a, b) = 1, when log_m n is rational.
std::optional<LogRelation> extract_l(std::uint64_t m, std::uint64_t n);

enum class Verdict { kSimplePurelyInfinite, kTensorCircle, kNonSimple, kUnknown };

struct Classification {
  Verdict verdict = Verdict::kUnknown;
  std::uint64_t l = 0;                     ///< for kTensorCircle
  std::optional<LogRelation> relation;     ///< m = l^a, n = l^b when both exceed 1
  std::optional<WitnessPair> witness;
  InjectivityReport evidence;

  /// `SimplePurelyInfinite`, `TensorCircle(2)`, `NonSimple`, `Unknown`.
  std::string verdict_line() const;
  std::string evidence_block() const;
};

Classification classify(const SystemSpec& spec);

struct NonsimplicityWitness {
  AlgebraElement element;  ///< e(s;0) - e(t;0)
  CharacterTwist lambda;   ///< lambda(s) != lambda(t)
};

/// Throws DomainError unless s != t and d(s) = d(t); the character is a
/// root of unity on one coordinate where s and t differ.
NonsimplicityWitness nonsimplicity_witness(const SystemSpec& spec, const SemigroupElement& s,
                                           const SemigroupElement& t);

struct KillPair {
  FiberVector x;
  FiberVector y;
};

struct KillInstance {
  std::vector<KillPair> pairs;
  SemigroupElement c;

  static KillInstance from_monomials(const SystemSpec& spec,
                                     const std::vector<std::pair<BasisMonomial, BasisMonomial>>& xy,
                                     std::optional<SemigroupElement> c = std::nullopt);
  /// sum_i p(x_i) + p(y_i)
  static SemigroupElement default_c(const std::vector<KillPair>& pairs, int k);
  /// Throws DomainError on p(x_i) = p(y_i) or c not above both fibers.
  void validate(const SystemSpec& spec) const;
};

struct KillStep {
  BasisMonomial f;
  BasisMonomial g;
  bool swapped = false;   ///< true when the adjoint pair was made orthogonal
  FiberVector factor;     ///< v' with v_{k+1} = v_k v'
};

struct KillResult {
  FiberVector w;          ///< unnormalized
  std::vector<KillStep> steps;
};

/// Throws HypothesisViolation when a step meets d(s) = d(t).
KillResult kill_vector(const SystemSpec& spec, const KillInstance& inst);

struct KillCheck {
  Index level = 0;
  std::vector<bool> pair_zero;
  bool all_zero() const;
};

/// alpha_c(Q) x_i y_i* alpha_c(Q) with Q = w w* / <w,w>, formed as algebra
/// elements and evaluated in the step model at the minimal valid level.
KillCheck verify_kill(const SystemSpec& spec, const KillInstance& inst, const FiberVector& w);

/// Evaluates the product of the factors right to left starting at n0.
StepFamily eval_product(const SystemSpec& spec, const std::vector<AlgebraElement>& factors, Index n0);
/// Smallest n0 at which eval_product is defined (searching multiples of the
/// rightmost factor's divisor up to `limit`).
Index product_level(const SystemSpec& spec, const std::vector<AlgebraElement>& factors,
                    Index limit = Index{1} << 40);

}  // namespace cuntz
