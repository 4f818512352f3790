#pragma once

// The UHF core F_E = lim K(E_s) under S -> S (x) 1_t.

#include <string>

#include "cuntz/algebra.hpp"

namespace cuntz {

/// An element of K(E_c) in the canonical basis of the fiber over c.
struct CoreElement {
  SemigroupElement fiber;
  SparseMatrix matrix;

  static CoreElement identity(const SystemSpec& spec, const SemigroupElement& c);
  static CoreElement zero(const SystemSpec& spec, const SemigroupElement& c);
  /// The matrix unit E_{jl} at c.
  static CoreElement unit(const SystemSpec& spec, const SemigroupElement& c, Index j, Index l);

  /// Dense rows up to 64x64, sparse triplets above.
  std::string to_string() const;
};

/// S (x) 1_t at c + t; entry [j d(t) + q, l d(t) + q] = S[j, l].
CoreElement embed(const SystemSpec& spec, const CoreElement& s, const SemigroupElement& t);

/// Both operands embedded at the coordinatewise maximum of their fibers.
std::pair<CoreElement, CoreElement> common_fiber(const SystemSpec& spec, const CoreElement& a,
                                                 const CoreElement& b);
bool core_equals(const SystemSpec& spec, const CoreElement& a, const CoreElement& b);
CoreElement core_multiply(const SystemSpec& spec, const CoreElement& a, const CoreElement& b);

/// sum S[j, l] e(c;j) e(c;l)*
AlgebraElement to_algebra(const SystemSpec& spec, const CoreElement& s);

/// Degree-zero block of the normal form; throws DomainError on other degrees.
CoreElement from_algebra(const SystemSpec& spec, const AlgebraElement& a);

/// (u_r u_r*) (x) S at r + s with u_r = (r, delta_0).
CoreElement beta(const SystemSpec& spec, const SemigroupElement& r, const CoreElement& s);

/// The cross section u_s = (s, delta_0).
struct TwistedUnit {
  static BasisMonomial at(const SemigroupElement& s) { return {s, 0}; }
  /// u_s u_t = phase * u_{s+t}; returns the phase.
  static Scalar product_phase(const SystemSpec& spec, const SemigroupElement& s,
                              const SemigroupElement& t);
};

}  // namespace cuntz
