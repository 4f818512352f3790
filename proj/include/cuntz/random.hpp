#pragma once

// Seeded generators of random test inputs.

#include <random>

#include "cuntz/core.hpp"

namespace cuntz {

struct RandomShape {
  int terms = 4;
  int max_total = 2;     ///< |p(x)|_1, |p(y)|_1 <= max_total
  int coeff_range = 3;   ///< integer coefficients in [-range, range], nonzero
  bool gaussian = false; ///< also draw imaginary parts
};

SemigroupElement random_semigroup(int k, int max_total, std::mt19937_64& rng);
BasisMonomial random_monomial(const SystemSpec& spec, int max_total, std::mt19937_64& rng);
Scalar random_scalar(const RandomShape& shape, std::mt19937_64& rng);
AlgebraElement random_element(const SystemSpec& spec, const RandomShape& shape, std::mt19937_64& rng);
/// Terms x y* with p(x) = p(y), at most `max_total` on each side.
AlgebraElement random_degree_zero(const SystemSpec& spec, const RandomShape& shape, std::mt19937_64& rng);
CoreElement random_core(const SystemSpec& spec, const SemigroupElement& c, int entries,
                        std::mt19937_64& rng);
FiberVector random_fiber_vector(const SystemSpec& spec, const SemigroupElement& s, std::mt19937_64& rng);

}  // namespace cuntz
