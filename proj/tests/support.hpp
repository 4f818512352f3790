#pragma once

#include <random>
#include <string>

#include "cuntz/algebra.hpp"
#include "cuntz/parser.hpp"
#include "cuntz/system.hpp"

namespace cuntz::testing {

inline SystemSpec e(Index m, Index n) { return SystemSpec::lexicographic({m, n}); }

inline SemigroupElement s2(int a, int b) { return SemigroupElement({a, b}); }

inline BasisMonomial mono(int a, int b, Index j) { return {s2(a, b), j}; }

/// theta_21 = q on N^2, exact cyclotomic scalars.
inline SystemSpec rotation(unsigned q) {
  std::vector<Angle> theta(4, Rational(0));
  theta[2] = Rational(1, q);
  return SystemSpec({1, 1}, theta, ScalarMode::kCyclotomic, q);
}

inline AlgebraElement px(const SystemSpec& spec, const std::string& text) {
  return parse_expression(spec, text);
}

inline std::mt19937_64 rng_for(std::uint64_t seed) { return std::mt19937_64(seed); }

}  // namespace cuntz::testing
