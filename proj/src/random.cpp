#include "cuntz/random.hpp"

namespace cuntz {

SemigroupElement random_semigroup(int k, int max_total, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> total(0, max_total);
  std::uniform_int_distribution<int> slot(0, k - 1);
  std::vector<int> c(k, 0);
  const int t = total(rng);
  for (int i = 0; i < t; ++i) ++c[slot(rng)];
  return SemigroupElement(c);
}

BasisMonomial random_monomial(const SystemSpec& spec, int max_total, std::mt19937_64& rng) {
  const SemigroupElement s = random_semigroup(spec.rank(), max_total, rng);
  std::uniform_int_distribution<Index> idx(0, spec.dim(s) - 1);
  return {s, idx(rng)};
}

Scalar random_scalar(const RandomShape& shape, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-shape.coeff_range, shape.coeff_range);
  int re = 0;
  while (re == 0) re = c(rng);
  if (!shape.gaussian) return Scalar::integer(re);
  return Scalar::gaussian(re, c(rng));
}

AlgebraElement random_element(const SystemSpec& spec, const RandomShape& shape, std::mt19937_64& rng) {
  AlgebraElement a;
  for (int i = 0; i < shape.terms; ++i)
    a.add_term(random_scalar(shape, rng), random_monomial(spec, shape.max_total, rng),
               random_monomial(spec, shape.max_total, rng));
  return a;
}

AlgebraElement random_degree_zero(const SystemSpec& spec, const RandomShape& shape, std::mt19937_64& rng) {
  AlgebraElement a;
  for (int i = 0; i < shape.terms; ++i) {
    const SemigroupElement s = random_semigroup(spec.rank(), shape.max_total, rng);
    std::uniform_int_distribution<Index> idx(0, spec.dim(s) - 1);
    a.add_term(random_scalar(shape, rng), {s, idx(rng)}, {s, idx(rng)});
  }
  return a;
}

CoreElement random_core(const SystemSpec& spec, const SemigroupElement& c, int entries,
                        std::mt19937_64& rng) {
  CoreElement e = CoreElement::zero(spec, c);
  std::uniform_int_distribution<Index> idx(0, spec.dim(c) - 1);
  RandomShape shape;
  for (int i = 0; i < entries; ++i) e.matrix.add(idx(rng), idx(rng), random_scalar(shape, rng));
  return e;
}

FiberVector random_fiber_vector(const SystemSpec& spec, const SemigroupElement& s, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-3, 3);
  FiberVector v{s, {}};
  for (Index j = 0; j < spec.dim(s); ++j) v.coeffs.push_back(Scalar::integer(c(rng)));
  return v;
}

}  // namespace cuntz
