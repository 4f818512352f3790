#include <gtest/gtest.h>

#include "cuntz/kernels.hpp"
#include "cuntz/random.hpp"
#include "cuntz/steprep.hpp"
#include "support.hpp"

using namespace cuntz;
using namespace cuntz::testing;
using kernels::Policy;

namespace {

// Large enough to cross the parallel threshold.
const RandomShape kBig{120, 3, 5, true};

}  // namespace

TEST(Kernels, MultiplySerialMatchesParallel) {
  auto rng = rng_for(61);
  for (const SystemSpec& spec : {e(2, 3), rotation(4)}) {
    for (int trial = 0; trial < 3; ++trial) {
      const AlgebraElement a = random_element(spec, kBig, rng);
      const AlgebraElement b = random_element(spec, kBig, rng);
      EXPECT_EQ(kernels::multiply(spec, a, b, Policy::kSerial), kernels::multiply(spec, a, b, Policy::kParallel));
    }
  }
}

TEST(Kernels, NormalFormSerialMatchesParallel) {
  auto rng = rng_for(62);
  const SystemSpec spec = e(2, 3);
  for (int trial = 0; trial < 3; ++trial) {
    const AlgebraElement a = random_element(spec, kBig, rng);
    const NormalForm s = kernels::normal_form(spec, a, Policy::kSerial);
    const NormalForm p = kernels::normal_form(spec, a, Policy::kParallel);
    EXPECT_EQ(s.to_string(), p.to_string());
  }
}

TEST(Kernels, EvalSerialMatchesParallel) {
  auto rng = rng_for(63);
  const SystemSpec spec = e(2, 3);
  for (int trial = 0; trial < 3; ++trial) {
    const AlgebraElement a = random_element(spec, kBig, rng);
    const std::vector<Term> terms = a.terms();
    const std::vector<Scalar> ones(terms.size(), Scalar::one());
    const Index n0 = required_level_divisor(spec, a) * 2;
    EXPECT_EQ(kernels::eval_terms(spec, terms, ones, n0, Policy::kSerial),
              kernels::eval_terms(spec, terms, ones, n0, Policy::kParallel));
  }
}

TEST(Kernels, KroneckerSerialMatchesParallel) {
  auto rng = rng_for(64);
  std::uniform_int_distribution<int> idx(0, 35);
  std::uniform_int_distribution<int> val(-5, 5);
  SparseMatrix m(36, 36);
  for (int i = 0; i < 300; ++i) m.add(idx(rng), idx(rng), Scalar::integer(val(rng)));
  for (Index dt : {1u, 2u, 6u})
    EXPECT_EQ(kernels::kronecker_embed(m, dt, Policy::kSerial), kernels::kronecker_embed(m, dt, Policy::kParallel));
}

TEST(Kernels, DefaultPolicyRoundTrip) {
  const Policy before = kernels::default_policy();
  kernels::set_default_policy(Policy::kSerial);
  EXPECT_EQ(kernels::default_policy(), Policy::kSerial);
  kernels::set_default_policy(before);
}

TEST(Kernels, ExceptionsPropagateFromParallelRegions) {
  const SystemSpec spec = e(2, 3);
  auto rng = rng_for(65);
  const AlgebraElement a = random_element(spec, kBig, rng);
  const std::vector<Term> terms = a.terms();
  const std::vector<Scalar> ones(terms.size(), Scalar::one());
  EXPECT_ANY_THROW(kernels::eval_terms(spec, terms, ones, 1, Policy::kParallel));
}
