#include <gtest/gtest.h>

#include "cuntz/core.hpp"
#include "cuntz/random.hpp"
#include "cuntz/steprep.hpp"
#include "support.hpp"

using namespace cuntz;
using namespace cuntz::testing;

TEST(Algebra, AdjointExamples) {
  const SystemSpec spec = e(2, 3);
  const BasisMonomial x = mono(1, 0, 1);
  const BasisMonomial y = mono(0, 1, 2);
  EXPECT_EQ(adjoint(AlgebraElement::monomial(x, y)), AlgebraElement::monomial(y, x));
  EXPECT_EQ(adjoint(AlgebraElement::scalar(2, Scalar::imaginary_unit())),
            AlgebraElement::scalar(2, Scalar::gaussian(0, -1)));
  auto rng = rng_for(7);
  for (int trial = 0; trial < 20; ++trial) {
    const AlgebraElement a = random_element(spec, {3, 2, 3, true}, rng);
    EXPECT_EQ(adjoint(adjoint(a)), a);
  }
}

TEST(Algebra, RewritePairExample) {
  const SystemSpec spec = e(2, 3);
  const AlgebraElement r = rewrite_pair(spec, mono(0, 1, 2), mono(1, 0, 1));
  const AlgebraElement expect = AlgebraElement::monomial(mono(1, 0, 0), mono(0, 1, 1)) +
                                AlgebraElement::monomial(mono(1, 0, 1), mono(0, 1, 2));
  EXPECT_EQ(r, expect);
  // Step oracle at base level 1 (both sides need level divisible by 3).
  const AlgebraElement lhs = multiply(spec, adjoint(AlgebraElement::generator(mono(0, 1, 2))),
                                      AlgebraElement::generator(mono(1, 0, 1)));
  for (Index n0 : {3u, 6u})
    EXPECT_EQ(eval_element(spec, r, n0), eval_element(spec, lhs, n0));
}

TEST(Algebra, RewritePairOrthonormality) {
  const SystemSpec spec = e(2, 3);
  EXPECT_TRUE(rewrite_pair(spec, mono(1, 1, 0), mono(1, 1, 1)).empty());
  EXPECT_EQ(rewrite_pair(spec, mono(1, 1, 3), mono(1, 1, 3)), AlgebraElement::identity(2));
}

// Two independent routes to y* x: the pairwise rewrite and the general product.
TEST(Algebra, RewriteAgreesWithAdjointTimes) {
  for (const SystemSpec& spec : {e(2, 3), e(2, 4), e(3, 2), rotation(4)}) {
    std::vector<BasisMonomial> ms;
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; a + b <= 2; ++b)
        for (Index j = 0; j < spec.dim(s2(a, b)); ++j) ms.push_back(mono(a, b, j));
    for (const auto& x : ms)
      for (const auto& y : ms)
        EXPECT_TRUE(equals(spec, rewrite_pair(spec, y, x), adjoint_times(spec, y, x))) << spec.describe();
  }
}

TEST(Algebra, MultiplyExamples) {
  const SystemSpec spec = e(2, 3);
  const SemigroupElement s = s2(1, 1);
  const BasisMonomial zero = BasisMonomial::identity(2);
  for (Index j = 0; j < 6; ++j)
    for (Index k = 0; k < 6; ++k) {
      const AlgebraElement p = multiply(spec, AlgebraElement::monomial(zero, {s, j}),
                                        AlgebraElement::monomial({s, k}, zero));
      if (j == k)
        EXPECT_EQ(p, AlgebraElement::identity(2));
      else
        EXPECT_TRUE(p.empty());
    }
  const AlgebraElement term = AlgebraElement::monomial({s, 4}, mono(0, 1, 2));
  EXPECT_TRUE(equals(spec, multiply(spec, AlgebraElement::cuntz_sum(spec, s), term), term));
}

TEST(Algebra, RotationRelation) {
  const SystemSpec spec = rotation(4);
  const AlgebraElement u = AlgebraElement::generator(mono(0, 1, 0));
  const AlgebraElement v = AlgebraElement::generator(mono(1, 0, 0));
  const AlgebraElement r = multiply(spec, u, v) - multiply(spec, v, u).scaled(Scalar::imaginary_unit());
  EXPECT_TRUE(normal_form(spec, r).is_zero());
  EXPECT_FALSE(is_zero(spec, multiply(spec, u, v) - multiply(spec, v, u)));
}

TEST(Algebra, NormalFormExamples) {
  const SystemSpec spec = e(2, 3);
  const SemigroupElement s = s2(1, 1);
  EXPECT_TRUE(normal_form(spec, AlgebraElement::identity(2) - AlgebraElement::cuntz_sum(spec, s)).is_zero());

  const NormalForm single = normal_form(spec, AlgebraElement::monomial(mono(1, 0, 0), mono(0, 1, 0)));
  ASSERT_EQ(single.blocks().size(), 1u);
  const auto& [deg, block] = *single.blocks().begin();
  EXPECT_EQ(deg.coords, (std::vector<int>{1, -1}));
  EXPECT_EQ(block.matrix.nnz(), 1u);
  EXPECT_TRUE(block.matrix.at(0, 0).is_one());

  const SystemSpec e24 = e(2, 4);
  const NormalForm w = normal_form(e24, px(e24, "e(2,0;0) - e(0,1;0)"));
  EXPECT_EQ(w.blocks().size(), 2u);
  for (const auto& [g, b] : w.blocks()) EXPECT_FALSE(b.matrix.is_zero());
}

TEST(Algebra, NormalFormText) {
  const SystemSpec spec = e(2, 3);
  EXPECT_EQ(normal_form(spec, px(spec, "e(1,0;1)*e(0,1;2)'")).to_string(),
            "degree (1,-1) bidegree (1,0) (0,1) shape 2x3\n  [1,2] 1\n");
  EXPECT_EQ(normal_form(spec, AlgebraElement()).to_string(), "0\n");
}

TEST(Algebra, EqualsExamples) {
  const SystemSpec spec = e(2, 3);
  auto rng = rng_for(3);
  const AlgebraElement a = random_element(spec, {}, rng);
  EXPECT_TRUE(equals(spec, a, a));
  for (const SemigroupElement& s : {s2(1, 0), s2(0, 2), s2(1, 1)})
    EXPECT_TRUE(equals(spec, AlgebraElement::identity(2), AlgebraElement::cuntz_sum(spec, s)));
  const SystemSpec e24 = e(2, 4);
  EXPECT_FALSE(equals(e24, AlgebraElement::generator(mono(2, 0, 0)), AlgebraElement::generator(mono(0, 1, 0))));
}

TEST(Algebra, GaugeExpectation) {
  const AlgebraElement off = AlgebraElement::monomial(mono(1, 0, 0), mono(0, 1, 0));
  EXPECT_TRUE(gauge_expectation(off).empty());
  EXPECT_EQ(gauge_expectation(AlgebraElement::identity(2)), AlgebraElement::identity(2));
}

TEST(Algebra, AlphaCovariance) {
  const SystemSpec spec = e(2, 3);
  const SemigroupElement s = s2(1, 0);
  const SemigroupElement t = s2(0, 1);
  const AlgebraElement b = AlgebraElement::monomial({t, 0}, {t, 1});
  const AlgebraElement x = AlgebraElement::generator({s, 0});
  EXPECT_TRUE(equals(spec, multiply(spec, alpha(spec, s + t, b), x), multiply(spec, x, alpha(spec, t, b))));
}

class AlgebraProperties : public ::testing::TestWithParam<int> {
 protected:
  SystemSpec spec() const {
    switch (GetParam()) {
      case 0: return e(2, 3);
      case 1: return e(2, 2);
      case 2: return e(3, 3);
      default: return rotation(4);
    }
  }
};

TEST_P(AlgebraProperties, StarAlgebraAxioms) {
  const SystemSpec sp = spec();
  auto rng = rng_for(100 + GetParam());
  const RandomShape shape{3, 2, 3, true};
  for (int trial = 0; trial < 15; ++trial) {
    const AlgebraElement a = random_element(sp, shape, rng);
    const AlgebraElement b = random_element(sp, shape, rng);
    const AlgebraElement c = random_element(sp, shape, rng);
    EXPECT_TRUE(equals(sp, adjoint(multiply(sp, a, b)), multiply(sp, adjoint(b), adjoint(a))));
    EXPECT_TRUE(equals(sp, multiply(sp, multiply(sp, a, b), c), multiply(sp, a, multiply(sp, b, c))));
    EXPECT_TRUE(equals(sp, multiply(sp, a, b + c), multiply(sp, a, b) + multiply(sp, a, c)));
  }
}

TEST_P(AlgebraProperties, ExpectationIsConditional) {
  const SystemSpec sp = spec();
  auto rng = rng_for(200 + GetParam());
  for (int trial = 0; trial < 15; ++trial) {
    const AlgebraElement a = random_element(sp, {4, 2, 3, false}, rng);
    const AlgebraElement b = random_degree_zero(sp, {3, 2, 3, false}, rng);
    EXPECT_TRUE(equals(sp, gauge_expectation(multiply(sp, a, b)),
                       multiply(sp, gauge_expectation(a), b)));
    EXPECT_EQ(gauge_expectation(gauge_expectation(a)), gauge_expectation(a));
  }
}

TEST_P(AlgebraProperties, AlphaIsAnAction) {
  const SystemSpec sp = spec();
  auto rng = rng_for(300 + GetParam());
  for (int trial = 0; trial < 10; ++trial) {
    const AlgebraElement a = random_element(sp, {3, 1, 3, false}, rng);
    const SemigroupElement s = random_semigroup(2, 1, rng);
    const SemigroupElement t = random_semigroup(2, 1, rng);
    EXPECT_TRUE(equals(sp, alpha(sp, s, alpha(sp, t, a)), alpha(sp, s + t, a)));
  }
}

INSTANTIATE_TEST_SUITE_P(Specs, AlgebraProperties, ::testing::Values(0, 1, 2, 3));

TEST(Algebra, NormalFormSoundUnderStepModel) {
  auto rng = rng_for(11);
  for (const SystemSpec& spec : {e(2, 3), e(3, 2), e(2, 2), e(1, 3)}) {
    for (int trial = 0; trial < 20; ++trial) {
      const AlgebraElement a = random_element(spec, {4, 2, 3, false}, rng);
      const AlgebraElement back = expand(normal_form(spec, a));
      const Index n = std::lcm(required_level_divisor(spec, a), required_level_divisor(spec, back));
      for (Index n0 : {n, 2 * n, 3 * n}) EXPECT_EQ(eval_element(spec, a, n0), eval_element(spec, back, n0));
    }
  }
}

TEST(Algebra, DegreeZeroFaithfulness) {
  const SystemSpec spec = e(2, 3);
  auto rng = rng_for(12);
  for (int trial = 0; trial < 20; ++trial) {
    const AlgebraElement a = random_degree_zero(spec, {3, 2, 3, false}, rng);
    const AlgebraElement c = random_degree_zero(spec, {2, 1, 3, false}, rng);
    // a - a*(sum) is zero but structurally nonempty
    const AlgebraElement z = a - multiply(spec, a, AlgebraElement::cuntz_sum(spec, s2(0, 1)));
    EXPECT_TRUE(normal_form(spec, z).is_zero());
    EXPECT_TRUE(from_algebra(spec, z).matrix.is_zero());
    const AlgebraElement nz = a + c;
    EXPECT_EQ(normal_form(spec, nz).is_zero(), from_algebra(spec, nz).matrix.is_zero());
  }
}

TEST(Algebra, PositivityAtCanonicalLevel) {
  const SystemSpec spec = e(2, 3);
  auto rng = rng_for(13);
  for (int trial = 0; trial < 10; ++trial) {
    const AlgebraElement a = random_element(spec, {3, 2, 3, false}, rng);
    const CoreElement m = from_algebra(spec, gauge_expectation(multiply(spec, adjoint(a), a)));
    EXPECT_TRUE(is_positive_semidefinite(m.matrix));
  }
}
