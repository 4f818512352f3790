#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "cuntz/analysis.hpp"
#include "cuntz/errors.hpp"
#include "cuntz/random.hpp"
#include "cuntz/steprep.hpp"
#include "support.hpp"

using namespace cuntz;
using namespace cuntz::testing;

namespace {

// (S(r,j) xi)(t) = sqrt(d) xi(e^{2 pi i (t d - j)}) for t in [j/d, (j+1)/d), 0 elsewhere,
// with t in [0,1) parametrizing the circle.  Integrates against indicators by the midpoint rule.
std::vector<std::vector<double>> integrate_generator(Index d, Index j, Index n) {
  const int samples = 720;  // divisible by every n*d used, so no sample sits on a breakpoint
  const Index out = n * d;
  std::vector<std::vector<double>> m(out, std::vector<double>(n, 0.0));
  for (Index col = 0; col < n; ++col) {
    auto xi = [&](double t) {
      t -= std::floor(t);
      return (t >= double(col) / n && t < double(col + 1) / n) ? std::sqrt(double(n)) : 0.0;
    };
    for (int p = 0; p < samples; ++p) {
      const double t = (p + 0.5) / samples;
      const bool inside = t >= double(j) / d && t < double(j + 1) / d;
      const double v = inside ? std::sqrt(double(d)) * xi(t * d - double(j)) : 0.0;
      const Index row = static_cast<Index>(t * out);
      m[row][col] += v * std::sqrt(double(out)) / samples;
    }
  }
  return m;
}

}  // namespace

TEST(StepRep, GeneratorExamples) {
  const SystemSpec spec = e(2, 3);
  EXPECT_EQ(rep_generator(spec, BasisMonomial::identity(2), 4), StepOperator::identity(4));
  const StepOperator s = rep_generator(spec, mono(1, 0, 1), 1);
  EXPECT_EQ(s.level_out(), 2u);
  EXPECT_EQ(s.matrix().nnz(), 1u);
  EXPECT_TRUE(s.matrix().at(1, 0).is_one());
}

TEST(StepRep, GeneratorMatchesIntegratedFormula) {
  for (Index d : {2u, 3u})
    for (Index j = 0; j < d; ++j)
      for (Index n : {1u, 2u}) {
        const SystemSpec spec = e(d, 1);
        const StepOperator s = rep_generator(spec, mono(1, 0, j), n);
        const auto num = integrate_generator(d, j, n);
        for (Index r = 0; r < n * d; ++r)
          for (Index c = 0; c < n; ++c)
            EXPECT_NEAR(num[r][c], s.matrix().at(r, c).to_complex().real(), 1e-12) << d << j << n;
      }
}

TEST(StepRep, GeneratorsAreIsometries) {
  const SystemSpec spec = e(2, 3);
  for (Index n : {1u, 2u, 3u})
    for (int a = 0; a < 2; ++a)
      for (Index j = 0; j < spec.gen_dims()[a]; ++j) {
        const StepOperator s = rep_generator(spec, {SemigroupElement::generator(2, a), j}, n);
        EXPECT_EQ(s.adjoint() * s, StepOperator::identity(n));
        EXPECT_TRUE(s.is_partial_permutation());
      }
}

TEST(StepRep, CuntzSumsAndMultiplicativity) {
  const SystemSpec spec = e(2, 3);
  for (const SemigroupElement& s : {s2(1, 0), s2(0, 1), s2(1, 1)}) {
    const StepFamily f = eval_element(spec, AlgebraElement::cuntz_sum(spec, s), spec.dim(s));
    EXPECT_EQ(f.single(), StepOperator::identity(spec.dim(s)));
  }
  // Each e(s;j)* would leave V_1, so level 1 is refused and the minimal level named.
  try {
    eval_element(spec, AlgebraElement::cuntz_sum(spec, s2(1, 0)), 1);
    FAIL();
  } catch (const LevelError& e) {
    EXPECT_EQ(e.minimal_level(), 2u);
  }
  for (Index n : {1u, 2u})
    for (const BasisMonomial& x : {mono(1, 0, 1), mono(0, 1, 2), mono(1, 1, 4)})
      for (const BasisMonomial& y : {mono(1, 0, 0), mono(0, 1, 1)}) {
        const BasisMonomial xy = mul_basis(spec, x, y).second;
        const StepOperator lhs = rep_generator(spec, x, n * spec.dim(y.fiber)) * rep_generator(spec, y, n);
        EXPECT_EQ(lhs, rep_generator(spec, xy, n));
        EXPECT_EQ(eval_element(spec, AlgebraElement::generator(xy), n).single(), lhs);
      }
}

TEST(StepRep, WitnessVanishes) {
  const SystemSpec spec = e(2, 4);
  const AlgebraElement b = px(spec, "e(2,0;0) - e(0,1;0)");
  for (Index n0 : {1u, 2u, 4u, 8u, 16u}) EXPECT_TRUE(eval_element(spec, b, n0).is_zero()) << n0;
  const CharacterTwist lambda{{Scalar::imaginary_unit(), Scalar::one()}};
  for (Index n0 : {4u, 8u, 16u}) EXPECT_FALSE(eval_twisted(spec, lambda, b, n0).is_zero());
}

TEST(StepRep, TwistedEvaluation) {
  const SystemSpec spec = e(2, 3);
  auto rng = rng_for(31);
  for (int trial = 0; trial < 10; ++trial) {
    const AlgebraElement a = random_element(spec, {4, 2, 3, true}, rng);
    const Index n0 = required_level_divisor(spec, a);
    EXPECT_EQ(eval_twisted(spec, CharacterTwist::trivial(2), a, n0), eval_element(spec, a, n0));
  }
  const CharacterTwist lambda{{Scalar(Cyclotomic::root_of_unity(3, 1)), Scalar::imaginary_unit()}};
  for (const SemigroupElement& s : {s2(1, 0), s2(0, 1), s2(1, 1)}) {
    const AlgebraElement d = AlgebraElement::cuntz_sum(spec, s) - AlgebraElement::identity(2);
    EXPECT_TRUE(eval_twisted(spec, lambda, d, spec.dim(s)).is_zero());
  }
  EXPECT_THROW(eval_twisted(spec, CharacterTwist{{Scalar::integer(2), Scalar::one()}},
                            AlgebraElement::identity(2), 1),
               DomainError);
}

TEST(StepRep, Errors) {
  const SystemSpec spec = e(2, 3);
  try {
    eval_element(spec, px(spec, "e(0,1;0)'"), 4);
    FAIL();
  } catch (const LevelError& e) {
    EXPECT_EQ(e.minimal_level(), 3u);
  }
  EXPECT_THROW(eval_element(rotation(4), AlgebraElement::identity(2), 1), UnsupportedRepresentation);
  EXPECT_THROW(rep_generator(spec, mono(1, 0, 1), 2) * rep_generator(spec, mono(1, 0, 1), 2), LevelError);
}

TEST(StepRep, RepresentationIsMultiplicative) {
  const SystemSpec spec = e(2, 3);
  auto rng = rng_for(32);
  for (int trial = 0; trial < 20; ++trial) {
    const AlgebraElement a = random_element(spec, {3, 2, 3, true}, rng);
    const AlgebraElement b = random_element(spec, {3, 2, 3, true}, rng);
    const AlgebraElement ab = multiply(spec, a, b);
    const Index base = std::lcm(product_level(spec, {a, b}), required_level_divisor(spec, ab));
    for (Index n0 = base; n0 <= 12; n0 += base)
      EXPECT_EQ(eval_element(spec, ab, n0), eval_product(spec, {a, b}, n0));
    // eval(a*) = eval(a)* on a single-degree element
    const AlgebraElement m = AlgebraElement::monomial(random_monomial(spec, 2, rng), random_monomial(spec, 2, rng));
    const Index n1 = std::lcm(required_level_divisor(spec, m), required_level_divisor(spec, adjoint(m)));
    const StepOperator fwd = eval_element(spec, m, n1).single();
    const StepOperator back = eval_element(spec, adjoint(m), fwd.level_out()).single();
    EXPECT_EQ(back, fwd.adjoint());
  }
}

TEST(StepRep, PositivityOnLevels) {
  const SystemSpec spec = e(2, 3);
  auto rng = rng_for(33);
  for (int trial = 0; trial < 10; ++trial) {
    const AlgebraElement a = random_element(spec, {3, 2, 3, false}, rng);
    const AlgebraElement aa = multiply(spec, adjoint(a), a);
    const Index n0 = std::lcm(required_level_divisor(spec, aa), product_level(spec, {adjoint(a), a}));
    for (const auto& [lvl, op] : eval_element(spec, aa, n0).by_level_out)
      if (lvl == n0) EXPECT_TRUE(is_positive_semidefinite(op.matrix()));
  }
}

TEST(StepRep, RefinementCommutesWithGenerators) {
  const SystemSpec spec = e(2, 3);
  for (Index n : {1u, 2u, 3u})
    for (Index m : {2u, 3u})
      for (const BasisMonomial& x : {mono(1, 0, 1), mono(0, 1, 2), mono(1, 1, 3)})
        for (Index i = 0; i < n; ++i) {
          const StepVector v = StepVector::basis(n, i);
          const StepVector act_then_refine = refine_vector(apply(rep_generator(spec, x, n), v), m);
          const StepVector refine_then_act = apply(rep_generator(spec, x, n * m), refine_vector(v, m));
          EXPECT_EQ(act_then_refine.coeffs, refine_then_act.coeffs);
          EXPECT_EQ(act_then_refine.radicand, refine_then_act.radicand);
        }
}

TEST(StepRep, RefinementIsIsometric) {
  const StepVector r = refine_vector(StepVector::basis(1, 0), 2);
  EXPECT_EQ(r.level, 2u);
  EXPECT_EQ(r.radicand, 2u);
  EXPECT_TRUE(r.coeffs[0].is_one() && r.coeffs[1].is_one());
  EXPECT_EQ(refine_vector(refine_vector(StepVector::basis(3, 1), 2), 5).coeffs,
            refine_vector(StepVector::basis(3, 1), 10).coeffs);

  auto rng = rng_for(34);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    StepVector v{3, {}, 1};
    StepVector w{3, {}, 1};
    for (int i = 0; i < 3; ++i) {
      v.coeffs.push_back(Scalar::gaussian(coeff(rng), coeff(rng)));
      w.coeffs.push_back(Scalar::integer(coeff(rng)));
    }
    Scalar direct = Scalar::zero();
    for (int i = 0; i < 3; ++i) direct += v.coeffs[i] * w.coeffs[i].conj();
    const RadicalScalar expect{direct, 1};
    EXPECT_EQ(inner_product(v, w), expect);
    EXPECT_EQ(inner_product(refine_vector(v, 4), refine_vector(w, 4)), expect);
    EXPECT_EQ(inner_product(refine_vector(v, 2), w), expect);
  }
  // <refine(e_0^1, 2), e_0^2> = 1/sqrt 2
  const RadicalScalar half = inner_product(refine_vector(StepVector::basis(1, 0), 2), StepVector::basis(2, 0));
  EXPECT_EQ(half.radicand, 2u);
  EXPECT_TRUE(half.coeff.is_one());
}
