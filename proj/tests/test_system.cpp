#include <gtest/gtest.h>

#include <complex>
#include <numbers>

#include "cuntz/errors.hpp"
#include "support.hpp"

using namespace cuntz;
using namespace cuntz::testing;

namespace {

std::vector<BasisMonomial> all_monomials(const SystemSpec& spec, int max_total) {
  std::vector<BasisMonomial> out;
  for (int a = 0; a <= max_total; ++a)
    for (int b = 0; a + b <= max_total; ++b)
      for (Index j = 0; j < spec.dim(s2(a, b)); ++j) out.push_back(mono(a, b, j));
  return out;
}

SystemSpec mixed_twist() {
  std::vector<Angle> theta{Rational(1, 3), Rational(1, 4), Rational(0), Rational(5, 12)};
  return SystemSpec({2, 3}, theta, ScalarMode::kCyclotomic, 12);
}

}  // namespace

TEST(System, Dimensions) {
  EXPECT_EQ(e(2, 3).dim(s2(1, 1)), 6u);
  EXPECT_EQ(e(2, 3).dim(s2(0, 0)), 1u);
  EXPECT_EQ(e(5, 7).dim(s2(0, 0)), 1u);
  EXPECT_EQ(e(2, 4).dim(s2(2, 1)), 16u);
}

TEST(System, DimensionIsMultiplicative) {
  auto rng = rng_for(1);
  const SystemSpec spec = SystemSpec::lexicographic({2, 3, 5});
  std::uniform_int_distribution<int> coord(0, 3);
  for (int trial = 0; trial < 50; ++trial) {
    const SemigroupElement s({coord(rng), coord(rng), coord(rng)});
    const SemigroupElement t({coord(rng), coord(rng), coord(rng)});
    EXPECT_EQ(spec.dim(s + t), spec.dim(s) * spec.dim(t));
  }
}

TEST(System, MultiplicationExamples) {
  const SystemSpec spec = e(2, 3);
  auto [phase, xy] = mul_basis(spec, mono(1, 0, 1), mono(0, 1, 2));
  EXPECT_TRUE(phase.is_one());
  EXPECT_EQ(xy, mono(1, 1, 5));
  auto [p2, y] = mul_basis(spec, BasisMonomial::identity(2), mono(2, 1, 7));
  EXPECT_TRUE(p2.is_one());
  EXPECT_EQ(y, mono(2, 1, 7));
}

TEST(System, RotationMultiplier) {
  const SystemSpec spec = rotation(4);
  auto [phase, xy] = mul_basis(spec, mono(0, 1, 0), mono(1, 0, 0));
  EXPECT_EQ(xy, mono(1, 1, 0));
  EXPECT_EQ(phase, Scalar::imaginary_unit());
  auto [back, yx] = mul_basis(spec, mono(1, 0, 0), mono(0, 1, 0));
  EXPECT_TRUE(back.is_one());
  EXPECT_EQ(yx, mono(1, 1, 0));
}

TEST(System, MultiplierAgreesWithFloatEvaluation) {
  const SystemSpec spec = mixed_twist();
  const std::vector<std::vector<double>> theta{{1.0 / 3, 1.0 / 4}, {0.0, 5.0 / 12}};
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c)
        for (int d = 0; d <= 2; ++d) {
          const double angle = theta[0][0] * a * c + theta[0][1] * a * d + theta[1][0] * b * c +
                               theta[1][1] * b * d;
          const std::complex<double> expect = std::polar(1.0, 2 * std::numbers::pi * angle);
          const Scalar w = spec.multiplier(s2(a, b), s2(c, d));
          EXPECT_LT(std::abs(w.to_complex() - expect), 1e-12);
        }
  EXPECT_TRUE(spec.multiplier(s2(0, 0), s2(3, 1)).is_one());
  EXPECT_TRUE(e(2, 3).multiplier(s2(2, 1), s2(1, 2)).is_one());
}

TEST(System, FloatTwistMatchesExactTwist) {
  std::vector<Angle> theta(4, 0.0);
  theta[2] = 0.25;
  const SystemSpec f({1, 1}, theta, ScalarMode::kFloat);
  EXPECT_LT(std::abs(f.multiplier(s2(0, 1), s2(1, 0)).to_complex() - std::complex<double>(0, 1)), 1e-12);
}

// Exhaustive associativity including phases, |s|_1 <= 2, k = 2, m_a <= 4.
TEST(System, MultiplicationIsAssociative) {
  std::vector<SystemSpec> specs;
  for (Index m = 1; m <= 4; ++m)
    for (Index n = 1; n <= 4; ++n) specs.push_back(e(m, n));
  specs.push_back(rotation(4));
  specs.push_back(mixed_twist());
  for (const SystemSpec& spec : specs) {
    const auto ms = all_monomials(spec, 2);
    for (const auto& x : ms)
      for (const auto& y : ms)
        for (const auto& z : ms) {
          auto [p1, xy] = mul_basis(spec, x, y);
          auto [p2, l] = mul_basis(spec, xy, z);
          auto [p3, yz] = mul_basis(spec, y, z);
          auto [p4, r] = mul_basis(spec, x, yz);
          ASSERT_EQ(l, r) << spec.describe();
          ASSERT_EQ(p1 * p2, p3 * p4) << spec.describe();
        }
  }
}

TEST(System, FactorizationExamples) {
  const SystemSpec spec = e(2, 3);
  const BasisMonomial x = mono(1, 1, 4);
  EXPECT_EQ(factor_monomial(spec, x, {0, 1}), (std::vector<GeneratorDigit>{{0, 1}, {1, 1}}));
  EXPECT_EQ(factor_monomial(spec, x, {1, 0}), (std::vector<GeneratorDigit>{{1, 2}, {0, 0}}));
  EXPECT_EQ(factor_monomial(spec, x), factor_monomial(spec, x, {0, 1}));
  for (const auto& d : factor_monomial(spec, BasisMonomial{s2(2, 3), 0}, {1, 0})) EXPECT_EQ(d.digit, 0u);
}

TEST(System, FactorizationRoundTrips) {
  for (const SystemSpec& spec : {e(2, 3), e(3, 2), e(1, 4), mixed_twist()}) {
    for (const auto& x : all_monomials(spec, 3)) {
      for (const std::vector<int>& order : {std::vector<int>{0, 1}, std::vector<int>{1, 0}}) {
        BasisMonomial acc = BasisMonomial::identity(2);
        for (const auto& d : factor_monomial(spec, x, order))
          acc = mul_basis(spec, acc, {SemigroupElement::generator(2, d.generator), d.digit}).second;
        EXPECT_EQ(acc, x) << spec.describe();
      }
    }
  }
}

TEST(System, InnerProductIsSesquilinear) {
  const FiberVector v{s2(1, 0), {Scalar::gaussian(1, 1), Scalar::integer(2)}};
  const FiberVector w{s2(1, 0), {Scalar::integer(3), Scalar::gaussian(0, 1)}};
  // (v|w) = sum v_j conj(w_j)
  EXPECT_EQ(inner_product(v, w), Scalar::gaussian(3, 3) + Scalar::integer(2) * Scalar::gaussian(0, -1));
  EXPECT_EQ(inner_product(v, w), inner_product(w, v).conj());
}

TEST(System, SpecFileParsing) {
  const SystemSpec spec = parse_system_spec("# E(2,3)\nk = 2\ndims = 2 3\nscalars = rational\n");
  EXPECT_EQ(spec.gen_dims(), (std::vector<Index>{2, 3}));
  EXPECT_FALSE(spec.twisted());
  const SystemSpec rot =
      parse_system_spec("k = 2\ndims = 1 1\ntheta = 0 0 1/4 0\nscalars = cyclotomic:4\n");
  EXPECT_TRUE(rot.twisted());
  EXPECT_EQ(rot.multiplier(s2(0, 1), s2(1, 0)), Scalar::imaginary_unit());
  const SystemSpec fl = parse_system_spec("k = 2\ndims = 1 1\ntheta = 0 0 0.3 0\nscalars = float\n");
  EXPECT_EQ(fl.mode(), ScalarMode::kFloat);
}

TEST(System, SpecFileErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) {
    try {
      parse_system_spec(text);
    } catch (const ConfigError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("k = 2\ndims = 2\n"), 2);
  EXPECT_EQ(line_of("k = 2\ndims = 2 3\ntheta = 0 1\n"), 3);
  EXPECT_EQ(line_of("k = 2\ndims = 2 3\nscalars = quaternion\n"), 3);
  EXPECT_EQ(line_of("k = two\n"), 1);
  EXPECT_NE(line_of("k = 2\ndims = 2 0\n"), -1);
  EXPECT_NE(line_of("k = 2\n"), -1);
  // k may be omitted; it is then read off the dims line.
  EXPECT_EQ(parse_system_spec("dims = 2 3 5\n").rank(), 3);
}

TEST(System, RangeChecks) {
  EXPECT_THROW(e(2, 3).check(mono(1, 0, 2)), DomainError);
  EXPECT_THROW(e(2, 3).check(BasisMonomial{SemigroupElement({1}), 0}), DomainError);
  EXPECT_NO_THROW(e(2, 3).check(mono(1, 1, 5)));
}
