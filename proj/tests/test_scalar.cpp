#include <gtest/gtest.h>

#include <complex>
#include <numbers>

#include "cuntz/linalg.hpp"
#include "cuntz/scalar.hpp"
#include "cuntz/sparse.hpp"

using namespace cuntz;

TEST(Scalar, GaussianArithmetic) {
  const Scalar a = Scalar::gaussian(1, 2);
  const Scalar b = Scalar::gaussian(Rational(1, 2), -1);
  EXPECT_EQ(a * b, Scalar::gaussian(Rational(5, 2), 0));
  EXPECT_EQ(a * a.inverse(), Scalar::one());
  EXPECT_EQ(a.conj(), Scalar::gaussian(1, -2));
  EXPECT_EQ(a.to_string(), "1+2i");
  EXPECT_EQ(Scalar::imaginary_unit().to_string(), "i");
  EXPECT_EQ(Scalar::rational(Rational(-3, 4)).to_string(), "-3/4");
}

TEST(Scalar, CyclotomicMatchesComplexValue) {
  for (unsigned q : {3u, 5u, 8u, 12u}) {
    for (int j = 0; j < static_cast<int>(q); ++j) {
      const Scalar z = Scalar(Cyclotomic::root_of_unity(q, j));
      const std::complex<double> expect = std::polar(1.0, 2 * std::numbers::pi * j / q);
      EXPECT_NEAR(std::abs(z.to_complex() - expect), 0.0, 1e-12) << q << " " << j;
      EXPECT_TRUE((z * z.conj()).is_one());
    }
  }
}

TEST(Scalar, CyclotomicRelationsAreExact) {
  // 1 + zeta + ... + zeta^(p-1) = 0 for prime p.
  for (unsigned p : {3u, 5u, 7u}) {
    Scalar sum = Scalar::zero();
    for (unsigned j = 0; j < p; ++j) sum += Scalar(Cyclotomic::root_of_unity(p, j));
    EXPECT_TRUE(sum.is_zero()) << p;
  }
  EXPECT_EQ(Scalar(Cyclotomic::root_of_unity(4, 1)), Scalar::imaginary_unit());
}

TEST(Scalar, MixedOrdersPromote) {
  const Scalar a = Scalar(Cyclotomic::root_of_unity(3, 1));
  const Scalar b = Scalar(Cyclotomic::root_of_unity(4, 1));
  const Scalar c = a * b;
  EXPECT_NEAR(std::abs(c.to_complex() - std::polar(1.0, 2 * std::numbers::pi * 7 / 12)), 0.0, 1e-12);
  EXPECT_EQ(c, Scalar(Cyclotomic::root_of_unity(12, 7)));
}

TEST(Scalar, FloatTolerance) {
  const Scalar a = Scalar(std::complex<double>(1.0, 0.0));
  EXPECT_EQ(a, Scalar::one());
  EXPECT_TRUE(Scalar(std::complex<double>(1e-12, 0)).is_zero());
  EXPECT_FALSE(Scalar(std::complex<double>(1e-6, 0)).is_zero());
}

TEST(Sparse, MultiplyAndAdjoint) {
  SparseMatrix a(2, 3);
  a.set(0, 1, Scalar::gaussian(0, 1));
  a.set(1, 2, Scalar::integer(2));
  const SparseMatrix aa = a * a.adjoint();
  EXPECT_EQ(aa.at(0, 0), Scalar::one());
  EXPECT_EQ(aa.at(1, 1), Scalar::integer(4));
  EXPECT_EQ(aa.nnz(), 2u);
  EXPECT_TRUE(is_positive_semidefinite(aa));
  EXPECT_TRUE(is_positive_semidefinite(a.adjoint() * a));
  SparseMatrix neg = SparseMatrix::identity(2);
  neg.set(1, 1, Scalar::integer(-1));
  EXPECT_FALSE(is_positive_semidefinite(neg));
}

TEST(Sparse, CancellationPrunes) {
  SparseMatrix a(1, 1);
  a.add(0, 0, Scalar::one());
  a.add(0, 0, Scalar::integer(-1));
  EXPECT_TRUE(a.is_zero());
}

TEST(Linalg, NullspaceAnnihilates) {
  linalg::Matrix m{{Scalar::integer(1), Scalar::integer(2), Scalar::integer(3)},
                   {Scalar::integer(2), Scalar::integer(4), Scalar::integer(6)}};
  EXPECT_EQ(linalg::rank(m, 3), 1u);
  const auto ns = linalg::nullspace(m, 3);
  ASSERT_EQ(ns.size(), 2u);
  for (const auto& v : ns)
    for (const auto& row : m) {
      Scalar s = Scalar::zero();
      for (int j = 0; j < 3; ++j) s += row[j] * v[j];
      EXPECT_TRUE(s.is_zero());
    }
}

TEST(Linalg, Factorize) {
  const auto f = linalg::factorize(360);
  EXPECT_EQ(f.at(2), 3);
  EXPECT_EQ(f.at(3), 2);
  EXPECT_EQ(f.at(5), 1);
  EXPECT_TRUE(linalg::factorize(1).empty());
}
