#pragma once

// Exact and floating scalars for coefficient arithmetic.
//
// A Scalar is one of three variants:
//   * GaussianRational  re + im*i with re, im in Q
//   * Cyclotomic        an element of Q(zeta_n) in the power basis modulo Phi_n
//   * std::complex<double>
//
// Arithmetic between two values of the same variant stays in that variant.
// Mixed exact operands promote to Cyclotomic over the lcm of the conductors
// (a Gaussian rational has conductor 4, or 1 when it is real). Any float
// operand promotes the result to float.

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace cuntz {

using Rational = mpq_class;
using Integer = mpz_class;

inline constexpr double kFloatTolerance = 1e-9;

struct GaussianRational {
  Rational re{0};
  Rational im{0};

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool operator==(const GaussianRational&) const = default;
};

/// Element of the cyclotomic field Q(zeta_n), stored in the power basis
/// 1, zeta, ..., zeta^(phi(n)-1).
class Cyclotomic {
 public:
  explicit Cyclotomic(unsigned order = 1);
  Cyclotomic(unsigned order, std::vector<Rational> coeffs);

  static Cyclotomic root_of_unity(unsigned order, std::int64_t exponent);
  static Cyclotomic from_gaussian(const GaussianRational& g);

  unsigned order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Re-express in Q(zeta_m); requires order() | m.
  Cyclotomic lift(unsigned m) const;

  bool is_zero() const;
  Cyclotomic conj() const;
  Cyclotomic inverse() const;
  std::complex<double> to_complex() const;

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic operator-() const;

 private:
  unsigned order_;
  std::vector<Rational> coeffs_;
};

/// Euler's totient; used for cyclotomic field degrees.
unsigned euler_phi(unsigned n);

class Scalar {
 public:
  using Value = std::variant<GaussianRational, Cyclotomic, std::complex<double>>;

  Scalar() : value_(GaussianRational{}) {}
  Scalar(GaussianRational g) : value_(std::move(g)) {}
  Scalar(Cyclotomic c) : value_(std::move(c)) {}
  Scalar(std::complex<double> z) : value_(z) {}

  static Scalar rational(const Rational& q) { return GaussianRational{q, 0}; }
  static Scalar gaussian(const Rational& re, const Rational& im) {
    return GaussianRational{re, im};
  }
  static Scalar integer(long n) { return rational(Rational(n)); }
  static Scalar zero() { return integer(0); }
  static Scalar one() { return integer(1); }
  static Scalar imaginary_unit() { return gaussian(0, 1); }

  const Value& value() const { return value_; }
  bool is_float() const { return std::holds_alternative<std::complex<double>>(value_); }
  bool is_exact() const { return !is_float(); }

  /// Exact zero test for exact variants; |z| < 1e-9 for floats.
  bool is_zero() const;
  bool is_one() const { return (*this - one()).is_zero(); }

  Scalar conj() const;
  Scalar inverse() const;
  std::complex<double> to_complex() const;

  /// The value as a rational when it is exact and real; throws otherwise.
  Rational real_rational() const;

  /// Grammar-compatible text (see parser): `3/2`, `1-2i`, `zeta(8)^3`,
  /// `(1/2 + zeta(8)^2)`, or a decimal pair for floats.
  std::string to_string() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  /// Equality in the promoted variant (tolerance for floats).
  friend bool operator==(const Scalar& a, const Scalar& b) { return (a - b).is_zero(); }

 private:
  Value value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace cuntz
