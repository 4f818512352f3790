#pragma once

// Product systems over N^k: lexicographic fibers C^{dim(s)}, optionally
// twisted by a bicharacter multiplier omega(s,t) = exp(2 pi i sum theta_ab s_a t_b).

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cuntz/scalar.hpp"

namespace cuntz {

using Index = std::uint64_t;

/// Element of Z^k (gauge degree of a monomial x y*).
struct Degree {
  std::vector<int> coords;

  bool is_zero() const;
  auto operator<=>(const Degree&) const = default;
};

/// Element of P = N^k.
struct SemigroupElement {
  std::vector<int> coords;

  SemigroupElement() = default;
  explicit SemigroupElement(std::vector<int> c);
  static SemigroupElement zero(int k) { return SemigroupElement(std::vector<int>(k, 0)); }
  static SemigroupElement generator(int k, int a);

  int rank() const { return static_cast<int>(coords.size()); }
  bool is_zero() const;
  int total() const;  ///< |s|_1

  /// Coordinatewise s <= t.
  bool divides(const SemigroupElement& t) const;

  friend SemigroupElement operator+(const SemigroupElement& a, const SemigroupElement& b);
  /// t - s, requires s.divides(t).
  friend SemigroupElement operator-(const SemigroupElement& t, const SemigroupElement& s);
  SemigroupElement scaled(int n) const;

  auto operator<=>(const SemigroupElement&) const = default;
};

Degree degree_between(const SemigroupElement& left, const SemigroupElement& right);
SemigroupElement coordinatewise_max(const SemigroupElement& a, const SemigroupElement& b);

/// The basis vector (s, delta_j) of the fiber over s.
struct BasisMonomial {
  SemigroupElement fiber;
  Index index = 0;

  static BasisMonomial identity(int k) { return {SemigroupElement::zero(k), 0}; }
  auto operator<=>(const BasisMonomial&) const = default;
};

/// A general vector of one fiber, dense in the canonical basis.
struct FiberVector {
  SemigroupElement fiber;
  std::vector<Scalar> coeffs;

  static FiberVector basis(const BasisMonomial& x, Index dim);
  bool is_zero() const;
};

/// <v, w> = sum_j v_j conj(w_j).
Scalar inner_product(const FiberVector& v, const FiberVector& w);

enum class ScalarMode { kRational, kCyclotomic, kFloat };

/// One multiplier angle theta_ab, exact rational or float.
using Angle = std::variant<Rational, double>;

class SystemSpec {
 public:
  SystemSpec() = default;
  /// Validates the configuration; throws ConfigError.
  SystemSpec(std::vector<Index> gen_dims, std::optional<std::vector<Angle>> theta = std::nullopt,
             ScalarMode mode = ScalarMode::kRational, unsigned cyclotomic_order = 0);

  static SystemSpec lexicographic(std::vector<Index> gen_dims) {
    return SystemSpec(std::move(gen_dims));
  }

  int rank() const { return static_cast<int>(gen_dims_.size()); }
  const std::vector<Index>& gen_dims() const { return gen_dims_; }
  const std::optional<std::vector<Angle>>& theta() const { return theta_; }
  ScalarMode mode() const { return mode_; }
  unsigned cyclotomic_order() const { return cyclotomic_order_; }

  /// True when some theta_ab is nonzero modulo 1.
  bool twisted() const { return twisted_; }

  /// dim(s) = prod m_a^{s_a}; throws std::overflow_error past 2^63.
  Index dim(const SemigroupElement& s) const;

  /// omega(s, t) in this spec's scalar mode.
  Scalar multiplier(const SemigroupElement& s, const SemigroupElement& t) const;

  /// Converts an exact scalar into this spec's mode (float mode rounds).
  Scalar coerce(const Scalar& s) const;

  void check(const SemigroupElement& s) const;
  void check(const BasisMonomial& x) const;

  std::string describe() const;

 private:
  std::vector<Index> gen_dims_;
  std::optional<std::vector<Angle>> theta_;
  ScalarMode mode_ = ScalarMode::kRational;
  unsigned cyclotomic_order_ = 0;
  bool twisted_ = false;
};

/// Free function forms of the system operations.
Index dim(const SystemSpec& spec, const SemigroupElement& s);
Scalar multiplier_value(const SystemSpec& spec, const SemigroupElement& s,
                        const SemigroupElement& t);

/// x * y = phase * (p(x)+p(y), j*dim(p(y)) + l).
std::pair<Scalar, BasisMonomial> mul_basis(const SystemSpec& spec, const BasisMonomial& x,
                                           const BasisMonomial& y);

/// Product of fiber vectors with multiplier phase.
FiberVector mul_vectors(const SystemSpec& spec, const FiberVector& v, const FiberVector& w);

struct GeneratorDigit {
  int generator = 0;  ///< 0-based generator slot a
  Index digit = 0;    ///< 0 <= digit < m_a
  bool operator==(const GeneratorDigit&) const = default;
};

/// Mixed-radix factorization of x into generator-fiber monomials, generator
/// occurrences grouped in the given order (a permutation of 0..k-1). The
/// untwisted product of the factors, left to right, is x.
std::vector<GeneratorDigit> factor_monomial(const SystemSpec& spec, const BasisMonomial& x,
                                            const std::vector<int>& order);
std::vector<GeneratorDigit> factor_monomial(const SystemSpec& spec, const BasisMonomial& x);

/// Parses the `k = / dims = / theta = / scalars =` text format.
SystemSpec parse_system_spec(const std::string& text);
SystemSpec load_system_spec(const std::string& path);

std::ostream& operator<<(std::ostream& os, const SemigroupElement& s);
std::ostream& operator<<(std::ostream& os, const Degree& g);
std::ostream& operator<<(std::ostream& os, const BasisMonomial& x);

}  // namespace cuntz
