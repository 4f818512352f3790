#include "cuntz/scalar.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>

#include "cuntz/errors.hpp"

namespace cuntz {

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

struct FieldData {
  unsigned order = 1;
  unsigned degree = 1;
  // powers[e] = x^e reduced modulo Phi_order, for 0 <= e < order.
  std::vector<std::vector<Rational>> powers;
};

using IntPoly = std::vector<Integer>;

// Exact quotient of monic-divisor polynomial division.
IntPoly poly_divide(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {Integer(0)};
  IntPoly q(num.size() - dn, Integer(0));
  for (std::size_t i = num.size(); i-- > dn;) {
    Integer c = num[i];
    if (c == 0) continue;
    q[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

const IntPoly& cyclotomic_poly(unsigned n);

IntPoly compute_cyclotomic_poly(unsigned n) {
  IntPoly p(n + 1, Integer(0));
  p[0] = -1;
  p[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) p = poly_divide(p, cyclotomic_poly(d));
  }
  return p;
}

std::mutex& field_mutex() {
  static std::mutex m;
  return m;
}

std::map<unsigned, IntPoly>& poly_cache() {
  static std::map<unsigned, IntPoly> cache;
  return cache;
}

// Callers hold field_mutex().
const IntPoly& cyclotomic_poly(unsigned n) {
  auto& cache = poly_cache();
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  IntPoly p = compute_cyclotomic_poly(n);
  return cache.emplace(n, std::move(p)).first->second;
}

const FieldData& field(unsigned n) {
  thread_local unsigned last_order = 0;
  thread_local const FieldData* last = nullptr;
  if (last_order == n) return *last;

  static std::map<unsigned, std::unique_ptr<FieldData>> cache;
  std::lock_guard<std::mutex> lock(field_mutex());
  auto remember = [&](const FieldData& f) -> const FieldData& {
    last_order = n;
    last = &f;
    return f;
  };
  auto it = cache.find(n);
  if (it != cache.end()) return remember(*it->second);

  auto data = std::make_unique<FieldData>();
  data->order = n;
  const IntPoly& phi_poly = cyclotomic_poly(n);
  const unsigned deg = static_cast<unsigned>(phi_poly.size() - 1);
  data->degree = deg;
  data->powers.assign(n, std::vector<Rational>(deg, Rational(0)));
  // x^e for e < deg is a basis vector; higher powers via x^e = x * x^(e-1).
  std::vector<Rational> cur(deg, Rational(0));
  cur[0] = 1;
  for (unsigned e = 0; e < n; ++e) {
    data->powers[e] = cur;
    std::vector<Rational> next(deg, Rational(0));
    Rational top = cur[deg - 1];
    for (unsigned j = deg - 1; j > 0; --j) next[j] = cur[j - 1];
    next[0] = 0;
    if (sgn(top) != 0) {
      for (unsigned j = 0; j < deg; ++j) next[j] -= top * Rational(phi_poly[j]);
    }
    cur = std::move(next);
  }
  const FieldData& ref = *data;
  cache.emplace(n, std::move(data));
  return remember(ref);
}

unsigned lcm_u(unsigned a, unsigned b) { return std::lcm(a, b); }

}  // namespace

Cyclotomic::Cyclotomic(unsigned order) : order_(order) {
  if (order == 0) throw DomainError("cyclotomic order must be positive");
  coeffs_.assign(field(order).degree, Rational(0));
}

Cyclotomic::Cyclotomic(unsigned order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (order == 0) throw DomainError("cyclotomic order must be positive");
  if (coeffs_.size() != field(order).degree)
    throw DomainError("cyclotomic coefficient vector has wrong length");
}

Cyclotomic Cyclotomic::root_of_unity(unsigned order, std::int64_t exponent) {
  const auto& f = field(order);
  std::int64_t e = exponent % static_cast<std::int64_t>(order);
  if (e < 0) e += order;
  return Cyclotomic(order, f.powers[static_cast<std::size_t>(e)]);
}

Cyclotomic Cyclotomic::from_gaussian(const GaussianRational& g) {
  if (sgn(g.im) == 0) return Cyclotomic(1, {g.re});
  return Cyclotomic(4, {g.re, g.im});
}

Cyclotomic Cyclotomic::lift(unsigned m) const {
  if (m == order_) return *this;
  if (m % order_ != 0) throw DomainError("cyclotomic lift to non-multiple order");
  const auto& f = field(m);
  const unsigned step = m / order_;
  std::vector<Rational> out(f.degree, Rational(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (sgn(coeffs_[j]) == 0) continue;
    const auto& pw = f.powers[(j * step) % m];
    for (unsigned t = 0; t < f.degree; ++t) {
      if (sgn(pw[t]) != 0) out[t] += coeffs_[j] * pw[t];
    }
  }
  return Cyclotomic(m, std::move(out));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

Cyclotomic Cyclotomic::conj() const {
  const auto& f = field(order_);
  std::vector<Rational> out(f.degree, Rational(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (sgn(coeffs_[j]) == 0) continue;
    const auto& pw = f.powers[(order_ - j) % order_];
    for (unsigned t = 0; t < f.degree; ++t) {
      if (sgn(pw[t]) != 0) out[t] += coeffs_[j] * pw[t];
    }
  }
  return Cyclotomic(order_, std::move(out));
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ != b.order_) {
    const unsigned m = lcm_u(a.order_, b.order_);
    return a.lift(m) + b.lift(m);
  }
  std::vector<Rational> out = a.coeffs_;
  for (std::size_t j = 0; j < out.size(); ++j) out[j] += b.coeffs_[j];
  return Cyclotomic(a.order_, std::move(out));
}

Cyclotomic Cyclotomic::operator-() const {
  std::vector<Rational> out = coeffs_;
  for (auto& c : out) c = -c;
  return Cyclotomic(order_, std::move(out));
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ != b.order_) {
    const unsigned m = lcm_u(a.order_, b.order_);
    return a.lift(m) * b.lift(m);
  }
  const unsigned n = a.order_;
  const auto& f = field(n);
  // Cyclic convolution in Q[x]/(x^n - 1), then reduce each power.
  std::vector<Rational> cyc(n, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      cyc[(i + j) % n] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  std::vector<Rational> out(f.degree, Rational(0));
  for (unsigned e = 0; e < n; ++e) {
    if (sgn(cyc[e]) == 0) continue;
    const auto& pw = f.powers[e];
    for (unsigned t = 0; t < f.degree; ++t) {
      if (sgn(pw[t]) != 0) out[t] += cyc[e] * pw[t];
    }
  }
  return Cyclotomic(n, std::move(out));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  const unsigned deg = static_cast<unsigned>(coeffs_.size());
  // Columns of the multiplication-by-this matrix are this * zeta^j.
  std::vector<std::vector<Rational>> m(deg, std::vector<Rational>(deg + 1, Rational(0)));
  for (unsigned j = 0; j < deg; ++j) {
    Cyclotomic col = *this * root_of_unity(order_, j);
    for (unsigned i = 0; i < deg; ++i) m[i][j] = col.coeffs_[i];
  }
  m[0][deg] = 1;
  for (unsigned c = 0; c < deg; ++c) {
    unsigned piv = c;
    while (piv < deg && sgn(m[piv][c]) == 0) ++piv;
    if (piv == deg) throw DomainError("singular cyclotomic multiplication matrix");
    std::swap(m[piv], m[c]);
    Rational inv = 1 / m[c][c];
    for (unsigned t = c; t <= deg; ++t) m[c][t] *= inv;
    for (unsigned r = 0; r < deg; ++r) {
      if (r == c || sgn(m[r][c]) == 0) continue;
      Rational factor = m[r][c];
      for (unsigned t = c; t <= deg; ++t) m[r][t] -= factor * m[c][t];
    }
  }
  std::vector<Rational> out(deg);
  for (unsigned i = 0; i < deg; ++i) out[i] = m[i][deg];
  return Cyclotomic(order_, std::move(out));
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> z = 0;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (sgn(coeffs_[j]) == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / order_;
    z += coeffs_[j].get_d() * std::polar(1.0, angle);
  }
  return z;
}

// ---------------------------------------------------------------------------

namespace {

std::complex<double> as_complex(const Scalar::Value& v) {
  return std::visit(
      [](const auto& x) -> std::complex<double> {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, GaussianRational>) {
          return {x.re.get_d(), x.im.get_d()};
        } else if constexpr (std::is_same_v<T, Cyclotomic>) {
          return x.to_complex();
        } else {
          return x;
        }
      },
      v);
}

Cyclotomic as_cyclotomic(const Scalar::Value& v) {
  if (const auto* g = std::get_if<GaussianRational>(&v)) return Cyclotomic::from_gaussian(*g);
  return std::get<Cyclotomic>(v);
}

enum class Kind { kGaussian, kCyclotomic, kFloat };

Kind common_kind(const Scalar& a, const Scalar& b) {
  if (a.is_float() || b.is_float()) return Kind::kFloat;
  if (std::holds_alternative<GaussianRational>(a.value()) &&
      std::holds_alternative<GaussianRational>(b.value()))
    return Kind::kGaussian;
  return Kind::kCyclotomic;
}

std::string rational_text(const Rational& q) { return q.get_str(); }

std::string double_text(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s = buf;
  if (s.find_first_of(".en") == std::string::npos) s += ".0";
  return s;
}

}  // namespace

bool Scalar::is_zero() const {
  return std::visit(
      [](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::complex<double>>) {
          return std::abs(x) < kFloatTolerance;
        } else {
          return x.is_zero();
        }
      },
      value_);
}

Scalar Scalar::conj() const {
  return std::visit(
      [](const auto& x) -> Scalar {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, GaussianRational>) {
          return GaussianRational{x.re, -x.im};
        } else if constexpr (std::is_same_v<T, Cyclotomic>) {
          return x.conj();
        } else {
          return std::conj(x);
        }
      },
      value_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  return std::visit(
      [](const auto& x) -> Scalar {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, GaussianRational>) {
          Rational n = x.re * x.re + x.im * x.im;
          return GaussianRational{x.re / n, -x.im / n};
        } else if constexpr (std::is_same_v<T, Cyclotomic>) {
          return x.inverse();
        } else {
          return 1.0 / x;
        }
      },
      value_);
}

std::complex<double> Scalar::to_complex() const { return as_complex(value_); }

Rational Scalar::real_rational() const {
  if (const auto* g = std::get_if<GaussianRational>(&value_)) {
    if (sgn(g->im) != 0) throw DomainError("scalar is not real");
    return g->re;
  }
  if (const auto* c = std::get_if<Cyclotomic>(&value_)) {
    // Real rationals are exactly the multiples of 1 in the power basis.
    for (std::size_t j = 1; j < c->coeffs().size(); ++j)
      if (sgn(c->coeffs()[j]) != 0) throw DomainError("scalar is not rational");
    return c->coeffs()[0];
  }
  throw DomainError("float scalar has no exact rational value");
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  switch (common_kind(a, b)) {
    case Kind::kGaussian: {
      const auto& x = std::get<GaussianRational>(a.value_);
      const auto& y = std::get<GaussianRational>(b.value_);
      return GaussianRational{x.re + y.re, x.im + y.im};
    }
    case Kind::kCyclotomic:
      return as_cyclotomic(a.value_) + as_cyclotomic(b.value_);
    case Kind::kFloat:
      return as_complex(a.value_) + as_complex(b.value_);
  }
  return {};
}

Scalar Scalar::operator-() const {
  return std::visit(
      [](const auto& x) -> Scalar {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, GaussianRational>) {
          return GaussianRational{-x.re, -x.im};
        } else {
          return -x;
        }
      },
      value_);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  switch (common_kind(a, b)) {
    case Kind::kGaussian: {
      const auto& x = std::get<GaussianRational>(a.value_);
      const auto& y = std::get<GaussianRational>(b.value_);
      if (sgn(x.im) == 0 && sgn(y.im) == 0) return GaussianRational{x.re * y.re, 0};
      return GaussianRational{x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    case Kind::kCyclotomic:
      return as_cyclotomic(a.value_) * as_cyclotomic(b.value_);
    case Kind::kFloat:
      return as_complex(a.value_) * as_complex(b.value_);
  }
  return {};
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

std::string Scalar::to_string() const {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, GaussianRational>) {
          if (sgn(x.im) == 0) return rational_text(x.re);
          if (sgn(x.re) == 0) {
            if (x.im == 1) return "i";
            if (x.im == -1) return "-i";
            return rational_text(x.im) + "i";
          }
          std::string s = rational_text(x.re);
          if (sgn(x.im) > 0) {
            s += "+" + rational_text(x.im);
          } else {
            s += "-" + rational_text(Rational(-x.im));
          }
          return s + "i";
        } else if constexpr (std::is_same_v<T, Cyclotomic>) {
          const auto& cs = x.coeffs();
          std::vector<std::size_t> nz;
          for (std::size_t j = 0; j < cs.size(); ++j)
            if (sgn(cs[j]) != 0) nz.push_back(j);
          if (nz.empty()) return "0";
          const std::string zeta = "zeta(" + std::to_string(x.order()) + ")^";
          if (nz.size() == 1) {
            const std::size_t j = nz[0];
            if (j == 0) return rational_text(cs[0]);
            if (cs[j] == 1) return zeta + std::to_string(j);
          }
          std::string s = "(";
          bool first = true;
          for (std::size_t j : nz) {
            Rational c = cs[j];
            if (first) {
              if (sgn(c) < 0) {
                s += "-";
                c = -c;
              }
            } else {
              s += sgn(c) < 0 ? " - " : " + ";
              if (sgn(c) < 0) c = -c;
            }
            first = false;
            if (j == 0) {
              s += rational_text(c);
            } else if (c == 1) {
              s += zeta + std::to_string(j);
            } else {
              s += rational_text(c) + "*" + zeta + std::to_string(j);
            }
          }
          return s + ")";
        } else {
          std::string s = double_text(x.real());
          if (x.imag() == 0.0) return s;
          if (x.imag() > 0) {
            s += "+" + double_text(x.imag());
          } else {
            s += "-" + double_text(-x.imag());
          }
          return s + "i";
        }
      },
      value_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace cuntz
