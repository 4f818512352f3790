#include "cuntz/system.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cuntz/errors.hpp"

namespace cuntz {

bool Degree::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

SemigroupElement::SemigroupElement(std::vector<int> c) : coords(std::move(c)) {
  for (int v : coords)
    if (v < 0) throw DomainError("semigroup element has a negative coordinate");
}

SemigroupElement SemigroupElement::generator(int k, int a) {
  std::vector<int> c(k, 0);
  c.at(a) = 1;
  return SemigroupElement(std::move(c));
}

bool SemigroupElement::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

int SemigroupElement::total() const { return std::accumulate(coords.begin(), coords.end(), 0); }

bool SemigroupElement::divides(const SemigroupElement& t) const {
  for (std::size_t a = 0; a < coords.size(); ++a)
    if (coords[a] > t.coords[a]) return false;
  return true;
}

SemigroupElement operator+(const SemigroupElement& a, const SemigroupElement& b) {
  SemigroupElement r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

SemigroupElement operator-(const SemigroupElement& t, const SemigroupElement& s) {
  SemigroupElement r = t;
  for (std::size_t i = 0; i < r.coords.size(); ++i) {
    r.coords[i] -= s.coords[i];
    if (r.coords[i] < 0) throw DomainError("semigroup difference leaves N^k");
  }
  return r;
}

SemigroupElement SemigroupElement::scaled(int n) const {
  SemigroupElement r = *this;
  for (int& c : r.coords) c *= n;
  return r;
}

Degree degree_between(const SemigroupElement& left, const SemigroupElement& right) {
  Degree g;
  g.coords.resize(left.coords.size());
  for (std::size_t i = 0; i < g.coords.size(); ++i) g.coords[i] = left.coords[i] - right.coords[i];
  return g;
}

SemigroupElement coordinatewise_max(const SemigroupElement& a, const SemigroupElement& b) {
  SemigroupElement r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] = std::max(r.coords[i], b.coords[i]);
  return r;
}

FiberVector FiberVector::basis(const BasisMonomial& x, Index dim) {
  FiberVector v{x.fiber, std::vector<Scalar>(dim, Scalar::zero())};
  v.coeffs.at(x.index) = Scalar::one();
  return v;
}

bool FiberVector::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Scalar& c) { return c.is_zero(); });
}

Scalar inner_product(const FiberVector& v, const FiberVector& w) {
  if (v.fiber != w.fiber) throw DomainError("inner product across different fibers");
  Scalar sum = Scalar::zero();
  for (std::size_t j = 0; j < v.coeffs.size(); ++j) {
    if (v.coeffs[j].is_zero() || w.coeffs[j].is_zero()) continue;
    sum += v.coeffs[j] * w.coeffs[j].conj();
  }
  return sum;
}

// ---------------------------------------------------------------------------

namespace {

Rational reduce_mod_one(const Rational& q) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return q - Rational(fl);
}

bool angle_is_zero(const Angle& a) {
  if (const auto* q = std::get_if<Rational>(&a)) return sgn(reduce_mod_one(*q)) == 0;
  const double x = std::get<double>(a);
  return x == std::floor(x);
}

}  // namespace

SystemSpec::SystemSpec(std::vector<Index> gen_dims, std::optional<std::vector<Angle>> theta,
                       ScalarMode mode, unsigned cyclotomic_order)
    : gen_dims_(std::move(gen_dims)),
      theta_(std::move(theta)),
      mode_(mode),
      cyclotomic_order_(cyclotomic_order) {
  if (gen_dims_.empty()) throw ConfigError("k must be positive");
  for (Index m : gen_dims_)
    if (m == 0) throw ConfigError("generator dimensions must be positive");
  if (mode_ == ScalarMode::kCyclotomic && cyclotomic_order_ == 0)
    throw ConfigError("cyclotomic mode needs a positive order");
  if (mode_ != ScalarMode::kCyclotomic) cyclotomic_order_ = 0;
  if (!theta_) return;

  const std::size_t k = gen_dims_.size();
  if (theta_->size() != k * k) throw ConfigError("theta must have k*k entries");
  for (const Angle& a : *theta_) {
    if (!angle_is_zero(a)) twisted_ = true;
    if (const auto* q = std::get_if<Rational>(&a)) {
      Rational frac = reduce_mod_one(*q);
      const Integer den = frac.get_den();
      if (mode_ == ScalarMode::kCyclotomic && cyclotomic_order_ % den.get_ui() != 0)
        throw ConfigError("theta denominator " + den.get_str() + " does not divide cyclotomic order " +
                          std::to_string(cyclotomic_order_));
      if (mode_ == ScalarMode::kRational && 4 % den.get_ui() != 0)
        throw ConfigError("rational scalars only carry fourth roots of unity; theta denominator " +
                          den.get_str() + " needs cyclotomic or float scalars");
    } else if (mode_ != ScalarMode::kFloat && !angle_is_zero(a)) {
      throw ConfigError("float theta requires float scalars");
    }
  }
}

Index SystemSpec::dim(const SemigroupElement& s) const {
  check(s);
  Index d = 1;
  for (std::size_t a = 0; a < gen_dims_.size(); ++a) {
    for (int e = 0; e < s.coords[a]; ++e) {
      if (__builtin_mul_overflow(d, gen_dims_[a], &d) || d > (Index{1} << 62))
        throw std::overflow_error("fiber dimension overflows 64 bits");
    }
  }
  return d;
}

Scalar SystemSpec::multiplier(const SemigroupElement& s, const SemigroupElement& t) const {
  if (!twisted_) return coerce(Scalar::one());
  const std::size_t k = gen_dims_.size();
  Rational exact_sum = 0;
  double float_sum = 0.0;
  for (std::size_t a = 0; a < k; ++a) {
    if (s.coords[a] == 0) continue;
    for (std::size_t b = 0; b < k; ++b) {
      if (t.coords[b] == 0) continue;
      const long w = static_cast<long>(s.coords[a]) * t.coords[b];
      const Angle& th = (*theta_)[a * k + b];
      if (const auto* q = std::get_if<Rational>(&th)) {
        exact_sum += *q * w;
      } else {
        float_sum += std::get<double>(th) * static_cast<double>(w);
      }
    }
  }
  switch (mode_) {
    case ScalarMode::kFloat: {
      const double angle = 2.0 * std::numbers::pi * (exact_sum.get_d() + float_sum);
      return std::polar(1.0, angle);
    }
    case ScalarMode::kRational: {
      Rational frac = reduce_mod_one(exact_sum) * 4;
      switch (frac.get_num().get_si()) {
        case 0: return Scalar::one();
        case 1: return Scalar::gaussian(0, 1);
        case 2: return Scalar::integer(-1);
        default: return Scalar::gaussian(0, -1);
      }
    }
    case ScalarMode::kCyclotomic: {
      Rational e = reduce_mod_one(exact_sum) * cyclotomic_order_;
      return Cyclotomic::root_of_unity(cyclotomic_order_, e.get_num().get_si());
    }
  }
  return Scalar::one();
}

Scalar SystemSpec::coerce(const Scalar& s) const {
  if (mode_ == ScalarMode::kFloat && s.is_exact()) return s.to_complex();
  return s;
}

void SystemSpec::check(const SemigroupElement& s) const {
  if (s.coords.size() != gen_dims_.size())
    throw DomainError("fiber has " + std::to_string(s.coords.size()) + " coordinates, spec has k = " +
                      std::to_string(gen_dims_.size()));
}

void SystemSpec::check(const BasisMonomial& x) const {
  const Index d = dim(x.fiber);
  if (x.index >= d) {
    std::ostringstream os;
    os << "basis index " << x.index << " out of range for fiber " << x.fiber << " of dimension " << d;
    throw DomainError(os.str());
  }
}

std::string SystemSpec::describe() const {
  std::ostringstream os;
  os << "E(";
  for (std::size_t a = 0; a < gen_dims_.size(); ++a) os << (a ? "," : "") << gen_dims_[a];
  os << ")";
  if (twisted_) {
    os << " twisted by theta =";
    for (const Angle& a : *theta_) {
      if (const auto* q = std::get_if<Rational>(&a)) {
        os << " " << q->get_str();
      } else {
        os << " " << std::get<double>(a);
      }
    }
  }
  switch (mode_) {
    case ScalarMode::kRational: os << ", rational scalars"; break;
    case ScalarMode::kCyclotomic: os << ", cyclotomic:" << cyclotomic_order_ << " scalars"; break;
    case ScalarMode::kFloat: os << ", float scalars"; break;
  }
  return os.str();
}

Index dim(const SystemSpec& spec, const SemigroupElement& s) { return spec.dim(s); }

Scalar multiplier_value(const SystemSpec& spec, const SemigroupElement& s,
                        const SemigroupElement& t) {
  return spec.multiplier(s, t);
}

std::pair<Scalar, BasisMonomial> mul_basis(const SystemSpec& spec, const BasisMonomial& x,
                                           const BasisMonomial& y) {
  const Index dy = spec.dim(y.fiber);
  Index idx = 0;
  if (__builtin_mul_overflow(x.index, dy, &idx) || __builtin_add_overflow(idx, y.index, &idx))
    throw std::overflow_error("basis index overflows 64 bits");
  return {spec.multiplier(x.fiber, y.fiber), BasisMonomial{x.fiber + y.fiber, idx}};
}

FiberVector mul_vectors(const SystemSpec& spec, const FiberVector& v, const FiberVector& w) {
  const Index dw = w.coeffs.size();
  FiberVector out{v.fiber + w.fiber,
                  std::vector<Scalar>(v.coeffs.size() * dw, Scalar::zero())};
  const Scalar phase = spec.multiplier(v.fiber, w.fiber);
  for (Index i = 0; i < v.coeffs.size(); ++i) {
    if (v.coeffs[i].is_zero()) continue;
    const Scalar vi = v.coeffs[i] * phase;
    for (Index q = 0; q < dw; ++q) {
      if (w.coeffs[q].is_zero()) continue;
      out.coeffs[i * dw + q] = vi * w.coeffs[q];
    }
  }
  return out;
}

std::vector<GeneratorDigit> factor_monomial(const SystemSpec& spec, const BasisMonomial& x,
                                            const std::vector<int>& order) {
  spec.check(x);
  const int k = spec.rank();
  std::vector<int> seen(order.begin(), order.end());
  std::sort(seen.begin(), seen.end());
  if (static_cast<int>(order.size()) != k)
    throw DomainError("generator order must list every generator exactly once");
  for (int a = 0; a < k; ++a)
    if (seen[a] != a) throw DomainError("generator order must be a permutation of 1..k");

  std::vector<GeneratorDigit> digits;
  digits.reserve(x.fiber.total());
  for (int a : order)
    for (int rep = 0; rep < x.fiber.coords[a]; ++rep) digits.push_back({a, 0});
  // The first factor is the most significant digit.
  Index rest = x.index;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    const Index m = spec.gen_dims()[it->generator];
    it->digit = rest % m;
    rest /= m;
  }
  return digits;
}

std::vector<GeneratorDigit> factor_monomial(const SystemSpec& spec, const BasisMonomial& x) {
  std::vector<int> order(spec.rank());
  std::iota(order.begin(), order.end(), 0);
  return factor_monomial(spec, x, order);
}

// ---------------------------------------------------------------------------

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

Angle parse_angle(const std::string& tok, int line) {
  if (tok.find_first_of(".eE") != std::string::npos) {
    try {
      std::size_t used = 0;
      double v = std::stod(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      return v;
    } catch (const std::exception&) {
      throw ConfigError("malformed float angle '" + tok + "'", line);
    }
  }
  Rational q;
  if (q.set_str(tok, 10) != 0 || sgn(q.get_den()) == 0) throw ConfigError("malformed rational angle '" + tok + "'", line);
  q.canonicalize();
  return q;
}

Index parse_positive(const std::string& tok, int line) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(tok, &used);
    if (used != tok.size() || v <= 0) throw std::invalid_argument(tok);
    return static_cast<Index>(v);
  } catch (const std::exception&) {
    throw ConfigError("expected a positive integer, got '" + tok + "'", line);
  }
}

}  // namespace

SystemSpec parse_system_spec(const std::string& text) {
  std::optional<Index> k;
  int k_line = 0;
  std::optional<std::vector<Index>> dims;
  int dims_line = 0;
  std::optional<std::vector<Angle>> theta;
  int theta_line = 0;
  ScalarMode mode = ScalarMode::kRational;
  unsigned order = 0;
  int mode_line = 0;

  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string content = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (content.empty()) continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos) throw ConfigError("expected 'key = value'", line);
    const std::string key = trim(content.substr(0, eq));
    const std::string value = trim(content.substr(eq + 1));
    const auto toks = split_ws(value);
    if (toks.empty()) throw ConfigError("missing value for '" + key + "'", line);
    if (key == "k") {
      if (toks.size() != 1) throw ConfigError("k takes one integer", line);
      k = parse_positive(toks[0], line);
      k_line = line;
    } else if (key == "dims") {
      std::vector<Index> d;
      for (const auto& t : toks) d.push_back(parse_positive(t, line));
      dims = std::move(d);
      dims_line = line;
    } else if (key == "theta") {
      std::vector<Angle> th;
      for (const auto& t : toks) th.push_back(parse_angle(t, line));
      theta = std::move(th);
      theta_line = line;
    } else if (key == "scalars") {
      mode_line = line;
      if (value == "rational") {
        mode = ScalarMode::kRational;
      } else if (value == "float") {
        mode = ScalarMode::kFloat;
      } else if (value.rfind("cyclotomic:", 0) == 0) {
        mode = ScalarMode::kCyclotomic;
        order = static_cast<unsigned>(parse_positive(trim(value.substr(11)), line));
      } else {
        throw ConfigError("scalars must be rational, cyclotomic:<q> or float", line);
      }
    } else {
      throw ConfigError("unknown key '" + key + "'", line);
    }
  }
  if (!dims) throw ConfigError("missing 'dims' line", line + 1);
  if (k && *k != dims->size())
    throw ConfigError("dims lists " + std::to_string(dims->size()) + " entries but k = " + std::to_string(*k),
                      dims_line);
  (void)k_line;
  if (theta && theta->size() != dims->size() * dims->size())
    throw ConfigError("theta needs k*k = " + std::to_string(dims->size() * dims->size()) + " entries",
                      theta_line);
  try {
    return SystemSpec(*dims, theta, mode, order);
  } catch (const ConfigError& e) {
    throw ConfigError(e.what(), theta ? theta_line : mode_line);
  }
}

SystemSpec load_system_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open spec file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_system_spec(ss.str());
}

std::ostream& operator<<(std::ostream& os, const SemigroupElement& s) {
  os << "(";
  for (std::size_t i = 0; i < s.coords.size(); ++i) os << (i ? "," : "") << s.coords[i];
  return os << ")";
}

std::ostream& operator<<(std::ostream& os, const Degree& g) {
  os << "(";
  for (std::size_t i = 0; i < g.coords.size(); ++i) os << (i ? "," : "") << g.coords[i];
  return os << ")";
}

std::ostream& operator<<(std::ostream& os, const BasisMonomial& x) {
  os << "e(";
  for (std::size_t i = 0; i < x.fiber.coords.size(); ++i) os << (i ? "," : "") << x.fiber.coords[i];
  return os << ";" << x.index << ")";
}

}  // namespace cuntz
