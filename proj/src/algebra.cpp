#include "cuntz/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "cuntz/errors.hpp"
#include "cuntz/kernels.hpp"

namespace cuntz {

bool MonomialPairLess::operator()(const MonomialPair& a, const MonomialPair& b) const {
  const auto& al = a.left.fiber.coords;
  const auto& ar = a.right.fiber.coords;
  const auto& bl = b.left.fiber.coords;
  const auto& br = b.right.fiber.coords;
  for (std::size_t i = 0; i < al.size(); ++i) {
    const int da = al[i] - ar[i];
    const int db = bl[i] - br[i];
    if (da != db) return da < db;
  }
  if (al != bl) return al < bl;
  if (a.left.index != b.left.index) return a.left.index < b.left.index;
  return a.right.index < b.right.index;
}

AlgebraElement AlgebraElement::identity(int k) {
  return monomial(BasisMonomial::identity(k), BasisMonomial::identity(k));
}

AlgebraElement AlgebraElement::scalar(int k, const Scalar& c) {
  return monomial(BasisMonomial::identity(k), BasisMonomial::identity(k), c);
}

AlgebraElement AlgebraElement::monomial(const BasisMonomial& x, const BasisMonomial& y,
                                        const Scalar& c) {
  AlgebraElement a;
  a.add_term(c, x, y);
  return a;
}

AlgebraElement AlgebraElement::generator(const BasisMonomial& x) {
  return monomial(x, BasisMonomial::identity(x.fiber.rank()));
}

AlgebraElement AlgebraElement::vector(const FiberVector& v) {
  AlgebraElement a;
  const auto one = BasisMonomial::identity(v.fiber.rank());
  for (Index j = 0; j < v.coeffs.size(); ++j) a.add_term(v.coeffs[j], {v.fiber, j}, one);
  return a;
}

AlgebraElement AlgebraElement::rank_one(const FiberVector& v, const FiberVector& w) {
  AlgebraElement a;
  for (Index j = 0; j < v.coeffs.size(); ++j) {
    if (v.coeffs[j].is_zero()) continue;
    for (Index l = 0; l < w.coeffs.size(); ++l) {
      if (w.coeffs[l].is_zero()) continue;
      a.add_term(v.coeffs[j] * w.coeffs[l].conj(), {v.fiber, j}, {w.fiber, l});
    }
  }
  return a;
}

AlgebraElement AlgebraElement::cuntz_sum(const SystemSpec& spec, const SemigroupElement& s) {
  AlgebraElement a;
  const Index d = spec.dim(s);
  for (Index j = 0; j < d; ++j) a.add_term(Scalar::one(), {s, j}, {s, j});
  return a;
}

void AlgebraElement::add_term(const Scalar& c, const BasisMonomial& x, const BasisMonomial& y) {
  if (x.fiber.rank() != y.fiber.rank()) throw DomainError("monomial ranks differ");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(MonomialPair{x, y}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void AlgebraElement::add(const AlgebraElement& other, const Scalar& factor) {
  const bool unit = factor.is_one();
  for (const auto& [key, c] : other.terms_) add_term(unit ? c : c * factor, key.left, key.right);
}

std::vector<Term> AlgebraElement::terms() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [key, c] : terms_) out.push_back({c, key.left, key.right});
  return out;
}

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
  AlgebraElement a;
  if (c.is_zero()) return a;
  for (const auto& [key, v] : terms_) a.add_term(v * c, key.left, key.right);
  return a;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ib = b.terms_.begin();
  for (auto ia = a.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib) {
    if (ia->first.left != ib->first.left || ia->first.right != ib->first.right) return false;
    if (!(ia->second == ib->second)) return false;
  }
  return true;
}

namespace {

std::string monomial_text(const BasisMonomial& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

bool is_real_rational(const Scalar& c, Rational& out) {
  if (const auto* g = std::get_if<GaussianRational>(&c.value())) {
    if (sgn(g->im) != 0) return false;
    out = g->re;
    return true;
  }
  return false;
}

}  // namespace

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    std::string body;
    const bool left_id = key.left.fiber.is_zero();
    const bool right_id = key.right.fiber.is_zero();
    if (left_id && right_id) {
      body = "I";
    } else {
      if (!left_id) body = monomial_text(key.left);
      if (!right_id) body += (body.empty() ? "" : "*") + monomial_text(key.right) + "'";
    }
    Rational q;
    bool negative = false;
    std::string coeff;
    if (is_real_rational(c, q)) {
      negative = sgn(q) < 0;
      const Rational mag = negative ? Rational(-q) : q;
      if (mag != 1) coeff = mag.get_str();
    } else {
      coeff = c.to_string();
      if (coeff.front() != '(' && coeff.rfind("zeta(", 0) != 0) coeff = "(" + coeff + ")";
    }
    std::string term;
    if (coeff.empty()) {
      term = body;
    } else if (body == "I") {
      term = coeff;
    } else {
      term = coeff + "*" + body;
    }
    if (first) {
      out = (negative ? "-" : "") + term;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const AlgebraElement& a) { return os << a.to_string(); }

AlgebraElement adjoint(const AlgebraElement& a) {
  AlgebraElement out;
  for (const auto& [key, c] : a.storage()) out.add_term(c.conj(), key.right, key.left);
  return out;
}

AlgebraElement rewrite_pair(const SystemSpec& spec, const BasisMonomial& y_prime,
                            const BasisMonomial& x_prime) {
  spec.check(x_prime);
  spec.check(y_prime);
  const SemigroupElement& s = x_prime.fiber;
  const SemigroupElement& t = y_prime.fiber;
  if (s == t) {
    if (x_prime.index != y_prime.index) return {};
    return AlgebraElement::identity(s.rank());
  }
  const Index ds = spec.dim(s);
  const Index dt = spec.dim(t);
  const Scalar phase = spec.multiplier(s, t) * spec.multiplier(t, s).conj();
  // <x'.y, y'.x> != 0 iff j'.dt + l == l'.ds + j, i.e. l = j + offset.
  const __int128 offset = static_cast<__int128>(y_prime.index) * ds -
                          static_cast<__int128>(x_prime.index) * dt;
  const __int128 lo = std::max<__int128>(0, -offset);
  const __int128 hi = std::min<__int128>(ds, static_cast<__int128>(dt) - offset);
  AlgebraElement out;
  for (__int128 j = lo; j < hi; ++j) {
    out.add_term(phase, {s, static_cast<Index>(j)}, {t, static_cast<Index>(j + offset)});
  }
  return out;
}

AlgebraElement adjoint_times(const SystemSpec& spec, const BasisMonomial& y, const BasisMonomial& x) {
  const SemigroupElement& s = x.fiber;
  const SemigroupElement& t = y.fiber;
  const int k = s.rank();
  if (t.divides(s)) {
    // x = conj(omega(t,u)) (t,a)(u,b) with u = s - t.
    const SemigroupElement u = s - t;
    const Index du = spec.dim(u);
    const Index a = x.index / du;
    if (a != y.index) return {};
    return AlgebraElement::monomial({u, x.index % du}, BasisMonomial::identity(k),
                                    spec.multiplier(t, u).conj());
  }
  if (s.divides(t)) {
    const SemigroupElement u = t - s;
    const Index du = spec.dim(u);
    const Index a = y.index / du;
    if (a != x.index) return {};
    return AlgebraElement::monomial(BasisMonomial::identity(k), {u, y.index % du},
                                    spec.multiplier(s, u));
  }
  return rewrite_pair(spec, y, x);
}

void multiply_terms_into(const SystemSpec& spec, const Term& a, const Term& b, AlgebraElement& out) {
  const AlgebraElement middle = adjoint_times(spec, a.right, b.left);
  const Scalar c12 = a.coeff * b.coeff;
  for (const auto& [key, c] : middle.storage()) {
    auto [ph_left, left] = mul_basis(spec, a.left, key.left);
    auto [ph_right, right] = mul_basis(spec, b.right, key.right);
    out.add_term(c12 * c * ph_left * ph_right.conj(), left, right);
  }
}

AlgebraElement multiply(const SystemSpec& spec, const AlgebraElement& a, const AlgebraElement& b) {
  return kernels::multiply(spec, a, b, kernels::default_policy());
}

AlgebraElement multiply(const SystemSpec& spec, const std::vector<AlgebraElement>& factors) {
  if (factors.empty()) return AlgebraElement::identity(spec.rank());
  AlgebraElement acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = multiply(spec, acc, factors[i]);
  return acc;
}

// ---------------------------------------------------------------------------

bool NormalForm::is_zero() const {
  for (const auto& [g, b] : blocks_)
    if (!b.matrix.is_zero()) return false;
  return true;
}

double NormalForm::max_abs_entry() const {
  double m = 0.0;
  for (const auto& [g, b] : blocks_)
    for (const auto& [key, v] : b.matrix.entries()) m = std::max(m, std::abs(v.to_complex()));
  return m;
}

std::string NormalForm::to_string() const {
  std::ostringstream os;
  if (is_zero()) return "0\n";
  for (const auto& [g, b] : blocks_) {
    if (b.matrix.is_zero()) continue;
    os << "degree " << g << " bidegree " << b.left_level << " " << b.right_level << " shape "
       << b.matrix.rows() << "x" << b.matrix.cols() << "\n";
    for (const auto& [key, v] : b.matrix.entries())
      os << "  [" << key.first << "," << key.second << "] " << v << "\n";
  }
  return os.str();
}

void raise_term_into(const SystemSpec& spec, const Term& t, const SemigroupElement& level,
                     SparseMatrix& block) {
  const SemigroupElement r = level - t.left.fiber;
  const Index dr = spec.dim(r);
  Scalar c = t.coeff;
  if (spec.twisted()) c = c * spec.multiplier(t.left.fiber, r) * spec.multiplier(t.right.fiber, r).conj();
  const Index row0 = t.left.index * dr;
  const Index col0 = t.right.index * dr;
  for (Index f = 0; f < dr; ++f) block.add(row0 + f, col0 + f, c);
}

NormalBlock raise_block(const SystemSpec& spec, const NormalBlock& b, const SemigroupElement& level) {
  if (level == b.left_level) return b;
  const SemigroupElement r = level - b.left_level;
  NormalBlock out{level, b.right_level + r, SparseMatrix(spec.dim(level), spec.dim(b.right_level + r))};
  for (const auto& [key, c] : b.matrix.entries()) {
    Term t{c, {b.left_level, key.first}, {b.right_level, key.second}};
    raise_term_into(spec, t, level, out.matrix);
  }
  return out;
}

std::map<Degree, SemigroupElement> canonical_levels(const AlgebraElement& a) {
  std::map<Degree, SemigroupElement> levels;
  for (const auto& [key, c] : a.storage()) {
    const Degree g = degree_between(key.left.fiber, key.right.fiber);
    auto [it, inserted] = levels.try_emplace(g, key.left.fiber);
    if (!inserted) it->second = coordinatewise_max(it->second, key.left.fiber);
  }
  return levels;
}

NormalForm normal_form(const SystemSpec& spec, const AlgebraElement& a) {
  return kernels::normal_form(spec, a, kernels::default_policy());
}

AlgebraElement expand(const NormalForm& nf) {
  AlgebraElement out;
  for (const auto& [g, b] : nf.blocks())
    for (const auto& [key, c] : b.matrix.entries())
      out.add_term(c, {b.left_level, key.first}, {b.right_level, key.second});
  return out;
}

bool same_normal_form(const SystemSpec& spec, const NormalForm& a, const NormalForm& b) {
  auto ia = a.blocks().begin();
  auto ib = b.blocks().begin();
  const auto ea = a.blocks().end();
  const auto eb = b.blocks().end();
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && ia->first < ib->first)) {
      if (!ia->second.matrix.is_zero()) return false;
      ++ia;
    } else if (ia == ea || ib->first < ia->first) {
      if (!ib->second.matrix.is_zero()) return false;
      ++ib;
    } else {
      const SemigroupElement level = coordinatewise_max(ia->second.left_level, ib->second.left_level);
      const NormalBlock ra = raise_block(spec, ia->second, level);
      const NormalBlock rb = raise_block(spec, ib->second, level);
      if (!(ra.matrix == rb.matrix)) return false;
      ++ia;
      ++ib;
    }
  }
  return true;
}

bool equals(const SystemSpec& spec, const AlgebraElement& a, const AlgebraElement& b) {
  if (a == b) return true;
  return normal_form(spec, a - b).is_zero();
}

bool is_zero(const SystemSpec& spec, const AlgebraElement& a) {
  return a.empty() || normal_form(spec, a).is_zero();
}

AlgebraElement gauge_expectation(const AlgebraElement& a) {
  AlgebraElement out;
  for (const auto& [key, c] : a.storage())
    if (key.left.fiber == key.right.fiber) out.add_term(c, key.left, key.right);
  return out;
}

AlgebraElement alpha(const SystemSpec& spec, const SemigroupElement& s, const AlgebraElement& a) {
  spec.check(s);
  const Index ds = spec.dim(s);
  AlgebraElement out;
  for (const auto& [key, c] : a.storage()) {
    for (Index f = 0; f < ds; ++f) {
      auto [ph_left, left] = mul_basis(spec, {s, f}, key.left);
      auto [ph_right, right] = mul_basis(spec, {s, f}, key.right);
      out.add_term(c * ph_left * ph_right.conj(), left, right);
    }
  }
  return out;
}

}  // namespace cuntz
