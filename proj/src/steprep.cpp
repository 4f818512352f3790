#include "cuntz/steprep.hpp"

#include <numeric>
#include <set>
#include <sstream>

#include "cuntz/errors.hpp"
#include "cuntz/kernels.hpp"

namespace cuntz {

StepOperator::StepOperator(Index level_in, Index level_out, SparseMatrix m)
    : level_in_(level_in), level_out_(level_out), matrix_(std::move(m)) {
  if (matrix_.rows() != level_out_ || matrix_.cols() != level_in_)
    throw DomainError("step operator shape does not match its levels");
}

StepOperator StepOperator::adjoint() const { return {level_out_, level_in_, matrix_.adjoint()}; }

bool StepOperator::is_partial_permutation() const {
  std::set<Index> rows;
  std::set<Index> cols;
  for (const auto& [key, v] : matrix_.entries()) {
    if (!v.is_one()) return false;
    if (!rows.insert(key.first).second || !cols.insert(key.second).second) return false;
  }
  return true;
}

StepOperator operator*(const StepOperator& a, const StepOperator& b) {
  if (a.level_in_ != b.level_out_) throw LevelError(a.level_in_, b.level_out_);
  return {b.level_in_, a.level_out_, a.matrix_ * b.matrix_};
}

StepOperator operator+(const StepOperator& a, const StepOperator& b) {
  if (a.level_in_ != b.level_in_ || a.level_out_ != b.level_out_)
    throw DomainError("step operators act between different levels");
  return {a.level_in_, a.level_out_, a.matrix_ + b.matrix_};
}

StepOperator operator-(const StepOperator& a, const StepOperator& b) {
  if (a.level_in_ != b.level_in_ || a.level_out_ != b.level_out_)
    throw DomainError("step operators act between different levels");
  return {a.level_in_, a.level_out_, a.matrix_ - b.matrix_};
}

bool operator==(const StepOperator& a, const StepOperator& b) {
  return a.level_in_ == b.level_in_ && a.level_out_ == b.level_out_ && a.matrix_ == b.matrix_;
}

bool StepFamily::is_zero() const {
  for (const auto& [lvl, op] : by_level_out)
    if (!op.is_zero()) return false;
  return true;
}

StepOperator StepFamily::single() const {
  if (by_level_out.empty()) return StepOperator(level_in, level_in);
  if (by_level_out.size() > 1) throw DomainError("element maps into several output levels");
  return by_level_out.begin()->second;
}

std::string StepFamily::serialize() const {
  if (by_level_out.empty()) return StepOperator(level_in, level_in).serialize();
  std::string out;
  for (const auto& [lvl, op] : by_level_out) out += op.serialize();
  return out;
}

bool operator==(const StepFamily& a, const StepFamily& b) {
  if (a.level_in != b.level_in) return false;
  auto nonzero = [](const StepFamily& f) {
    std::map<Index, const StepOperator*> m;
    for (const auto& [lvl, op] : f.by_level_out)
      if (!op.is_zero()) m.emplace(lvl, &op);
    return m;
  };
  const auto na = nonzero(a);
  const auto nb = nonzero(b);
  if (na.size() != nb.size()) return false;
  for (auto ia = na.begin(), ib = nb.begin(); ia != na.end(); ++ia, ++ib)
    if (ia->first != ib->first || !(*ia->second == *ib->second)) return false;
  return true;
}

Scalar CharacterTwist::value(const SemigroupElement& s) const {
  if (static_cast<int>(lambda.size()) != s.rank()) throw DomainError("character rank mismatch");
  Scalar v = Scalar::one();
  for (int a = 0; a < s.rank(); ++a)
    for (int e = 0; e < s.coords[a]; ++e) v = v * lambda[a];
  return v;
}

bool CharacterTwist::is_unitary() const {
  for (const Scalar& l : lambda) {
    const Scalar n = l * l.conj();
    if (n.is_float()) {
      if (std::abs(n.to_complex() - std::complex<double>(1.0)) > kFloatTolerance) return false;
    } else if (!n.is_one()) {
      return false;
    }
  }
  return true;
}

StepOperator rep_generator(const SystemSpec& spec, const BasisMonomial& x, Index level) {
  spec.check(x);
  const Index d = spec.dim(x.fiber);
  StepOperator op(level, level * d);
  for (Index i = 0; i < level; ++i) op.matrix().add(x.index * level + i, i, Scalar::one());
  return op;
}

StepOperator rep_vector(const SystemSpec& spec, const FiberVector& v, Index level) {
  const Index d = spec.dim(v.fiber);
  if (v.coeffs.size() != d) throw DomainError("fiber vector has the wrong length");
  StepOperator op(level, level * d);
  for (Index j = 0; j < d; ++j) {
    if (v.coeffs[j].is_zero()) continue;
    for (Index i = 0; i < level; ++i) op.matrix().add(j * level + i, i, v.coeffs[j]);
  }
  return op;
}

Index required_level_divisor(const SystemSpec& spec, const AlgebraElement& a) {
  Index n = 1;
  for (const auto& [key, c] : a.storage()) n = std::lcm(n, spec.dim(key.right.fiber));
  return n;
}

void eval_term_into(const SystemSpec& spec, const Term& t, Index n0, const Scalar& factor,
                    SparseMatrix& out) {
  const Index dy = spec.dim(t.right.fiber);
  if (n0 % dy != 0) throw LevelError(n0, dy);
  const Index np = n0 / dy;
  const Scalar c = t.coeff * factor;
  for (Index i = 0; i < np; ++i) out.add(t.left.index * np + i, t.right.index * np + i, c);
}

namespace {

void require_untwisted(const SystemSpec& spec) {
  if (spec.twisted())
    throw UnsupportedRepresentation(
        "the step-function representation exists only for untwisted systems");
}

void require_level(const SystemSpec& spec, const AlgebraElement& a, Index n0) {
  if (n0 == 0) throw DomainError("level must be positive");
  const Index need = required_level_divisor(spec, a);
  if (n0 % need != 0) throw LevelError(n0, need);
}

}  // namespace

StepFamily eval_element(const SystemSpec& spec, const AlgebraElement& a, Index n0) {
  require_untwisted(spec);
  require_level(spec, a, n0);
  const std::vector<Term> terms = a.terms();
  const std::vector<Scalar> ones(terms.size(), Scalar::one());
  return kernels::eval_terms(spec, terms, ones, n0, kernels::default_policy());
}

StepFamily eval_twisted(const SystemSpec& spec, const CharacterTwist& lambda,
                        const AlgebraElement& a, Index n0) {
  require_untwisted(spec);
  require_level(spec, a, n0);
  if (static_cast<int>(lambda.lambda.size()) != spec.rank())
    throw DomainError("character has the wrong number of values");
  if (!lambda.is_unitary()) throw DomainError("character values must lie on the unit circle");
  const std::vector<Term> terms = a.terms();
  std::vector<Scalar> factors;
  factors.reserve(terms.size());
  for (const Term& t : terms)
    factors.push_back(lambda.value(t.left.fiber) * lambda.value(t.right.fiber).conj());
  return kernels::eval_terms(spec, terms, factors, n0, kernels::default_policy());
}

std::vector<Index> default_levels(const SystemSpec& spec, const AlgebraElement& a) {
  const Index n = required_level_divisor(spec, a);
  std::set<Index> levels{n};
  for (Index m : spec.gen_dims()) levels.insert(n * m);
  return {levels.begin(), levels.end()};
}

StepVector StepVector::basis(Index level, Index i) {
  if (i >= level) throw DomainError("basis index exceeds level");
  StepVector v{level, std::vector<Scalar>(level, Scalar::zero()), 1};
  v.coeffs[i] = Scalar::one();
  return v;
}

namespace {

// n = a^2 b with b square-free.
std::pair<Index, Index> split_square(Index n) {
  Index a = 1;
  Index b = 1;
  for (Index p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) a *= p;
    if (e % 2) b *= p;
  }
  return {a, b * n};
}

}  // namespace

bool operator==(const RadicalScalar& a, const RadicalScalar& b) {
  if (a.coeff.is_zero() || b.coeff.is_zero()) return a.coeff.is_zero() && b.coeff.is_zero();
  return a.radicand == b.radicand && a.coeff == b.coeff;
}

StepVector refine_vector(const StepVector& v, Index factor) {
  if (factor == 0) throw DomainError("refinement factor must be positive");
  StepVector out{v.level * factor, {}, v.radicand * factor};
  out.coeffs.reserve(out.level);
  for (const Scalar& c : v.coeffs)
    for (Index q = 0; q < factor; ++q) out.coeffs.push_back(c);
  return out;
}

RadicalScalar inner_product(const StepVector& v, const StepVector& w) {
  const Index level = std::lcm(v.level, w.level);
  const StepVector rv = level == v.level ? v : refine_vector(v, level / v.level);
  const StepVector rw = level == w.level ? w : refine_vector(w, level / w.level);
  Scalar sum = Scalar::zero();
  for (Index i = 0; i < level; ++i) {
    if (rv.coeffs[i].is_zero() || rw.coeffs[i].is_zero()) continue;
    sum += rv.coeffs[i] * rw.coeffs[i].conj();
  }
  // The L^2 pairing of e_i^L with itself is 1, but each refined coefficient
  // carries 1/sqrt(radicand).
  auto [a, b] = split_square(rv.radicand * rw.radicand);
  if (sum.is_zero()) return {Scalar::zero(), 1};
  return {sum / Scalar::integer(static_cast<long>(a)), b};
}

StepVector apply(const StepOperator& op, const StepVector& v) {
  if (op.level_in() != v.level) throw LevelError(v.level, op.level_in());
  StepVector out{op.level_out(), std::vector<Scalar>(op.level_out(), Scalar::zero()), v.radicand};
  for (const auto& [key, c] : op.matrix().entries()) {
    if (v.coeffs[key.second].is_zero()) continue;
    out.coeffs[key.first] += c * v.coeffs[key.second];
  }
  return out;
}

}  // namespace cuntz
