#include "cuntz/core.hpp"

#include <sstream>

#include "cuntz/errors.hpp"
#include "cuntz/kernels.hpp"

namespace cuntz {

CoreElement CoreElement::identity(const SystemSpec& spec, const SemigroupElement& c) {
  return {c, SparseMatrix::identity(spec.dim(c))};
}

CoreElement CoreElement::zero(const SystemSpec& spec, const SemigroupElement& c) {
  const Index d = spec.dim(c);
  return {c, SparseMatrix(d, d)};
}

CoreElement CoreElement::unit(const SystemSpec& spec, const SemigroupElement& c, Index j, Index l) {
  CoreElement e = zero(spec, c);
  e.matrix.set(j, l, Scalar::one());
  return e;
}

std::string CoreElement::to_string() const {
  if (matrix.rows() <= 64) return matrix.to_dense();
  return matrix.to_triplets();
}

CoreElement embed(const SystemSpec& spec, const CoreElement& s, const SemigroupElement& t) {
  spec.check(t);
  // Twist phases omega(c,t) conj(omega(c,t)) cancel on degree-zero terms.
  return {s.fiber + t, kernels::kronecker_embed(s.matrix, spec.dim(t), kernels::default_policy())};
}

std::pair<CoreElement, CoreElement> common_fiber(const SystemSpec& spec, const CoreElement& a,
                                                 const CoreElement& b) {
  const SemigroupElement c = coordinatewise_max(a.fiber, b.fiber);
  return {embed(spec, a, c - a.fiber), embed(spec, b, c - b.fiber)};
}

bool core_equals(const SystemSpec& spec, const CoreElement& a, const CoreElement& b) {
  auto [ra, rb] = common_fiber(spec, a, b);
  return ra.matrix == rb.matrix;
}

CoreElement core_multiply(const SystemSpec& spec, const CoreElement& a, const CoreElement& b) {
  auto [ra, rb] = common_fiber(spec, a, b);
  return {ra.fiber, ra.matrix * rb.matrix};
}

AlgebraElement to_algebra(const SystemSpec& spec, const CoreElement& s) {
  if (s.matrix.rows() != spec.dim(s.fiber) || s.matrix.cols() != s.matrix.rows())
    throw DomainError("core matrix does not match its fiber");
  AlgebraElement a;
  for (const auto& [key, v] : s.matrix.entries()) a.add_term(v, {s.fiber, key.first}, {s.fiber, key.second});
  return a;
}

CoreElement from_algebra(const SystemSpec& spec, const AlgebraElement& a) {
  const int k = spec.rank();
  for (const auto& [key, c] : a.storage())
    if (key.left.fiber != key.right.fiber)
      throw DomainError("core elements have degree zero; found a term of degree " +
                        [&] {
                          std::ostringstream os;
                          os << degree_between(key.left.fiber, key.right.fiber);
                          return os.str();
                        }());
  const NormalForm nf = normal_form(spec, a);
  if (nf.blocks().empty()) return CoreElement::zero(spec, SemigroupElement::zero(k));
  const NormalBlock& b = nf.blocks().begin()->second;
  return {b.left_level, b.matrix};
}

CoreElement beta(const SystemSpec& spec, const SemigroupElement& r, const CoreElement& s) {
  spec.check(r);
  const SemigroupElement fiber = r + s.fiber;
  const Index d = spec.dim(fiber);
  CoreElement out{fiber, SparseMatrix(d, d)};
  // u_r = (r, 0), so (r,0)(s,j) lands on index j; phases cancel in x y*.
  for (const auto& [key, v] : s.matrix.entries()) out.matrix.add(key.first, key.second, v);
  return out;
}

Scalar TwistedUnit::product_phase(const SystemSpec& spec, const SemigroupElement& s,
                                  const SemigroupElement& t) {
  return mul_basis(spec, at(s), at(t)).first;
}

}  // namespace cuntz
