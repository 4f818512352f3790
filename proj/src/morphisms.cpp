#include "cuntz/morphisms.hpp"

#include <functional>
#include <sstream>

#include "cuntz/errors.hpp"

namespace cuntz {

namespace {

std::string label(int a, Index i) {
  return "U(" + std::to_string(a + 1) + "," + std::to_string(i) + ")";
}

SemigroupElement unit(int k, int a) { return SemigroupElement::generator(k, a); }

}  // namespace

GeneratorAssignment GeneratorAssignment::canonical(const SystemSpec& spec, TargetKind kind) {
  GeneratorAssignment g{spec, spec, kind, {}};
  for (int a = 0; a < spec.rank(); ++a)
    for (Index i = 0; i < spec.gen_dims()[a]; ++i)
      g.images[{a, i}] = AlgebraElement::generator({unit(spec.rank(), a), i});
  return g;
}

const AlgebraElement& GeneratorAssignment::image(int a, Index i) const {
  auto it = images.find({a, i});
  if (it == images.end()) throw DomainError("no image assigned to " + label(a, i));
  return it->second;
}

bool GeneratorAssignment::target_equals(const AlgebraElement& x, const AlgebraElement& y) const {
  if (kind == TargetKind::kAlgebra) return equals(target, x, y);
  const AlgebraElement d = x - y;
  if (d.empty()) return true;
  for (Index n0 : default_levels(target, d))
    if (!eval_element(target, d, n0).is_zero()) return false;
  return true;
}

std::string RelationReport::to_string() const {
  std::ostringstream os;
  os << "checked " << checked << " relations, " << violations.size() << " violated\n";
  for (const auto& v : violations) os << "  " << v.detail << "\n";
  return os.str();
}

RelationReport check_relations(const GeneratorAssignment& A) {
  const SystemSpec& src = A.source;
  const SystemSpec& tgt = A.target;
  const int k = src.rank();
  RelationReport report;
  for (int a = 0; a < k; ++a)
    for (Index i = 0; i < src.gen_dims()[a]; ++i)
      if (!A.images.count({a, i}))
        report.violations.push_back({RelationKind::kMissing, label(a, i) + " has no image"});
  if (!report.ok()) return report;

  struct Instance {
    RelationKind kind;
    std::string detail;
    std::function<bool()> holds;
  };
  std::vector<Instance> inst;
  const AlgebraElement one = AlgebraElement::identity(tgt.rank());
  for (int a = 0; a < k; ++a) {
    const Index ma = src.gen_dims()[a];
    for (Index i = 0; i < ma; ++i) {
      inst.push_back({RelationKind::kIsometry, label(a, i) + "* " + label(a, i) + " != 1",
                      [&, a, i] { return A.target_equals(multiply(tgt, adjoint(A.image(a, i)), A.image(a, i)), one); }});
      for (Index j = i + 1; j < ma; ++j)
        inst.push_back({RelationKind::kOrthogonality, label(a, i) + "* " + label(a, j) + " != 0",
                        [&, a, i, j] {
                          return A.target_equals(multiply(tgt, adjoint(A.image(a, i)), A.image(a, j)), {});
                        }});
    }
    inst.push_back({RelationKind::kCuntzSum, "sum_i U(" + std::to_string(a + 1) + ",i) U(" + std::to_string(a + 1) + ",i)* != 1",
                    [&, a, ma] {
                      AlgebraElement sum;
                      for (Index i = 0; i < ma; ++i)
                        sum.add(multiply(tgt, A.image(a, i), adjoint(A.image(a, i))));
                      return A.target_equals(sum, one);
                    }});
  }
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      const Index ma = src.gen_dims()[a];
      const Index mb = src.gen_dims()[b];
      // (e_a,i)(e_b,j) and (e_b,p)(e_a,q) name the same monomial up to phases.
      const Scalar phase = src.multiplier(unit(k, a), unit(k, b)) * src.multiplier(unit(k, b), unit(k, a)).conj();
      for (Index i = 0; i < ma; ++i)
        for (Index j = 0; j < mb; ++j) {
          const Index n = i * mb + j;
          const Index p = n / ma;
          const Index q = n % ma;
          inst.push_back({RelationKind::kCommutation,
                          label(a, i) + " " + label(b, j) + " != " + label(b, p) + " " + label(a, q),
                          [&, a, b, i, j, p, q, phase] {
                            const AlgebraElement lhs = multiply(tgt, A.image(a, i), A.image(b, j));
                            const AlgebraElement rhs = multiply(tgt, A.image(b, p), A.image(a, q)).scaled(phase);
                            return A.target_equals(lhs, rhs);
                          }});
        }
    }

  const int n = static_cast<int>(inst.size());
  std::vector<char> holds(n, 0);
  std::vector<std::string> errors(n);
#ifdef CUNTZ_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) if (n >= 8)
#endif
  for (int r = 0; r < n; ++r) {
    try {
      holds[r] = inst[r].holds() ? 1 : 0;
    } catch (const std::exception& e) {
      errors[r] = e.what();
    }
  }
  report.checked = inst.size();
  for (int r = 0; r < n; ++r) {
    if (holds[r]) continue;
    std::string d = inst[r].detail;
    if (!errors[r].empty()) d += " (" + errors[r] + ")";
    report.violations.push_back({inst[r].kind, d});
  }
  return report;
}

std::optional<VerifiedAssignment> VerifiedAssignment::verify(GeneratorAssignment a, RelationReport* report) {
  RelationReport r = check_relations(a);
  const bool ok = r.ok();
  if (report) *report = std::move(r);
  if (!ok) return std::nullopt;
  return VerifiedAssignment(std::move(a));
}

AlgebraElement extend(const VerifiedAssignment& v, const BasisMonomial& x, const std::vector<int>& order) {
  const GeneratorAssignment& A = v.assignment();
  const SystemSpec& src = A.source;
  const int k = src.rank();
  AlgebraElement acc = AlgebraElement::identity(A.target.rank());
  BasisMonomial mono = BasisMonomial::identity(k);
  Scalar phase = Scalar::one();
  for (const GeneratorDigit& d : factor_monomial(src, x, order)) {
    acc = multiply(A.target, acc, A.image(d.generator, d.digit));
    auto [ph, next] = mul_basis(src, mono, {unit(k, d.generator), d.digit});
    phase *= ph;
    mono = next;
  }
  if (phase.is_one()) return acc;
  return acc.scaled(phase.conj());
}

AlgebraElement extend(const VerifiedAssignment& v, const BasisMonomial& x) {
  std::vector<int> order(v.assignment().source.rank());
  for (int a = 0; a < static_cast<int>(order.size()); ++a) order[a] = a;
  return extend(v, x, order);
}

AlgebraElement extend(const GeneratorAssignment& a, const BasisMonomial& x, const std::vector<int>& order) {
  RelationReport r;
  auto v = VerifiedAssignment::verify(a, &r);
  if (!v) throw DomainError("assignment fails its relations:\n" + r.to_string());
  return extend(*v, x, order);
}

AlgebraElement apply(const VerifiedAssignment& v, const AlgebraElement& a) {
  const SystemSpec& tgt = v.assignment().target;
  std::map<BasisMonomial, AlgebraElement> cache;
  auto image = [&](const BasisMonomial& x) -> const AlgebraElement& {
    auto it = cache.find(x);
    if (it == cache.end()) it = cache.emplace(x, extend(v, x)).first;
    return it->second;
  };
  AlgebraElement out;
  for (const auto& [key, c] : a.storage()) {
    const AlgebraElement& ix = image(key.left);
    const AlgebraElement iy = adjoint(image(key.right));
    out.add(multiply(tgt, ix, iy), c);
  }
  return out;
}

IsoPair factor_iso(Index m, Index n) {
  if (m < 1 || n < 1) throw DomainError("factor_iso needs m, n >= 1");
  IsoPair iso{SystemSpec::lexicographic({m, n}), SystemSpec::lexicographic({m, m * n}), {}, {}};
  const SemigroupElement e10({1, 0});
  const SemigroupElement e01({0, 1});
  const SemigroupElement e11({1, 1});

  iso.forward = {iso.f, iso.e, TargetKind::kAlgebra, {}};
  for (Index i = 0; i < m; ++i) iso.forward.images[{0, i}] = AlgebraElement::generator({e10, i});
  for (Index x = 0; x < m * n; ++x) iso.forward.images[{1, x}] = AlgebraElement::generator({e11, x});

  iso.backward = {iso.e, iso.f, TargetKind::kAlgebra, {}};
  for (Index i = 0; i < m; ++i) iso.backward.images[{0, i}] = AlgebraElement::generator({e10, i});
  for (Index j = 0; j < n; ++j) {
    AlgebraElement u;
    for (Index l = 0; l < m; ++l) u.add_term(Scalar::one(), {e01, j * m + l}, {e10, l});
    iso.backward.images[{1, j}] = u;
  }
  return iso;
}

RoundtripReport roundtrip_report(const IsoPair& iso) {
  RelationReport rf;
  RelationReport rb;
  const auto psi = VerifiedAssignment::verify(iso.forward, &rf);
  if (!psi) return {false, "forward map fails its relations:\n" + rf.to_string()};
  const auto phi = VerifiedAssignment::verify(iso.backward, &rb);
  if (!phi) return {false, "backward map fails its relations:\n" + rb.to_string()};

  for (const auto& [key, img] : iso.forward.images) {
    const AlgebraElement back = apply(*phi, img);
    const AlgebraElement gen = AlgebraElement::generator({unit(2, key.first), key.second});
    if (!equals(iso.f, back, gen)) return {false, "phi(psi(" + label(key.first, key.second) + ")) differs"};
  }
  for (const auto& [key, img] : iso.backward.images) {
    const AlgebraElement back = apply(*psi, img);
    const AlgebraElement gen = AlgebraElement::generator({unit(2, key.first), key.second});
    if (!equals(iso.e, back, gen)) return {false, "psi(phi(" + label(key.first, key.second) + ")) differs"};
  }
  return {true, ""};
}

bool verify_roundtrip(const IsoPair& iso) { return roundtrip_report(iso).ok; }

bool verify_surjectivity(const IsoPair& iso, int max_total) {
  const auto psi = VerifiedAssignment::verify(iso.forward);
  if (!psi) return false;
  for (int a = 0; a <= max_total; ++a)
    for (int b = 0; a + b <= max_total; ++b) {
      const SemigroupElement ab({a, b});
      const SemigroupElement b0({b, 0});
      const Index dab = iso.e.dim(ab);
      const Index db0 = iso.e.dim(b0);
      if (iso.f.dim(ab) != iso.e.dim(SemigroupElement({a + b, b})))
        throw DomainError("fiber dimensions of E and F disagree");
      for (Index j = 0; j < dab; ++j)
        for (Index i = 0; i < db0; ++i) {
          const AlgebraElement lhs =
              multiply(iso.e, adjoint(extend(*psi, {b0, i})), extend(*psi, {ab, i * dab + j}));
          if (!equals(iso.e, lhs, AlgebraElement::generator({ab, j}))) return false;
        }
    }
  return true;
}

}  // namespace cuntz
