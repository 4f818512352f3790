#include "cuntz/analysis.hpp"

#include <numeric>
#include <set>
#include <sstream>

#include "cuntz/errors.hpp"
#include "cuntz/linalg.hpp"

namespace cuntz {

namespace {

std::string text(const SemigroupElement& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

SemigroupElement from_signed(const std::vector<long>& v, bool positive_part) {
  std::vector<int> c(v.size(), 0);
  for (std::size_t a = 0; a < v.size(); ++a) {
    if (positive_part && v[a] > 0) c[a] = static_cast<int>(v[a]);
    if (!positive_part && v[a] < 0) c[a] = static_cast<int>(-v[a]);
  }
  return SemigroupElement(c);
}

}  // namespace

InjectivityReport dimension_injective(const SystemSpec& spec) {
  const int k = spec.rank();
  InjectivityReport r;
  std::map<std::uint64_t, std::vector<int>> rows;
  for (int a = 0; a < k; ++a)
    for (const auto& [p, e] : linalg::factorize(spec.gen_dims()[a])) {
      auto& row = rows[p];
      row.resize(k, 0);
      row[a] = e;
    }
  linalg::Matrix m;
  for (const auto& [p, row] : rows) {
    r.primes.push_back(p);
    r.exponents.push_back(row);
    std::vector<Scalar> srow;
    for (int e : row) srow.push_back(Scalar::integer(e));
    m.push_back(std::move(srow));
  }
  r.rank = linalg::rank(m, k);
  r.injective = r.rank == static_cast<std::size_t>(k);
  if (r.injective) return r;

  for (int a = 0; a < k; ++a) {
    if (spec.gen_dims()[a] != 1) continue;
    r.witness = WitnessPair{SemigroupElement::generator(k, a),
                            SemigroupElement::generator(k, a).scaled(2)};
    std::vector<long> v(k, 0);
    v[a] = 1;
    r.kernel = v;
    return r;
  }

  const auto null = linalg::first_null_vector(m, k);
  if (!null) throw DomainError("rank deficiency without a kernel vector");
  // Clear denominators, then divide by the content.
  Integer den = 1;
  for (const Scalar& x : *null) den = lcm(den, Integer(x.real_rational().get_den()));
  std::vector<Integer> iv;
  Integer content = 0;
  for (const Scalar& x : *null) {
    const Rational q = x.real_rational() * Rational(den);
    iv.push_back(q.get_num());
    content = gcd(content, q.get_num());
  }
  int sign = 0;
  for (const Integer& x : iv)
    if (sgn(x) != 0) {
      sign = sgn(x);
      break;
    }
  std::vector<long> v;
  for (const Integer& x : iv) {
    const Integer y = x / content * sign;
    if (!y.fits_slong_p()) throw std::overflow_error("kernel vector entry exceeds 64 bits");
    v.push_back(y.get_si());
  }
  r.kernel = v;
  r.witness = WitnessPair{from_signed(v, true), from_signed(v, false)};
  return r;
}

std::optional<LogRelation> extract_l(std::uint64_t m, std::uint64_t n) {
  if (m < 2 || n < 2) throw DomainError("extract_l needs m, n >= 2");
  const auto fm = linalg::factorize(m);
  const auto fn = linalg::factorize(n);
  std::set<std::uint64_t> primes;
  for (const auto& [p, e] : fm) primes.insert(p);
  for (const auto& [p, e] : fn) primes.insert(p);
  auto ord = [](const std::map<std::uint64_t, int>& f, std::uint64_t p) {
    auto it = f.find(p);
    return it == f.end() ? 0 : it->second;
  };
  // Exponent vectors must be proportional: alpha = a * gamma, beta = b * gamma.
  const std::uint64_t p0 = *primes.begin();
  const int g0 = std::gcd(ord(fm, p0), ord(fn, p0));
  if (g0 == 0) return std::nullopt;
  const int a = ord(fm, p0) / g0;
  const int b = ord(fn, p0) / g0;
  if (a == 0 || b == 0) return std::nullopt;
  std::uint64_t l = 1;
  for (std::uint64_t p : primes) {
    const int em = ord(fm, p);
    const int en = ord(fn, p);
    if (em * b != en * a || em % a != 0) return std::nullopt;
    for (int i = 0; i < em / a; ++i) l *= p;
  }
  return LogRelation{l, a, b};
}

std::string Classification::verdict_line() const {
  switch (verdict) {
    case Verdict::kSimplePurelyInfinite:
      return "SimplePurelyInfinite";
    case Verdict::kTensorCircle:
      return "TensorCircle(" + std::to_string(l) + ")";
    case Verdict::kNonSimple:
      return "NonSimple";
    case Verdict::kUnknown:
      return "Unknown";
  }
  return "Unknown";
}

std::string Classification::evidence_block() const {
  std::ostringstream os;
  os << "exponent matrix (rows: primes, columns: generators)\n";
  for (std::size_t i = 0; i < evidence.primes.size(); ++i) {
    os << "  " << evidence.primes[i] << ":";
    for (int e : evidence.exponents[i]) os << " " << e;
    os << "\n";
  }
  os << "rank " << evidence.rank << "\n";
  os << "dimension function " << (evidence.injective ? "injective" : "not injective") << "\n";
  if (evidence.kernel) {
    os << "kernel vector (";
    for (std::size_t i = 0; i < evidence.kernel->size(); ++i)
      os << (i ? "," : "") << (*evidence.kernel)[i];
    os << ")\n";
  }
  if (witness) os << "witness s=" << witness->first << " t=" << witness->second << "\n";
  if (relation) os << "l=" << relation->l << " a=" << relation->a << " b=" << relation->b << "\n";
  return os.str();
}

Classification classify(const SystemSpec& spec) {
  Classification c;
  c.evidence = dimension_injective(spec);
  c.witness = c.evidence.witness;
  if (c.evidence.injective) {
    c.verdict = Verdict::kSimplePurelyInfinite;
    return c;
  }
  if (spec.twisted()) {
    c.verdict = Verdict::kUnknown;
    return c;
  }
  c.verdict = Verdict::kNonSimple;
  if (spec.rank() != 2) return c;
  const Index m = spec.gen_dims()[0];
  const Index n = spec.gen_dims()[1];
  if (m == 1 || n == 1) {
    const Index other = m == 1 ? n : m;
    if (other >= 2) {
      c.verdict = Verdict::kTensorCircle;
      c.l = other;
    }
    return c;
  }
  if (auto rel = extract_l(m, n)) {
    c.verdict = Verdict::kTensorCircle;
    c.l = rel->l;
    c.relation = rel;
  }
  return c;
}

NonsimplicityWitness nonsimplicity_witness(const SystemSpec& spec, const SemigroupElement& s,
                                           const SemigroupElement& t) {
  spec.check(s);
  spec.check(t);
  if (s == t) throw DomainError("witness needs s != t");
  if (spec.dim(s) != spec.dim(t))
    throw DomainError("witness needs dim(" + text(s) + ") = dim(" + text(t) + ")");
  if (spec.twisted()) throw UnsupportedRepresentation("witnesses are built for untwisted systems");
  const int k = spec.rank();
  NonsimplicityWitness w;
  w.element = AlgebraElement::generator({s, 0}) - AlgebraElement::generator({t, 0});
  w.lambda = CharacterTwist::trivial(k);
  for (int a = 0; a < k; ++a) {
    const int diff = s.coords[a] - t.coords[a];
    if (diff == 0) continue;
    // lambda(s)/lambda(t) = zeta_q^diff; prefer q = 4 so the value stays Gaussian.
    unsigned q = 4;
    while (diff % static_cast<int>(q) == 0) q = q == 4 ? 3 : q + 1;
    w.lambda.lambda[a] = q == 4 ? Scalar::imaginary_unit() : Scalar(Cyclotomic::root_of_unity(q, 1));
    break;
  }
  return w;
}

// ---------------------------------------------------------------------------

KillInstance KillInstance::from_monomials(
    const SystemSpec& spec, const std::vector<std::pair<BasisMonomial, BasisMonomial>>& xy,
    std::optional<SemigroupElement> c) {
  KillInstance inst;
  for (const auto& [x, y] : xy) {
    spec.check(x);
    spec.check(y);
    inst.pairs.push_back({FiberVector::basis(x, spec.dim(x.fiber)), FiberVector::basis(y, spec.dim(y.fiber))});
  }
  inst.c = c ? *c : default_c(inst.pairs, spec.rank());
  inst.validate(spec);
  return inst;
}

SemigroupElement KillInstance::default_c(const std::vector<KillPair>& pairs, int k) {
  SemigroupElement c = SemigroupElement::zero(k);
  for (const KillPair& p : pairs) c = c + p.x.fiber + p.y.fiber;
  return c;
}

void KillInstance::validate(const SystemSpec& spec) const {
  spec.check(c);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [x, y] = pairs[i];
    if (x.coeffs.size() != spec.dim(x.fiber) || y.coeffs.size() != spec.dim(y.fiber))
      throw DomainError("pair " + std::to_string(i + 1) + ": vector length does not match its fiber");
    if (x.fiber == y.fiber)
      throw DomainError("pair " + std::to_string(i + 1) + ": p(x) = p(y) = " + text(x.fiber));
    if (!x.fiber.divides(c) || !y.fiber.divides(c))
      throw DomainError("pair " + std::to_string(i + 1) + ": c = " + text(c) +
                        " does not dominate both fibers");
  }
}

namespace {

// Vectors u_f in E_t, one per f in B_s, such that
// v* g_next f_next* v = sum_f u_f f*.
std::vector<std::vector<Scalar>> kill_rows(const SystemSpec& spec, const FiberVector& v,
                                           const BasisMonomial& f_next, const BasisMonomial& g_next) {
  const SemigroupElement& r = v.fiber;
  const SemigroupElement& s = f_next.fiber;
  const SemigroupElement& t = g_next.fiber;
  const Index dr = spec.dim(r);
  const Index ds = spec.dim(s);
  const Index dt = spec.dim(t);
  std::vector<FiberVector> vg;
  for (Index g = 0; g < dt; ++g) vg.push_back(mul_vectors(spec, v, FiberVector::basis({t, g}, dt)));
  std::vector<FiberVector> vf;
  for (Index f = 0; f < ds; ++f) vf.push_back(mul_vectors(spec, v, FiberVector::basis({s, f}, ds)));

  std::vector<std::vector<Scalar>> u(ds, std::vector<Scalar>(dt, Scalar::zero()));
  for (Index b = 0; b < dr; ++b) {
    const auto [ph_g, gv] = mul_basis(spec, g_next, {r, b});  // g_{k+1} v
    const auto [ph_f, fv] = mul_basis(spec, f_next, {r, b});  // f_{k+1} v
    for (Index g = 0; g < dt; ++g) {
      const Scalar& cg = vg[g].coeffs[gv.index];
      if (cg.is_zero()) continue;
      const Scalar left = ph_g * cg.conj();  // (g_{k+1} v | v_k g)
      for (Index f = 0; f < ds; ++f) {
        const Scalar& cf = vf[f].coeffs[fv.index];
        if (cf.is_zero()) continue;
        u[f][g] += left * cf * ph_f.conj();  // (v_k f | f_{k+1} v)
      }
    }
  }
  return u;
}

}  // namespace

KillResult kill_vector(const SystemSpec& spec, const KillInstance& inst) {
  inst.validate(spec);
  const int k = spec.rank();
  std::vector<std::pair<BasisMonomial, BasisMonomial>> pairs;
  for (const KillPair& p : inst.pairs) {
    const SemigroupElement si = inst.c - p.x.fiber;
    const SemigroupElement ti = inst.c - p.y.fiber;
    for (Index f = 0; f < spec.dim(si); ++f)
      for (Index g = 0; g < spec.dim(ti); ++g) pairs.push_back({{si, f}, {ti, g}});
  }
  KillResult res;
  res.w = FiberVector::basis(BasisMonomial::identity(k), 1);
  for (std::size_t l = 0; l < pairs.size(); ++l) {
    KillStep step{pairs[l].first, pairs[l].second, false, {}};
    BasisMonomial f = step.f;
    BasisMonomial g = step.g;
    const Index ds = spec.dim(f.fiber);
    const Index dt = spec.dim(g.fiber);
    if (ds == dt) {
      std::ostringstream os;
      os << "pair " << (l + 1) << " (" << f << ", " << g << "): dim " << ds
         << " on both fibers; the dimension function is not injective here";
      throw HypothesisViolation(os.str());
    }
    if (ds > dt) {
      // Kill the adjoint v* f g* v instead.
      std::swap(f, g);
      step.swapped = true;
    }
    const auto u = kill_rows(spec, res.w, f, g);
    linalg::Matrix rows;
    for (const auto& uf : u) {
      std::vector<Scalar> row;
      for (const Scalar& x : uf) row.push_back(x.conj());
      rows.push_back(std::move(row));
    }
    const Index width = spec.dim(g.fiber);
    auto null = linalg::first_null_vector(rows, width);
    if (!null) throw HypothesisViolation("pair " + std::to_string(l + 1) + ": no orthogonal vector");
    step.factor = FiberVector{g.fiber, std::move(*null)};
    res.w = mul_vectors(spec, res.w, step.factor);
    res.steps.push_back(std::move(step));
  }
  return res;
}

bool KillCheck::all_zero() const {
  for (bool z : pair_zero)
    if (!z) return false;
  return true;
}

namespace {

struct LevelStep {
  Index dx;
  Index dy;
};

std::vector<std::vector<LevelStep>> level_profile(const SystemSpec& spec,
                                                  const std::vector<AlgebraElement>& factors) {
  std::vector<std::vector<LevelStep>> prof;
  for (const AlgebraElement& fa : factors) {
    std::set<std::pair<Index, Index>> seen;
    for (const auto& [key, c] : fa.storage())
      seen.insert({spec.dim(key.left.fiber), spec.dim(key.right.fiber)});
    std::vector<LevelStep> steps;
    for (const auto& [dx, dy] : seen) steps.push_back({dx, dy});
    prof.push_back(std::move(steps));
  }
  return prof;
}

bool level_valid(const std::vector<std::vector<LevelStep>>& prof, Index n0) {
  std::set<Index> levels{n0};
  for (auto it = prof.rbegin(); it != prof.rend(); ++it) {
    std::set<Index> next;
    for (Index lv : levels)
      for (const LevelStep& st : *it) {
        if (lv % st.dy != 0) return false;
        next.insert(lv / st.dy * st.dx);
      }
    levels = std::move(next);
  }
  return true;
}

}  // namespace

Index product_level(const SystemSpec& spec, const std::vector<AlgebraElement>& factors, Index limit) {
  if (factors.empty()) return 1;
  const auto prof = level_profile(spec, factors);
  const Index base = required_level_divisor(spec, factors.back());
  // Each extra requirement is a divisor of a product of fiber dimensions, so
  // the search stays short for the instances we meet.
  for (Index n0 = base; n0 <= limit; n0 += base)
    if (level_valid(prof, n0)) return n0;
  throw DomainError("no valid step level below " + std::to_string(limit));
}

StepFamily eval_product(const SystemSpec& spec, const std::vector<AlgebraElement>& factors, Index n0) {
  StepFamily acc;
  acc.level_in = n0;
  acc.by_level_out.emplace(n0, StepOperator::identity(n0));
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    StepFamily next;
    next.level_in = n0;
    for (const auto& [lvl, op] : acc.by_level_out) {
      const StepFamily f = eval_element(spec, *it, lvl);
      for (const auto& [out, fop] : f.by_level_out) {
        StepOperator prod = fop * op;
        auto [slot, inserted] = next.by_level_out.try_emplace(out, prod);
        if (!inserted) slot->second = slot->second + prod;
      }
    }
    for (auto e = next.by_level_out.begin(); e != next.by_level_out.end();)
      e = e->second.is_zero() ? next.by_level_out.erase(e) : std::next(e);
    acc = std::move(next);
  }
  return acc;
}

KillCheck verify_kill(const SystemSpec& spec, const KillInstance& inst, const FiberVector& w) {
  inst.validate(spec);
  const Scalar norm = inner_product(w, w);
  if (norm.is_zero()) throw DomainError("kill vector is zero");
  const AlgebraElement q = AlgebraElement::rank_one(w, w).scaled(norm.inverse());
  const AlgebraElement aq = alpha(spec, inst.c, q);
  KillCheck check;
  for (const KillPair& p : inst.pairs) {
    const std::vector<AlgebraElement> factors{aq, AlgebraElement::rank_one(p.x, p.y), aq};
    const Index n0 = product_level(spec, factors);
    check.level = std::max(check.level, n0);
    check.pair_zero.push_back(eval_product(spec, factors, n0).is_zero());
  }
  return check;
}

}  // namespace cuntz
