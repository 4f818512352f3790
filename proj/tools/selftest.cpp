#include <functional>
#include <ostream>
#include <random>

#include "cli.hpp"
#include "cuntz/analysis.hpp"
#include "cuntz/morphisms.hpp"
#include "cuntz/random.hpp"
#include "json.hpp"

namespace cuntz::cli {

namespace {

struct Builtin {
  std::string name;
  SystemSpec spec;
  std::string verdict;
};

std::vector<Builtin> builtins() {
  std::vector<Angle> quarter(4, Rational(0));
  quarter[2] = Rational(1, 4);  // theta_21: omega((a,b),(c,d)) = e^{2 pi i b c / 4}
  return {
      {"E(2,3)", SystemSpec::lexicographic({2, 3}), "SimplePurelyInfinite"},
      {"E(2,4)", SystemSpec::lexicographic({2, 4}), "TensorCircle(2)"},
      {"E(4,8)", SystemSpec::lexicographic({4, 8}), "TensorCircle(2)"},
      {"E(1,5)", SystemSpec::lexicographic({1, 5}), "TensorCircle(5)"},
      {"N^2 twisted by 1/4", SystemSpec({1, 1}, quarter, ScalarMode::kCyclotomic, 4), "Unknown"},
  };
}

std::vector<BasisMonomial> monomials_up_to(const SystemSpec& spec, int total) {
  std::vector<BasisMonomial> out;
  std::function<void(std::vector<int>&, int, int)> rec = [&](std::vector<int>& c, int a, int left) {
    if (a == spec.rank()) {
      const SemigroupElement s(c);
      for (Index j = 0; j < spec.dim(s); ++j) out.push_back({s, j});
      return;
    }
    for (int v = 0; v <= left; ++v) {
      c[a] = v;
      rec(c, a + 1, left - v);
    }
    c[a] = 0;
  };
  std::vector<int> c(spec.rank(), 0);
  rec(c, 0, total);
  return out;
}

bool associativity(const SystemSpec& spec) {
  const auto ms = monomials_up_to(spec, 1);
  for (const auto& x : ms)
    for (const auto& y : ms)
      for (const auto& z : ms) {
        auto [p1, xy] = mul_basis(spec, x, y);
        auto [p2, xy_z] = mul_basis(spec, xy, z);
        auto [p3, yz] = mul_basis(spec, y, z);
        auto [p4, x_yz] = mul_basis(spec, x, yz);
        if (xy_z != x_yz || !(p1 * p2 == p3 * p4)) return false;
      }
  return true;
}

bool factor_roundtrip(const SystemSpec& spec) {
  const int k = spec.rank();
  std::vector<int> asc(k);
  for (int a = 0; a < k; ++a) asc[a] = a;
  std::vector<int> desc(asc.rbegin(), asc.rend());
  for (const auto& x : monomials_up_to(spec, 2))
    for (const auto& order : {asc, desc}) {
      BasisMonomial acc = BasisMonomial::identity(k);
      for (const GeneratorDigit& d : factor_monomial(spec, x, order))
        acc = mul_basis(spec, acc, {SemigroupElement::generator(k, d.generator), d.digit}).second;
      if (acc != x) return false;
    }
  return true;
}

bool cuntz_sums(const SystemSpec& spec) {
  const AlgebraElement one = AlgebraElement::identity(spec.rank());
  for (int a = 0; a < spec.rank(); ++a)
    if (!equals(spec, one, AlgebraElement::cuntz_sum(spec, SemigroupElement::generator(spec.rank(), a))))
      return false;
  return true;
}

bool star_axioms(const SystemSpec& spec, std::mt19937_64& rng) {
  RandomShape shape{3, 2, 3, true};
  for (int trial = 0; trial < 4; ++trial) {
    const AlgebraElement a = random_element(spec, shape, rng);
    const AlgebraElement b = random_element(spec, shape, rng);
    const AlgebraElement c = random_element(spec, shape, rng);
    if (!equals(spec, adjoint(multiply(spec, a, b)), multiply(spec, adjoint(b), adjoint(a)))) return false;
    if (!equals(spec, multiply(spec, multiply(spec, a, b), c), multiply(spec, a, multiply(spec, b, c))))
      return false;
  }
  return true;
}

bool expectation(const SystemSpec& spec, std::mt19937_64& rng) {
  RandomShape shape{5, 2, 3, false};
  for (int trial = 0; trial < 4; ++trial) {
    const AlgebraElement a = random_element(spec, shape, rng);
    if (!(gauge_expectation(gauge_expectation(a)) == gauge_expectation(a))) return false;
  }
  return true;
}

bool alpha_action(const SystemSpec& spec, std::mt19937_64& rng) {
  RandomShape shape{3, 1, 3, false};
  for (int trial = 0; trial < 3; ++trial) {
    const AlgebraElement a = random_element(spec, shape, rng);
    const SemigroupElement s = random_semigroup(spec.rank(), 1, rng);
    const SemigroupElement t = random_semigroup(spec.rank(), 1, rng);
    if (!equals(spec, alpha(spec, s, alpha(spec, t, a)), alpha(spec, s + t, a))) return false;
  }
  return true;
}

bool canonical_relations(const SystemSpec& spec) {
  return check_relations(GeneratorAssignment::canonical(spec)).ok();
}

bool rep_multiplicative(const SystemSpec& spec, std::mt19937_64& rng) {
  RandomShape shape{3, 2, 3, false};
  for (int trial = 0; trial < 4; ++trial) {
    const AlgebraElement a = random_element(spec, shape, rng);
    const AlgebraElement b = random_element(spec, shape, rng);
    const AlgebraElement ab = multiply(spec, a, b);
    const Index n0 = std::lcm(product_level(spec, {a, b}), required_level_divisor(spec, ab));
    if (!(eval_element(spec, ab, n0) == eval_product(spec, {a, b}, n0))) return false;
  }
  return true;
}

bool normal_form_oracle(const SystemSpec& spec, std::mt19937_64& rng) {
  RandomShape shape{4, 2, 3, false};
  for (int trial = 0; trial < 4; ++trial) {
    const AlgebraElement a = random_element(spec, shape, rng);
    const AlgebraElement e = expand(normal_form(spec, a));
    const Index n0 = std::lcm(required_level_divisor(spec, a), required_level_divisor(spec, e));
    if (!(eval_element(spec, a, n0) == eval_element(spec, e, n0))) return false;
  }
  return true;
}

bool witness_contract(const SystemSpec& spec) {
  const InjectivityReport r = dimension_injective(spec);
  if (!r.witness) return true;
  const NonsimplicityWitness w = nonsimplicity_witness(spec, r.witness->first, r.witness->second);
  for (Index n0 : default_levels(spec, w.element)) {
    if (!eval_element(spec, w.element, n0).is_zero()) return false;
    if (eval_twisted(spec, w.lambda, w.element, n0).is_zero()) return false;
  }
  return true;
}

bool rotation_relation(const SystemSpec& spec) {
  const AlgebraElement u = AlgebraElement::generator({SemigroupElement({0, 1}), 0});
  const AlgebraElement v = AlgebraElement::generator({SemigroupElement({1, 0}), 0});
  const Scalar phase = spec.multiplier(SemigroupElement({0, 1}), SemigroupElement({1, 0}));
  return equals(spec, multiply(spec, u, v), multiply(spec, v, u).scaled(phase));
}

}  // namespace

int selftest(std::ostream& out, bool json) {
  std::mt19937_64 rng(20240601);
  int passed = 0;
  int failed = 0;
  auto report = [&](const std::string& spec, const std::string& check, bool ok) {
    (ok ? passed : failed)++;
    if (json) {
      out << nlohmann::json{{"spec", spec}, {"check", check}, {"ok", ok}}.dump() << "\n";
    } else {
      out << (ok ? "ok   " : "FAIL ") << spec << ": " << check << "\n";
    }
  };
  for (const Builtin& b : builtins()) {
    const SystemSpec& spec = b.spec;
    auto guarded = [&](const std::string& name, const std::function<bool()>& f) {
      bool ok = false;
      try {
        ok = f();
      } catch (const std::exception&) {
        ok = false;
      }
      report(b.name, name, ok);
    };
    guarded("mul_basis associativity", [&] { return associativity(spec); });
    guarded("factorization round trip", [&] { return factor_roundtrip(spec); });
    guarded("Cuntz sums", [&] { return cuntz_sums(spec); });
    guarded("*-algebra axioms", [&] { return star_axioms(spec, rng); });
    guarded("expectation idempotent", [&] { return expectation(spec, rng); });
    guarded("alpha is an action", [&] { return alpha_action(spec, rng); });
    guarded("canonical relations", [&] { return canonical_relations(spec); });
    guarded("classification " + b.verdict, [&] { return classify(spec).verdict_line() == b.verdict; });
    if (spec.twisted()) {
      guarded("UV = omega VU", [&] { return rotation_relation(spec); });
    } else {
      guarded("step representation multiplicative", [&] { return rep_multiplicative(spec, rng); });
      guarded("normal form oracle", [&] { return normal_form_oracle(spec, rng); });
      guarded("witness contract", [&] { return witness_contract(spec); });
    }
  }
  if (json) {
    out << nlohmann::json{{"passed", passed}, {"failed", failed}}.dump() << "\n";
  } else {
    out << "selftest: " << passed << " passed, " << failed << " failed\n";
  }
  return failed == 0 ? kOk : kFalse;
}

}  // namespace cuntz::cli
