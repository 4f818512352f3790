#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "cuntz/analysis.hpp"
#include "cuntz/errors.hpp"
#include "cuntz/parser.hpp"
#include "json.hpp"

namespace cuntz::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string spec_path;
  std::string format = "text";
  Index level = 0;
  std::string lambda;
  std::string order;
  std::string c;
  std::string source;
  std::vector<std::string> args;
};

class Session {
 public:
  Session(const Options& o, std::ostream& out) : opt_(o), out_(out), json_(o.format == "json-lines") {}

  const SystemSpec& spec() {
    if (!spec_) {
      if (opt_.spec_path.empty()) throw CLI::RequiredError("--spec");
      spec_ = load_system_spec(opt_.spec_path);
    }
    return *spec_;
  }

  bool json_mode() const { return json_; }
  std::ostream& out() { return out_; }
  void emit(const json& j) { out_ << j.dump() << "\n"; }
  void line(const std::string& s) { out_ << s << "\n"; }

  const Options& opt() const { return opt_; }

  void need_args(std::size_t lo, std::size_t hi, const std::string& usage) const {
    if (opt_.args.size() < lo || opt_.args.size() > hi) throw CLI::ValidationError("usage", usage);
  }

 private:
  const Options& opt_;
  std::ostream& out_;
  bool json_;
  std::optional<SystemSpec> spec_;
};

std::string str(const SemigroupElement& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

std::string str(const Degree& g) {
  std::ostringstream os;
  os << g;
  return os.str();
}

json entries_json(const SparseMatrix& m) {
  json e = json::array();
  for (const auto& [key, v] : m.entries()) e.push_back({key.first, key.second, v.to_string()});
  return e;
}

std::vector<int> parse_order(const std::string& text, int k) {
  std::vector<int> order;
  if (text.empty()) {
    for (int a = 0; a < k; ++a) order.push_back(a);
    return order;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) order.push_back(std::stoi(item) - 1);
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (int a = 0; a < static_cast<int>(sorted.size()); ++a)
    if (sorted[a] != a || static_cast<int>(sorted.size()) != k)
      throw CLI::ValidationError("--order", "expected a permutation of 1.." + std::to_string(k));
  return order;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_normalize(Session& s) {
  s.need_args(1, 1, "normalize --spec FILE EXPR");
  const NormalForm nf = normal_form(s.spec(), parse_expression(s.spec(), s.opt().args[0]));
  if (!s.json_mode()) {
    s.out() << nf.to_string();
    return kOk;
  }
  if (nf.is_zero()) s.emit({{"zero", true}});
  for (const auto& [g, b] : nf.blocks())
    s.emit({{"degree", g.coords},
            {"left_level", b.left_level.coords},
            {"right_level", b.right_level.coords},
            {"rows", b.matrix.rows()},
            {"cols", b.matrix.cols()},
            {"entries", entries_json(b.matrix)}});
  return kOk;
}

int cmd_equals(Session& s) {
  s.need_args(2, 2, "equals --spec FILE EXPR EXPR");
  const bool eq = equals(s.spec(), parse_expression(s.spec(), s.opt().args[0]),
                         parse_expression(s.spec(), s.opt().args[1]));
  if (s.json_mode()) {
    s.emit({{"equal", eq}});
  } else {
    s.line(eq ? "true" : "false");
  }
  return eq ? kOk : kFalse;
}

int print_element(Session& s, const AlgebraElement& a) {
  if (s.json_mode()) {
    s.emit({{"result", a.to_string()}, {"terms", a.size()}});
  } else {
    s.line(a.to_string());
  }
  return kOk;
}

int cmd_expect(Session& s) {
  s.need_args(1, 1, "expect --spec FILE EXPR");
  return print_element(s, gauge_expectation(parse_expression(s.spec(), s.opt().args[0])));
}

int cmd_alpha(Session& s) {
  s.need_args(2, 2, "alpha --spec FILE S EXPR");
  const SemigroupElement t = parse_semigroup(s.spec(), s.opt().args[0]);
  return print_element(s, alpha(s.spec(), t, parse_expression(s.spec(), s.opt().args[1])));
}

void print_family(Session& s, const StepFamily& f) {
  const bool zero = f.is_zero();
  if (s.json_mode()) {
    for (const auto& [lvl, op] : f.by_level_out)
      s.emit({{"level_in", op.level_in()},
              {"level_out", op.level_out()},
              {"nnz", op.matrix().nnz()},
              {"entries", entries_json(op.matrix())}});
    s.emit({{"level_in", f.level_in}, {"zero", zero}});
    return;
  }
  if (zero) {
    s.line("level " + std::to_string(f.level_in) + ": zero matrix");
    return;
  }
  for (const auto& [lvl, op] : f.by_level_out) {
    s.line("level " + std::to_string(op.level_in()) + " -> " + std::to_string(op.level_out()));
    s.out() << op.serialize();
  }
}

int cmd_eval(Session& s) {
  s.need_args(1, 1, "eval --spec FILE [--level N] [--lambda LIST] EXPR");
  const SystemSpec& spec = s.spec();
  const AlgebraElement a = parse_expression(spec, s.opt().args[0]);
  const Index n0 = s.opt().level ? s.opt().level : required_level_divisor(spec, a);
  StepFamily f = s.opt().lambda.empty()
                     ? eval_element(spec, a, n0)
                     : eval_twisted(spec, CharacterTwist{parse_scalar_list(s.opt().lambda)}, a, n0);
  print_family(s, f);
  return kOk;
}

int cmd_classify(Session& s) {
  s.need_args(0, 0, "classify --spec FILE");
  const Classification c = classify(s.spec());
  if (!s.json_mode()) {
    s.line(c.verdict_line());
    s.out() << c.evidence_block();
    return kOk;
  }
  json j{{"verdict", c.verdict_line()},
         {"rank", c.evidence.rank},
         {"injective", c.evidence.injective},
         {"primes", c.evidence.primes},
         {"exponents", c.evidence.exponents}};
  if (c.verdict == Verdict::kTensorCircle) j["l"] = c.l;
  if (c.evidence.kernel) j["kernel"] = *c.evidence.kernel;
  if (c.witness) j["witness"] = {c.witness->first.coords, c.witness->second.coords};
  if (c.relation) j["relation"] = {{"l", c.relation->l}, {"a", c.relation->a}, {"b", c.relation->b}};
  s.emit(j);
  return kOk;
}

int cmd_witness(Session& s) {
  s.need_args(0, 0, "witness --spec FILE [--level N]");
  const SystemSpec& spec = s.spec();
  const InjectivityReport r = dimension_injective(spec);
  if (!r.witness) {
    if (s.json_mode()) {
      s.emit({{"injective", true}});
    } else {
      s.line("dimension function injective: no witness");
    }
    return kFalse;
  }
  const auto [st, tt] = *r.witness;
  const NonsimplicityWitness w = nonsimplicity_witness(spec, st, tt);
  std::vector<Index> levels = s.opt().level ? std::vector<Index>{s.opt().level} : default_levels(spec, w.element);
  bool ok = true;
  std::vector<json> checks;
  std::vector<std::string> lines;
  for (Index n0 : levels) {
    const bool s_zero = eval_element(spec, w.element, n0).is_zero();
    const bool t_zero = eval_twisted(spec, w.lambda, w.element, n0).is_zero();
    ok = ok && s_zero && !t_zero;
    checks.push_back({{"level", n0}, {"S_zero", s_zero}, {"T_zero", t_zero}});
    lines.push_back("level " + std::to_string(n0) + ": S(b) " + (s_zero ? "zero" : "nonzero") + ", T(b) " +
                    (t_zero ? "zero" : "nonzero"));
  }
  std::string lambda;
  for (std::size_t a = 0; a < w.lambda.lambda.size(); ++a) lambda += (a ? "," : "") + w.lambda.lambda[a].to_string();
  if (s.json_mode()) {
    s.emit({{"s", st.coords}, {"t", tt.coords}, {"b", w.element.to_string()}, {"lambda", lambda},
            {"checks", checks}, {"ok", ok}});
  } else {
    s.line("s=" + str(st) + " t=" + str(tt) + " dim " + std::to_string(spec.dim(st)));
    s.line("b = " + w.element.to_string());
    s.line("lambda = (" + lambda + ")");
    for (const auto& l : lines) s.line(l);
    s.line(ok ? "witness verified" : "witness FAILED");
  }
  return ok ? kOk : kFalse;
}

int cmd_kill(Session& s) {
  const auto& args = s.opt().args;
  if (args.empty() || args.size() % 2 != 0)
    throw CLI::ValidationError("usage", "kill --spec FILE [--c S] X1 Y1 [X2 Y2 ...]");
  const SystemSpec& spec = s.spec();
  std::vector<std::pair<BasisMonomial, BasisMonomial>> pairs;
  for (std::size_t i = 0; i < args.size(); i += 2)
    pairs.push_back({parse_monomial(spec, args[i]), parse_monomial(spec, args[i + 1])});
  std::optional<SemigroupElement> c;
  if (!s.opt().c.empty()) c = parse_semigroup(spec, s.opt().c);
  const KillInstance inst = KillInstance::from_monomials(spec, pairs, c);
  const KillResult res = kill_vector(spec, inst);
  std::size_t nnz = 0;
  for (const Scalar& x : res.w.coeffs) nnz += x.is_zero() ? 0 : 1;
  std::size_t swapped = 0;
  for (const KillStep& st : res.steps) swapped += st.swapped ? 1 : 0;
  const std::string w_text = AlgebraElement::vector(res.w).to_string();

  std::optional<KillCheck> check;
  std::string check_note;
  try {
    check = verify_kill(spec, inst, res.w);
  } catch (const UnsupportedRepresentation& e) {
    check_note = e.what();
  }
  const bool ok = !check || check->all_zero();
  if (s.json_mode()) {
    json j{{"c", inst.c.coords}, {"fiber", res.w.fiber.coords}, {"dim", res.w.coeffs.size()},
           {"nnz", nnz},         {"steps", res.steps.size()},   {"swapped", swapped},
           {"w", w_text}};
    if (check) {
      j["level"] = check->level;
      j["zero"] = check->all_zero();
    } else {
      j["verification"] = check_note;
    }
    s.emit(j);
  } else {
    s.line("c=" + str(inst.c));
    s.line("w in fiber " + str(res.w.fiber) + ", dim " + std::to_string(res.w.coeffs.size()) + ", " +
           std::to_string(nnz) + " nonzero entries");
    s.line("steps " + std::to_string(res.steps.size()) + " (" + std::to_string(swapped) + " swapped)");
    s.line("w = " + w_text);
    if (check) {
      s.line("annihilation at level " + std::to_string(check->level) + ": " +
             (check->all_zero() ? "zero" : "NONZERO"));
    } else {
      s.line("annihilation not checked: " + check_note);
    }
  }
  return ok ? kOk : kFalse;
}

int cmd_iso(Session& s) {
  s.need_args(2, 2, "iso M N");
  const Index m = std::stoull(s.opt().args[0]);
  const Index n = std::stoull(s.opt().args[1]);
  const IsoPair iso = factor_iso(m, n);
  const RelationReport rf = check_relations(iso.forward);
  const RelationReport rb = check_relations(iso.backward);
  const RoundtripReport rt = roundtrip_report(iso);
  const bool surj = verify_surjectivity(iso, 2);
  const bool ok = rf.ok() && rb.ok() && rt.ok && surj;
  if (s.json_mode()) {
    s.emit({{"E", iso.e.describe()}, {"F", iso.f.describe()},
            {"forward_relations", rf.ok()}, {"backward_relations", rb.ok()},
            {"roundtrip", rt.ok}, {"surjectivity", surj}, {"reason", rt.reason}});
  } else {
    s.line("E = E(" + std::to_string(m) + "," + std::to_string(n) + "), F = E(" + std::to_string(m) + "," +
           std::to_string(m * n) + ")");
    s.line("forward psi: F -> O_E relations " + std::string(rf.ok() ? "ok" : "violated") + " (" +
           std::to_string(rf.checked) + " checked)");
    s.line("backward phi: E -> O_F relations " + std::string(rb.ok() ? "ok" : "violated") + " (" +
           std::to_string(rb.checked) + " checked)");
    s.line(std::string("roundtrip ") + (rt.ok ? "true" : "false"));
    if (!rt.ok) s.out() << rt.reason << (rt.reason.empty() || rt.reason.back() == '\n' ? "" : "\n");
    s.line(std::string("surjectivity (a+b <= 2) ") + (surj ? "true" : "false"));
  }
  return ok ? kOk : kFalse;
}

int cmd_relations(Session& s) {
  const auto& args = s.opt().args;
  if (args.empty())
    throw CLI::ValidationError("usage", "relations --spec TARGET [--source SRC] FILE [MONOMIAL ...]");
  const SystemSpec& target = s.spec();
  const SystemSpec source = s.opt().source.empty() ? target : load_system_spec(s.opt().source);
  GeneratorAssignment a{source, target, TargetKind::kAlgebra, parse_assignment(target, read_file(args[0]))};
  RelationReport report;
  const auto verified = VerifiedAssignment::verify(a, &report);
  if (s.json_mode()) {
    json v = json::array();
    for (const auto& x : report.violations) v.push_back(x.detail);
    s.emit({{"checked", report.checked}, {"ok", report.ok()}, {"violations", v}});
  } else {
    s.out() << report.to_string();
  }
  if (!verified) return kFalse;
  const std::vector<int> order = parse_order(s.opt().order, source.rank());
  for (std::size_t i = 1; i < args.size(); ++i) {
    const BasisMonomial x = parse_monomial(source, args[i]);
    const AlgebraElement img = extend(*verified, x, order);
    if (s.json_mode()) {
      s.emit({{"monomial", args[i]}, {"image", img.to_string()}});
    } else {
      s.line(args[i] + " -> " + img.to_string());
    }
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symbolic and step-model computations in Cuntz algebras of product systems", "cuntz"};
  app.require_subcommand(1);
  Options opt;

  auto add = [&](const std::string& name, const std::string& help, bool spec, bool positional = true) {
    CLI::App* c = app.add_subcommand(name, help);
    if (spec) c->add_option("--spec", opt.spec_path, "system specification file");
    c->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json-lines"}));
    if (positional) c->add_option("args", opt.args, "arguments");
    return c;
  };
  auto* normalize = add("normalize", "print the normal form of an expression", true);
  auto* eq = add("equals", "decide equality of two expressions in O_E", true);
  auto* expect = add("expect", "gauge expectation (degree-zero part)", true);
  auto* alpha_c = add("alpha", "alpha_s(a) = sum_f e(s;f) a e(s;f)*", true);
  auto* eval = add("eval", "evaluate in the step-function representation", true);
  eval->add_option("--level", opt.level, "input level N0");
  eval->add_option("--lambda", opt.lambda, "character values, comma separated");
  auto* cls = add("classify", "simplicity classification", true, false);
  auto* wit = add("witness", "non-simplicity witness and its check", true, false);
  wit->add_option("--level", opt.level, "check only this level");
  auto* kill = add("kill", "kill vector for pairs X Y of monomials", true);
  kill->add_option("--c", opt.c, "the dominating element c");
  auto* iso = add("iso", "the isomorphism O_E(m,n) = O_E(m,mn)", false);
  auto* rel = add("relations", "check a generator assignment file", true);
  rel->add_option("--source", opt.source, "source system (default: the target)");
  rel->add_option("--order", opt.order, "generator order for extension, 1-based");
  auto* self = add("selftest", "invariant checks on built-in systems", false, false);

  std::vector<std::string> rev(argv.rbegin(), argv.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage: " << e.what() << "\n";
    return kUsage;
  }

  Session s(opt, out);
  try {
    if (*normalize) return cmd_normalize(s);
    if (*eq) return cmd_equals(s);
    if (*expect) return cmd_expect(s);
    if (*alpha_c) return cmd_alpha(s);
    if (*eval) return cmd_eval(s);
    if (*cls) return cmd_classify(s);
    if (*wit) return cmd_witness(s);
    if (*kill) return cmd_kill(s);
    if (*iso) return cmd_iso(s);
    if (*rel) return cmd_relations(s);
    if (*self) return selftest(out, opt.format == "json-lines");
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const HypothesisViolation& e) {
    err << "hypothesis violated: " << e.what() << "\n";
    return kFalse;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace cuntz::cli
