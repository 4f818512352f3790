#include "cuntz/kernels.hpp"

#include <atomic>
#include <exception>
#include <mutex>

#include "cuntz/steprep.hpp"

#ifdef CUNTZ_HAVE_OPENMP
#include <omp.h>
#endif

namespace cuntz::kernels {

namespace {

std::atomic<Policy> g_policy{
#ifdef CUNTZ_HAVE_OPENMP
    Policy::kParallel
#else
    Policy::kSerial
#endif
};

// Below this many term pairs the thread startup costs more than it saves.
constexpr std::size_t kParallelThreshold = 64;

bool go_parallel(Policy p, std::size_t work) {
#ifdef CUNTZ_HAVE_OPENMP
  return p == Policy::kParallel && work >= kParallelThreshold && omp_get_max_threads() > 1;
#else
  (void)p;
  (void)work;
  return false;
#endif
}

// Exceptions must not escape an OpenMP region.
class FirstError {
 public:
  void capture() {
    std::lock_guard<std::mutex> lock(mu_);
    if (!error_) error_ = std::current_exception();
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::mutex mu_;
  std::exception_ptr error_;
};

NormalBlock degree_block(const SystemSpec& spec, const std::vector<Term>& terms,
                         const SemigroupElement& level) {
  const Degree& g = terms.front().degree();
  std::vector<int> right(level.coords);
  for (std::size_t i = 0; i < right.size(); ++i) right[i] -= g.coords[i];
  NormalBlock b{level, SemigroupElement(right), {}};
  b.matrix = SparseMatrix(spec.dim(level), spec.dim(b.right_level));
  for (const Term& t : terms) raise_term_into(spec, t, level, b.matrix);
  return b;
}

}  // namespace

Policy default_policy() { return g_policy.load(); }
void set_default_policy(Policy p) { g_policy.store(p); }

bool openmp_available() {
#ifdef CUNTZ_HAVE_OPENMP
  return true;
#else
  return false;
#endif
}

AlgebraElement multiply(const SystemSpec& spec, const AlgebraElement& a, const AlgebraElement& b,
                        Policy policy) {
  const std::vector<Term> ta = a.terms();
  const std::vector<Term> tb = b.terms();
  AlgebraElement out;
  if (!go_parallel(policy, ta.size() * tb.size())) {
    for (const Term& x : ta)
      for (const Term& y : tb) multiply_terms_into(spec, x, y, out);
    return out;
  }
#ifdef CUNTZ_HAVE_OPENMP
  const int n = static_cast<int>(ta.size());
  std::vector<AlgebraElement> partial(n);
  FirstError err;
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) {
    try {
      for (const Term& y : tb) multiply_terms_into(spec, ta[i], y, partial[i]);
    } catch (...) {
      err.capture();
    }
  }
  err.rethrow();
  // Merge in term order so coefficient sums are added in a fixed sequence.
  for (const AlgebraElement& p : partial) out.add(p);
#endif
  return out;
}

NormalForm normal_form(const SystemSpec& spec, const AlgebraElement& a, Policy policy) {
  const auto levels = canonical_levels(a);
  std::vector<std::vector<Term>> groups;
  std::vector<SemigroupElement> group_levels;
  {
    std::map<Degree, std::size_t> slot;
    for (const Term& t : a.terms()) {
      auto [it, inserted] = slot.try_emplace(t.degree(), groups.size());
      if (inserted) {
        groups.emplace_back();
        group_levels.push_back(levels.at(t.degree()));
      }
      groups[it->second].push_back(t);
    }
  }
  const int n = static_cast<int>(groups.size());
  std::vector<NormalBlock> blocks(n);
  if (!go_parallel(policy, a.size())) {
    for (int i = 0; i < n; ++i) blocks[i] = degree_block(spec, groups[i], group_levels[i]);
  } else {
    FirstError err;
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
      try {
        blocks[i] = degree_block(spec, groups[i], group_levels[i]);
      } catch (...) {
        err.capture();
      }
    }
    err.rethrow();
  }
  NormalForm nf;
  for (int i = 0; i < n; ++i) {
    if (blocks[i].matrix.is_zero()) continue;
    nf.blocks().emplace(groups[i].front().degree(), std::move(blocks[i]));
  }
  return nf;
}

StepFamily eval_terms(const SystemSpec& spec, const std::vector<Term>& terms,
                      const std::vector<Scalar>& factors, Index n0, Policy policy) {
  const int n = static_cast<int>(terms.size());
  std::vector<Index> out_level(n);
  std::map<Index, std::vector<int>> by_level;
  for (int i = 0; i < n; ++i) {
    const Index dy = spec.dim(terms[i].right.fiber);
    out_level[i] = n0 / dy * spec.dim(terms[i].left.fiber);
    by_level[out_level[i]].push_back(i);
  }
  std::vector<Index> keys;
  std::vector<const std::vector<int>*> members;
  for (const auto& [lvl, idx] : by_level) {
    keys.push_back(lvl);
    members.push_back(&idx);
  }
  const int groups = static_cast<int>(keys.size());
  std::vector<StepOperator> ops(groups);
  auto build = [&](int gi) {
    StepOperator op(n0, keys[gi]);
    for (int i : *members[gi]) eval_term_into(spec, terms[i], n0, factors[i], op.matrix());
    ops[gi] = std::move(op);
  };
  if (!go_parallel(policy, static_cast<std::size_t>(n))) {
    for (int gi = 0; gi < groups; ++gi) build(gi);
  } else {
    FirstError err;
#pragma omp parallel for schedule(dynamic)
    for (int gi = 0; gi < groups; ++gi) {
      try {
        build(gi);
      } catch (...) {
        err.capture();
      }
    }
    err.rethrow();
  }
  StepFamily fam;
  fam.level_in = n0;
  for (int gi = 0; gi < groups; ++gi)
    if (!ops[gi].is_zero()) fam.by_level_out.emplace(keys[gi], std::move(ops[gi]));
  return fam;
}

SparseMatrix kronecker_embed(const SparseMatrix& s, Index dt, Policy policy) {
  SparseMatrix out(s.rows() * dt, s.cols() * dt);
  const std::vector<std::pair<SparseMatrix::Key, Scalar>> entries(s.entries().begin(),
                                                                  s.entries().end());
  if (!go_parallel(policy, entries.size() * dt)) {
    for (const auto& [key, v] : entries)
      for (Index q = 0; q < dt; ++q) out.add(key.first * dt + q, key.second * dt + q, v);
    return out;
  }
  // Each source row owns a disjoint band of output rows; fill bands in
  // parallel, then splice them into the ordered map serially.
  const int n = static_cast<int>(entries.size());
  std::vector<SparseMatrix> bands(n, SparseMatrix(out.rows(), out.cols()));
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    const auto& [key, v] = entries[i];
    for (Index q = 0; q < dt; ++q) bands[i].add(key.first * dt + q, key.second * dt + q, v);
  }
  for (const SparseMatrix& b : bands) out += b;
  return out;
}

}  // namespace cuntz::kernels
