// Serial reference vs OpenMP kernels on the same inputs.
#include <benchmark/benchmark.h>

#include <random>

#include "cuntz/kernels.hpp"
#include "cuntz/random.hpp"
#include "cuntz/steprep.hpp"

using namespace cuntz;
using kernels::Policy;

namespace {

const SystemSpec& spec() {
  static const SystemSpec s = SystemSpec::lexicographic({2, 3});
  return s;
}

AlgebraElement sample(int terms, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_element(spec(), {terms, 3, 5, true}, rng);
}

Policy policy_of(const benchmark::State& state) {
  return state.range(1) ? Policy::kParallel : Policy::kSerial;
}

void BM_Multiply(benchmark::State& state) {
  const AlgebraElement a = sample(static_cast<int>(state.range(0)), 1);
  const AlgebraElement b = sample(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::multiply(spec(), a, b, policy_of(state)));
}

void BM_NormalForm(benchmark::State& state) {
  const AlgebraElement a = sample(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::normal_form(spec(), a, policy_of(state)));
}

void BM_Eval(benchmark::State& state) {
  const AlgebraElement a = sample(static_cast<int>(state.range(0)), 4);
  const std::vector<Term> terms = a.terms();
  const std::vector<Scalar> ones(terms.size(), Scalar::one());
  const Index n0 = required_level_divisor(spec(), a) * 6;
  for (auto _ : state) benchmark::DoNotOptimize(kernels::eval_terms(spec(), terms, ones, n0, policy_of(state)));
}

void BM_Kronecker(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const Index n = static_cast<Index>(state.range(0));
  std::uniform_int_distribution<Index> idx(0, n - 1);
  SparseMatrix m(n, n);
  for (Index i = 0; i < 4 * n; ++i) m.add(idx(rng), idx(rng), Scalar::integer(1 + static_cast<long>(i % 7)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::kronecker_embed(m, 6, policy_of(state)));
}

}  // namespace

// Second argument: 0 serial, 1 parallel.
BENCHMARK(BM_Multiply)->ArgsProduct({{64, 256}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NormalForm)->ArgsProduct({{256, 1024}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Eval)->ArgsProduct({{256, 1024}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Kronecker)->ArgsProduct({{256, 1024}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
