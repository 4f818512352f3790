#pragma once

// Hot loops with a serial reference and an OpenMP variant. Both produce
// identical canonical output; tests compare them and the benchmark times them.

#include "cuntz/algebra.hpp"

namespace cuntz {
class StepOperator;
struct StepFamily;
}  // namespace cuntz

namespace cuntz::kernels {

enum class Policy { kSerial, kParallel };

/// kParallel when built with OpenMP, else kSerial.
Policy default_policy();
void set_default_policy(Policy p);
bool openmp_available();

AlgebraElement multiply(const SystemSpec& spec, const AlgebraElement& a, const AlgebraElement& b,
                        Policy policy);

NormalForm normal_form(const SystemSpec& spec, const AlgebraElement& a, Policy policy);

/// Sum of per-term operators grouped by output level.
StepFamily eval_terms(const SystemSpec& spec, const std::vector<Term>& terms,
                      const std::vector<Scalar>& factors, Index n0, Policy policy);

/// S -> S (x) 1_{d(t)} in the row index convention j*d(t) + q.
SparseMatrix kronecker_embed(const SparseMatrix& s, Index dt, Policy policy);

}  // namespace cuntz::kernels
