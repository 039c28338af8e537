#pragma once

#include <string>
#include <vector>

#include "parlin/firstorder/optimizers.hpp"

namespace parlin::firstorder {

struct MethodTrace {
  std::string method;
  Trace trace;
  local::DenseVector w;
};

const std::vector<std::string>& all_methods();  // gra, acc, acc_r, acc_b, acc_rb, lbfgs

/// lbfgs cannot run on L1-regularized objectives.
bool method_supports(const std::string& method, const SeparableObjective& objective);

/// Curvature bound of the smooth part via power iteration on the data
/// Gramian: sigma_max(A)^2 for squared loss, sigma_max(A)^2 / 4 (+ lambda)
/// for logistic, padded by 20% so fixed 1/L0 steps stay stable.
double estimate_l0(const SeparableObjective& objective, std::uint64_t seed = 12345);

/// Runs every method for exactly `iters` outer iterations from w0 = 0 with
/// the same l0 (gra uses step 1/l0). Traces share the iteration grid; early
/// stationary exits are padded with their final value.
std::vector<MethodTrace> run_benchmark(const SeparableObjective& objective,
                                       const std::vector<std::string>& methods, int iters,
                                       double l0);

/// min objective over every iterate of every run.
double best_objective(const std::vector<MethodTrace>& runs);

/// F_at(iter) - best; traces are step functions past their last entry.
double gap_at(const MethodTrace& run, int iter, double best);

}  // namespace parlin::firstorder
