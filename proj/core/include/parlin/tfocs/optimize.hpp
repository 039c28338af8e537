#pragma once

#include <vector>

#include "parlin/tfocs/components.hpp"

namespace parlin::tfocs {

struct TraceEntry {
  int iter = 0;
  double objective = 0.0;
  double lipschitz = 0.0;
  bool restarted = false;
  double wallclock_ms = 0.0;
  long feval_count = 0;
};

using Trace = std::vector<TraceEntry>;

struct ATOptions {
  int max_iter = 1000;
  double tol = 1e-8;        // stop when ||x+ - x|| / max(1, ||x+||) <= tol
  double l0 = 1.0;          // initial Lipschitz estimate
  bool backtracking = true;
  bool restart = true;      // gradient-test restart
  double grad_tol = 0.0;    // optional extra stop on ||adjoint gradient||; 0 disables
  bool check_components = false;
  std::uint64_t check_seed = 0;
};

struct OptimizeResult {
  local::DenseVector x;
  Trace trace;
  bool converged = false;
  long fevals = 0;
  double final_l = 0.0;
};

/// Accelerated proximal gradient in the Auslender-Teboulle form:
///
///   y  = (1 - theta) x + theta z
///   g  = adjoint(grad f(forward(y)))
///   z+ = prox(z - g / (theta L), 1 / (theta L))
///   x+ = (1 - theta) x + theta z+
///   theta+ = 2 / (1 + sqrt(1 + 4 / theta^2)),   theta_0 = 1
///
/// With backtracking, L is optimistically shrunk by 0.9 each iteration and
/// grown by 2x whenever the quadratic upper-bound test rejects the step.
/// With restart, momentum resets (theta = 1, z = x+) whenever the gradient
/// and the step just taken have positive inner product.
OptimizeResult optimize(const CompositeObjective& objective, local::DenseVector x0,
                        const ATOptions& options = {});

}  // namespace parlin::tfocs
