#pragma once

#include "parlin/firstorder/objective.hpp"
#include "parlin/tfocs/optimize.hpp"

namespace parlin::firstorder {

using tfocs::Trace;

struct FoResult {
  local::DenseVector w;
  Trace trace;
  bool converged = false;
};

struct AccOptions {
  double l0 = 1.0;
  int max_iter = 500;
  double tol = 0.0;  // 0 runs the full iteration budget
};

/// Full-batch gradient descent with a fixed step. L1 regularization enters
/// through the subgradient lambda * sign(w).
FoResult gra(const SeparableObjective& objective, local::DenseVector w0, double step_size,
             int max_iter);

// Accelerated descent family: thin adapters over the composite solver with
// (restart, backtracking) toggled. L1 goes to the prox; L2 stays smooth.
FoResult acc(const SeparableObjective& objective, local::DenseVector w0, const AccOptions& o);
FoResult acc_r(const SeparableObjective& objective, local::DenseVector w0, const AccOptions& o);
FoResult acc_b(const SeparableObjective& objective, local::DenseVector w0, const AccOptions& o);
FoResult acc_rb(const SeparableObjective& objective, local::DenseVector w0, const AccOptions& o);

struct LbfgsOptions {
  int memory = 10;
  int max_iter = 500;
  double tol = 0.0;             // gradient-norm stop; 0 runs the full budget
  double armijo_c1 = 1e-4;
  double backtrack_factor = 0.5;
  int max_halvings = 50;
};

/// L-BFGS with the two-loop recursion and Armijo backtracking from unit step.
/// Requires a smooth objective: L1 regularization is rejected. Curvature
/// pairs with s.y <= 1e-12 ||s|| ||y|| are discarded.
FoResult lbfgs(const SeparableObjective& objective, local::DenseVector w0,
               const LbfgsOptions& o = {});

}  // namespace parlin::firstorder
