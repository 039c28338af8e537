#pragma once

#include "parlin/tfocs/optimize.hpp"

namespace parlin::tfocs {

struct L1RLSOptions {
  int max_iter = 5000;
  double tol = 1e-10;
  double l0 = 1.0;
};

struct L1RLSResult {
  local::DenseVector x;
  Trace trace;
  bool converged = false;
  double kkt_residual = 0.0;
};

/// L1-regularized least squares, 0.5 ||Ax - b||^2 + lambda ||x||_1, assembled
/// as quadratic loss + distributed matrix product + L1 prox and handed to the
/// accelerated solver with backtracking and restart on.
L1RLSResult solver_l1rls(const dist::RowMatrix& a, const local::DenseVector& b, double lambda,
                         const L1RLSOptions& options = {});

/// Max KKT violation of the LASSO optimality conditions at x:
/// |g_j| - lambda clipped at 0 where x_j = 0, |g_j + lambda sign(x_j)|
/// elsewhere, with g = A^T (A x - b).
double lasso_kkt_residual(const dist::RowMatrix& a, const local::DenseVector& b, double lambda,
                          const local::DenseVector& x);

}  // namespace parlin::tfocs
