#pragma once

#include "parlin/tfocs/optimize.hpp"

namespace parlin::tfocs {

struct SLPOptions {
  local::DenseVector x_center;   // proximity center x0; empty means zeros
  int continuation_rounds = 10;
  double inner_tol = 1e-10;      // step tolerance of the inner dual solves
  int inner_max_iter = 5000;
  double l0 = 1.0;
};

struct SLPResult {
  local::DenseVector x;    // primal solution, >= 0 elementwise
  local::DenseVector nu;   // dual variable for Ax = b
  Trace trace;             // inner iterations across rounds, renumbered
  double feasibility = 0.0;
  int rounds = 0;
  bool converged = false;
};

/// Smoothed linear program
///
///   minimize    c^T x + (mu/2) ||x - x0||^2
///   subject to  A x = b,  x >= 0
///
/// solved through its smooth dual: for fixed nu the inner minimizer is the
/// closed form x*(nu) = max(0, x0 - (c - A^T nu)/mu), and the concave dual is
/// maximized by the accelerated method with gradient b - A x*(nu).
/// Continuation re-centers x0 at the previous solution for up to
/// continuation_rounds rounds, stopping early once the center stops moving
/// (relative 1e-8); this drives the smoothed optimum toward the true LP
/// optimum. Dual divergence (||nu|| > 1e12) raises InfeasibleError.
SLPResult solver_slp(const local::DenseVector& c, const LinearComponent& a,
                     const local::DenseVector& b, double mu, const SLPOptions& options = {});

SLPResult solver_slp(const local::DenseVector& c, const local::DenseMatrix& a,
                     const local::DenseVector& b, double mu, const SLPOptions& options = {});

SLPResult solver_slp(const local::DenseVector& c, const dist::RowMatrix& a,
                     const local::DenseVector& b, double mu, const SLPOptions& options = {});

}  // namespace parlin::tfocs
