#pragma once

#include <cstdint>
#include <functional>

#include "parlin/local/dense.hpp"

namespace parlin::svd {

/// Matrix-free symmetric operator: the solver only ever asks for
/// matrix-vector products, so the matrix may live anywhere (dense, sparse,
/// or spread across an engine dataset).
struct LinearOperator {
  int dimension = 0;
  std::function<local::DenseVector(const local::DenseVector&)> apply;
};

struct LanczosConfig {
  int k = 1;                  // wanted eigenpairs
  int max_basis = 0;          // restart dimension; 0 -> max(2k + 1, 20), clamped to n
  double tol = 1e-10;         // residual tolerance, relative to the operator scale
  int max_restarts = 300;
  std::uint64_t seed = 0;     // start vector seed
};

struct EigenPairs {
  local::DenseVector values;     // k eigenvalues, descending magnitude
  local::DenseMatrix vectors;    // n x k, orthonormal columns
  local::DenseVector residuals;  // ||op(w) - lambda w|| per pair
  int restarts = 0;
  long matvecs = 0;
};

/// Top-k eigenpairs (largest magnitude) of a symmetric positive semidefinite
/// operator by Lanczos with full reorthogonalization and thick restarts: the
/// basis grows to max_basis, a Rayleigh-Ritz solve extracts Ritz pairs, and
/// on restart the k wanted Ritz vectors plus the residual direction seed the
/// next cycle. A zero residual mid-growth (an invariant subspace) counts as
/// converged once k pairs exist.
///
/// Each returned pair satisfies ||op(w) - lambda w|| <= tol * max(|lambda|,
/// opnorm_estimate); failing that within max_restarts raises
/// ConvergenceError carrying the best residuals.
EigenPairs symmetric_eigen(const LinearOperator& op, const LanczosConfig& config);

}  // namespace parlin::svd
