#pragma once

#include <memory>
#include <optional>

#include "parlin/dist/row_matrix.hpp"
#include "parlin/svd/lanczos.hpp"

namespace parlin::svd {

enum class SvdPath { kAuto, kGram, kLanczos };

struct SvdOptions {
  SvdPath path = SvdPath::kAuto;
  /// Below this column count the Gramian is eigendecomposed locally;
  /// otherwise the matrix-free Lanczos path runs.
  int tall_skinny_threshold = 512;
  /// Singular values below r_cond * sigma_1 are truncated.
  double r_cond = 1e-9;
  int gram_cap = dist::kDefaultGramCap;
  LanczosConfig lanczos;  // k is taken from the compute_svd call
};

struct SvdResult {
  std::optional<dist::RowMatrix> u;  // m x k, present when requested and k > 0
  local::DenseVector sigma;          // descending, possibly truncated below k
  local::DenseMatrix v;              // n x k
  SvdPath path_taken = SvdPath::kAuto;
  int requested_k = 0;
  int restarts = 0;
  long matvecs = 0;
  local::DenseVector residuals;      // eigensolver residuals (Lanczos path only)
};

/// x -> A^T (A x) in one pass over the rows; A^T A is never materialized.
LinearOperator gram_operator(const dist::RowMatrix& m);

/// Rank-k SVD of a row matrix. Dispatches between the local-Gramian path and
/// the matrix-free Lanczos path (overridable via options.path); each column
/// of V is sign-fixed so its largest-magnitude entry is positive. U is
/// computed as A V Sigma^{-1} when requested.
SvdResult compute_svd(const dist::RowMatrix& m, int k, bool compute_u,
                      const SvdOptions& options = {});

}  // namespace parlin::svd
