#include "parlin/svd/svd.hpp"

#include <cmath>
#include <stdexcept>

#include "parlin/svd/jacobi.hpp"

namespace parlin::svd {

using local::DenseMatrix;
using local::DenseVector;
using local::Vector;

LinearOperator gram_operator(const dist::RowMatrix& m) {
  const int n = m.num_cols();
  auto rows = m.rows();
  LinearOperator op;
  op.dimension = n;
  op.apply = [rows, n](const DenseVector& x) {
    if (x.size() != n) {
      throw std::invalid_argument("gram operator expects size " + std::to_string(n) +
                                  ", got " + std::to_string(x.size()));
    }
    auto bx = engine::broadcast(x);
    return engine::aggregate(
        rows, DenseVector(n),
        [bx](DenseVector& acc, const Vector& row) {
          const double t = row.dot(bx.value());
          if (t != 0.0) row.add_scaled_to(t, acc);
        },
        [](DenseVector& lhs, const DenseVector& rhs) { local::axpy(1.0, rhs, lhs); });
  };
  return op;
}

namespace {

void fix_column_signs(DenseMatrix& v) {
  for (int j = 0; j < v.num_cols(); ++j) {
    int arg = 0;
    double best = 0.0;
    for (int i = 0; i < v.num_rows(); ++i) {
      const double a = std::fabs(v(i, j));
      if (a > best) {
        best = a;
        arg = i;
      }
    }
    if (v(arg, j) < 0.0) {
      for (int i = 0; i < v.num_rows(); ++i) v.at(i, j) = -v(i, j);
    }
  }
}

}  // namespace

SvdResult compute_svd(const dist::RowMatrix& m, int k, bool compute_u,
                      const SvdOptions& options) {
  const int n = m.num_cols();
  if (k < 1 || k > n) {
    throw std::invalid_argument("k must be in [1, " + std::to_string(n) + "], got " +
                                std::to_string(k));
  }

  SvdPath path = options.path;
  if (path == SvdPath::kAuto) {
    path = n < options.tall_skinny_threshold ? SvdPath::kGram : SvdPath::kLanczos;
  }

  DenseVector lambda(k);
  DenseMatrix v(n, k);
  SvdResult result;
  result.path_taken = path;
  result.requested_k = k;

  if (path == SvdPath::kGram) {
    const DenseMatrix g = m.compute_gramian(options.gram_cap);
    EigenDecomposition eig = jacobi_eigen(g);
    for (int j = 0; j < k; ++j) {
      lambda[j] = eig.values[j];
      for (int i = 0; i < n; ++i) v.at(i, j) = eig.vectors(i, j);
    }
  } else {
    LanczosConfig cfg = options.lanczos;
    cfg.k = k;
    EigenPairs pairs = symmetric_eigen(gram_operator(m), cfg);
    lambda = std::move(pairs.values);
    v = std::move(pairs.vectors);
    result.restarts = pairs.restarts;
    result.matvecs = pairs.matvecs;
    result.residuals = std::move(pairs.residuals);
  }

  // sigma_i = sqrt(lambda_i); drop values below r_cond * sigma_1.
  const double sigma0 = std::sqrt(std::max(lambda[0], 0.0));
  int kept = 0;
  while (kept < k) {
    const double s = std::sqrt(std::max(lambda[kept], 0.0));
    if (s <= options.r_cond * sigma0 || s == 0.0) break;
    ++kept;
  }

  result.sigma = DenseVector(kept);
  result.v = DenseMatrix(n, kept);
  for (int j = 0; j < kept; ++j) {
    result.sigma[j] = std::sqrt(std::max(lambda[j], 0.0));
    for (int i = 0; i < n; ++i) result.v.at(i, j) = v(i, j);
  }
  fix_column_signs(result.v);

  if (compute_u && kept > 0) {
    DenseMatrix v_sigma_inv(n, kept);
    for (int j = 0; j < kept; ++j) {
      const double inv = 1.0 / result.sigma[j];
      for (int i = 0; i < n; ++i) v_sigma_inv.at(i, j) = result.v(i, j) * inv;
    }
    result.u = m.multiply_by_local(v_sigma_inv);
  }
  return result;
}

}  // namespace parlin::svd
