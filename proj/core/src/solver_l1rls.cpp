#include "parlin/tfocs/solver_l1rls.hpp"

#include <cmath>
#include <stdexcept>

namespace parlin::tfocs {

using local::DenseVector;

L1RLSResult solver_l1rls(const dist::RowMatrix& a, const DenseVector& b, double lambda,
                         const L1RLSOptions& options) {
  if (lambda < 0.0) throw std::invalid_argument("lambda must be >= 0");
  if (b.size() != static_cast<int>(a.num_rows())) {
    throw std::invalid_argument("labels have size " + std::to_string(b.size()) +
                                ", matrix has " + std::to_string(a.num_rows()) + " rows");
  }

  CompositeObjective objective{smooth_quad(b), linop_row_matrix(a), prox_l1(lambda)};
  ATOptions at;
  at.max_iter = options.max_iter;
  at.tol = options.tol;
  at.l0 = options.l0;
  at.backtracking = true;
  at.restart = true;

  OptimizeResult opt = optimize(objective, DenseVector(a.num_cols()), at);

  L1RLSResult out;
  out.x = std::move(opt.x);
  out.trace = std::move(opt.trace);
  out.converged = opt.converged;
  out.kkt_residual = lasso_kkt_residual(a, b, lambda, out.x);
  return out;
}

double lasso_kkt_residual(const dist::RowMatrix& a, const DenseVector& b, double lambda,
                          const DenseVector& x) {
  LinearComponent lin = linop_row_matrix(a);
  DenseVector residual = local::sub(lin.forward(x), b);
  DenseVector g = lin.adjoint(residual);
  double worst = 0.0;
  for (int j = 0; j < x.size(); ++j) {
    if (x[j] == 0.0) {
      worst = std::max(worst, std::fabs(g[j]) - lambda);
    } else {
      worst = std::max(worst, std::fabs(g[j] + lambda * (x[j] > 0 ? 1.0 : -1.0)));
    }
  }
  return worst;
}

}  // namespace parlin::tfocs
