#include "parlin/tfocs/solver_slp.hpp"

#include <cmath>
#include <stdexcept>

#include "parlin/errors.hpp"

namespace parlin::tfocs {

using local::DenseVector;

namespace {

// x*(nu) = max(0, x0 - (c - A^T nu)/mu)
DenseVector primal_from_dual(const DenseVector& c, const LinearComponent& a,
                             const DenseVector& x0, double mu, const DenseVector& nu) {
  DenseVector at_nu = a.adjoint(nu);
  DenseVector x(c.size());
  for (int i = 0; i < x.size(); ++i) {
    const double v = x0[i] - (c[i] - at_nu[i]) / mu;
    x[i] = v > 0.0 ? v : 0.0;
  }
  return x;
}

}  // namespace

SLPResult solver_slp(const DenseVector& c, const LinearComponent& a, const DenseVector& b,
                     double mu, const SLPOptions& options) {
  if (mu <= 0.0) throw std::invalid_argument("mu must be positive");
  const int n = a.input_dim();
  const int m = a.output_dim();
  if (c.size() != n) {
    throw std::invalid_argument("c has size " + std::to_string(c.size()) + ", A has " +
                                std::to_string(n) + " columns");
  }
  if (b.size() != m) {
    throw std::invalid_argument("b has size " + std::to_string(b.size()) + ", A has " +
                                std::to_string(m) + " rows");
  }
  DenseVector x0 = options.x_center;
  if (x0.size() == 0) x0 = DenseVector(n);
  if (x0.size() != n) {
    throw std::invalid_argument("x0 has size " + std::to_string(x0.size()) + ", expected " +
                                std::to_string(n));
  }

  const double feas_tol = 1e-6 * (1.0 + local::norm2(b));

  SLPResult out;
  out.nu = DenseVector(m);

  for (int round = 0; round < options.continuation_rounds; ++round) {
    // Negated dual of the smoothed problem; minimizing it maximizes the dual.
    const DenseVector center = x0;
    SmoothComponent dual(
        "slp_dual", [&c, &a, &b, center, mu](const DenseVector& nu) {
          if (local::norm2(nu) > 1e12) {
            throw InfeasibleError("dual iterate diverged; the program looks infeasible");
          }
          DenseVector x = primal_from_dual(c, a, center, mu, nu);
          DenseVector ax = a.forward(x);
          DenseVector dx = local::sub(x, center);
          const double dual_value =
              local::dot(c, x) + 0.5 * mu * local::dot(dx, dx) + local::dot(nu, local::sub(b, ax));
          SmoothEval eval;
          eval.value = -dual_value;
          eval.gradient = local::sub(ax, b);
          return eval;
        });

    CompositeObjective objective{std::move(dual), linop_identity(m), prox_zero()};
    ATOptions at;
    at.max_iter = options.inner_max_iter;
    at.tol = options.inner_tol;
    at.l0 = options.l0;
    at.backtracking = true;
    at.restart = true;
    at.grad_tol = 0.1 * feas_tol;  // the dual gradient is the feasibility residual

    OptimizeResult inner = optimize(objective, out.nu, at);
    out.nu = std::move(inner.x);
    ++out.rounds;

    const int base = out.trace.empty() ? 0 : out.trace.back().iter;
    for (TraceEntry e : inner.trace) {
      if (base > 0 && e.iter == 0) continue;  // collapse duplicate round boundaries
      e.iter += base;
      out.trace.push_back(e);
    }

    DenseVector x_new = primal_from_dual(c, a, center, mu, out.nu);
    const double center_shift = local::norm2(local::sub(x_new, x0));
    x0 = std::move(x_new);
    if (center_shift / std::max(1.0, local::norm2(x0)) <= 1e-8) break;
  }

  out.x = x0;
  out.feasibility = local::norm2(local::sub(a.forward(out.x), b));
  out.converged = out.feasibility <= feas_tol;
  if (!out.converged) {
    throw ConvergenceError("smoothed LP stopped with feasibility " +
                           std::to_string(out.feasibility) + " above the tolerance " +
                           std::to_string(feas_tol));
  }
  return out;
}

SLPResult solver_slp(const DenseVector& c, const local::DenseMatrix& a, const DenseVector& b,
                     double mu, const SLPOptions& options) {
  return solver_slp(c, linop_matrix(a), b, mu, options);
}

SLPResult solver_slp(const DenseVector& c, const dist::RowMatrix& a, const DenseVector& b,
                     double mu, const SLPOptions& options) {
  return solver_slp(c, linop_row_matrix(a), b, mu, options);
}

}  // namespace parlin::tfocs
