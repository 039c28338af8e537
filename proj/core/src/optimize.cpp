#include "parlin/tfocs/optimize.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "parlin/errors.hpp"

namespace parlin::tfocs {

using local::DenseVector;

namespace {

constexpr double kBacktrackShrink = 0.9;  // optimistic per-iteration decrease
constexpr double kBacktrackGrow = 2.0;    // rejection growth (L / beta, beta = 0.5)
constexpr double kLipschitzCap = 1e30;

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

OptimizeResult optimize(const CompositeObjective& objective, DenseVector x0,
                        const ATOptions& options) {
  if (x0.size() != objective.a.input_dim()) {
    throw std::invalid_argument("x0 has size " + std::to_string(x0.size()) + ", expected " +
                                std::to_string(objective.a.input_dim()));
  }
  if (options.l0 <= 0.0) throw std::invalid_argument("l0 must be positive");
  if (options.check_components) {
    Rng rng(options.check_seed);
    check_composite(objective, rng);
  }

  const auto start = std::chrono::steady_clock::now();
  long fevals = 0;
  auto smooth_at = [&](const DenseVector& z) {
    ++fevals;
    return objective.f.eval(z);
  };

  DenseVector x = x0;
  DenseVector z = std::move(x0);
  double theta = 1.0;
  double l = options.l0;

  OptimizeResult result;
  {
    const SmoothEval f0 = smooth_at(objective.a.forward(x));
    result.trace.push_back(TraceEntry{0, f0.value + objective.h.eval(x), l, false,
                                      elapsed_ms(start), fevals});
  }

  bool converged = false;
  for (int iter = 1; iter <= options.max_iter && !converged; ++iter) {
    if (options.backtracking) l *= kBacktrackShrink;

    const DenseVector y = local::affine_combination(x, z, theta);
    const DenseVector fwd_y = objective.a.forward(y);
    const SmoothEval fy = smooth_at(fwd_y);
    if (!std::isfinite(fy.value) || !local::all_finite(fy.gradient)) {
      throw NumericalError("non-finite smooth value or gradient at iteration " +
                           std::to_string(iter));
    }
    const DenseVector g = objective.a.adjoint(fy.gradient);

    DenseVector z_next;
    DenseVector x_next;
    double f_x_next = 0.0;
    for (;;) {
      const double step = 1.0 / (theta * l);
      DenseVector probe = z;
      local::axpy(-step, g, probe);
      z_next = objective.h.prox(probe, step);
      x_next = local::affine_combination(x, z_next, theta);

      const DenseVector fwd_x = objective.a.forward(x_next);
      f_x_next = smooth_at(fwd_x).value;
      if (!options.backtracking) break;

      // Quadratic upper-bound test in the smooth component's domain:
      // f(Ax+) <= f(Ay) + <grad f(Ay), A(x+ - y)> + (L/2) ||x+ - y||^2.
      const DenseVector dz = local::sub(fwd_x, fwd_y);
      const DenseVector dx = local::sub(x_next, y);
      const double bound = fy.value + local::dot(fy.gradient, dz) +
                           0.5 * l * local::dot(dx, dx);
      if (f_x_next <= bound + 1e-12 * (1.0 + std::fabs(fy.value))) break;
      l *= kBacktrackGrow;
      if (l > kLipschitzCap) {
        throw ConvergenceError("backtracking failure: Lipschitz estimate exceeded " +
                               std::to_string(kLipschitzCap) + " at iteration " +
                               std::to_string(iter));
      }
    }
    if (!std::isfinite(f_x_next)) {
      throw NumericalError("non-finite objective at iteration " + std::to_string(iter));
    }

    bool restarted = false;
    const DenseVector step_taken = local::sub(x_next, x);
    if (options.restart && local::dot(g, step_taken) > 0.0) {
      theta = 1.0;
      z = x_next;
      restarted = true;
    } else {
      z = std::move(z_next);
      theta = 2.0 / (1.0 + std::sqrt(1.0 + 4.0 / (theta * theta)));
    }

    const double dx_norm = local::norm2(step_taken);
    x = std::move(x_next);
    result.trace.push_back(TraceEntry{iter, f_x_next + objective.h.eval(x), l, restarted,
                                      elapsed_ms(start), fevals});

    if (dx_norm / std::max(1.0, local::norm2(x)) <= options.tol) converged = true;
    if (options.grad_tol > 0.0 && local::norm2(g) <= options.grad_tol) converged = true;
  }

  result.x = std::move(x);
  result.converged = converged;
  result.fevals = fevals;
  result.final_l = l;
  return result;
}

}  // namespace parlin::tfocs
