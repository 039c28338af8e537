#include "parlin/firstorder/optimizers.hpp"

#include <chrono>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "parlin/errors.hpp"

namespace parlin::firstorder {

using local::DenseVector;
using tfocs::TraceEntry;

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

FoResult gra(const SeparableObjective& objective, DenseVector w0, double step_size,
             int max_iter) {
  if (step_size < 0.0) throw std::invalid_argument("step size must be >= 0");
  const auto start = std::chrono::steady_clock::now();
  DenseVector w = std::move(w0);
  long fevals = 0;

  FoResult out;
  for (int iter = 0; iter <= max_iter; ++iter) {
    GradientResult g = distributed_gradient(objective, w);
    ++fevals;
    if (g.value > 1e30) {
      throw ConvergenceError("objective exploded at iteration " + std::to_string(iter) +
                             "; the step size " + std::to_string(step_size) + " is too large");
    }
    out.trace.push_back(TraceEntry{iter, g.value, step_size > 0 ? 1.0 / step_size : 0.0, false,
                                   elapsed_ms(start), fevals});
    if (iter == max_iter) break;
    if (objective.reg == Reg::kL1) {
      for (int i = 0; i < w.size(); ++i) {
        if (w[i] > 0.0) {
          g.gradient[i] += objective.lambda;
        } else if (w[i] < 0.0) {
          g.gradient[i] -= objective.lambda;
        }
      }
    }
    local::axpy(-step_size, g.gradient, w);
  }
  out.w = std::move(w);
  out.converged = true;
  return out;
}

namespace {

FoResult run_acc(const SeparableObjective& objective, DenseVector w0, const AccOptions& o,
                 bool restart, bool backtracking) {
  // The smooth part excludes the L1 term, which the prox handles.
  const bool l1 = objective.reg == Reg::kL1;
  tfocs::SmoothComponent smooth(
      "separable_loss", [&objective, l1](const DenseVector& w) {
        GradientResult g = distributed_gradient(objective, w);
        tfocs::SmoothEval eval;
        eval.value = g.value;
        if (l1) {
          double l1_term = 0.0;
          for (int i = 0; i < w.size(); ++i) l1_term += std::fabs(w[i]);
          eval.value -= objective.lambda * l1_term;
        }
        eval.gradient = std::move(g.gradient);
        return eval;
      });

  tfocs::CompositeObjective composite{
      std::move(smooth), tfocs::linop_identity(objective.dim),
      l1 ? tfocs::prox_l1(objective.lambda) : tfocs::prox_zero()};

  tfocs::ATOptions at;
  at.max_iter = o.max_iter;
  at.tol = o.tol;
  at.l0 = o.l0;
  at.backtracking = backtracking;
  at.restart = restart;

  tfocs::OptimizeResult r = tfocs::optimize(composite, std::move(w0), at);
  return FoResult{std::move(r.x), std::move(r.trace), r.converged};
}

}  // namespace

FoResult acc(const SeparableObjective& objective, DenseVector w0, const AccOptions& o) {
  return run_acc(objective, std::move(w0), o, false, false);
}
FoResult acc_r(const SeparableObjective& objective, DenseVector w0, const AccOptions& o) {
  return run_acc(objective, std::move(w0), o, true, false);
}
FoResult acc_b(const SeparableObjective& objective, DenseVector w0, const AccOptions& o) {
  return run_acc(objective, std::move(w0), o, false, true);
}
FoResult acc_rb(const SeparableObjective& objective, DenseVector w0, const AccOptions& o) {
  return run_acc(objective, std::move(w0), o, true, true);
}

FoResult lbfgs(const SeparableObjective& objective, DenseVector w0, const LbfgsOptions& o) {
  if (objective.reg == Reg::kL1) {
    throw std::invalid_argument("lbfgs needs a smooth objective; L1 regularization is not one");
  }
  const auto start = std::chrono::steady_clock::now();
  const int d = objective.dim;
  DenseVector w = std::move(w0);
  long fevals = 0;

  GradientResult cur = distributed_gradient(objective, w);
  ++fevals;

  struct Pair {
    DenseVector s, y;
    double rho;
  };
  std::deque<Pair> memory;

  FoResult out;
  out.trace.push_back(TraceEntry{0, cur.value, 1.0, false, elapsed_ms(start), fevals});

  for (int iter = 1; iter <= o.max_iter; ++iter) {
    // Two-loop recursion.
    DenseVector q = cur.gradient;
    std::vector<double> alpha(memory.size());
    for (int i = static_cast<int>(memory.size()) - 1; i >= 0; --i) {
      alpha[i] = memory[i].rho * local::dot(memory[i].s, q);
      local::axpy(-alpha[i], memory[i].y, q);
    }
    if (!memory.empty()) {
      const Pair& last = memory.back();
      const double gamma = local::dot(last.s, last.y) / local::dot(last.y, last.y);
      local::scale(gamma, q);
    }
    for (std::size_t i = 0; i < memory.size(); ++i) {
      const double beta = memory[i].rho * local::dot(memory[i].y, q);
      local::axpy(alpha[i] - beta, memory[i].s, q);
    }
    DenseVector direction = local::scaled(-1.0, q);

    double slope = local::dot(cur.gradient, direction);
    if (slope >= 0.0) {
      // Not a descent direction; drop the history and fall back to steepest.
      memory.clear();
      direction = local::scaled(-1.0, cur.gradient);
      slope = -local::dot(cur.gradient, cur.gradient);
    }

    double step = 1.0;
    DenseVector w_next(d);
    GradientResult next;
    bool accepted = false;
    for (int h = 0; h <= o.max_halvings; ++h) {
      w_next = w;
      local::axpy(step, direction, w_next);
      next = distributed_gradient(objective, w_next);
      ++fevals;
      if (std::isfinite(next.value) && next.value <= cur.value + o.armijo_c1 * step * slope) {
        accepted = true;
        break;
      }
      step *= o.backtrack_factor;
    }
    if (!accepted) {
      throw ConvergenceError("line search failed after " + std::to_string(o.max_halvings) +
                             " halvings at iteration " + std::to_string(iter));
    }

    DenseVector s = local::sub(w_next, w);
    DenseVector y = local::sub(next.gradient, cur.gradient);
    const double sy = local::dot(s, y);
    if (sy > 1e-12 * local::norm2(s) * local::norm2(y)) {
      memory.push_back(Pair{std::move(s), std::move(y), 1.0 / sy});
      if (static_cast<int>(memory.size()) > o.memory) memory.pop_front();
    }

    w = std::move(w_next);
    cur = std::move(next);
    out.trace.push_back(TraceEntry{iter, cur.value, step, false, elapsed_ms(start), fevals});

    if (o.tol > 0.0 && local::norm2(cur.gradient) <= o.tol) {
      out.converged = true;
      break;
    }
  }

  out.w = std::move(w);
  if (o.tol <= 0.0) out.converged = true;
  return out;
}

}  // namespace parlin::firstorder
