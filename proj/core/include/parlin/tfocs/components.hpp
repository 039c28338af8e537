#pragma once

#include <functional>
#include <string>

#include "parlin/dist/row_matrix.hpp"
#include "parlin/local/blas.hpp"
#include "parlin/util/rng.hpp"

namespace parlin::tfocs {

struct SmoothEval {
  double value = 0.0;
  local::DenseVector gradient;
};

/// Smooth convex piece: value and gradient at a point.
class SmoothComponent {
 public:
  using EvalFn = std::function<SmoothEval(const local::DenseVector&)>;
  SmoothComponent(std::string name, EvalFn eval) : name_(std::move(name)), eval_(std::move(eval)) {}

  SmoothEval eval(const local::DenseVector& z) const { return eval_(z); }
  const std::string& name() const { return name_; }

 private:
  std::string name_;
  EvalFn eval_;
};

/// 0.5 * ||z - b||^2
SmoothComponent smooth_quad(local::DenseVector b);

/// Linear piece with an explicit adjoint. forward maps the optimization
/// variable into the smooth component's domain; adjoint maps gradients back.
class LinearComponent {
 public:
  using ApplyFn = std::function<local::DenseVector(const local::DenseVector&)>;
  LinearComponent(std::string name, int input_dim, int output_dim, ApplyFn forward,
                  ApplyFn adjoint)
      : name_(std::move(name)),
        input_dim_(input_dim),
        output_dim_(output_dim),
        forward_(std::move(forward)),
        adjoint_(std::move(adjoint)) {}

  local::DenseVector forward(const local::DenseVector& x) const { return forward_(x); }
  local::DenseVector adjoint(const local::DenseVector& z) const { return adjoint_(z); }
  int input_dim() const { return input_dim_; }
  int output_dim() const { return output_dim_; }
  const std::string& name() const { return name_; }

 private:
  std::string name_;
  int input_dim_;
  int output_dim_;
  ApplyFn forward_;
  ApplyFn adjoint_;
};

LinearComponent linop_identity(int dim);
LinearComponent linop_matrix(local::DenseMatrix a);
/// Distributed product: forward is one row-wise pass, adjoint one aggregate.
/// Vectors stay driver-local.
LinearComponent linop_row_matrix(const dist::RowMatrix& a);

/// Nonsmooth piece with a proximity operator
/// prox(x, t) = argmin_u { t h(u) + 0.5 ||u - x||^2 }.
class ProxCapableComponent {
 public:
  using EvalFn = std::function<double(const local::DenseVector&)>;
  using ProxFn = std::function<local::DenseVector(const local::DenseVector&, double)>;
  ProxCapableComponent(std::string name, EvalFn eval, ProxFn prox)
      : name_(std::move(name)), eval_(std::move(eval)), prox_(std::move(prox)) {}

  double eval(const local::DenseVector& x) const { return eval_(x); }
  local::DenseVector prox(const local::DenseVector& x, double t) const { return prox_(x, t); }
  const std::string& name() const { return name_; }

 private:
  std::string name_;
  EvalFn eval_;
  ProxFn prox_;
};

/// Elementwise soft threshold sign(x_i) * max(|x_i| - t*lambda, 0).
local::DenseVector prox_l1_apply(const local::DenseVector& x, double t, double lambda);

ProxCapableComponent prox_l1(double lambda);
ProxCapableComponent prox_zero();

/// phi(x) = f(A x) + h(x)
struct CompositeObjective {
  SmoothComponent f;
  LinearComponent a;
  ProxCapableComponent h;

  double value(const local::DenseVector& x) const {
    return f.eval(a.forward(x)).value + h.eval(x);
  }
};

// Diagnostics. Each returns the worst relative error over random probes.
double max_gradient_fd_error(const SmoothComponent& f, int dim, Rng& rng, int probes = 5);
double max_adjoint_error(const LinearComponent& a, Rng& rng, int probes = 5);

/// Runs both checks; throws NumericalError when a component looks wrong
/// (gradient vs central differences at rel 1e-5, adjoint at rel 1e-8).
void check_composite(const CompositeObjective& objective, Rng& rng);

}  // namespace parlin::tfocs
