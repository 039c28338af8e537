#include "parlin/tfocs/components.hpp"

#include <cmath>
#include <stdexcept>

#include "parlin/errors.hpp"

namespace parlin::tfocs {

using local::DenseMatrix;
using local::DenseVector;
using local::Vector;

SmoothComponent smooth_quad(DenseVector b) {
  return SmoothComponent("quad", [b = std::move(b)](const DenseVector& z) {
    if (z.size() != b.size()) {
      throw std::invalid_argument("smooth_quad: point has size " + std::to_string(z.size()) +
                                  ", expected " + std::to_string(b.size()));
    }
    SmoothEval out;
    out.gradient = local::sub(z, b);
    out.value = 0.5 * local::dot(out.gradient, out.gradient);
    return out;
  });
}

LinearComponent linop_identity(int dim) {
  auto id = [](const DenseVector& x) { return x; };
  return LinearComponent("identity", dim, dim, id, id);
}

LinearComponent linop_matrix(DenseMatrix a) {
  const int m = a.num_rows();
  const int n = a.num_cols();
  auto shared = std::make_shared<const DenseMatrix>(std::move(a));
  return LinearComponent(
      "matrix", n, m,
      [shared, m](const DenseVector& x) {
        return local::gemv(1.0, *shared, x, 0.0, DenseVector(m));
      },
      [shared, n](const DenseVector& z) {
        return local::gemv(1.0, shared->transpose(), z, 0.0, DenseVector(n));
      });
}

LinearComponent linop_row_matrix(const dist::RowMatrix& a) {
  const int n = a.num_cols();
  const long m = a.num_rows();
  auto rows = a.rows();
  const auto sizes = engine::partition_sizes(rows);
  std::vector<long> offsets(sizes.size() + 1, 0);
  for (std::size_t p = 0; p < sizes.size(); ++p) {
    offsets[p + 1] = offsets[p] + static_cast<long>(sizes[p]);
  }

  auto forward = [rows, n, m](const DenseVector& x) {
    if (x.size() != n) {
      throw std::invalid_argument("linop forward: size " + std::to_string(x.size()) +
                                  ", expected " + std::to_string(n));
    }
    auto bx = engine::broadcast(x);
    auto dots = engine::map_partitions(rows, [bx](const std::vector<Vector>& part) {
      std::vector<double> out;
      out.reserve(part.size());
      for (const Vector& row : part) out.push_back(row.dot(bx.value()));
      return out;
    });
    return DenseVector(engine::collect(dots));
  };

  auto adjoint = [rows, n, m, offsets](const DenseVector& z) {
    if (z.size() != static_cast<int>(m)) {
      throw std::invalid_argument("linop adjoint: size " + std::to_string(z.size()) +
                                  ", expected " + std::to_string(m));
    }
    auto bz = engine::broadcast(z);
    auto partials = engine::map_partitions_with_index(
        rows, [bz, n, offsets](int p, const std::vector<Vector>& part) {
          DenseVector acc(n);
          long row_index = offsets[p];
          for (const Vector& row : part) {
            const double zi = bz.value()[static_cast<int>(row_index++)];
            if (zi != 0.0) row.add_scaled_to(zi, acc);
          }
          return std::vector<DenseVector>{std::move(acc)};
        });
    DenseVector out(n);
    for (const DenseVector& partial : engine::collect(partials)) local::axpy(1.0, partial, out);
    return out;
  };

  return LinearComponent("row_matrix", n, static_cast<int>(m), std::move(forward),
                         std::move(adjoint));
}

DenseVector prox_l1_apply(const DenseVector& x, double t, double lambda) {
  if (t <= 0.0) throw std::invalid_argument("prox step must be positive");
  if (lambda < 0.0) throw std::invalid_argument("lambda must be >= 0");
  const double thresh = t * lambda;
  DenseVector out(x.size());
  for (int i = 0; i < x.size(); ++i) {
    const double v = x[i];
    if (v > thresh) {
      out[i] = v - thresh;
    } else if (v < -thresh) {
      out[i] = v + thresh;
    }
  }
  return out;
}

ProxCapableComponent prox_l1(double lambda) {
  if (lambda < 0.0) throw std::invalid_argument("lambda must be >= 0");
  return ProxCapableComponent(
      "l1",
      [lambda](const DenseVector& x) {
        double s = 0.0;
        for (int i = 0; i < x.size(); ++i) s += std::fabs(x[i]);
        return lambda * s;
      },
      [lambda](const DenseVector& x, double t) { return prox_l1_apply(x, t, lambda); });
}

ProxCapableComponent prox_zero() {
  return ProxCapableComponent(
      "zero", [](const DenseVector&) { return 0.0; },
      [](const DenseVector& x, double) { return x; });
}

double max_gradient_fd_error(const SmoothComponent& f, int dim, Rng& rng, int probes) {
  double worst = 0.0;
  for (int p = 0; p < probes; ++p) {
    DenseVector x(dim);
    for (int i = 0; i < dim; ++i) x[i] = rng.gaussian();
    const SmoothEval at = f.eval(x);
    const double step = 1e-6 * std::max(1.0, local::norm2(x));
    for (int d = 0; d < 2; ++d) {
      DenseVector dir(dim);
      for (int i = 0; i < dim; ++i) dir[i] = rng.gaussian();
      local::scale(1.0 / local::norm2(dir), dir);

      DenseVector xp = x;
      local::axpy(step, dir, xp);
      DenseVector xm = x;
      local::axpy(-step, dir, xm);
      const double fd = (f.eval(xp).value - f.eval(xm).value) / (2.0 * step);
      const double gd = local::dot(at.gradient, dir);
      const double denom = std::max({std::fabs(fd), std::fabs(gd), 1e-8 * (1.0 + std::fabs(at.value))});
      worst = std::max(worst, std::fabs(fd - gd) / denom);
    }
  }
  return worst;
}

double max_adjoint_error(const LinearComponent& a, Rng& rng, int probes) {
  double worst = 0.0;
  for (int p = 0; p < probes; ++p) {
    DenseVector x(a.input_dim());
    for (int i = 0; i < x.size(); ++i) x[i] = rng.gaussian();
    DenseVector z(a.output_dim());
    for (int i = 0; i < z.size(); ++i) z[i] = rng.gaussian();
    const DenseVector ax = a.forward(x);
    const DenseVector atz = a.adjoint(z);
    const double lhs = local::dot(ax, z);
    const double rhs = local::dot(x, atz);
    const double scale = std::max({local::norm2(ax) * local::norm2(z),
                                   local::norm2(x) * local::norm2(atz), 1e-300});
    worst = std::max(worst, std::fabs(lhs - rhs) / scale);
  }
  return worst;
}

void check_composite(const CompositeObjective& objective, Rng& rng) {
  const double grad_err = max_gradient_fd_error(objective.f, objective.a.output_dim(), rng);
  if (grad_err > 1e-5) {
    throw NumericalError("smooth component '" + objective.f.name() +
                         "' fails the finite-difference check (rel error " +
                         std::to_string(grad_err) + ")");
  }
  const double adj_err = max_adjoint_error(objective.a, rng);
  if (adj_err > 1e-8) {
    throw NumericalError("linear component '" + objective.a.name() +
                         "' fails the adjoint check (rel error " + std::to_string(adj_err) + ")");
  }
}

}  // namespace parlin::tfocs
