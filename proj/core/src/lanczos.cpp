#include "parlin/svd/lanczos.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "parlin/errors.hpp"
#include "parlin/svd/jacobi.hpp"
#include "parlin/util/rng.hpp"

namespace parlin::svd {

using local::DenseMatrix;
using local::DenseVector;

namespace {

DenseVector random_unit(int n, Rng& rng) {
  DenseVector v(n);
  for (int i = 0; i < n; ++i) v[i] = rng.gaussian();
  const double nrm = local::norm2(v);
  local::scale(1.0 / nrm, v);
  return v;
}

// Two-pass modified Gram-Schmidt; coefficients of both passes are summed so
// that they represent the full projection onto each basis vector.
double orthogonalize(DenseVector& w, const std::vector<DenseVector>& basis, int count,
                     std::vector<double>& coeffs) {
  coeffs.assign(static_cast<std::size_t>(count), 0.0);
  for (int pass = 0; pass < 2; ++pass) {
    for (int i = 0; i < count; ++i) {
      const double c = local::dot(basis[i], w);
      local::axpy(-c, basis[i], w);
      coeffs[i] += c;
    }
  }
  return local::norm2(w);
}

struct RitzSolve {
  std::vector<double> values;           // top-k by magnitude
  std::vector<std::vector<double>> y;   // corresponding T-eigenvectors (length s)
  std::vector<double> bounds;           // |beta_last * y[s-1]|
};

RitzSolve ritz_pairs(const DenseMatrix& t_full, int s, int k, double beta_last) {
  DenseMatrix t(s, s);
  for (int j = 0; j < s; ++j) {
    for (int i = 0; i < s; ++i) t.at(i, j) = t_full(i, j);
  }
  EigenDecomposition eig = jacobi_eigen(t);

  std::vector<int> order(s);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::fabs(eig.values[a]) > std::fabs(eig.values[b]);
  });

  RitzSolve out;
  for (int i = 0; i < k; ++i) {
    const int col = order[i];
    out.values.push_back(eig.values[col]);
    std::vector<double> yc(s);
    for (int r = 0; r < s; ++r) yc[r] = eig.vectors(r, col);
    out.y.push_back(std::move(yc));
    out.bounds.push_back(std::fabs(beta_last * eig.vectors(s - 1, col)));
  }
  return out;
}

}  // namespace

EigenPairs symmetric_eigen(const LinearOperator& op, const LanczosConfig& config) {
  const int n = op.dimension;
  const int k = config.k;
  if (n < 1) throw std::invalid_argument("operator dimension must be >= 1");
  if (k < 1 || k > n) {
    throw std::invalid_argument("k must be in [1, " + std::to_string(n) + "], got " +
                                std::to_string(k));
  }
  const int m = std::min(config.max_basis > 0 ? std::max(config.max_basis, k + 1)
                                              : std::max(2 * k + 1, 20),
                         n);
  const double tol = config.tol;

  Rng rng(config.seed);
  std::vector<DenseVector> basis;
  basis.reserve(static_cast<std::size_t>(m) + 1);
  basis.push_back(random_unit(n, rng));

  DenseMatrix t(m + 1, m + 1);
  int processed = 0;   // columns whose op() product has been taken
  long matvecs = 0;
  int restarts = 0;
  double opnorm_est = 0.0;
  std::vector<double> coeffs;
  RitzSolve best;
  bool have_best = false;

  auto build_vectors = [&](const RitzSolve& ritz, int s) {
    DenseMatrix w(n, k);
    for (int col = 0; col < k; ++col) {
      for (int r = 0; r < s; ++r) {
        const double y = ritz.y[col][r];
        if (y == 0.0) continue;
        for (int i = 0; i < n; ++i) w.at(i, col) += y * basis[r][i];
      }
    }
    return w;
  };

  for (;;) {
    // Grow the basis. basis[processed] is the next column to expand.
    bool invariant = false;
    while (processed < m) {
      const int j = processed;
      DenseVector w = op.apply(basis[j]);
      ++matvecs;
      const double pre_norm = local::norm2(w);
      const double beta = orthogonalize(w, basis, j + 1, coeffs);
      for (int i = 0; i <= j; ++i) {
        t.at(i, j) = coeffs[i];
        t.at(j, i) = coeffs[i];
      }
      ++processed;
      if (beta <= 1e-12 * std::max(pre_norm, 1e-300)) {
        // Invariant subspace. With k pairs available this is an exact
        // answer; otherwise widen the space with a fresh direction.
        if (processed >= k) {
          invariant = true;
          break;
        }
        DenseVector fresh = random_unit(n, rng);
        orthogonalize(fresh, basis, processed, coeffs);
        const double fn = local::norm2(fresh);
        local::scale(1.0 / fn, fresh);
        basis.push_back(std::move(fresh));
        t.at(processed, j) = beta;
        t.at(j, processed) = beta;
      } else {
        local::scale(1.0 / beta, w);
        basis.push_back(std::move(w));
        t.at(processed, j) = beta;
        t.at(j, processed) = beta;
      }
    }

    const int s = processed;
    const double beta_last = invariant ? 0.0 : t(s, s - 1);
    RitzSolve ritz = ritz_pairs(t, s, k, beta_last);
    best = ritz;
    have_best = true;
    for (double v : ritz.values) opnorm_est = std::max(opnorm_est, std::fabs(v));

    bool bounds_ok = true;
    for (int i = 0; i < k; ++i) {
      if (ritz.bounds[i] > tol * std::max(std::fabs(ritz.values[i]), opnorm_est)) {
        bounds_ok = false;
        break;
      }
    }

    if (bounds_ok) {
      DenseMatrix w = build_vectors(ritz, s);
      // Verify against the operator itself, not just the Krylov identity.
      DenseVector residuals(k);
      bool true_ok = true;
      for (int col = 0; col < k; ++col) {
        DenseVector wc = w.column(col);
        DenseVector r = op.apply(wc);
        ++matvecs;
        local::axpy(-ritz.values[col], wc, r);
        residuals[col] = local::norm2(r);
        if (residuals[col] > tol * std::max(std::fabs(ritz.values[col]), opnorm_est)) {
          true_ok = false;
        }
      }
      if (true_ok) {
        EigenPairs out;
        out.values = DenseVector(k);
        for (int i = 0; i < k; ++i) out.values[i] = ritz.values[i];
        out.vectors = std::move(w);
        out.residuals = std::move(residuals);
        out.restarts = restarts;
        out.matvecs = matvecs;
        return out;
      }
    }

    if (++restarts > config.max_restarts) {
      std::string detail;
      for (int i = 0; i < k && have_best; ++i) {
        detail += (i ? ", " : "") + std::to_string(best.bounds[i]);
      }
      throw ConvergenceError("lanczos did not converge after " +
                             std::to_string(config.max_restarts) +
                             " restarts; residual bounds [" + detail + "]");
    }

    // Thick restart: the k wanted Ritz vectors plus the residual direction.
    DenseMatrix kept = build_vectors(ritz, s);
    DenseVector boundary = invariant ? random_unit(n, rng) : basis[s];
    std::vector<DenseVector> next;
    next.reserve(static_cast<std::size_t>(k) + 1);
    for (int col = 0; col < k; ++col) next.push_back(kept.column(col));
    next.push_back(std::move(boundary));
    // Re-orthonormalize to keep the basis clean across many cycles.
    for (std::size_t i = 0; i < next.size(); ++i) {
      DenseVector& v = next[i];
      orthogonalize(v, next, static_cast<int>(i), coeffs);
      const double nrm = local::norm2(v);
      if (nrm <= 1e-12) {
        v = random_unit(n, rng);
        orthogonalize(v, next, static_cast<int>(i), coeffs);
        local::scale(1.0 / local::norm2(v), v);
      } else {
        local::scale(1.0 / nrm, v);
      }
    }
    basis = std::move(next);
    t = DenseMatrix(m + 1, m + 1);
    for (int i = 0; i < k; ++i) t.at(i, i) = ritz.values[i];
    processed = k;
  }
}

}  // namespace parlin::svd
