#include "parlin/svd/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "parlin/errors.hpp"

namespace parlin::svd {

using local::DenseMatrix;
using local::DenseVector;

namespace {

double off_diagonal_norm(const DenseMatrix& a) {
  const int n = a.num_rows();
  double s = 0.0;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (i != j) s += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(s);
}

double frobenius(const DenseMatrix& a) {
  double s = 0.0;
  for (double v : a.values()) s += v * v;
  return std::sqrt(s);
}

}  // namespace

EigenDecomposition jacobi_eigen(const DenseMatrix& symmetric) {
  const int n = symmetric.num_rows();
  if (symmetric.num_cols() != n) {
    throw std::invalid_argument("jacobi_eigen needs a square matrix");
  }

  DenseMatrix a(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) a.at(i, j) = symmetric(i, j);
  }
  DenseMatrix v = DenseMatrix::identity(n);

  const double tol = 1e-12 * std::max(frobenius(a), 1e-300);
  const int max_sweeps = 100;

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    const double off = off_diagonal_norm(a);
    if (off <= tol) break;
    if (sweep == max_sweeps - 1) {
      throw ConvergenceError("jacobi_eigen did not converge in " + std::to_string(max_sweeps) +
                             " sweeps (off-diagonal norm " + std::to_string(off) + ")");
    }
    // Rotations small relative to the remaining off-norm are skipped within
    // a sweep; they get handled once the larger ones have shrunk.
    const double skip = off / (static_cast<double>(n) * n);
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::fabs(apq) <= skip) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // A <- J^T A J on rows/columns p and q.
        for (int i = 0; i < n; ++i) {
          const double aip = a(i, p);
          const double aiq = a(i, q);
          a.at(i, p) = c * aip - s * aiq;
          a.at(i, q) = s * aip + c * aiq;
        }
        for (int i = 0; i < n; ++i) {
          const double api = a(p, i);
          const double aqi = a(q, i);
          a.at(p, i) = c * api - s * aqi;
          a.at(q, i) = s * api + c * aqi;
        }
        for (int i = 0; i < n; ++i) {
          const double vip = v(i, p);
          const double viq = v(i, q);
          v.at(i, p) = c * vip - s * viq;
          v.at(i, q) = s * vip + c * viq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return a(x, x) > a(y, y); });

  EigenDecomposition out{DenseVector(n), DenseMatrix(n, n)};
  for (int k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (int i = 0; i < n; ++i) out.vectors.at(i, k) = v(i, order[k]);
  }
  return out;
}

}  // namespace parlin::svd
