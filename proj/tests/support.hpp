#pragma once

// Test oracles. Everything here is deliberately written as plain loops and
// textbook algorithms, independent of the kernels and solvers under test.

#include <algorithm>
#include <cmath>
#include <vector>

#include "parlin/dist/row_matrix.hpp"
#include "parlin/local/blas.hpp"
#include "parlin/local/vector.hpp"
#include "parlin/util/rng.hpp"

namespace testsupport {

using parlin::Rng;
using parlin::local::DenseMatrix;
using parlin::local::DenseVector;
using parlin::local::SparseMatrix;
using parlin::local::Vector;

// ---------------------------------------------------------------------------
// Random builders

inline DenseMatrix random_dense(int rows, int cols, Rng& rng, double scale = 1.0) {
  std::vector<double> values(static_cast<std::size_t>(rows) * cols);
  for (double& v : values) v = scale * rng.uniform(-1.0, 1.0);
  return DenseMatrix(rows, cols, std::move(values));
}

inline DenseVector random_vector(int n, Rng& rng, double scale = 1.0) {
  DenseVector v(n);
  for (int i = 0; i < n; ++i) v[i] = scale * rng.uniform(-1.0, 1.0);
  return v;
}

inline SparseMatrix random_sparse(int rows, int cols, double density, Rng& rng) {
  std::vector<int> col_ptrs(static_cast<std::size_t>(cols) + 1, 0);
  std::vector<int> row_indices;
  std::vector<double> values;
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      if (rng.uniform() < density) {
        row_indices.push_back(i);
        values.push_back(rng.uniform(-1.0, 1.0));
      }
    }
    col_ptrs[j + 1] = static_cast<int>(values.size());
  }
  return SparseMatrix(rows, cols, std::move(col_ptrs), std::move(row_indices),
                      std::move(values));
}

/// Row matrix over a dense local matrix; rows are randomly dense or sparse
/// when mixed_storage is set.
inline parlin::dist::RowMatrix to_row_matrix(const DenseMatrix& a, int partitions, Rng& rng,
                                             bool mixed_storage = false) {
  std::vector<Vector> rows;
  rows.reserve(a.num_rows());
  for (int i = 0; i < a.num_rows(); ++i) {
    DenseVector row = a.row(i);
    if (mixed_storage && rng.uniform() < 0.5) {
      rows.emplace_back(parlin::local::to_sparse(row));
    } else {
      rows.emplace_back(std::move(row));
    }
  }
  return parlin::dist::RowMatrix(parlin::engine::from_records(std::move(rows), partitions));
}

inline DenseMatrix collect_dense(const parlin::dist::RowMatrix& m) {
  const auto rows = parlin::engine::collect(m.rows());
  DenseMatrix out(static_cast<int>(rows.size()), m.num_cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].for_each_stored([&](int j, double v) { out.at(static_cast<int>(i), j) = v; });
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dense reference kernels (plain triple loops)

inline DenseMatrix naive_gemm(double alpha, const DenseMatrix& a, const DenseMatrix& b,
                              double beta, const DenseMatrix& c) {
  DenseMatrix out(a.num_rows(), b.num_cols());
  for (int i = 0; i < a.num_rows(); ++i) {
    for (int j = 0; j < b.num_cols(); ++j) {
      double s = 0.0;
      for (int l = 0; l < a.num_cols(); ++l) s += a(i, l) * b(l, j);
      out.at(i, j) = alpha * s + beta * c(i, j);
    }
  }
  return out;
}

inline DenseVector naive_gemv(double alpha, const DenseMatrix& a, const DenseVector& x,
                              double beta, const DenseVector& y) {
  DenseVector out(a.num_rows());
  for (int i = 0; i < a.num_rows(); ++i) {
    double s = 0.0;
    for (int l = 0; l < a.num_cols(); ++l) s += a(i, l) * x[l];
    out[i] = alpha * s + beta * y[i];
  }
  return out;
}

inline double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  double worst = 0.0;
  for (int j = 0; j < a.num_cols(); ++j) {
    for (int i = 0; i < a.num_rows(); ++i) worst = std::max(worst, std::fabs(a(i, j) - b(i, j)));
  }
  return worst;
}

inline double max_abs_diff(const DenseVector& a, const DenseVector& b) {
  double worst = 0.0;
  for (int i = 0; i < a.size(); ++i) worst = std::max(worst, std::fabs(a[i] - b[i]));
  return worst;
}

inline double frobenius(const DenseMatrix& a) {
  double s = 0.0;
  for (double v : a.values()) s += v * v;
  return std::sqrt(s);
}

inline double rel_frobenius_diff(const DenseMatrix& a, const DenseMatrix& b) {
  double diff = 0.0;
  for (int j = 0; j < a.num_cols(); ++j) {
    for (int i = 0; i < a.num_rows(); ++i) {
      const double d = a(i, j) - b(i, j);
      diff += d * d;
    }
  }
  return std::sqrt(diff) / std::max(frobenius(a), 1e-300);
}

/// max |(X^T X)_ij - I_ij|
inline double orthonormality_defect(const DenseMatrix& x) {
  double worst = 0.0;
  for (int a = 0; a < x.num_cols(); ++a) {
    for (int b = 0; b < x.num_cols(); ++b) {
      double s = 0.0;
      for (int i = 0; i < x.num_rows(); ++i) s += x(i, a) * x(i, b);
      worst = std::max(worst, std::fabs(s - (a == b ? 1.0 : 0.0)));
    }
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Linear solves (Gaussian elimination with partial pivoting)

/// Solves A x = b; returns false when the pivot collapses (singular system).
inline bool solve_linear(DenseMatrix a, DenseVector b, DenseVector& x) {
  const int n = a.num_rows();
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::fabs(a(r, col)) > std::fabs(a(pivot, col))) pivot = r;
    }
    if (std::fabs(a(pivot, col)) < 1e-12) return false;
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(a.at(col, c), a.at(pivot, c));
      std::swap(b[col], b[pivot]);
    }
    for (int r = col + 1; r < n; ++r) {
      const double f = a(r, col) / a(col, col);
      if (f == 0.0) continue;
      for (int c = col; c < n; ++c) a.at(r, c) -= f * a(col, c);
      b[r] -= f * b[col];
    }
  }
  x = DenseVector(n);
  for (int r = n - 1; r >= 0; --r) {
    double s = b[r];
    for (int c = r + 1; c < n; ++c) s -= a(r, c) * x[c];
    x[r] = s / a(r, r);
  }
  return true;
}

/// Least squares through the normal equations A^T A x = A^T b.
inline DenseVector normal_equations(const DenseMatrix& a, const DenseVector& b) {
  const int n = a.num_cols();
  DenseMatrix ata(n, n);
  DenseVector atb(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int r = 0; r < a.num_rows(); ++r) s += a(r, i) * a(r, j);
      ata.at(i, j) = s;
    }
    double s = 0.0;
    for (int r = 0; r < a.num_rows(); ++r) s += a(r, i) * b[r];
    atb[i] = s;
  }
  DenseVector x;
  solve_linear(ata, atb, x);
  return x;
}

// ---------------------------------------------------------------------------
// LASSO coordinate descent oracle:
// minimize 0.5 ||Ax - b||^2 + lambda ||x||_1 by cyclic soft-threshold updates.

inline DenseVector coordinate_descent_lasso(const DenseMatrix& a, const DenseVector& b,
                                            double lambda, double tol = 1e-12,
                                            int max_sweeps = 200000) {
  const int n = a.num_cols();
  const int m = a.num_rows();
  DenseVector x(n);
  DenseVector residual = b;  // b - A x
  std::vector<double> col_sq(n);
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int i = 0; i < m; ++i) s += a(i, j) * a(i, j);
    col_sq[j] = s;
  }
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double max_change = 0.0;
    for (int j = 0; j < n; ++j) {
      if (col_sq[j] == 0.0) continue;
      double rho = 0.0;
      for (int i = 0; i < m; ++i) rho += a(i, j) * residual[i];
      rho += col_sq[j] * x[j];
      double next;
      if (rho > lambda) {
        next = (rho - lambda) / col_sq[j];
      } else if (rho < -lambda) {
        next = (rho + lambda) / col_sq[j];
      } else {
        next = 0.0;
      }
      const double delta = next - x[j];
      if (delta != 0.0) {
        for (int i = 0; i < m; ++i) residual[i] -= delta * a(i, j);
        x[j] = next;
        max_change = std::max(max_change, std::fabs(delta));
      }
    }
    if (max_change <= tol) break;
  }
  return x;
}

// ---------------------------------------------------------------------------
// Vertex enumeration oracle for min c^T x s.t. A x = b, x >= 0 with m < n:
// tries every basis of m columns and keeps the best feasible basic solution.

inline bool vertex_lp_optimum(const DenseMatrix& a, const DenseVector& b, const DenseVector& c,
                              double& best_value, DenseVector& best_x) {
  const int m = a.num_rows();
  const int n = a.num_cols();
  std::vector<int> cols(m);
  bool found = false;
  // Enumerate ascending column subsets of size m.
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i;
  for (;;) {
    DenseMatrix basis(m, m);
    for (int col = 0; col < m; ++col) {
      for (int row = 0; row < m; ++row) basis.at(row, col) = a(row, idx[col]);
    }
    DenseVector xb;
    if (solve_linear(basis, b, xb)) {
      bool feasible = true;
      for (int i = 0; i < m; ++i) feasible = feasible && xb[i] >= -1e-9;
      if (feasible) {
        DenseVector x(n);
        for (int i = 0; i < m; ++i) x[idx[i]] = std::max(xb[i], 0.0);
        const double value = parlin::local::dot(c, x);
        if (!found || value < best_value) {
          found = true;
          best_value = value;
          best_x = x;
        }
      }
    }
    // next combination
    int pos = m - 1;
    while (pos >= 0 && idx[pos] == n - m + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < m; ++i) idx[i] = idx[i - 1] + 1;
  }
  return found;
}

}  // namespace testsupport
