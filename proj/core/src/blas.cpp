#include "parlin/local/blas.hpp"

#include <stdexcept>
#include <string>

namespace parlin::local {

namespace {

std::string shape(const DenseMatrix& m) {
  return std::to_string(m.num_rows()) + "x" + std::to_string(m.num_cols());
}

}  // namespace

DenseMatrix gemm(double alpha, const DenseMatrix& a, const DenseMatrix& b, double beta,
                 const DenseMatrix& c) {
  const int m = a.num_rows();
  const int k = a.num_cols();
  const int n = b.num_cols();
  if (b.num_rows() != k) {
    throw std::invalid_argument("gemm: inner dimensions disagree, A is " + shape(a) +
                                ", B is " + shape(b));
  }
  if (c.num_rows() != m || c.num_cols() != n) {
    throw std::invalid_argument("gemm: C is " + shape(c) + ", expected " + std::to_string(m) +
                                "x" + std::to_string(n));
  }

  DenseMatrix out(m, n);
  if (beta != 0.0) {
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < m; ++i) out.at(i, j) = beta * c(i, j);
    }
  }
  if (alpha == 0.0) return out;

  if (!a.transposed() && !b.transposed()) {
    // Plain column-major case: accumulate columns of A scaled by B entries.
    const double* pa = a.data();
    const double* pb = b.data();
    double* po = out.data();
    for (int j = 0; j < n; ++j) {
      double* oc = po + static_cast<std::size_t>(j) * m;
      const double* bc = pb + static_cast<std::size_t>(j) * k;
      for (int l = 0; l < k; ++l) {
        const double blj = alpha * bc[l];
        if (blj == 0.0) continue;
        const double* ac = pa + static_cast<std::size_t>(l) * m;
        for (int i = 0; i < m; ++i) oc[i] += blj * ac[i];
      }
    }
  } else {
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < m; ++i) {
        double s = 0.0;
        for (int l = 0; l < k; ++l) s += a(i, l) * b(l, j);
        out.at(i, j) += alpha * s;
      }
    }
  }
  return out;
}

DenseVector gemv(double alpha, const DenseMatrix& a, const DenseVector& x, double beta,
                 const DenseVector& y) {
  const int m = a.num_rows();
  const int k = a.num_cols();
  if (x.size() != k) {
    throw std::invalid_argument("gemv: A is " + shape(a) + ", x has size " +
                                std::to_string(x.size()));
  }
  if (y.size() != m) {
    throw std::invalid_argument("gemv: y has size " + std::to_string(y.size()) + ", expected " +
                                std::to_string(m));
  }
  DenseVector out(m);
  if (beta != 0.0) {
    for (int i = 0; i < m; ++i) out[i] = beta * y[i];
  }
  if (alpha == 0.0) return out;
  if (!a.transposed()) {
    const double* pa = a.data();
    for (int l = 0; l < k; ++l) {
      const double xl = alpha * x[l];
      if (xl == 0.0) continue;
      const double* ac = pa + static_cast<std::size_t>(l) * m;
      for (int i = 0; i < m; ++i) out[i] += xl * ac[i];
    }
  } else {
    for (int i = 0; i < m; ++i) {
      double s = 0.0;
      for (int l = 0; l < k; ++l) s += a(i, l) * x[l];
      out[i] += alpha * s;
    }
  }
  return out;
}

DenseMatrix spmm(const SparseMatrix& a, const DenseMatrix& b, bool transpose_a) {
  const int m = transpose_a ? a.num_cols() : a.num_rows();
  const int k = transpose_a ? a.num_rows() : a.num_cols();
  const int n = b.num_cols();
  if (b.num_rows() != k) {
    throw std::invalid_argument("spmm: op(A) is " + std::to_string(m) + "x" + std::to_string(k) +
                                ", B is " + shape(b));
  }
  DenseMatrix out(m, n);
  const auto& ptrs = a.col_ptrs();
  const auto& rows = a.row_indices();
  const auto& vals = a.values();
  if (!transpose_a) {
    for (int j = 0; j < n; ++j) {
      for (int c = 0; c < a.num_cols(); ++c) {
        const double bcj = b(c, j);
        if (bcj == 0.0) continue;
        for (int p = ptrs[c]; p < ptrs[c + 1]; ++p) {
          out.at(rows[p], j) += vals[p] * bcj;
        }
      }
    }
  } else {
    // Column c of A becomes row c of op(A): a plain per-column dot product.
    for (int j = 0; j < n; ++j) {
      for (int c = 0; c < a.num_cols(); ++c) {
        double s = 0.0;
        for (int p = ptrs[c]; p < ptrs[c + 1]; ++p) s += vals[p] * b(rows[p], j);
        out.at(c, j) = s;
      }
    }
  }
  return out;
}

DenseVector spmv(const SparseMatrix& a, const DenseVector& x, bool transpose_a) {
  const int m = transpose_a ? a.num_cols() : a.num_rows();
  const int k = transpose_a ? a.num_rows() : a.num_cols();
  if (x.size() != k) {
    throw std::invalid_argument("spmv: op(A) is " + std::to_string(m) + "x" + std::to_string(k) +
                                ", x has size " + std::to_string(x.size()));
  }
  DenseVector out(m);
  const auto& ptrs = a.col_ptrs();
  const auto& rows = a.row_indices();
  const auto& vals = a.values();
  if (!transpose_a) {
    for (int c = 0; c < a.num_cols(); ++c) {
      const double xc = x[c];
      if (xc == 0.0) continue;
      for (int p = ptrs[c]; p < ptrs[c + 1]; ++p) out[rows[p]] += vals[p] * xc;
    }
  } else {
    for (int c = 0; c < a.num_cols(); ++c) {
      double s = 0.0;
      for (int p = ptrs[c]; p < ptrs[c + 1]; ++p) s += vals[p] * x[rows[p]];
      out[c] = s;
    }
  }
  return out;
}

}  // namespace parlin::local
