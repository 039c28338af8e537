#pragma once

#include "parlin/local/dense.hpp"
#include "parlin/local/sparse.hpp"

namespace parlin::local {

/// alpha * A * B + beta * C. Transposition is carried by the operands'
/// transpose flags; C must already have the result shape. All accumulation
/// is float64 and deterministic.
DenseMatrix gemm(double alpha, const DenseMatrix& a, const DenseMatrix& b, double beta,
                 const DenseMatrix& c);

/// alpha * A * x + beta * y.
DenseVector gemv(double alpha, const DenseMatrix& a, const DenseVector& x, double beta,
                 const DenseVector& y);

/// Sparse * dense products with optional transposition of the sparse factor.
/// The CCS structure is traversed column by column.
DenseMatrix spmm(const SparseMatrix& a, const DenseMatrix& b, bool transpose_a);
DenseVector spmv(const SparseMatrix& a, const DenseVector& x, bool transpose_a);

}  // namespace parlin::local
