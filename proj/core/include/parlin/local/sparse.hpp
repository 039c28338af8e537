#pragma once

#include <vector>

#include "parlin/local/dense.hpp"

namespace parlin::local {

/// Sparse float64 vector: two parallel arrays of strictly increasing 0-based
/// indices and their values. Duplicate indices are rejected at construction.
class SparseVector {
 public:
  SparseVector(int size, std::vector<int> indices, std::vector<double> values);

  int size() const { return size_; }
  int nnz() const { return static_cast<int>(indices_.size()); }
  const std::vector<int>& indices() const { return indices_; }
  const std::vector<double>& values() const { return values_; }

 private:
  int size_ = 0;
  std::vector<int> indices_;
  std::vector<double> values_;
};

/// Sparse float64 matrix in compressed column storage: col_ptrs has
/// num_cols + 1 nondecreasing offsets into the row_indices / values arrays,
/// with row indices strictly increasing within each column.
class SparseMatrix {
 public:
  SparseMatrix(int rows, int cols, std::vector<int> col_ptrs, std::vector<int> row_indices,
               std::vector<double> values);

  /// Builds CCS from unsorted (i, j, value) triples; duplicates are summed
  /// and exact zeros produced by the summation are kept.
  static SparseMatrix from_coo(int rows, int cols,
                               const std::vector<std::tuple<int, int, double>>& entries);

  int num_rows() const { return rows_; }
  int num_cols() const { return cols_; }
  int nnz() const { return static_cast<int>(values_.size()); }
  const std::vector<int>& col_ptrs() const { return col_ptrs_; }
  const std::vector<int>& row_indices() const { return row_indices_; }
  const std::vector<double>& values() const { return values_; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> col_ptrs_;
  std::vector<int> row_indices_;
  std::vector<double> values_;
};

// Conversions. to_sparse drops exact zeros only; round-trips through the
// sparse form reproduce the dense values exactly.
SparseVector to_sparse(const DenseVector& v);
DenseVector to_dense(const SparseVector& v);
SparseMatrix to_sparse(const DenseMatrix& m);
DenseMatrix to_dense(const SparseMatrix& m);

}  // namespace parlin::local
