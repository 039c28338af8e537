#include "parlin/local/sparse.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

namespace parlin::local {

SparseVector::SparseVector(int size, std::vector<int> indices, std::vector<double> values)
    : size_(size), indices_(std::move(indices)), values_(std::move(values)) {
  if (size < 0) throw std::invalid_argument("vector size must be >= 0");
  if (indices_.size() != values_.size()) {
    throw std::invalid_argument("sparse vector: " + std::to_string(indices_.size()) +
                                " indices vs " + std::to_string(values_.size()) + " values");
  }
  int prev = -1;
  for (int idx : indices_) {
    if (idx <= prev) {
      throw std::invalid_argument("sparse vector indices must be strictly increasing");
    }
    if (idx < 0 || idx >= size_) {
      throw std::invalid_argument("sparse vector index " + std::to_string(idx) +
                                  " out of range for size " + std::to_string(size_));
    }
    prev = idx;
  }
}

SparseMatrix::SparseMatrix(int rows, int cols, std::vector<int> col_ptrs,
                           std::vector<int> row_indices, std::vector<double> values)
    : rows_(rows),
      cols_(cols),
      col_ptrs_(std::move(col_ptrs)),
      row_indices_(std::move(row_indices)),
      values_(std::move(values)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("matrix dimensions must be >= 0");
  if (col_ptrs_.size() != static_cast<std::size_t>(cols) + 1) {
    throw std::invalid_argument("col_ptrs must have num_cols + 1 entries");
  }
  if (col_ptrs_.front() != 0) throw std::invalid_argument("col_ptrs[0] must be 0");
  if (row_indices_.size() != values_.size() ||
      col_ptrs_.back() != static_cast<int>(values_.size())) {
    throw std::invalid_argument("col_ptrs[num_cols] must equal the number of stored values");
  }
  for (int j = 0; j < cols_; ++j) {
    if (col_ptrs_[j + 1] < col_ptrs_[j]) {
      throw std::invalid_argument("col_ptrs must be nondecreasing");
    }
    int prev = -1;
    for (int k = col_ptrs_[j]; k < col_ptrs_[j + 1]; ++k) {
      const int r = row_indices_[k];
      if (r <= prev) {
        throw std::invalid_argument("row indices must be strictly increasing within column " +
                                    std::to_string(j));
      }
      if (r < 0 || r >= rows_) {
        throw std::invalid_argument("row index " + std::to_string(r) +
                                    " out of range for " + std::to_string(rows_) + " rows");
      }
      prev = r;
    }
  }
}

SparseMatrix SparseMatrix::from_coo(int rows, int cols,
                                    const std::vector<std::tuple<int, int, double>>& entries) {
  // (col, row) -> summed value; the map ordering gives sorted CCS directly.
  std::map<std::pair<int, int>, double> cells;
  for (const auto& [i, j, v] : entries) {
    if (i < 0 || i >= rows || j < 0 || j >= cols) {
      throw std::invalid_argument("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                  ") outside " + std::to_string(rows) + "x" +
                                  std::to_string(cols));
    }
    cells[{j, i}] += v;
  }
  std::vector<int> col_ptrs(static_cast<std::size_t>(cols) + 1, 0);
  std::vector<int> row_indices;
  std::vector<double> values;
  row_indices.reserve(cells.size());
  values.reserve(cells.size());
  for (const auto& [key, v] : cells) {
    ++col_ptrs[key.first + 1];
    row_indices.push_back(key.second);
    values.push_back(v);
  }
  for (int j = 0; j < cols; ++j) col_ptrs[j + 1] += col_ptrs[j];
  return SparseMatrix(rows, cols, std::move(col_ptrs), std::move(row_indices), std::move(values));
}

SparseVector to_sparse(const DenseVector& v) {
  std::vector<int> indices;
  std::vector<double> values;
  for (int i = 0; i < v.size(); ++i) {
    if (v[i] != 0.0) {
      indices.push_back(i);
      values.push_back(v[i]);
    }
  }
  return SparseVector(v.size(), std::move(indices), std::move(values));
}

DenseVector to_dense(const SparseVector& v) {
  DenseVector out(v.size());
  for (int k = 0; k < v.nnz(); ++k) out[v.indices()[k]] = v.values()[k];
  return out;
}

SparseMatrix to_sparse(const DenseMatrix& m) {
  std::vector<int> col_ptrs(static_cast<std::size_t>(m.num_cols()) + 1, 0);
  std::vector<int> row_indices;
  std::vector<double> values;
  for (int j = 0; j < m.num_cols(); ++j) {
    for (int i = 0; i < m.num_rows(); ++i) {
      const double v = m(i, j);
      if (v != 0.0) {
        row_indices.push_back(i);
        values.push_back(v);
      }
    }
    col_ptrs[j + 1] = static_cast<int>(values.size());
  }
  return SparseMatrix(m.num_rows(), m.num_cols(), std::move(col_ptrs), std::move(row_indices),
                      std::move(values));
}

DenseMatrix to_dense(const SparseMatrix& m) {
  DenseMatrix out(m.num_rows(), m.num_cols());
  for (int j = 0; j < m.num_cols(); ++j) {
    for (int k = m.col_ptrs()[j]; k < m.col_ptrs()[j + 1]; ++k) {
      out.at(m.row_indices()[k], j) = m.values()[k];
    }
  }
  return out;
}

}  // namespace parlin::local
