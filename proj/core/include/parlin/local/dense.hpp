#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace parlin::local {

/// Dense float64 vector.
class DenseVector {
 public:
  DenseVector() = default;
  explicit DenseVector(int size);
  explicit DenseVector(std::vector<double> values) : values_(std::move(values)) {}
  DenseVector(std::initializer_list<double> values) : values_(values) {}

  int size() const { return static_cast<int>(values_.size()); }
  double operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return values_[static_cast<std::size_t>(i)]; }

  const std::vector<double>& values() const { return values_; }
  double* data() { return values_.data(); }
  const double* data() const { return values_.data(); }

  std::span<const double> span() const { return values_; }

 private:
  std::vector<double> values_;
};

/// Dense float64 matrix, column-major, with a lazy-transpose flag: num_rows /
/// num_cols are the logical dimensions, and when transposed() the buffer
/// holds the untransposed data (so reads go through a swapped index map).
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols);  // zeros
  DenseMatrix(int rows, int cols, std::vector<double> values, bool transposed = false);

  static DenseMatrix identity(int n);
  /// Builds from row-major nested lists; test and example convenience.
  static DenseMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

  int num_rows() const { return rows_; }
  int num_cols() const { return cols_; }
  bool transposed() const { return transposed_; }

  double operator()(int i, int j) const {
    return transposed_ ? values_[static_cast<std::size_t>(j) + static_cast<std::size_t>(i) * cols_]
                       : values_[static_cast<std::size_t>(i) + static_cast<std::size_t>(j) * rows_];
  }
  double& at(int i, int j) {
    return transposed_ ? values_[static_cast<std::size_t>(j) + static_cast<std::size_t>(i) * cols_]
                       : values_[static_cast<std::size_t>(i) + static_cast<std::size_t>(j) * rows_];
  }

  /// Logical transpose; the buffer is reused as-is.
  DenseMatrix transpose() const { return DenseMatrix(cols_, rows_, values_, !transposed_); }

  const std::vector<double>& values() const { return values_; }
  double* data() { return values_.data(); }
  const double* data() const { return values_.data(); }

  DenseVector column(int j) const;
  DenseVector row(int i) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  bool transposed_ = false;
  std::vector<double> values_;
};

// Driver-local vector kernels used throughout the solvers.
double dot(const DenseVector& a, const DenseVector& b);
double norm2(const DenseVector& a);
void axpy(double alpha, const DenseVector& x, DenseVector& y);  // y += alpha x
void scale(double alpha, DenseVector& x);
DenseVector add(const DenseVector& a, const DenseVector& b);
DenseVector sub(const DenseVector& a, const DenseVector& b);
DenseVector scaled(double alpha, const DenseVector& a);
/// (1 - t) * a + t * b
DenseVector affine_combination(const DenseVector& a, const DenseVector& b, double t);
double max_abs(const DenseVector& a);
bool all_finite(const DenseVector& a);

}  // namespace parlin::local
