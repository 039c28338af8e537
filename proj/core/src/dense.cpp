#include "parlin/local/dense.hpp"

#include <stdexcept>
#include <string>

namespace parlin::local {

DenseVector::DenseVector(int size) {
  if (size < 0) throw std::invalid_argument("vector size must be >= 0");
  values_.assign(static_cast<std::size_t>(size), 0.0);
}

DenseMatrix::DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("matrix dimensions must be >= 0");
  values_.assign(static_cast<std::size_t>(rows) * cols, 0.0);
}

DenseMatrix::DenseMatrix(int rows, int cols, std::vector<double> values, bool transposed)
    : rows_(rows), cols_(cols), transposed_(transposed), values_(std::move(values)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("matrix dimensions must be >= 0");
  if (values_.size() != static_cast<std::size_t>(rows) * cols) {
    throw std::invalid_argument("matrix value buffer has " + std::to_string(values_.size()) +
                                " entries, expected " + std::to_string(rows) + "x" +
                                std::to_string(cols));
  }
}

DenseMatrix DenseMatrix::identity(int n) {
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
  DenseMatrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) {
      throw std::invalid_argument("ragged row list");
    }
    int j = 0;
    for (double v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

DenseVector DenseMatrix::column(int j) const {
  DenseVector v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

DenseVector DenseMatrix::row(int i) const {
  DenseVector v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

double dot(const DenseVector& a, const DenseVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("dot: sizes " + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
  }
  double s = 0.0;
  for (int i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(const DenseVector& a) { return std::sqrt(dot(a, a)); }

void axpy(double alpha, const DenseVector& x, DenseVector& y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("axpy: sizes " + std::to_string(x.size()) + " vs " +
                                std::to_string(y.size()));
  }
  for (int i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

void scale(double alpha, DenseVector& x) {
  for (int i = 0; i < x.size(); ++i) x[i] *= alpha;
}

DenseVector add(const DenseVector& a, const DenseVector& b) {
  DenseVector out = a;
  axpy(1.0, b, out);
  return out;
}

DenseVector sub(const DenseVector& a, const DenseVector& b) {
  DenseVector out = a;
  axpy(-1.0, b, out);
  return out;
}

DenseVector scaled(double alpha, const DenseVector& a) {
  DenseVector out = a;
  scale(alpha, out);
  return out;
}

DenseVector affine_combination(const DenseVector& a, const DenseVector& b, double t) {
  if (a.size() != b.size()) throw std::invalid_argument("affine_combination: size mismatch");
  DenseVector out(a.size());
  for (int i = 0; i < a.size(); ++i) out[i] = (1.0 - t) * a[i] + t * b[i];
  return out;
}

double max_abs(const DenseVector& a) {
  double m = 0.0;
  for (int i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i]));
  return m;
}

bool all_finite(const DenseVector& a) {
  for (int i = 0; i < a.size(); ++i) {
    if (!std::isfinite(a[i])) return false;
  }
  return true;
}

}  // namespace parlin::local
