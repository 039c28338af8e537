#include "parlin/dist/row_matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace parlin::dist {

using local::DenseMatrix;
using local::DenseVector;
using local::Vector;

RowMatrix::RowMatrix(engine::PartitionedDataset<Vector> rows) : rows_(std::move(rows)) {}

long RowMatrix::num_rows() const {
  if (num_rows_ < 0) num_rows_ = engine::count(rows_);
  return num_rows_;
}

int RowMatrix::num_cols() const {
  if (num_cols_ < 0) {
    num_cols_ = 0;
    for (int p = 0; p < rows_.num_partitions() && num_cols_ == 0; ++p) {
      if (!rows_.partition(p).empty()) num_cols_ = rows_.partition(p).front().size();
    }
  }
  return num_cols_;
}

namespace {

// Packed upper triangle, column-major: (i, j) with i <= j lives at
// j(j+1)/2 + i.
struct GramAccumulator {
  std::vector<double> tri;
  long rows_seen = 0;
};

void fold_row_into_gram(GramAccumulator& acc, const Vector& row, int n) {
  if (row.size() != n) {
    throw DataError("row " + std::to_string(acc.rows_seen) + " has length " +
                    std::to_string(row.size()) + ", expected " + std::to_string(n));
  }
  if (!row.finite()) {
    throw DataError("non-finite value in row " + std::to_string(acc.rows_seen));
  }
  if (row.is_sparse()) {
    const auto& s = row.sparse();
    for (int b = 0; b < s.nnz(); ++b) {
      const int j = s.indices()[b];
      const double vj = s.values()[b];
      const std::size_t base = static_cast<std::size_t>(j) * (j + 1) / 2;
      for (int a = 0; a <= b; ++a) {
        acc.tri[base + s.indices()[a]] += s.values()[a] * vj;
      }
    }
  } else {
    const auto& d = row.dense();
    for (int j = 0; j < n; ++j) {
      const double vj = d[j];
      if (vj == 0.0) continue;
      const std::size_t base = static_cast<std::size_t>(j) * (j + 1) / 2;
      for (int i = 0; i <= j; ++i) acc.tri[base + i] += d[i] * vj;
    }
  }
  ++acc.rows_seen;
}

}  // namespace

DenseMatrix RowMatrix::compute_gramian(int gram_cap) const {
  const int n = num_cols();
  if (n > gram_cap) {
    throw UnsupportedShapeError("gramian needs " + std::to_string(n) +
                                " columns but the cap is " + std::to_string(gram_cap));
  }
  GramAccumulator zero;
  zero.tri.assign(static_cast<std::size_t>(n) * (n + 1) / 2, 0.0);
  GramAccumulator total = engine::aggregate(
      rows_, zero, [n](GramAccumulator& acc, const Vector& row) { fold_row_into_gram(acc, row, n); },
      [](GramAccumulator& lhs, const GramAccumulator& rhs) {
        for (std::size_t k = 0; k < lhs.tri.size(); ++k) lhs.tri[k] += rhs.tri[k];
        lhs.rows_seen += rhs.rows_seen;
      });

  DenseMatrix g(n, n);
  for (int j = 0; j < n; ++j) {
    const std::size_t base = static_cast<std::size_t>(j) * (j + 1) / 2;
    for (int i = 0; i <= j; ++i) {
      const double v = total.tri[base + i];
      g.at(i, j) = v;
      g.at(j, i) = v;
    }
  }
  return g;
}

RowMatrix RowMatrix::multiply_by_local(const DenseMatrix& b) const {
  const int n = num_cols();
  if (b.num_rows() != n) {
    throw std::invalid_argument("multiply_by_local: matrix has " + std::to_string(n) +
                                " columns, operand is " + std::to_string(b.num_rows()) + "x" +
                                std::to_string(b.num_cols()));
  }
  auto bb = engine::broadcast(b);
  auto rows = engine::map_partitions(rows_, [bb](const std::vector<Vector>& part) {
    const DenseMatrix& m = bb.value();
    std::vector<Vector> out;
    out.reserve(part.size());
    for (const Vector& row : part) {
      DenseVector r(m.num_cols());
      row.for_each_stored([&](int l, double v) {
        if (v == 0.0) return;
        for (int j = 0; j < m.num_cols(); ++j) r[j] += v * m(l, j);
      });
      out.emplace_back(std::move(r));
    }
    return out;
  });
  return RowMatrix(std::move(rows));
}

namespace {

// Upper Cholesky factor of a symmetric positive definite matrix.
DenseMatrix cholesky_upper(const DenseMatrix& g) {
  const int n = g.num_rows();
  double max_diag = 0.0;
  for (int i = 0; i < n; ++i) max_diag = std::max(max_diag, std::fabs(g(i, i)));
  const double breakdown = 1e-13 * std::max(max_diag, 1e-300);

  DenseMatrix r(n, n);
  for (int j = 0; j < n; ++j) {
    double d = g(j, j);
    for (int l = 0; l < j; ++l) d -= r(l, j) * r(l, j);
    if (!(d > breakdown)) {
      throw RankDeficiencyError("gramian is not positive definite at column " +
                                std::to_string(j) + " (pivot " + std::to_string(d) + ")");
    }
    const double rjj = std::sqrt(d);
    r.at(j, j) = rjj;
    for (int i = j + 1; i < n; ++i) {
      double s = g(j, i);
      for (int l = 0; l < j; ++l) s -= r(l, j) * r(l, i);
      r.at(j, i) = s / rjj;
    }
  }
  return r;
}

DenseMatrix invert_upper_triangular(const DenseMatrix& r) {
  const int n = r.num_rows();
  DenseMatrix inv(n, n);
  for (int j = 0; j < n; ++j) {
    inv.at(j, j) = 1.0 / r(j, j);
    for (int i = j - 1; i >= 0; --i) {
      double s = 0.0;
      for (int l = i + 1; l <= j; ++l) s += r(i, l) * inv(l, j);
      inv.at(i, j) = -s / r(i, i);
    }
  }
  return inv;
}

}  // namespace

QRResult RowMatrix::tall_skinny_qr(int gram_cap) const {
  const DenseMatrix g = compute_gramian(gram_cap);
  const DenseMatrix r = cholesky_upper(g);
  const DenseMatrix r_inv = invert_upper_triangular(r);
  QRResult out;
  out.q = std::make_shared<RowMatrix>(multiply_by_local(r_inv));
  out.r = r;
  return out;
}

}  // namespace parlin::dist
