#include "parlin/dist/coordinate_matrix.hpp"

namespace parlin::dist {

CoordinateMatrix::CoordinateMatrix(engine::PartitionedDataset<MatrixEntry> entries)
    : entries_(std::move(entries)) {}

CoordinateMatrix::CoordinateMatrix(engine::PartitionedDataset<MatrixEntry> entries, long num_rows,
                                   long num_cols)
    : entries_(std::move(entries)), num_rows_(num_rows), num_cols_(num_cols) {}

void CoordinateMatrix::infer_dims() const {
  struct MaxIdx {
    long i = -1;
    long j = -1;
  };
  MaxIdx m = engine::aggregate(
      entries_, MaxIdx{},
      [](MaxIdx& acc, const MatrixEntry& e) {
        acc.i = std::max(acc.i, e.i);
        acc.j = std::max(acc.j, e.j);
      },
      [](MaxIdx& lhs, const MaxIdx& rhs) {
        lhs.i = std::max(lhs.i, rhs.i);
        lhs.j = std::max(lhs.j, rhs.j);
      });
  if (num_rows_ < 0) num_rows_ = m.i + 1;
  if (num_cols_ < 0) num_cols_ = m.j + 1;
}

long CoordinateMatrix::num_rows() const {
  if (num_rows_ < 0) infer_dims();
  return num_rows_;
}

long CoordinateMatrix::num_cols() const {
  if (num_cols_ < 0) infer_dims();
  return num_cols_;
}

}  // namespace parlin::dist
