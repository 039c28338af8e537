#include "parlin/dist/indexed_row_matrix.hpp"

namespace parlin::dist {

IndexedRowMatrix::IndexedRowMatrix(engine::PartitionedDataset<IndexedRow> rows)
    : rows_(std::move(rows)) {}

IndexedRowMatrix::IndexedRowMatrix(engine::PartitionedDataset<IndexedRow> rows, long num_rows,
                                   int num_cols)
    : rows_(std::move(rows)), num_rows_(num_rows), num_cols_(num_cols) {}

long IndexedRowMatrix::num_rows() const {
  if (num_rows_ < 0) {
    long max_index = engine::aggregate(
        rows_, long{-1},
        [](long& acc, const IndexedRow& r) { acc = std::max(acc, r.index); },
        [](long& lhs, const long& rhs) { lhs = std::max(lhs, rhs); });
    num_rows_ = max_index + 1;
  }
  return num_rows_;
}

int IndexedRowMatrix::num_cols() const {
  if (num_cols_ < 0) {
    num_cols_ = 0;
    for (int p = 0; p < rows_.num_partitions() && num_cols_ == 0; ++p) {
      if (!rows_.partition(p).empty()) num_cols_ = rows_.partition(p).front().vector.size();
    }
  }
  return num_cols_;
}

}  // namespace parlin::dist
