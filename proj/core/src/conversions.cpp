#include "parlin/dist/conversions.hpp"

#include <algorithm>
#include <numeric>

namespace parlin::dist {

using local::DenseMatrix;
using local::SparseVector;
using local::Vector;

IndexedRowMatrix to_indexed_row_matrix(const RowMatrix& m) {
  const auto sizes = engine::partition_sizes(m.rows());
  std::vector<long> offsets(sizes.size() + 1, 0);
  for (std::size_t p = 0; p < sizes.size(); ++p) {
    offsets[p + 1] = offsets[p] + static_cast<long>(sizes[p]);
  }
  auto rows = engine::map_partitions_with_index(
      m.rows(), [offsets](int p, const std::vector<Vector>& part) {
        std::vector<IndexedRow> out;
        out.reserve(part.size());
        long index = offsets[p];
        for (const Vector& v : part) out.push_back(IndexedRow{index++, v});
        return out;
      });
  return IndexedRowMatrix(std::move(rows), offsets.back(), m.num_cols());
}

RowMatrix to_row_matrix(const IndexedRowMatrix& m) {
  auto rows = engine::map_partitions(m.rows(), [](const std::vector<IndexedRow>& part) {
    std::vector<Vector> out;
    out.reserve(part.size());
    for (const IndexedRow& r : part) out.push_back(r.vector);
    return out;
  });
  return RowMatrix(std::move(rows));
}

CoordinateMatrix to_coordinate_matrix(const IndexedRowMatrix& m) {
  auto entries = engine::map_partitions(m.rows(), [](const std::vector<IndexedRow>& part) {
    std::vector<MatrixEntry> out;
    for (const IndexedRow& r : part) {
      r.vector.for_each_stored([&](int j, double v) {
        if (v != 0.0) out.push_back(MatrixEntry{r.index, j, v});
      });
    }
    return out;
  });
  return CoordinateMatrix(std::move(entries), m.num_rows(), m.num_cols());
}

IndexedRowMatrix to_indexed_row_matrix(const CoordinateMatrix& m) {
  const long cols = m.num_cols();
  if (cols > std::numeric_limits<int>::max()) {
    throw UnsupportedShapeError("column count " + std::to_string(cols) +
                                " does not fit an int; sparse rows cannot be built");
  }
  const int n = static_cast<int>(cols);
  auto grouped = engine::group_by_key(
      m.entries(), [](const MatrixEntry& e) { return e.i; }, m.entries().num_partitions());
  auto rows = engine::map_partitions(
      grouped, [n](const std::vector<std::pair<long, std::vector<MatrixEntry>>>& part) {
        std::vector<IndexedRow> out;
        out.reserve(part.size());
        for (const auto& [row_index, group] : part) {
          std::vector<MatrixEntry> entries = group;
          std::stable_sort(entries.begin(), entries.end(),
                           [](const MatrixEntry& a, const MatrixEntry& b) { return a.j < b.j; });
          std::vector<int> indices;
          std::vector<double> values;
          for (const MatrixEntry& e : entries) {
            const int j = static_cast<int>(e.j);
            if (!indices.empty() && indices.back() == j) {
              values.back() += e.value;  // duplicates summed in dataset order
            } else {
              indices.push_back(j);
              values.push_back(e.value);
            }
          }
          out.push_back(IndexedRow{row_index, SparseVector(n, std::move(indices), std::move(values))});
        }
        return out;
      });
  return IndexedRowMatrix(std::move(rows), m.num_rows(), n);
}

BlockMatrix to_block_matrix(const CoordinateMatrix& m, int rows_per_block, int cols_per_block) {
  if (rows_per_block < 1 || cols_per_block < 1) {
    throw std::invalid_argument("block dimensions must be >= 1");
  }
  const long num_rows = m.num_rows();
  const long num_cols = m.num_cols();
  const int grid_rows = static_cast<int>((num_rows + rows_per_block - 1) / rows_per_block);
  const int grid_cols = static_cast<int>((num_cols + cols_per_block - 1) / cols_per_block);

  auto grouped = engine::group_by_key(
      m.entries(),
      [rows_per_block, cols_per_block, num_rows, num_cols](const MatrixEntry& e) {
        if (e.i < 0 || e.i >= num_rows || e.j < 0 || e.j >= num_cols) {
          throw DataError("entry (" + std::to_string(e.i) + ", " + std::to_string(e.j) +
                          ") outside " + std::to_string(num_rows) + "x" +
                          std::to_string(num_cols));
        }
        const long brow = e.i / rows_per_block;
        const long bcol = e.j / cols_per_block;
        return (brow << 32) | static_cast<unsigned int>(bcol);
      },
      m.entries().num_partitions());

  auto blocks = engine::map_partitions(
      grouped,
      [=](const std::vector<std::pair<long, std::vector<MatrixEntry>>>& part) {
        std::vector<MatrixBlock> out;
        out.reserve(part.size());
        for (const auto& [key, group] : part) {
          const int brow = static_cast<int>(key >> 32);
          const int bcol = static_cast<int>(key & 0xffffffffL);
          const int r = brow < grid_rows - 1
                            ? rows_per_block
                            : static_cast<int>(num_rows - static_cast<long>(grid_rows - 1) *
                                                              rows_per_block);
          const int c = bcol < grid_cols - 1
                            ? cols_per_block
                            : static_cast<int>(num_cols - static_cast<long>(grid_cols - 1) *
                                                              cols_per_block);
          DenseMatrix block(r, c);
          for (const MatrixEntry& e : group) {
            block.at(static_cast<int>(e.i - static_cast<long>(brow) * rows_per_block),
                     static_cast<int>(e.j - static_cast<long>(bcol) * cols_per_block)) += e.value;
          }
          out.push_back(MatrixBlock{brow, bcol, std::move(block)});
        }
        return out;
      });
  return BlockMatrix(std::move(blocks), rows_per_block, cols_per_block, num_rows, num_cols);
}

CoordinateMatrix to_coordinate_matrix(const BlockMatrix& m) {
  const long rpb = m.rows_per_block();
  const long cpb = m.cols_per_block();
  auto entries = engine::map_partitions(m.blocks(), [rpb, cpb](const std::vector<MatrixBlock>& part) {
    std::vector<MatrixEntry> out;
    for (const MatrixBlock& b : part) {
      const long i0 = b.block_row * rpb;
      const long j0 = b.block_col * cpb;
      for (int j = 0; j < b.matrix.num_cols(); ++j) {
        for (int i = 0; i < b.matrix.num_rows(); ++i) {
          const double v = b.matrix(i, j);
          if (v != 0.0) out.push_back(MatrixEntry{i0 + i, j0 + j, v});
        }
      }
    }
    return out;
  });
  return CoordinateMatrix(std::move(entries), m.num_rows(), m.num_cols());
}

}  // namespace parlin::dist
