#include "parlin/dist/block_matrix.hpp"

#include <algorithm>
#include <stdexcept>

#include "parlin/local/blas.hpp"

namespace parlin::dist {

using local::DenseMatrix;

namespace {

long encode_key(int row, int col) {
  return (static_cast<long>(row) << 32) | static_cast<unsigned int>(col);
}

int grid_count(long total, int per_block) {
  return static_cast<int>((total + per_block - 1) / per_block);
}

std::string grid_descr(const BlockMatrix& m) {
  return std::to_string(m.num_rows()) + "x" + std::to_string(m.num_cols()) + " in " +
         std::to_string(m.rows_per_block()) + "x" + std::to_string(m.cols_per_block()) +
         " blocks";
}

}  // namespace

BlockMatrix::BlockMatrix(engine::PartitionedDataset<MatrixBlock> blocks, int rows_per_block,
                         int cols_per_block, long num_rows, long num_cols)
    : blocks_(std::move(blocks)),
      rows_per_block_(rows_per_block),
      cols_per_block_(cols_per_block),
      num_rows_(num_rows),
      num_cols_(num_cols) {
  if (rows_per_block < 1 || cols_per_block < 1) {
    throw std::invalid_argument("block dimensions must be >= 1");
  }
  if (num_rows < 0 || num_cols < 0) {
    throw std::invalid_argument("matrix dimensions must be >= 0");
  }
}

int BlockMatrix::block_row_count() const { return grid_count(num_rows_, rows_per_block_); }
int BlockMatrix::block_col_count() const { return grid_count(num_cols_, cols_per_block_); }

int BlockMatrix::expected_rows(int block_row) const {
  if (block_row < block_row_count() - 1) return rows_per_block_;
  return static_cast<int>(num_rows_ - static_cast<long>(block_row_count() - 1) * rows_per_block_);
}

int BlockMatrix::expected_cols(int block_col) const {
  if (block_col < block_col_count() - 1) return cols_per_block_;
  return static_cast<int>(num_cols_ - static_cast<long>(block_col_count() - 1) * cols_per_block_);
}

BlockMatrix BlockMatrix::add(const BlockMatrix& other) const {
  if (num_rows_ != other.num_rows_ || num_cols_ != other.num_cols_ ||
      rows_per_block_ != other.rows_per_block_ || cols_per_block_ != other.cols_per_block_) {
    throw std::invalid_argument("block add: incompatible layouts, " + grid_descr(*this) +
                                " vs " + grid_descr(other));
  }
  auto merged = engine::group_by_key(
      engine::concat(blocks_, other.blocks_),
      [](const MatrixBlock& b) { return encode_key(b.block_row, b.block_col); },
      std::max(blocks_.num_partitions(), other.blocks_.num_partitions()));
  auto summed = engine::map_partitions(
      merged, [](const std::vector<std::pair<long, std::vector<MatrixBlock>>>& part) {
        std::vector<MatrixBlock> out;
        out.reserve(part.size());
        for (const auto& [key, group] : part) {
          MatrixBlock block = group.front();
          for (std::size_t g = 1; g < group.size(); ++g) {
            const DenseMatrix& m = group[g].matrix;
            for (int j = 0; j < m.num_cols(); ++j) {
              for (int i = 0; i < m.num_rows(); ++i) block.matrix.at(i, j) += m(i, j);
            }
          }
          out.push_back(std::move(block));
        }
        return out;
      });
  return BlockMatrix(std::move(summed), rows_per_block_, cols_per_block_, num_rows_, num_cols_);
}

BlockMatrix BlockMatrix::multiply(const BlockMatrix& other) const {
  if (num_cols_ != other.num_rows_ || cols_per_block_ != other.rows_per_block_) {
    throw std::invalid_argument("block multiply: incompatible layouts, " + grid_descr(*this) +
                                " vs " + grid_descr(other));
  }
  struct Tagged {
    bool rhs = false;
    MatrixBlock block;
  };
  auto tag = [](const engine::PartitionedDataset<MatrixBlock>& blocks, bool rhs) {
    return engine::map_partitions(blocks, [rhs](const std::vector<MatrixBlock>& part) {
      std::vector<Tagged> out;
      out.reserve(part.size());
      for (const MatrixBlock& b : part) out.push_back(Tagged{rhs, b});
      return out;
    });
  };
  const int shuffle_parts = std::max(blocks_.num_partitions(), other.blocks_.num_partitions());

  // Join on the inner block index: column index on the left, row on the right.
  auto joined = engine::group_by_key(
      engine::concat(tag(blocks_, false), tag(other.blocks_, true)),
      [](const Tagged& t) {
        return static_cast<long>(t.rhs ? t.block.block_row : t.block.block_col);
      },
      shuffle_parts);

  auto partials = engine::map_partitions(
      joined, [](const std::vector<std::pair<long, std::vector<Tagged>>>& part) {
        std::vector<MatrixBlock> out;
        for (const auto& [key, group] : part) {
          for (const Tagged& left : group) {
            if (left.rhs) continue;
            for (const Tagged& right : group) {
              if (!right.rhs) continue;
              const DenseMatrix& a = left.block.matrix;
              const DenseMatrix& b = right.block.matrix;
              DenseMatrix c(a.num_rows(), b.num_cols());
              out.push_back(MatrixBlock{left.block.block_row, right.block.block_col,
                                        local::gemm(1.0, a, b, 0.0, c)});
            }
          }
        }
        return out;
      });

  auto reduced = engine::group_by_key(
      partials, [](const MatrixBlock& b) { return encode_key(b.block_row, b.block_col); },
      shuffle_parts);
  auto summed = engine::map_partitions(
      reduced, [](const std::vector<std::pair<long, std::vector<MatrixBlock>>>& part) {
        std::vector<MatrixBlock> out;
        out.reserve(part.size());
        for (const auto& [key, group] : part) {
          MatrixBlock block = group.front();
          for (std::size_t g = 1; g < group.size(); ++g) {
            const DenseMatrix& m = group[g].matrix;
            for (int j = 0; j < m.num_cols(); ++j) {
              for (int i = 0; i < m.num_rows(); ++i) block.matrix.at(i, j) += m(i, j);
            }
          }
          out.push_back(std::move(block));
        }
        return out;
      });
  return BlockMatrix(std::move(summed), rows_per_block_, other.cols_per_block_, num_rows_,
                     other.num_cols_);
}

std::optional<std::string> BlockMatrix::validate() const {
  struct Info {
    int row, col, rows, cols;
  };
  auto infos_ds = engine::map_partitions(blocks_, [](const std::vector<MatrixBlock>& part) {
    std::vector<Info> out;
    out.reserve(part.size());
    for (const MatrixBlock& b : part) {
      out.push_back(Info{b.block_row, b.block_col, b.matrix.num_rows(), b.matrix.num_cols()});
    }
    return out;
  });
  std::vector<Info> infos = engine::collect(infos_ds);
  std::sort(infos.begin(), infos.end(), [](const Info& a, const Info& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  const int grid_rows = block_row_count();
  const int grid_cols = block_col_count();
  for (std::size_t k = 0; k < infos.size(); ++k) {
    const Info& b = infos[k];
    const std::string at = "block (" + std::to_string(b.row) + ", " + std::to_string(b.col) + ")";
    if (b.row < 0 || b.row >= grid_rows || b.col < 0 || b.col >= grid_cols) {
      return at + " lies outside the " + std::to_string(grid_rows) + "x" +
             std::to_string(grid_cols) + " grid";
    }
    if (k > 0 && infos[k - 1].row == b.row && infos[k - 1].col == b.col) {
      return "duplicate " + at;
    }
    const int er = expected_rows(b.row);
    const int ec = expected_cols(b.col);
    if (b.rows != er || b.cols != ec) {
      return at + " is " + std::to_string(b.rows) + "x" + std::to_string(b.cols) +
             ", expected " + std::to_string(er) + "x" + std::to_string(ec);
    }
  }
  return std::nullopt;
}

}  // namespace parlin::dist
