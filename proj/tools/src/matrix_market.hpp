#pragma once

#include <string>
#include <vector>

#include "parlin/dist/conversions.hpp"
#include "parlin/dist/row_matrix.hpp"

namespace parlin::cli {

/// A Matrix Market file reduced to its entry list. Indices are 0-based in
/// memory (the file is 1-based) and symmetric files are expanded on load.
struct MatrixMarketData {
  long rows = 0;
  long cols = 0;
  std::vector<dist::MatrixEntry> entries;
};

/// Reads coordinate or array format, field real, symmetry general or
/// symmetric. Failures raise DataError naming the offending line.
MatrixMarketData read_matrix_market(const std::string& path);

/// Coordinate, real, general; entries are written as given (1-based on disk)
/// with full precision, so a load/save/load round-trip preserves the entry
/// multiset exactly.
void write_matrix_market(const std::string& path, long rows, long cols,
                         const std::vector<dist::MatrixEntry>& entries);

/// Array, real, general; column-major values.
void write_matrix_market_dense(const std::string& path, const local::DenseMatrix& m);

/// All rows materialized in order as sparse vectors (absent rows are empty),
/// duplicates summed.
dist::RowMatrix to_row_matrix(const MatrixMarketData& data, int num_partitions);

}  // namespace parlin::cli
