#include "matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "parlin/errors.hpp"

namespace parlin::cli {

using dist::MatrixEntry;

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

[[noreturn]] void fail(const std::string& path, long line, const std::string& message) {
  throw DataError(path + ":" + std::to_string(line) + ": " + message);
}

}  // namespace

MatrixMarketData read_matrix_market(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");

  std::string line;
  long line_no = 0;

  if (!std::getline(in, line)) fail(path, 1, "empty file, expected a MatrixMarket banner");
  ++line_no;
  std::istringstream banner(line);
  std::string tag, object, format, field, symmetry;
  banner >> tag >> object >> format >> field >> symmetry;
  if (lower(tag) != "%%matrixmarket" || lower(object) != "matrix") {
    fail(path, 1, "malformed banner '" + line + "', expected '%%MatrixMarket matrix ...'");
  }
  format = lower(format);
  field = lower(field);
  symmetry = lower(symmetry);
  if (format != "coordinate" && format != "array") {
    fail(path, 1, "unsupported format '" + format + "', expected coordinate or array");
  }
  if (field != "real") fail(path, 1, "unsupported field '" + field + "', expected real");
  if (symmetry != "general" && symmetry != "symmetric") {
    fail(path, 1, "unsupported symmetry '" + symmetry + "', expected general or symmetric");
  }
  const bool coordinate = format == "coordinate";
  const bool symmetric = symmetry == "symmetric";

  // Comments, then the size line.
  for (;;) {
    if (!std::getline(in, line)) fail(path, line_no + 1, "missing size line");
    ++line_no;
    if (!line.empty() && line[0] != '%') break;
  }
  MatrixMarketData data;
  long declared = -1;
  {
    std::istringstream sizes(line);
    if (coordinate) {
      if (!(sizes >> data.rows >> data.cols >> declared)) {
        fail(path, line_no, "bad size line '" + line + "', expected 'rows cols nnz'");
      }
    } else {
      if (!(sizes >> data.rows >> data.cols)) {
        fail(path, line_no, "bad size line '" + line + "', expected 'rows cols'");
      }
    }
    if (data.rows < 0 || data.cols < 0) fail(path, line_no, "negative dimensions");
  }
  if (symmetric && data.rows != data.cols) {
    fail(path, line_no, "symmetric matrix must be square");
  }

  if (coordinate) {
    data.entries.reserve(static_cast<std::size_t>(declared));
    long seen = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty() || line[0] == '%') continue;
      std::istringstream row(line);
      long i, j;
      double v;
      if (!(row >> i >> j >> v)) {
        fail(path, line_no, "bad entry '" + line + "', expected 'i j value'");
      }
      if (i < 1 || i > data.rows || j < 1 || j > data.cols) {
        fail(path, line_no, "index (" + std::to_string(i) + ", " + std::to_string(j) +
                                ") outside " + std::to_string(data.rows) + "x" +
                                std::to_string(data.cols));
      }
      data.entries.push_back(MatrixEntry{i - 1, j - 1, v});
      if (symmetric && i != j) data.entries.push_back(MatrixEntry{j - 1, i - 1, v});
      ++seen;
    }
    if (declared >= 0 && seen != declared) {
      fail(path, line_no, "file declared " + std::to_string(declared) + " entries but has " +
                              std::to_string(seen));
    }
  } else {
    // Array format: column-major values; symmetric stores the lower triangle
    // of each column.
    long i = 0, j = 0;
    const long expected = symmetric ? data.rows * (data.rows + 1) / 2 : data.rows * data.cols;
    long seen = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty() || line[0] == '%') continue;
      std::istringstream row(line);
      double v;
      while (row >> v) {
        if (j >= data.cols) fail(path, line_no, "more values than the dimensions allow");
        if (v != 0.0) {
          data.entries.push_back(MatrixEntry{i, j, v});
          if (symmetric && i != j) data.entries.push_back(MatrixEntry{j, i, v});
        }
        ++seen;
        ++i;
        if (i >= data.rows) {
          ++j;
          i = symmetric ? j : 0;
        }
      }
    }
    if (seen != expected) {
      fail(path, line_no, "file has " + std::to_string(seen) + " values, expected " +
                              std::to_string(expected));
    }
  }
  return data;
}

void write_matrix_market(const std::string& path, long rows, long cols,
                         const std::vector<MatrixEntry>& entries) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write '" + path + "'");
  out << "%%MatrixMarket matrix coordinate real general\n";
  out << rows << " " << cols << " " << entries.size() << "\n";
  char buf[64];
  for (const MatrixEntry& e : entries) {
    std::snprintf(buf, sizeof(buf), "%.17g", e.value);
    out << (e.i + 1) << " " << (e.j + 1) << " " << buf << "\n";
  }
  if (!out) throw DataError("write to '" + path + "' failed");
}

void write_matrix_market_dense(const std::string& path, const local::DenseMatrix& m) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write '" + path + "'");
  out << "%%MatrixMarket matrix array real general\n";
  out << m.num_rows() << " " << m.num_cols() << "\n";
  char buf[64];
  for (int j = 0; j < m.num_cols(); ++j) {
    for (int i = 0; i < m.num_rows(); ++i) {
      std::snprintf(buf, sizeof(buf), "%.17g", m(i, j));
      out << buf << "\n";
    }
  }
  if (!out) throw DataError("write to '" + path + "' failed");
}

dist::RowMatrix to_row_matrix(const MatrixMarketData& data, int num_partitions) {
  if (data.cols > std::numeric_limits<int>::max()) {
    throw UnsupportedShapeError("column count " + std::to_string(data.cols) +
                                " does not fit an int");
  }
  const int n = static_cast<int>(data.cols);
  // (row -> sorted column map) keeps duplicate summation deterministic.
  std::vector<std::vector<std::pair<int, double>>> rows(static_cast<std::size_t>(data.rows));
  for (const MatrixEntry& e : data.entries) {
    rows[static_cast<std::size_t>(e.i)].push_back({static_cast<int>(e.j), e.value});
  }
  std::vector<local::Vector> records;
  records.reserve(rows.size());
  for (auto& cells : rows) {
    std::stable_sort(cells.begin(), cells.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<int> indices;
    std::vector<double> values;
    for (const auto& [j, v] : cells) {
      if (!indices.empty() && indices.back() == j) {
        values.back() += v;
      } else {
        indices.push_back(j);
        values.push_back(v);
      }
    }
    records.emplace_back(local::SparseVector(n, std::move(indices), std::move(values)));
  }
  return dist::RowMatrix(engine::from_records(std::move(records), num_partitions));
}

}  // namespace parlin::cli
