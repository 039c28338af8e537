#include "csv.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "parlin/errors.hpp"

namespace parlin::cli {

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << csv_quote(fields[i]);
  }
  out << '\n';
}

std::string format_full(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_sig3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

void write_trace_csv(const std::string& path, const tfocs::Trace& trace, double best,
                     bool with_timing) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write '" + path + "'");
  write_csv_row(out, {"iter", "objective", "gap", "L", "restarted", "wallclock_ms",
                      "feval_count"});
  for (const auto& e : trace) {
    const double gap = std::log10(std::max(e.objective - best, 1e-16));
    write_csv_row(out,
                  {std::to_string(e.iter), format_full(e.objective), format_full(gap),
                   format_full(e.lipschitz), e.restarted ? "1" : "0",
                   with_timing ? format_full(e.wallclock_ms) : "0",
                   std::to_string(e.feval_count)});
  }
  if (!out) throw DataError("write to '" + path + "' failed");
}

void write_vector_csv(const std::string& path, const std::string& header,
                      const local::DenseVector& v) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write '" + path + "'");
  out << csv_quote(header) << '\n';
  for (int i = 0; i < v.size(); ++i) out << format_full(v[i]) << '\n';
  if (!out) throw DataError("write to '" + path + "' failed");
}

void write_matrix_csv(const std::string& path, const local::DenseMatrix& m) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write '" + path + "'");
  std::vector<std::string> header;
  header.reserve(m.num_cols());
  for (int j = 0; j < m.num_cols(); ++j) header.push_back("v" + std::to_string(j));
  write_csv_row(out, header);
  std::vector<std::string> row(m.num_cols());
  for (int i = 0; i < m.num_rows(); ++i) {
    for (int j = 0; j < m.num_cols(); ++j) row[j] = format_full(m(i, j));
    write_csv_row(out, row);
  }
  if (!out) throw DataError("write to '" + path + "' failed");
}

local::DenseVector read_vector_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");
  std::vector<double> values;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    std::istringstream row(line);
    double v;
    if (row >> v) {
      values.push_back(v);
    } else if (line_no == 1) {
      continue;  // header
    } else {
      throw DataError(path + ":" + std::to_string(line_no) + ": expected a number, got '" +
                      line + "'");
    }
  }
  return local::DenseVector(std::move(values));
}

}  // namespace parlin::cli
