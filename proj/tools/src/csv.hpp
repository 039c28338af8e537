#pragma once

#include <string>
#include <vector>

#include "parlin/local/dense.hpp"
#include "parlin/tfocs/optimize.hpp"

namespace parlin::cli {

/// RFC 4180 field quoting: fields with commas, quotes, or line breaks are
/// wrapped in double quotes with embedded quotes doubled.
std::string csv_quote(const std::string& field);

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

/// Columns: iter, objective, gap, L, restarted, wallclock_ms, feval_count.
/// gap is log10(max(objective - best, 1e-16)); by default best is the
/// minimum over the trace itself. Wall-clock values are zeroed unless
/// with_timing, keeping the output a pure function of the inputs.
void write_trace_csv(const std::string& path, const tfocs::Trace& trace, double best,
                     bool with_timing);

/// Header then one full-precision value per line.
void write_vector_csv(const std::string& path, const std::string& header,
                      const local::DenseVector& v);

/// Header row v0..v{k-1}, then one row per matrix row.
void write_matrix_csv(const std::string& path, const local::DenseMatrix& m);

/// One number per line; an optional non-numeric first line is skipped.
/// Parse failures raise DataError naming the line.
local::DenseVector read_vector_csv(const std::string& path);

std::string format_full(double v);   // %.17g
std::string format_sig3(double v);   // 3 significant digits

}  // namespace parlin::cli
