#include <filesystem>
#include <iostream>
#include <stdexcept>

#include "commands.hpp"
#include "csv.hpp"
#include "matrix_market.hpp"
#include "parlin/tfocs/solver_l1rls.hpp"

namespace parlin::cli {

namespace fs = std::filesystem;

void run_lasso(const LassoArgs& args) {
  MatrixMarketData data = read_matrix_market(args.input);
  dist::RowMatrix a = to_row_matrix(data, args.partitions);
  local::DenseVector b = read_vector_csv(args.labels);
  if (b.size() != data.rows) {
    throw DataError("labels '" + args.labels + "' have " + std::to_string(b.size()) +
                    " values, matrix '" + args.input + "' has " + std::to_string(data.rows) +
                    " rows");
  }

  tfocs::L1RLSOptions options;
  options.max_iter = args.max_iter;
  tfocs::L1RLSResult result = tfocs::solver_l1rls(a, b, args.lambda, options);

  const fs::path out(args.out);
  const fs::path dir = out.has_parent_path() ? out.parent_path() : fs::path(".");
  fs::create_directories(dir);

  double best = result.trace.front().objective;
  for (const auto& e : result.trace) best = std::min(best, e.objective);
  write_trace_csv(out.string(), result.trace, best, args.timing);
  write_vector_csv((dir / "x.csv").string(), "x", result.x);

  std::cout << "iterations: " << result.trace.back().iter
            << ", converged: " << (result.converged ? "yes" : "no") << "\n";
  std::cout << "kkt residual: " << format_full(result.kkt_residual) << "\n";
  std::cout << "objective: " << format_full(result.trace.back().objective) << "\n";
  std::cout << "nonzeros in x: ";
  int nnz = 0;
  for (int i = 0; i < result.x.size(); ++i) nnz += result.x[i] != 0.0;
  std::cout << nnz << " of " << result.x.size() << "\n";
}

}  // namespace parlin::cli
