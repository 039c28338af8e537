#include <filesystem>
#include <iostream>

#include "commands.hpp"
#include "csv.hpp"
#include "matrix_market.hpp"
#include "parlin/tfocs/solver_slp.hpp"

namespace parlin::cli {

namespace fs = std::filesystem;

void run_slp(const SlpArgs& args) {
  local::DenseVector c = read_vector_csv(args.c_path);
  MatrixMarketData data = read_matrix_market(args.a_path);
  dist::RowMatrix a = to_row_matrix(data, args.partitions);
  local::DenseVector b = read_vector_csv(args.b_path);
  if (c.size() != data.cols) {
    throw DataError("c '" + args.c_path + "' has " + std::to_string(c.size()) +
                    " values, matrix '" + args.a_path + "' has " + std::to_string(data.cols) +
                    " columns");
  }
  if (b.size() != data.rows) {
    throw DataError("b '" + args.b_path + "' has " + std::to_string(b.size()) +
                    " values, matrix '" + args.a_path + "' has " + std::to_string(data.rows) +
                    " rows");
  }

  tfocs::SLPOptions options;
  options.continuation_rounds = args.rounds;
  tfocs::SLPResult result = tfocs::solver_slp(c, a, b, args.mu, options);

  const fs::path out(args.out);
  const fs::path dir = out.has_parent_path() ? out.parent_path() : fs::path(".");
  fs::create_directories(dir);

  double best = result.trace.front().objective;
  for (const auto& e : result.trace) best = std::min(best, e.objective);
  write_trace_csv(out.string(), result.trace, best, args.timing);
  write_vector_csv((dir / "x.csv").string(), "x", result.x);

  std::cout << "continuation rounds: " << result.rounds << "\n";
  std::cout << "feasibility |Ax - b|: " << format_full(result.feasibility) << "\n";
  std::cout << "objective c.x: " << format_full(local::dot(c, result.x)) << "\n";
}

}  // namespace parlin::cli
