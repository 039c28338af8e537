#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "commands.hpp"
#include "csv.hpp"
#include "parlin/firstorder/bench.hpp"
#include "parlin/firstorder/problems.hpp"

namespace parlin::cli {

namespace fs = std::filesystem;
namespace fo = parlin::firstorder;

void run_bench_opt(const BenchOptArgs& args) {
  const fo::ProblemKind kind = fo::problem_kind_from_string(args.problem);
  const fo::ProblemScale scale = fo::problem_scale_from_string(args.scale);
  fo::SeparableObjective objective =
      fo::generate_benchmark(kind, scale, args.seed, args.partitions);

  std::vector<std::string> methods = args.methods.empty() ? fo::all_methods() : args.methods;
  std::vector<std::string> runnable;
  for (const std::string& m : methods) {
    if (fo::method_supports(m, objective)) {
      runnable.push_back(m);
    } else {
      std::cerr << "note: skipping " << m << " on " << args.problem
                << " (needs a smooth objective)\n";
    }
  }

  const double l0 = fo::estimate_l0(objective);
  std::cout << "problem: " << args.problem << " (" << objective.count << "x" << objective.dim
            << "), seed " << args.seed << ", L0 " << format_sig3(l0) << "\n";

  std::vector<fo::MethodTrace> runs = fo::run_benchmark(objective, runnable, args.iters, l0);
  const double best = fo::best_objective(runs);

  fs::create_directories(args.out_dir);
  for (const fo::MethodTrace& run : runs) {
    write_trace_csv((fs::path(args.out_dir) / (run.method + ".csv")).string(), run.trace, best,
                    args.timing);
  }

  std::ofstream summary(fs::path(args.out_dir) / "summary.csv");
  if (!summary) throw DataError("cannot write summary.csv in '" + args.out_dir + "'");
  write_csv_row(summary, {"method", "final_objective", "final_gap", "log10_final_gap"});
  for (const fo::MethodTrace& run : runs) {
    const double gap = fo::gap_at(run, args.iters, best);
    write_csv_row(summary, {run.method, format_full(run.trace.back().objective),
                            format_full(gap), format_full(std::log10(std::max(gap, 1e-16)))});
    std::cout << run.method << ": final objective " << format_full(run.trace.back().objective)
              << ", gap " << format_sig3(gap) << "\n";
  }
}

}  // namespace parlin::cli
