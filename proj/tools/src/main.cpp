#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "parlin/engine/thread_pool.hpp"
#include "parlin/errors.hpp"
#include "parlin/firstorder/bench.hpp"

namespace {

// Exit codes: 0 ok, 2 usage, 3 data, 4 convergence.
int guarded(const std::function<void()>& body) {
  try {
    body();
    return 0;
  } catch (const parlin::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"partitioned linear algebra, SVD, and first-order convex solvers"};
  app.require_subcommand(1);

  int workers = 0;
  app.add_option("--workers", workers, "worker threads (0 = hardware parallelism)");

  parlin::cli::SvdArgs svd_args;
  CLI::App* svd = app.add_subcommand("svd", "singular value decomposition of a Matrix Market file");
  svd->add_option("--input", svd_args.input, "Matrix Market file")->required();
  svd->add_option("--k", svd_args.k, "singular pairs to compute")->required();
  svd->add_flag("--compute-u", svd_args.compute_u, "also compute and write U");
  svd->add_option("--path", svd_args.path, "solver path")
      ->check(CLI::IsMember({"auto", "gram", "lanczos"}));
  svd->add_option("--out", svd_args.out_dir, "output directory")->required();
  svd->add_option("--seed", svd_args.seed, "start-vector seed");
  svd->add_option("--partitions", svd_args.partitions, "partitions for the row matrix");

  parlin::cli::LassoArgs lasso_args;
  CLI::App* lasso = app.add_subcommand("lasso", "L1-regularized least squares");
  lasso->add_option("--input", lasso_args.input, "Matrix Market design matrix")->required();
  lasso->add_option("--labels", lasso_args.labels, "CSV of targets, one per row")->required();
  lasso->add_option("--lambda", lasso_args.lambda, "L1 weight")->required();
  lasso->add_option("--out", lasso_args.out, "trace CSV path (x.csv lands beside it)");
  lasso->add_option("--max-iter", lasso_args.max_iter, "iteration cap");
  lasso->add_option("--partitions", lasso_args.partitions, "partitions for the row matrix");
  lasso->add_flag("--timing", lasso_args.timing, "record real wall-clock in the trace");

  parlin::cli::SlpArgs slp_args;
  CLI::App* slp = app.add_subcommand("slp", "smoothed linear program");
  slp->add_option("--c", slp_args.c_path, "objective vector CSV")->required();
  slp->add_option("--A", slp_args.a_path, "constraint matrix (Matrix Market)")->required();
  slp->add_option("--b", slp_args.b_path, "right-hand side CSV")->required();
  slp->add_option("--mu", slp_args.mu, "smoothing weight")->required();
  slp->add_option("--out", slp_args.out, "trace CSV path (x.csv lands beside it)");
  slp->add_option("--rounds", slp_args.rounds, "continuation rounds");
  slp->add_option("--partitions", slp_args.partitions, "partitions for the row matrix");
  slp->add_flag("--timing", slp_args.timing, "record real wall-clock in the trace");

  parlin::cli::BenchOptArgs bench_opt_args;
  CLI::App* bench_opt = app.add_subcommand("bench-opt", "convergence benchmark of the optimizers");
  bench_opt->add_option("--problem", bench_opt_args.problem, "benchmark problem")
      ->check(CLI::IsMember({"linear", "linear_l1", "logistic", "logistic_l2"}));
  bench_opt->add_option("--scale", bench_opt_args.scale, "problem size")
      ->check(CLI::IsMember({"desk", "paper"}));
  bench_opt
      ->add_option("--methods", bench_opt_args.methods,
                   "comma-separated subset of gra,acc,acc_r,acc_b,acc_rb,lbfgs")
      ->delimiter(',')
      ->check(CLI::IsMember(parlin::firstorder::all_methods()));
  bench_opt->add_option("--iters", bench_opt_args.iters, "outer iterations");
  bench_opt->add_option("--seed", bench_opt_args.seed, "generator seed");
  bench_opt->add_option("--out", bench_opt_args.out_dir, "output directory")->required();
  bench_opt->add_option("--partitions", bench_opt_args.partitions, "data partitions");
  bench_opt->add_flag("--timing", bench_opt_args.timing, "record real wall-clock in traces");

  parlin::cli::BenchBlasArgs bench_blas_args;
  CLI::App* bench_blas = app.add_subcommand("bench-blas", "single-node kernel benchmark");
  bench_blas->add_option("--sizes", bench_blas_args.sizes, "square sizes")->delimiter(',');
  bench_blas->add_option("--reps", bench_blas_args.reps, "samples per kernel (median reported)");
  bench_blas->add_option("--out", bench_blas_args.out, "output CSV")->required();
  bench_blas->add_option("--seed", bench_blas_args.seed, "operand seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  parlin::engine::set_worker_count(workers);

  if (svd->parsed()) return guarded([&] { parlin::cli::run_svd(svd_args); });
  if (lasso->parsed()) return guarded([&] { parlin::cli::run_lasso(lasso_args); });
  if (slp->parsed()) return guarded([&] { parlin::cli::run_slp(slp_args); });
  if (bench_opt->parsed()) return guarded([&] { parlin::cli::run_bench_opt(bench_opt_args); });
  if (bench_blas->parsed()) return guarded([&] { parlin::cli::run_bench_blas(bench_blas_args); });
  return 2;
}
