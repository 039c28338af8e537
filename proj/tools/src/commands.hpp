#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace parlin::cli {

struct SvdArgs {
  std::string input;
  int k = 1;
  bool compute_u = false;
  std::string path = "auto";  // auto | gram | lanczos
  std::string out_dir = ".";
  std::uint64_t seed = 0;
  int partitions = 4;
};
void run_svd(const SvdArgs& args);

struct LassoArgs {
  std::string input;
  std::string labels;
  double lambda = 0.0;
  std::string out = "trace.csv";
  int max_iter = 5000;
  int partitions = 4;
  bool timing = false;
};
void run_lasso(const LassoArgs& args);

struct SlpArgs {
  std::string c_path;
  std::string a_path;
  std::string b_path;
  double mu = 1e-3;
  std::string out = "trace.csv";
  int rounds = 10;
  int partitions = 4;
  bool timing = false;
};
void run_slp(const SlpArgs& args);

struct BenchOptArgs {
  std::string problem = "linear";
  std::string scale = "desk";
  std::vector<std::string> methods;  // empty = all
  int iters = 200;
  std::uint64_t seed = 0;
  std::string out_dir = ".";
  int partitions = 4;
  bool timing = false;
};
void run_bench_opt(const BenchOptArgs& args);

struct BenchBlasArgs {
  std::vector<int> sizes = {256, 512, 1024, 2048};
  int reps = 5;
  std::string out = "bench-blas.csv";
  std::uint64_t seed = 0;
};
void run_bench_blas(const BenchBlasArgs& args);

}  // namespace parlin::cli
