#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "commands.hpp"
#include "csv.hpp"
#include "parlin/local/blas.hpp"
#include "parlin/util/rng.hpp"

namespace parlin::cli {

namespace {

using local::DenseMatrix;
using local::DenseVector;
using local::SparseMatrix;

constexpr double kSparseDensity = 0.01;

DenseMatrix random_dense(int n, Rng& rng) {
  std::vector<double> values(static_cast<std::size_t>(n) * n);
  for (double& v : values) v = rng.gaussian();
  return DenseMatrix(n, n, std::move(values));
}

DenseVector random_vector(int n, Rng& rng) {
  DenseVector v(n);
  for (int i = 0; i < n; ++i) v[i] = rng.gaussian();
  return v;
}

SparseMatrix random_sparse(int n, Rng& rng) {
  std::vector<int> col_ptrs(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> rows;
  std::vector<double> values;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (rng.uniform() < kSparseDensity) {
        rows.push_back(i);
        values.push_back(rng.gaussian());
      }
    }
    col_ptrs[j + 1] = static_cast<int>(values.size());
  }
  return SparseMatrix(n, n, std::move(col_ptrs), std::move(rows), std::move(values));
}

template <typename F>
double median_ms(int reps, F body) {
  std::vector<double> samples;
  samples.reserve(reps);
  for (int r = 0; r < reps; ++r) {
    const auto start = std::chrono::steady_clock::now();
    body();
    samples.push_back(
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count());
  }
  std::sort(samples.begin(), samples.end());
  const int mid = reps / 2;
  return reps % 2 ? samples[mid] : 0.5 * (samples[mid - 1] + samples[mid]);
}

}  // namespace

void run_bench_blas(const BenchBlasArgs& args) {
  if (args.reps < 1) throw std::invalid_argument("reps must be >= 1");
  for (int n : args.sizes) {
    if (n < 1) throw std::invalid_argument("sizes must be positive");
  }

  std::ofstream out(args.out);
  if (!out) throw DataError("cannot write '" + args.out + "'");
  write_csv_row(out, {"op", "size", "median_ms", "gflops"});

  double checksum = 0.0;  // keeps the kernels from being optimized away
  for (int n : args.sizes) {
    Rng rng(args.seed + static_cast<std::uint64_t>(n));
    const DenseMatrix a = random_dense(n, rng);
    const DenseMatrix b = random_dense(n, rng);
    const DenseMatrix c(n, n);
    const DenseVector x = random_vector(n, rng);
    const DenseVector y(n);
    const SparseMatrix s = random_sparse(n, rng);

    struct Row {
      const char* op;
      double flops;
      double ms;
    };
    Row rows[] = {
        {"gemm", 2.0 * n * n * static_cast<double>(n),
         median_ms(args.reps, [&] { checksum += local::gemm(1.0, a, b, 0.0, c)(0, 0); })},
        {"gemv", 2.0 * n * static_cast<double>(n),
         median_ms(args.reps, [&] { checksum += local::gemv(1.0, a, x, 0.0, y)[0]; })},
        {"spmm", 2.0 * s.nnz() * static_cast<double>(n),
         median_ms(args.reps, [&] { checksum += local::spmm(s, b, false)(0, 0); })},
        {"spmv", 2.0 * static_cast<double>(s.nnz()),
         median_ms(args.reps, [&] { checksum += local::spmv(s, x, false)[0]; })},
    };
    for (const Row& r : rows) {
      const double gflops = r.flops / (r.ms * 1e6);
      write_csv_row(out, {r.op, std::to_string(n), format_full(r.ms), format_sig3(gflops)});
      std::cout << r.op << " n=" << n << ": " << format_sig3(r.ms) << " ms, "
                << format_sig3(gflops) << " gflops\n";
    }
  }
  std::cout << "checksum: " << format_sig3(checksum) << "\n";
}

}  // namespace parlin::cli
