#include <doctest.h>

#include "parlin/local/blas.hpp"
#include "parlin/local/vector.hpp"
#include "support.hpp"

using namespace parlin;
using namespace parlin::local;
using namespace testsupport;

TEST_CASE("gemm on hand-computed 2x2") {
  auto a = DenseMatrix::from_rows({{1, 2}, {3, 4}});
  auto b = DenseMatrix::from_rows({{5, 6}, {7, 8}});
  auto c = gemm(1.0, a, b, 0.0, DenseMatrix(2, 2));
  CHECK(c(0, 0) == doctest::Approx(19));
  CHECK(c(0, 1) == doctest::Approx(22));
  CHECK(c(1, 0) == doctest::Approx(43));
  CHECK(c(1, 1) == doctest::Approx(50));
}

TEST_CASE("gemm with an identity factor returns the other factor") {
  Rng rng(1);
  auto b = random_dense(4, 3, rng);
  auto c = gemm(1.0, DenseMatrix::identity(4), b, 0.0, DenseMatrix(4, 3));
  CHECK(max_abs_diff(c, b) == 0.0);
}

TEST_CASE("gemm matches the naive oracle over random shapes and transposes") {
  Rng rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 1 + rng.uniform_int(9);
    const int k = 1 + rng.uniform_int(9);
    const int n = 1 + rng.uniform_int(9);
    const bool ta = rng.uniform() < 0.5;
    const bool tb = rng.uniform() < 0.5;
    DenseMatrix a = ta ? random_dense(k, m, rng).transpose() : random_dense(m, k, rng);
    DenseMatrix b = tb ? random_dense(n, k, rng).transpose() : random_dense(k, n, rng);
    DenseMatrix c = random_dense(m, n, rng);
    const double alpha = rng.uniform(-2.0, 2.0);
    const double beta = rng.uniform(-2.0, 2.0);
    CHECK(max_abs_diff(gemm(alpha, a, b, beta, c), naive_gemm(alpha, a, b, beta, c)) <= 1e-12);
  }
}

TEST_CASE("gemm rejects shape mismatches naming both shapes") {
  auto a = DenseMatrix(2, 3);
  auto b = DenseMatrix(2, 2);
  CHECK_THROWS_WITH_AS(gemm(1.0, a, b, 0.0, DenseMatrix(2, 2)),
                       doctest::Contains("2x3"), std::invalid_argument);
}

TEST_CASE("gemv basics") {
  auto a = DenseMatrix::from_rows({{1, 2}, {3, 4}});
  auto y = gemv(1.0, a, DenseVector{1, 1}, 0.0, DenseVector(2));
  CHECK(y[0] == doctest::Approx(3));
  CHECK(y[1] == doctest::Approx(7));

  // alpha = 0, beta = 1 leaves y unchanged.
  DenseVector y0{5, 6};
  auto kept = gemv(0.0, a, DenseVector{1, 1}, 1.0, y0);
  CHECK(kept[0] == 5.0);
  CHECK(kept[1] == 6.0);
}

TEST_CASE("gemv matches the naive oracle") {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 1 + rng.uniform_int(8);
    const int k = 1 + rng.uniform_int(8);
    const bool ta = rng.uniform() < 0.5;
    DenseMatrix a = ta ? random_dense(k, m, rng).transpose() : random_dense(m, k, rng);
    DenseVector x = random_vector(k, rng);
    DenseVector y = random_vector(m, rng);
    const double alpha = rng.uniform(-2.0, 2.0);
    const double beta = rng.uniform(-2.0, 2.0);
    CHECK(max_abs_diff(gemv(alpha, a, x, beta, y), naive_gemv(alpha, a, x, beta, y)) <= 1e-12);
  }
}

TEST_CASE("spmm with a sparse identity returns the dense factor") {
  auto eye = SparseMatrix(3, 3, {0, 1, 2, 3}, {0, 1, 2}, {1.0, 1.0, 1.0});
  Rng rng(4);
  auto b = random_dense(3, 4, rng);
  CHECK(max_abs_diff(spmm(eye, b, false), b) == 0.0);
}

TEST_CASE("spmm and spmv match the densify-then-dense oracle") {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 1 + rng.uniform_int(10);
    const int k = 1 + rng.uniform_int(10);
    const int n = 1 + rng.uniform_int(4);
    const bool ta = rng.uniform() < 0.5;
    SparseMatrix s = random_sparse(ta ? k : m, ta ? m : k, 0.4, rng);
    DenseMatrix dense = to_dense(s);
    if (ta) dense = dense.transpose();

    DenseMatrix b = random_dense(k, n, rng);
    CHECK(max_abs_diff(spmm(s, b, ta), naive_gemm(1.0, dense, b, 0.0, DenseMatrix(m, n))) <=
          1e-12);

    DenseVector x = random_vector(k, rng);
    CHECK(max_abs_diff(spmv(s, x, ta), naive_gemv(1.0, dense, x, 0.0, DenseVector(m))) <= 1e-12);
  }
}

TEST_CASE("spmm equals gemm exactly on integer-valued inputs") {
  Rng rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 2 + rng.uniform_int(6);
    const int k = 2 + rng.uniform_int(6);
    const int n = 1 + rng.uniform_int(3);
    std::vector<std::tuple<int, int, double>> entries;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < k; ++j) {
        if (rng.uniform() < 0.3) {
          entries.push_back({i, j, static_cast<double>(rng.uniform_int(9) - 4)});
        }
      }
    }
    SparseMatrix s = SparseMatrix::from_coo(m, k, entries);
    std::vector<double> bvals(static_cast<std::size_t>(k) * n);
    for (double& v : bvals) v = static_cast<double>(rng.uniform_int(9) - 4);
    DenseMatrix b(k, n, std::move(bvals));
    DenseMatrix via_sparse = spmm(s, b, false);
    DenseMatrix via_dense = gemm(1.0, to_dense(s), b, 0.0, DenseMatrix(m, n));
    CHECK(max_abs_diff(via_sparse, via_dense) == 0.0);
  }
}

TEST_CASE("dense/sparse vector conversions") {
  // (1.0, 0.0, 3.0) <-> (3, [0, 2], [1.0, 3.0])
  DenseVector d{1.0, 0.0, 3.0};
  SparseVector s = to_sparse(d);
  CHECK(s.size() == 3);
  CHECK(s.indices() == std::vector<int>{0, 2});
  CHECK(s.values() == std::vector<double>{1.0, 3.0});
  CHECK(max_abs_diff(to_dense(s), d) == 0.0);

  SparseVector zeros = to_sparse(DenseVector(4));
  CHECK(zeros.size() == 4);
  CHECK(zeros.nnz() == 0);

  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    DenseVector v = random_vector(1 + rng.uniform_int(30), rng);
    for (int i = 0; i < v.size(); ++i) {
      if (rng.uniform() < 0.5) v[i] = 0.0;
    }
    CHECK(max_abs_diff(to_dense(to_sparse(v)), v) == 0.0);
  }
}

TEST_CASE("dense/sparse matrix conversions round-trip") {
  Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    SparseMatrix s = random_sparse(1 + rng.uniform_int(8), 1 + rng.uniform_int(8), 0.3, rng);
    DenseMatrix d = to_dense(s);
    SparseMatrix back = to_sparse(d);
    CHECK(max_abs_diff(to_dense(back), d) == 0.0);
    // CCS invariants hold after conversion.
    CHECK(back.col_ptrs().front() == 0);
    CHECK(back.col_ptrs().back() == back.nnz());
    for (int j = 0; j < back.num_cols(); ++j) {
      CHECK(back.col_ptrs()[j] <= back.col_ptrs()[j + 1]);
      for (int p = back.col_ptrs()[j] + 1; p < back.col_ptrs()[j + 1]; ++p) {
        CHECK(back.row_indices()[p - 1] < back.row_indices()[p]);
      }
    }
  }
}

TEST_CASE("sparse constructors reject malformed input") {
  CHECK_THROWS_AS(SparseVector(3, {0, 0}, {1.0, 2.0}), std::invalid_argument);   // duplicate
  CHECK_THROWS_AS(SparseVector(3, {2, 1}, {1.0, 2.0}), std::invalid_argument);   // unsorted
  CHECK_THROWS_AS(SparseVector(3, {0, 3}, {1.0, 2.0}), std::invalid_argument);   // out of range
  CHECK_THROWS_AS(SparseVector(3, {0}, {1.0, 2.0}), std::invalid_argument);      // length skew

  CHECK_THROWS_AS(SparseMatrix(2, 2, {0, 1}, {0}, {1.0}), std::invalid_argument);      // ptrs len
  CHECK_THROWS_AS(SparseMatrix(2, 2, {0, 2, 1}, {0, 1}, {1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(SparseMatrix(2, 2, {0, 2, 2}, {1, 1}, {1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(SparseMatrix(2, 2, {0, 1, 2}, {0, 2}, {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("row vector variant dispatches dot and axpy over both storages") {
  Vector dense(DenseVector{1.0, 0.0, 2.0});
  Vector sparse(SparseVector(3, {0, 2}, {1.0, 2.0}));
  DenseVector x{3.0, 5.0, 7.0};
  CHECK(dense.dot(x) == doctest::Approx(17.0));
  CHECK(sparse.dot(x) == doctest::Approx(17.0));

  DenseVector acc(3);
  dense.add_scaled_to(2.0, acc);
  sparse.add_scaled_to(-1.0, acc);
  CHECK(acc[0] == doctest::Approx(1.0));
  CHECK(acc[1] == 0.0);
  CHECK(acc[2] == doctest::Approx(2.0));
}
