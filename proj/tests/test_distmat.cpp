#include <doctest.h>

#include <map>

#include "parlin/dist/conversions.hpp"
#include "support.hpp"

using namespace parlin;
using namespace parlin::local;
using namespace parlin::dist;
using namespace testsupport;
namespace eng = parlin::engine;

namespace {

// (i, j) -> summed value, for comparing entry multisets after duplicate
// accumulation.
std::map<std::pair<long, long>, double> entry_map(const CoordinateMatrix& m) {
  std::map<std::pair<long, long>, double> out;
  for (const MatrixEntry& e : eng::collect(m.entries())) out[{e.i, e.j}] += e.value;
  return out;
}

}  // namespace

TEST_CASE("gramian of a hand-computed matrix") {
  Rng rng(1);
  auto a = to_row_matrix(DenseMatrix::from_rows({{1, 2}, {3, 4}}), 2, rng);
  auto g = a.compute_gramian();
  CHECK(g(0, 0) == doctest::Approx(10));
  CHECK(g(0, 1) == doctest::Approx(14));
  CHECK(g(1, 0) == doctest::Approx(14));
  CHECK(g(1, 1) == doctest::Approx(20));
}

TEST_CASE("gramian of orthonormal columns is the identity") {
  // Two orthonormal columns in R^4.
  const double h = 0.5;
  Rng rng(2);
  auto a = to_row_matrix(
      DenseMatrix::from_rows({{h, h}, {h, -h}, {h, h}, {h, -h}}), 3, rng);
  CHECK(max_abs_diff(a.compute_gramian(), DenseMatrix::identity(2)) <= 1e-12);
}

TEST_CASE("gramian matches the collect-then-multiply oracle and is exactly symmetric") {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 10 + rng.uniform_int(40);
    const int n = 1 + rng.uniform_int(8);
    DenseMatrix dense = random_dense(m, n, rng);
    auto a = to_row_matrix(dense, 1 + rng.uniform_int(6), rng, /*mixed_storage=*/true);
    DenseMatrix g = a.compute_gramian();
    DenseMatrix expected = naive_gemm(1.0, dense.transpose(), dense, 0.0, DenseMatrix(n, n));
    CHECK(max_abs_diff(g, expected) <= 1e-10);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) CHECK(g(i, j) == g(j, i));  // mirrored, 0 ulp
    }
  }
}

TEST_CASE("gramian enforces the column cap and rejects non-finite rows") {
  Rng rng(4);
  auto a = to_row_matrix(random_dense(5, 4, rng), 2, rng);
  CHECK_THROWS_AS((void)a.compute_gramian(/*gram_cap=*/3), UnsupportedShapeError);

  std::vector<Vector> rows;
  rows.emplace_back(DenseVector{1.0, 2.0});
  rows.emplace_back(DenseVector{std::nan(""), 0.0});
  RowMatrix bad(eng::from_records(std::move(rows), 1));
  CHECK_THROWS_WITH_AS((void)bad.compute_gramian(), doctest::Contains("row 1"), DataError);
}

TEST_CASE("multiply_by_local") {
  Rng rng(5);
  DenseMatrix dense = random_dense(7, 3, rng);
  auto a = to_row_matrix(dense, 3, rng, true);

  // Identity keeps the matrix.
  CHECK(max_abs_diff(collect_dense(a.multiply_by_local(DenseMatrix::identity(3))), dense) <=
        1e-15);

  // Single row [1, 2] * [[1], [1]] = [3].
  auto one = to_row_matrix(DenseMatrix::from_rows({{1, 2}}), 1, rng);
  auto prod = one.multiply_by_local(DenseMatrix::from_rows({{1}, {1}}));
  CHECK(collect_dense(prod)(0, 0) == doctest::Approx(3.0));

  // Random case against the local oracle.
  DenseMatrix b = random_dense(3, 5, rng);
  CHECK(max_abs_diff(collect_dense(a.multiply_by_local(b)),
                     naive_gemm(1.0, dense, b, 0.0, DenseMatrix(7, 5))) <= 1e-12);

  CHECK_THROWS_AS(a.multiply_by_local(DenseMatrix(4, 2)), std::invalid_argument);
}

TEST_CASE("coordinate to indexed rows: sparse rows sorted by column, duplicates summed") {
  std::vector<MatrixEntry> entries{{0, 0, 1.0}, {1, 2, 3.0}};
  CoordinateMatrix m(eng::from_records(entries, 2), 2, 3);
  auto indexed = to_indexed_row_matrix(m);
  auto rows = eng::collect(indexed.rows());
  REQUIRE(rows.size() == 2);
  std::map<long, SparseVector> by_index;
  for (const auto& r : rows) by_index.insert({r.index, r.vector.sparse()});
  CHECK(by_index.at(0).indices() == std::vector<int>{0});
  CHECK(by_index.at(0).values() == std::vector<double>{1.0});
  CHECK(by_index.at(1).indices() == std::vector<int>{2});
  CHECK(by_index.at(1).values() == std::vector<double>{3.0});

  // Empty entry set: nothing is emitted.
  CoordinateMatrix empty(eng::from_records(std::vector<MatrixEntry>{}, 1), 2, 2);
  CHECK(eng::collect(to_indexed_row_matrix(empty).rows()).empty());

  // Duplicates summed.
  std::vector<MatrixEntry> dup{{0, 1, 2.0}, {0, 1, 5.0}};
  CoordinateMatrix md(eng::from_records(dup, 1), 1, 2);
  auto row = eng::collect(to_indexed_row_matrix(md).rows()).front();
  CHECK(row.vector.sparse().indices() == std::vector<int>{1});
  CHECK(row.vector.sparse().values() == std::vector<double>{7.0});
}

TEST_CASE("block add and multiply") {
  Rng rng(6);
  auto build = [&](const DenseMatrix& d, int rpb, int cpb, int parts) {
    std::vector<MatrixEntry> entries;
    for (int i = 0; i < d.num_rows(); ++i) {
      for (int j = 0; j < d.num_cols(); ++j) {
        if (d(i, j) != 0.0) entries.push_back({i, j, d(i, j)});
      }
    }
    CoordinateMatrix coo(eng::from_records(entries, parts), d.num_rows(), d.num_cols());
    return to_block_matrix(coo, rpb, cpb);
  };

  // A + zeros = A.
  DenseMatrix da = random_dense(9, 7, rng);
  BlockMatrix a = build(da, 4, 3, 3);
  BlockMatrix zero(eng::PartitionedDataset<MatrixBlock>(), 4, 3, 9, 7);
  auto sum = a.add(zero);
  CHECK(max_abs_diff(to_dense(local::to_sparse(DenseMatrix(9, 7))), DenseMatrix(9, 7)) == 0);
  std::map<std::pair<long, long>, double> got = entry_map(to_coordinate_matrix(sum));
  std::map<std::pair<long, long>, double> want = entry_map(to_coordinate_matrix(a));
  CHECK(got == want);

  // Identity times A = A exactly.
  DenseMatrix db = random_dense(7, 5, rng);
  BlockMatrix b = build(db, 3, 2, 2);
  BlockMatrix eye = build(DenseMatrix::identity(7), 3, 3, 2);
  auto prod = eye.multiply(b);
  auto prod_entries = entry_map(to_coordinate_matrix(prod));
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 5; ++j) {
      const auto it = prod_entries.find({i, j});
      const double v = it == prod_entries.end() ? 0.0 : it->second;
      CHECK(v == db(i, j));
    }
  }

  // Random shapes against the dense oracle.
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 1 + rng.uniform_int(12);
    const int k = 1 + rng.uniform_int(12);
    const int n = 1 + rng.uniform_int(12);
    const int rpb = 1 + rng.uniform_int(5);
    const int ipb = 1 + rng.uniform_int(5);
    const int cpb = 1 + rng.uniform_int(5);
    DenseMatrix dx = random_dense(m, k, rng);
    DenseMatrix dy = random_dense(k, n, rng);
    BlockMatrix x = build(dx, rpb, ipb, 1 + rng.uniform_int(4));
    BlockMatrix y = build(dy, ipb, cpb, 1 + rng.uniform_int(4));
    DenseMatrix expected = naive_gemm(1.0, dx, dy, 0.0, DenseMatrix(m, n));
    auto got_entries = entry_map(to_coordinate_matrix(x.multiply(y)));
    double worst = 0.0;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) {
        const auto it = got_entries.find({i, j});
        const double v = it == got_entries.end() ? 0.0 : it->second;
        worst = std::max(worst, std::fabs(v - expected(i, j)));
      }
    }
    CHECK(worst <= 1e-10);
  }

  // Mismatched layouts are rejected.
  CHECK_THROWS_AS(a.add(b), std::invalid_argument);
  CHECK_THROWS_AS(b.multiply(a), std::invalid_argument);
}

TEST_CASE("block validate reports the first violation") {
  auto ok_blocks = std::vector<MatrixBlock>{{0, 0, DenseMatrix(2, 2)}, {1, 0, DenseMatrix(1, 2)}};
  BlockMatrix ok(eng::from_records(ok_blocks, 1), 2, 2, 3, 2);
  CHECK(!ok.validate().has_value());

  auto dup_blocks = std::vector<MatrixBlock>{{0, 0, DenseMatrix(2, 2)}, {0, 0, DenseMatrix(2, 2)}};
  BlockMatrix dup(eng::from_records(dup_blocks, 2), 2, 2, 3, 2);
  auto dup_diag = dup.validate();
  REQUIRE(dup_diag.has_value());
  CHECK(dup_diag->find("duplicate") != std::string::npos);
  CHECK(dup_diag->find("(0, 0)") != std::string::npos);

  auto bad_blocks = std::vector<MatrixBlock>{{0, 0, DenseMatrix(1, 2)}};
  BlockMatrix bad(eng::from_records(bad_blocks, 1), 2, 2, 3, 2);
  auto bad_diag = bad.validate();
  REQUIRE(bad_diag.has_value());
  CHECK(bad_diag->find("(0, 0)") != std::string::npos);
  CHECK(bad_diag->find("expected 2x2") != std::string::npos);

  auto outside = std::vector<MatrixBlock>{{5, 0, DenseMatrix(2, 2)}};
  BlockMatrix out(eng::from_records(outside, 1), 2, 2, 3, 2);
  REQUIRE(out.validate().has_value());
  CHECK(out.validate()->find("outside") != std::string::npos);
}

TEST_CASE("tall skinny QR") {
  Rng rng(7);

  // Orthonormal input: R = I and Q = A.
  const double h = 0.5;
  DenseMatrix ortho = DenseMatrix::from_rows({{h, h}, {h, -h}, {h, h}, {h, -h}});
  auto qr = to_row_matrix(ortho, 2, rng).tall_skinny_qr();
  CHECK(max_abs_diff(qr.r, DenseMatrix::identity(2)) <= 1e-10);
  CHECK(max_abs_diff(collect_dense(*qr.q), ortho) <= 1e-10);

  // Rank-deficient input is rejected.
  auto singular = to_row_matrix(DenseMatrix::from_rows({{3, 0}, {0, 0}, {4, 0}}), 2, rng);
  CHECK_THROWS_AS((void)singular.tall_skinny_qr(), RankDeficiencyError);

  // Random tall matrices: Q^T Q = I and Q R = A.
  for (int trial = 0; trial < 10; ++trial) {
    const int m = 30 + rng.uniform_int(40);
    const int n = 1 + rng.uniform_int(6);
    DenseMatrix dense = random_dense(m, n, rng);
    auto a = to_row_matrix(dense, 1 + rng.uniform_int(5), rng, true);
    auto result = a.tall_skinny_qr();
    DenseMatrix q = collect_dense(*result.q);
    CHECK(orthonormality_defect(q) <= 1e-6);
    DenseMatrix reconstructed = naive_gemm(1.0, q, result.r, 0.0, DenseMatrix(m, n));
    CHECK(rel_frobenius_diff(dense, reconstructed) <= 1e-8);
    // R is upper triangular.
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < i; ++j) CHECK(result.r(i, j) == 0.0);
    }
  }
}

TEST_CASE("conversions preserve the entry multiset") {
  Rng rng(8);
  // coordinate -> block -> coordinate on a handful of random entries.
  for (int trial = 0; trial < 20; ++trial) {
    const long rows = 1 + rng.uniform_int(40);
    const long cols = 1 + rng.uniform_int(40);
    std::vector<MatrixEntry> entries;
    for (int e = 0; e < 5; ++e) {
      entries.push_back({rng.uniform_int(static_cast<int>(rows)),
                         rng.uniform_int(static_cast<int>(cols)), rng.uniform(-1.0, 1.0)});
    }
    CoordinateMatrix coo(eng::from_records(entries, 1 + rng.uniform_int(3)), rows, cols);
    auto round = to_coordinate_matrix(to_block_matrix(coo, 1 + rng.uniform_int(8),
                                                      1 + rng.uniform_int(8)));
    auto got = entry_map(round);
    auto want = entry_map(coo);
    REQUIRE(got.size() == want.size());
    for (const auto& [key, v] : want) {
      REQUIRE(got.count(key) == 1);
      CHECK(got[key] == doctest::Approx(v).epsilon(1e-12));
    }
  }

  // row -> indexed -> row keeps vectors; indexed -> coordinate keeps entries.
  DenseMatrix dense = random_dense(6, 4, rng);
  auto a = to_row_matrix(dense, 3, rng, true);
  auto indexed = to_indexed_row_matrix(a);
  CHECK(indexed.num_rows() == 6);
  auto back = to_row_matrix(indexed);
  CHECK(max_abs_diff(collect_dense(back), dense) == 0.0);

  auto coo = to_coordinate_matrix(indexed);
  auto rebuilt = to_indexed_row_matrix(coo);
  CHECK(max_abs_diff(collect_dense(to_row_matrix(rebuilt)), dense) == 0.0);

  // Empty matrices convert to empty everywhere.
  CoordinateMatrix empty(eng::from_records(std::vector<MatrixEntry>{}, 1), 3, 3);
  CHECK(eng::collect(to_block_matrix(empty).blocks()).empty());
  CHECK(eng::collect(to_indexed_row_matrix(empty).rows()).empty());
}

TEST_CASE("distributed results do not depend on the partition count") {
  Rng rng(9);
  DenseMatrix dense = random_dense(24, 5, rng);
  DenseMatrix b = random_dense(5, 3, rng);

  Rng storage_rng(10);
  auto reference = to_row_matrix(dense, 1, storage_rng);
  DenseMatrix g1 = reference.compute_gramian();
  DenseMatrix p1 = collect_dense(reference.multiply_by_local(b));

  for (int parts : {2, 4, 8}) {
    Rng r2(10);
    auto a = to_row_matrix(dense, parts, r2);
    CHECK(max_abs_diff(a.compute_gramian(), g1) <= 1e-10 * std::max(1.0, frobenius(g1)));
    CHECK(max_abs_diff(collect_dense(a.multiply_by_local(b)), p1) <= 1e-12);
  }
}
