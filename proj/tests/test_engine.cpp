#include <doctest.h>

#include <atomic>
#include <cstring>
#include <numeric>

#include "parlin/engine/dataset.hpp"
#include "parlin/errors.hpp"
#include "parlin/util/rng.hpp"

using namespace parlin;
namespace eng = parlin::engine;

TEST_CASE("from_records splits into contiguous chunks") {
  auto even = eng::from_records(std::vector<int>{1, 2, 3, 4}, 2);
  CHECK(even.num_partitions() == 2);
  CHECK(even.partition(0) == std::vector<int>{1, 2});
  CHECK(even.partition(1) == std::vector<int>{3, 4});

  // Chunk boundaries p*n/P: three records over two partitions -> [1], [2, 3].
  auto uneven = eng::from_records(std::vector<int>{1, 2, 3}, 2);
  CHECK(uneven.partition(0) == std::vector<int>{1});
  CHECK(uneven.partition(1) == std::vector<int>{2, 3});

  auto empty = eng::from_records(std::vector<int>{}, 1);
  CHECK(empty.num_partitions() == 1);
  CHECK(eng::count(empty) == 0);

  CHECK_THROWS_AS(eng::from_records(std::vector<int>{1}, 0), std::invalid_argument);
  CHECK_THROWS_AS(eng::from_records(std::vector<int>{1}, -3), std::invalid_argument);
}

TEST_CASE("from_records then collect is the identity") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.uniform_int(40);
    const int p = 1 + rng.uniform_int(8);
    std::vector<int> records(n);
    for (int& r : records) r = rng.uniform_int(1000);
    auto ds = eng::from_records(records, p);
    CHECK(ds.num_partitions() == p);
    CHECK(eng::collect(ds) == records);
  }
}

TEST_CASE("map_partitions applies per partition and keeps the layout") {
  auto ds = eng::from_records(std::vector<int>{1, 2, 3}, 2);  // [[1], [2, 3]]
  REQUIRE(ds.partition(0).size() == 1);

  auto doubled = eng::map_partitions(ds, [](const std::vector<int>& part) {
    std::vector<int> out;
    for (int v : part) out.push_back(2 * v);
    return out;
  });
  CHECK(doubled.num_partitions() == 2);
  CHECK(eng::collect(doubled) == std::vector<int>{2, 4, 6});

  auto identity = eng::map_partitions(ds, [](const std::vector<int>& part) { return part; });
  CHECK(eng::collect(identity) == eng::collect(ds));

  auto sums = eng::map_partitions(ds, [](const std::vector<int>& part) {
    return std::vector<int>{std::accumulate(part.begin(), part.end(), 0)};
  });
  CHECK(eng::collect(sums) == std::vector<int>{1, 5});
}

TEST_CASE("map_partitions matches the sequential oracle on random data") {
  Rng rng(11);
  auto f = [](const std::vector<int>& part) {
    std::vector<int> out;
    for (int v : part) {
      if (v % 3 != 0) out.push_back(v * v);
    }
    return out;
  };
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<int> records(rng.uniform_int(200));
    for (int& r : records) r = rng.uniform_int(100);
    const int p = 1 + rng.uniform_int(7);
    auto ds = eng::from_records(records, p);

    std::vector<int> expected;
    for (int q = 0; q < ds.num_partitions(); ++q) {
      auto mapped = f(ds.partition(q));
      expected.insert(expected.end(), mapped.begin(), mapped.end());
    }
    CHECK(eng::collect(eng::map_partitions(ds, f)) == expected);
  }
}

TEST_CASE("map_partitions propagates failures with the partition index") {
  auto ds = eng::from_records(std::vector<int>{1, 2, 3, 4, 5, 6}, 3);
  try {
    eng::map_partitions(ds, [](const std::vector<int>& part) -> std::vector<int> {
      if (part.front() >= 3) throw DataError("boom");
      return part;
    });
    FAIL("expected DataError");
  } catch (const DataError& e) {
    // The lowest failing partition wins: records [3, 4] live in partition 1.
    CHECK(std::string(e.what()) == "partition 1: boom");
  }
}

TEST_CASE("aggregate folds then combines in ascending partition order") {
  auto ds = eng::from_records(std::vector<int>{1, 2, 3}, 2);
  const int sum = eng::aggregate(
      ds, 0, [](int& acc, const int& v) { acc += v; },
      [](int& lhs, const int& rhs) { lhs += rhs; });
  CHECK(sum == 6);

  auto empty = eng::from_records(std::vector<double>{}, 3);
  const double zero = eng::aggregate(
      empty, 0.0, [](double& acc, const double& v) { acc += v; },
      [](double& lhs, const double& rhs) { lhs += rhs; });
  CHECK(zero == 0.0);
}

TEST_CASE("aggregate of doubles is bit-identical across runs") {
  Rng rng(23);
  std::vector<double> records(1000);
  for (double& r : records) r = rng.uniform(-1.0, 1.0) * 1e3;
  auto ds = eng::from_records(records, 7);

  auto run = [&] {
    return eng::aggregate(
        ds, 0.0, [](double& acc, const double& v) { acc += v; },
        [](double& lhs, const double& rhs) { lhs += rhs; });
  };
  const double first = run();
  for (int i = 0; i < 100; ++i) {
    const double again = run();
    CHECK(std::memcmp(&first, &again, sizeof(double)) == 0);
  }

  // Same story with more workers than partitions.
  eng::set_worker_count(16);
  const double wide = run();
  eng::set_worker_count(0);
  CHECK(std::memcmp(&first, &wide, sizeof(double)) == 0);
}

TEST_CASE("aggregate agrees across partition counts to relative 1e-10") {
  Rng rng(29);
  std::vector<double> records(5000);
  for (double& r : records) r = rng.uniform(-1.0, 1.0);
  double reference = 0.0;
  for (double r : records) reference += r;
  for (int p : {1, 2, 4, 8, 16}) {
    auto ds = eng::from_records(records, p);
    const double sum = eng::aggregate(
        ds, 0.0, [](double& acc, const double& v) { acc += v; },
        [](double& lhs, const double& rhs) { lhs += rhs; });
    CHECK(std::fabs(sum - reference) <= 1e-10 * std::max(1.0, std::fabs(reference)));
  }
}

TEST_CASE("collect returns records in partition order and honors the cap") {
  auto ds = eng::from_records(std::vector<int>{1, 2, 3}, 2);
  CHECK(eng::collect(ds) == std::vector<int>{1, 2, 3});
  CHECK(eng::count(ds) == 3);

  eng::set_collect_cap_bytes(8);
  CHECK_THROWS_AS((void)eng::collect(ds), ResourceLimitError);
  eng::set_collect_cap_bytes(0);
  CHECK(eng::collect(ds).size() == 3);
}

TEST_CASE("broadcast value is readable from partition tasks") {
  auto ds = eng::from_records(std::vector<int>{0, 0, 0, 0}, 4);
  auto shared = eng::broadcast(std::vector<int>{1, 2});
  auto mapped = eng::map_partitions(ds, [shared](const std::vector<int>& part) {
    std::vector<int> out;
    for (int v : part) out.push_back(v + shared.value()[0] + shared.value()[1]);
    return out;
  });
  CHECK(eng::collect(mapped) == std::vector<int>{3, 3, 3, 3});
  CHECK(shared.value() == std::vector<int>{1, 2});
}

TEST_CASE("group_by_key is deterministic and keeps record order within groups") {
  std::vector<std::pair<int, int>> records;
  for (int i = 0; i < 50; ++i) records.push_back({i % 7, i});
  auto ds = eng::from_records(records, 4);

  auto grouped = eng::group_by_key(
      ds, [](const std::pair<int, int>& r) { return static_cast<long>(r.first); }, 3);

  int seen_groups = 0;
  long seen_records = 0;
  for (int p = 0; p < grouped.num_partitions(); ++p) {
    for (const auto& [key, group] : grouped.partition(p)) {
      ++seen_groups;
      seen_records += static_cast<long>(group.size());
      int prev = -1;
      for (const auto& r : group) {
        CHECK(static_cast<long>(r.first) == key);
        CHECK(r.second > prev);  // original order preserved
        prev = r.second;
      }
    }
  }
  CHECK(seen_groups == 7);
  CHECK(seen_records == 50);

  // Identical layout on a second run.
  auto again = eng::group_by_key(
      ds, [](const std::pair<int, int>& r) { return static_cast<long>(r.first); }, 3);
  for (int p = 0; p < grouped.num_partitions(); ++p) {
    REQUIRE(grouped.partition(p).size() == again.partition(p).size());
    for (std::size_t g = 0; g < grouped.partition(p).size(); ++g) {
      CHECK(grouped.partition(p)[g].first == again.partition(p)[g].first);
      CHECK(grouped.partition(p)[g].second == again.partition(p)[g].second);
    }
  }
}

TEST_CASE("concat keeps partitions of both datasets") {
  auto a = eng::from_records(std::vector<int>{1, 2}, 2);
  auto b = eng::from_records(std::vector<int>{3}, 1);
  auto c = eng::concat(a, b);
  CHECK(c.num_partitions() == 3);
  CHECK(eng::collect(c) == std::vector<int>{1, 2, 3});
}

TEST_CASE("worker pool runs every index exactly once") {
  eng::set_worker_count(5);
  std::vector<std::atomic<int>> hits(257);
  eng::global_pool().run_indexed(hits.size(), [&](std::size_t i) { hits[i]++; });
  for (const auto& h : hits) CHECK(h.load() == 1);
  eng::set_worker_count(0);
}
