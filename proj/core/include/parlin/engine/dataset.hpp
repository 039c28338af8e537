#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "parlin/engine/thread_pool.hpp"
#include "parlin/errors.hpp"

namespace parlin::engine {

/// Immutable value broadcast to every partition task.
template <typename V>
class Broadcast {
 public:
  explicit Broadcast(V value) : value_(std::make_shared<const V>(std::move(value))) {}
  const V& value() const { return *value_; }

 private:
  std::shared_ptr<const V> value_;
};

template <typename V>
Broadcast<V> broadcast(V value) {
  return Broadcast<V>(std::move(value));
}

/// An ordered collection of record partitions. Partition order and record
/// order within a partition are fixed at creation. Datasets are immutable
/// and cheap to copy; the payload is shared.
///
/// Contract for everything in this namespace: operations are issued from a
/// single driver thread, partition functions are pure, and records and
/// broadcasts may be read concurrently from worker threads.
template <typename R>
class PartitionedDataset {
 public:
  using Partition = std::vector<R>;

  /// A single empty partition.
  PartitionedDataset() : PartitionedDataset(std::vector<Partition>(1)) {}

  explicit PartitionedDataset(std::vector<Partition> partitions)
      : partitions_(std::make_shared<const std::vector<Partition>>(std::move(partitions))) {
    if (partitions_->empty()) {
      throw std::invalid_argument("a dataset needs at least one partition");
    }
  }

  int num_partitions() const { return static_cast<int>(partitions_->size()); }

  const Partition& partition(int p) const { return (*partitions_)[p]; }

 private:
  std::shared_ptr<const std::vector<Partition>> partitions_;
};

/// Splits records into num_partitions contiguous chunks, partition p holding
/// records [p*n/P, (p+1)*n/P). Record order is preserved.
template <typename R>
PartitionedDataset<R> from_records(std::vector<R> records, int num_partitions) {
  if (num_partitions < 1) {
    throw std::invalid_argument("num_partitions must be >= 1, got " +
                                std::to_string(num_partitions));
  }
  const std::size_t n = records.size();
  const std::size_t p = static_cast<std::size_t>(num_partitions);
  std::vector<std::vector<R>> parts(p);
  for (std::size_t i = 0; i < p; ++i) {
    const std::size_t lo = i * n / p;
    const std::size_t hi = (i + 1) * n / p;
    parts[i].reserve(hi - lo);
    for (std::size_t r = lo; r < hi; ++r) parts[i].push_back(std::move(records[r]));
  }
  return PartitionedDataset<R>(std::move(parts));
}

template <typename R>
long count(const PartitionedDataset<R>& ds) {
  long total = 0;
  for (int p = 0; p < ds.num_partitions(); ++p) {
    total += static_cast<long>(ds.partition(p).size());
  }
  return total;
}

template <typename R>
std::vector<std::size_t> partition_sizes(const PartitionedDataset<R>& ds) {
  std::vector<std::size_t> sizes(ds.num_partitions());
  for (int p = 0; p < ds.num_partitions(); ++p) sizes[p] = ds.partition(p).size();
  return sizes;
}

/// f: (int partition_index, const std::vector<R>&) -> std::vector<S>.
/// Output partition i is f(i, input partition i); the partition count is
/// unchanged. Partitions run concurrently on the worker pool.
template <typename R, typename F>
auto map_partitions_with_index(const PartitionedDataset<R>& ds, F f)
    -> PartitionedDataset<typename std::invoke_result_t<
        F, int, const std::vector<R>&>::value_type> {
  using S = typename std::invoke_result_t<F, int, const std::vector<R>&>::value_type;
  const int p = ds.num_partitions();
  std::vector<std::vector<S>> out(p);
  global_pool().run_indexed(static_cast<std::size_t>(p), [&](std::size_t i) {
    out[i] = f(static_cast<int>(i), ds.partition(static_cast<int>(i)));
  });
  return PartitionedDataset<S>(std::move(out));
}

/// f: (const std::vector<R>&) -> std::vector<S>.
template <typename R, typename F>
auto map_partitions(const PartitionedDataset<R>& ds, F f)
    -> PartitionedDataset<typename std::invoke_result_t<F, const std::vector<R>&>::value_type> {
  return map_partitions_with_index(
      ds, [&f](int, const std::vector<R>& part) { return f(part); });
}

/// Folds each partition with seq (record order), then combines the partition
/// accumulators with comb as a left fold in ascending partition index. The
/// combine tree is fixed, so floating-point results are bit-reproducible for
/// a given partition count. comb must be associative with zero as identity.
///
/// seq: (Acc&, const R&) -> void, comb: (Acc&, const Acc&) -> void.
template <typename R, typename Acc, typename Seq, typename Comb>
Acc aggregate(const PartitionedDataset<R>& ds, Acc zero, Seq seq, Comb comb) {
  const int p = ds.num_partitions();
  std::vector<Acc> partials(p, zero);
  global_pool().run_indexed(static_cast<std::size_t>(p), [&](std::size_t i) {
    Acc acc = zero;
    for (const R& record : ds.partition(static_cast<int>(i))) seq(acc, record);
    partials[i] = std::move(acc);
  });
  Acc result = std::move(partials[0]);
  for (int i = 1; i < p; ++i) comb(result, partials[i]);
  return result;
}

/// Returns all records in (partition index, in-partition index) order.
/// Guarded by the driver collect cap (a sizeof-based estimate).
template <typename R>
std::vector<R> collect(const PartitionedDataset<R>& ds) {
  const std::size_t total = static_cast<std::size_t>(count(ds));
  const std::size_t estimate = total * sizeof(R);
  if (estimate > collect_cap_bytes()) {
    throw ResourceLimitError("collect of " + std::to_string(total) + " records (~" +
                             std::to_string(estimate) + " bytes) exceeds the driver cap of " +
                             std::to_string(collect_cap_bytes()) + " bytes");
  }
  std::vector<R> out;
  out.reserve(total);
  for (int p = 0; p < ds.num_partitions(); ++p) {
    const auto& part = ds.partition(p);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

/// Partitions of a followed by partitions of b. Not a shuffle; record
/// placement is unchanged.
template <typename R>
PartitionedDataset<R> concat(const PartitionedDataset<R>& a, const PartitionedDataset<R>& b) {
  std::vector<std::vector<R>> parts;
  parts.reserve(a.num_partitions() + b.num_partitions());
  for (int p = 0; p < a.num_partitions(); ++p) parts.push_back(a.partition(p));
  for (int p = 0; p < b.num_partitions(); ++p) parts.push_back(b.partition(p));
  return PartitionedDataset<R>(std::move(parts));
}

/// Hash-partitions records by key. Within an output partition, groups appear
/// in order of first occurrence and records within a group keep dataset
/// order, so the layout is a pure function of the input.
///
/// key_fn: (const R&) -> K with K hashable and equality-comparable.
template <typename R, typename KeyFn>
auto group_by_key(const PartitionedDataset<R>& ds, KeyFn key_fn, int num_partitions)
    -> PartitionedDataset<std::pair<std::invoke_result_t<KeyFn, const R&>, std::vector<R>>> {
  using K = std::invoke_result_t<KeyFn, const R&>;
  using Group = std::pair<K, std::vector<R>>;
  if (num_partitions < 1) {
    throw std::invalid_argument("num_partitions must be >= 1, got " +
                                std::to_string(num_partitions));
  }
  std::vector<std::vector<Group>> parts(num_partitions);
  std::vector<std::unordered_map<K, std::size_t>> index(num_partitions);
  std::hash<K> hasher;
  for (int p = 0; p < ds.num_partitions(); ++p) {
    for (const R& record : ds.partition(p)) {
      K key = key_fn(record);
      const int target = static_cast<int>(hasher(key) % static_cast<std::size_t>(num_partitions));
      auto [it, inserted] = index[target].try_emplace(key, parts[target].size());
      if (inserted) parts[target].push_back(Group{std::move(key), {}});
      parts[target][it->second].second.push_back(record);
    }
  }
  return PartitionedDataset<Group>(std::move(parts));
}

}  // namespace parlin::engine
