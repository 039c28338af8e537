#pragma once

#include <condition_variable>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace parlin::engine {

/// Engine configuration. Worker count and collect cap are resolved as:
/// explicit setter > environment variable > default. Setters must only be
/// called from the driver thread, like every other engine entry point.
int worker_count();
void set_worker_count(int workers);  // 0 restores auto (env / hardware)
std::size_t collect_cap_bytes();     // default 1 GiB, env PARLIN_COLLECT_CAP_BYTES
void set_collect_cap_bytes(std::size_t bytes);

/// Fixed-size worker pool running indexed task batches. One batch at a time;
/// the driver blocks until every index has executed. If several indices throw,
/// the lowest index wins, so failures are reported deterministically.
class ThreadPool {
 public:
  explicit ThreadPool(int workers);
  ~ThreadPool();

  ThreadPool(const ThreadPool&) = delete;
  ThreadPool& operator=(const ThreadPool&) = delete;

  int workers() const { return static_cast<int>(threads_.size()) + 1; }

  /// Runs body(i) for every i in [0, count). All indices run even if one
  /// fails. parlin::Error exceptions are rethrown with "partition i" context
  /// attached and their type preserved; anything else becomes an EngineError.
  void run_indexed(std::size_t count, const std::function<void(std::size_t)>& body);

 private:
  void worker_loop();
  void execute(std::size_t index);
  void record_failure(std::size_t index, std::exception_ptr error);

  std::vector<std::thread> threads_;

  std::mutex mutex_;
  std::condition_variable work_cv_;
  std::condition_variable done_cv_;
  bool stop_ = false;
  std::uint64_t phase_ = 0;

  const std::function<void(std::size_t)>* body_ = nullptr;
  std::size_t count_ = 0;
  std::size_t next_ = 0;
  std::size_t completed_ = 0;
  int active_ = 0;
  bool has_failure_ = false;
  std::size_t failure_index_ = 0;
  std::exception_ptr failure_;
};

/// Process-wide pool sized from worker_count(); rebuilt when the count
/// changes. Driver-thread use only.
ThreadPool& global_pool();

}  // namespace parlin::engine
