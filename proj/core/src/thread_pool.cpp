#include "parlin/engine/thread_pool.hpp"

#include <cstdlib>
#include <memory>
#include <string>

#include "parlin/errors.hpp"

namespace parlin::engine {

namespace {

int g_workers = 0;
std::size_t g_collect_cap = 0;

int hardware_workers() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

long env_long(const char* name) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return -1;
  char* end = nullptr;
  long parsed = std::strtol(v, &end, 10);
  if (end == v || parsed <= 0) return -1;
  return parsed;
}

}  // namespace

int worker_count() {
  if (g_workers > 0) return g_workers;
  long env = env_long("PARLIN_WORKERS");
  if (env > 0) return static_cast<int>(env);
  return hardware_workers();
}

void set_worker_count(int workers) { g_workers = workers > 0 ? workers : 0; }

std::size_t collect_cap_bytes() {
  if (g_collect_cap > 0) return g_collect_cap;
  long env = env_long("PARLIN_COLLECT_CAP_BYTES");
  if (env > 0) return static_cast<std::size_t>(env);
  return std::size_t{1} << 30;
}

void set_collect_cap_bytes(std::size_t bytes) { g_collect_cap = bytes; }

ThreadPool::ThreadPool(int workers) {
  int extra = workers - 1;  // the driver participates in every batch
  threads_.reserve(extra > 0 ? extra : 0);
  for (int i = 0; i < extra; ++i) {
    threads_.emplace_back([this] { worker_loop(); });
  }
}

ThreadPool::~ThreadPool() {
  {
    std::lock_guard lock(mutex_);
    stop_ = true;
  }
  work_cv_.notify_all();
  for (auto& t : threads_) t.join();
}

void ThreadPool::execute(std::size_t index) {
  try {
    (*body_)(index);
  } catch (Error& e) {
    e.add_context("partition " + std::to_string(index));
    record_failure(index, std::current_exception());
  } catch (const std::exception& e) {
    record_failure(index, std::make_exception_ptr(EngineError(
                              "partition " + std::to_string(index) + ": " + e.what())));
  } catch (...) {
    record_failure(index, std::make_exception_ptr(EngineError(
                              "partition " + std::to_string(index) + ": unknown error")));
  }
}

void ThreadPool::record_failure(std::size_t index, std::exception_ptr error) {
  std::lock_guard lock(mutex_);
  if (!has_failure_ || index < failure_index_) {
    has_failure_ = true;
    failure_index_ = index;
    failure_ = std::move(error);
  }
}

void ThreadPool::worker_loop() {
  std::uint64_t seen_phase = 0;
  for (;;) {
    std::unique_lock lock(mutex_);
    work_cv_.wait(lock, [&] { return stop_ || phase_ != seen_phase; });
    if (stop_) return;
    seen_phase = phase_;
    ++active_;
    while (next_ < count_) {
      std::size_t index = next_++;
      lock.unlock();
      execute(index);
      lock.lock();
      ++completed_;
    }
    --active_;
    if (completed_ == count_ && active_ == 0) done_cv_.notify_all();
  }
}

void ThreadPool::run_indexed(std::size_t count,
                             const std::function<void(std::size_t)>& body) {
  if (count == 0) return;

  if (threads_.empty()) {
    body_ = &body;
    has_failure_ = false;
    for (std::size_t i = 0; i < count; ++i) execute(i);
  } else {
    std::unique_lock lock(mutex_);
    body_ = &body;
    count_ = count;
    next_ = 0;
    completed_ = 0;
    has_failure_ = false;
    ++phase_;
    work_cv_.notify_all();
    // The driver claims indices too; everyone drains the same counter.
    while (next_ < count_) {
      std::size_t index = next_++;
      lock.unlock();
      execute(index);
      lock.lock();
      ++completed_;
    }
    done_cv_.wait(lock, [&] { return completed_ == count_ && active_ == 0; });
  }

  if (has_failure_) std::rethrow_exception(failure_);
}

ThreadPool& global_pool() {
  static std::unique_ptr<ThreadPool> pool;
  int want = worker_count();
  if (!pool || pool->workers() != want) {
    pool = std::make_unique<ThreadPool>(want);
  }
  return *pool;
}

}  // namespace parlin::engine
