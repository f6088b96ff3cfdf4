#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace resiclose {

// threads == 0 means "decide automatically": the RESICLOSE_THREADS
// environment variable when set to a positive value, otherwise the hardware
// concurrency. threads == 1 runs inline on the calling thread.
struct ExecutionOptions {
  std::size_t threads = 0;
};

std::size_t resolve_thread_count(const ExecutionOptions& options);

// Calls fn(i) for every i in [0, count). Work is handed out dynamically;
// callers write results into pre-sized slots so output order never depends on
// scheduling. The first exception thrown by any task is rethrown here.
template <class Fn>
void parallel_for(std::size_t count, const ExecutionOptions& options, Fn&& fn) {
  std::size_t workers = std::min(resolve_thread_count(options), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto body = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count, std::memory_order_relaxed);
        return;
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(body);
    body();
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace resiclose
