#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace isinglearn {

/// Worker count resolution: explicit request > ISINGLEARN_WORKERS env var >
/// hardware concurrency. Always at least 1.
inline unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("ISINGLEARN_WORKERS")) {
    const long value = std::atol(env);
    if (value > 0) return static_cast<unsigned>(value);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1u;
}

/// Runs fn(i) for i in [0, count) on a pool of worker threads. Work items
/// must be independent; each item owns its output slot, so results are
/// deterministic regardless of scheduling.
inline void parallel_for(std::size_t count,
                         const std::function<void(std::size_t)>& fn,
                         unsigned workers = 0) {
  workers = std::min<std::size_t>(resolve_workers(workers), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      while (!failed.load(std::memory_order_relaxed)) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) break;
        try {
          fn(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
          break;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace isinglearn
