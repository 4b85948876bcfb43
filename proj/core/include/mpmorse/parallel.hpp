#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace mpmorse {

/// Resolves a requested worker count; 0 means "available parallelism".
inline unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls body(i) for every i in [0, count) on up to `workers` threads.
///
/// Work is handed out in chunks through a shared counter, so the assignment
/// of indices to threads is not deterministic. Callers that need
/// reproducible output write results into per-index slots. The first
/// exception thrown by any body is rethrown on the calling thread.
template <typename Body>
void parallel_for(std::size_t count, unsigned workers, Body&& body,
                  std::size_t chunk = 64) {
  workers = resolve_workers(workers);
  if (workers <= 1 || count <= chunk) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto run = [&] {
    try {
      for (;;) {
        std::size_t begin = next.fetch_add(chunk, std::memory_order_relaxed);
        if (begin >= count) break;
        std::size_t end = std::min(count, begin + chunk);
        for (std::size_t i = begin; i < end; ++i) body(i);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(count, std::memory_order_relaxed);
    }
  };

  std::size_t spawn = std::min<std::size_t>(workers, (count + chunk - 1) / chunk);
  {
    std::vector<std::jthread> pool;
    pool.reserve(spawn - 1);
    for (std::size_t t = 1; t < spawn; ++t) pool.emplace_back(run);
    run();
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace mpmorse
