#pragma once

// Deterministic parallel-for: workers fill disjoint index ranges of a
// preallocated buffer, so results are identical regardless of thread count.
// DIRICHLET_THREADS caps the worker count (default: hardware concurrency).

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace dirichlet {

inline unsigned thread_cap() {
  if (const char* env = std::getenv("DIRICHLET_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

template <typename Fn>
void parallel_for(std::size_t count, Fn&& body) {
  unsigned workers = std::min<std::size_t>(thread_cap(), count ? count : 1);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::size_t chunk = (count + workers - 1) / workers;
  for (unsigned t = 0; t < workers; ++t) {
    std::size_t lo = t * chunk;
    std::size_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &body] {
      for (std::size_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace dirichlet
