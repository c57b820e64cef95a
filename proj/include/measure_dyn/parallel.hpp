#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

#include "measure_dyn/types.hpp"

namespace measure_dyn {

/// Worker cap: MEASURE_DYN_THREADS env var, 0 or unset = hardware concurrency.
inline int thread_count() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  if (const char* env = std::getenv("MEASURE_DYN_THREADS")) {
    int cap = std::atoi(env);
    if (cap > 0) return cap < hw ? cap : hw;
  }
  return hw;
}

/// Chunked parallel map over [0, n).  fn(begin, end) must be independent
/// across chunks; results written by index stay deterministic regardless of
/// scheduling.
template <typename Fn>
void parallel_for(Index n, Fn&& fn) {
  int workers = thread_count();
  if (workers <= 1 || n < 2) {
    fn(Index{0}, n);
    return;
  }
  if (workers > n) workers = static_cast<int>(n);
  Index chunk = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    Index b = w * chunk;
    Index e = std::min(n, b + chunk);
    if (b >= e) break;
    pool.emplace_back([&fn, b, e] { fn(b, e); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace measure_dyn
