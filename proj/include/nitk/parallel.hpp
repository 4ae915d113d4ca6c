#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace nitk {

// Worker count: explicit override > NITK_THREADS > hardware concurrency.
inline int worker_count(int override_count = 0) {
  if (override_count > 0) return override_count;
  if (const char* env = std::getenv("NITK_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// Splits [0, n) into contiguous chunks and runs fn(chunk_index, begin, end) on
// a pool of threads. Chunk boundaries depend only on n and the fixed chunk
// count, never on scheduling, so per-chunk results can be reduced in chunk
// order to make the outcome independent of the worker count.
template <typename Fn>
void parallel_chunks(std::size_t n, int threads, Fn&& fn) {
  constexpr std::size_t kChunksPerThreadTarget = 1;
  int workers = std::max(1, threads);
  std::size_t chunks = std::max<std::size_t>(1, workers * kChunksPerThreadTarget);
  chunks = std::min(chunks, std::max<std::size_t>(1, n));
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  for (std::size_t c = 0; c < chunks; ++c) {
    std::size_t b = n * c / chunks;
    std::size_t e = n * (c + 1) / chunks;
    ranges.emplace_back(b, e);
  }
  if (workers == 1 || chunks == 1) {
    for (std::size_t c = 0; c < ranges.size(); ++c) fn(c, ranges[c].first, ranges[c].second);
    return;
  }
  std::vector<std::thread> pool;
  std::size_t next = 0;
  // Static assignment round-robin over chunks keeps it simple; chunk work is
  // uniform in all call sites.
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (std::size_t c = static_cast<std::size_t>(w); c < ranges.size(); c += workers)
        fn(c, ranges[c].first, ranges[c].second);
    });
    (void)next;
  }
  for (auto& t : pool) t.join();
}

}  // namespace nitk
