#pragma once
#include <atomic>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <span>
#include <thread>
#include <vector>

namespace lipkit {

inline int thread_count() {
  if (const char* env = std::getenv("LIPKIT_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? int(hc) : 1;
}

// Runs fn(begin, end) over fixed-size chunks. Chunking is a function of n
// only, never of the thread count, so any per-chunk results combine in a
// reproducible order.
inline void parallel_chunks(size_t n, size_t chunk,
                            const std::function<void(size_t, size_t, size_t)>& fn) {
  if (chunk == 0) chunk = 1;
  size_t nchunks = (n + chunk - 1) / chunk;
  int nt = thread_count();
  if (nt <= 1 || nchunks <= 1) {
    for (size_t c = 0; c < nchunks; ++c)
      fn(c, c * chunk, std::min(n, (c + 1) * chunk));
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<size_t> next{0};
  for (int t = 0; t < nt; ++t)
    pool.emplace_back([&] {
      for (;;) {
        size_t c = next.fetch_add(1);
        if (c >= nchunks) return;
        fn(c, c * chunk, std::min(n, (c + 1) * chunk));
      }
    });
  for (auto& th : pool) th.join();
}

// Deterministic sum over chunked partials: chunk partials are computed with a
// serial loop and combined in chunk order, so the result does not depend on
// the number of worker threads.
inline double parallel_sum(size_t n, size_t chunk,
                           const std::function<double(size_t, size_t)>& partial) {
  if (chunk == 0) chunk = 1;
  size_t nchunks = (n + chunk - 1) / chunk;
  std::vector<double> parts(nchunks, 0.0);
  parallel_chunks(n, chunk, [&](size_t c, size_t b, size_t e) { parts[c] = partial(b, e); });
  double s = 0.0;
  for (double p : parts) s += p;
  return s;
}

// Pairwise summation; deterministic for a fixed input order.
inline double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 8) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  size_t half = v.size() / 2;
  return pairwise_sum(v.subspan(0, half)) + pairwise_sum(v.subspan(half));
}

}  // namespace lipkit
