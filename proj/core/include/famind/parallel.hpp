#pragma once

#include <atomic>
#include <thread>
#include <vector>

namespace famind {

// Runs f(0..n-1) across `threads` workers and collects results by index, so
// the output is identical for every thread count.
template <typename R, typename Fn>
std::vector<R> parallel_map(size_t n, int threads, Fn&& f) {
  std::vector<R> results(n);
  if (threads <= 1 || n <= 1) {
    for (size_t i = 0; i < n; ++i) results[i] = f(i);
    return results;
  }
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) results[i] = f(i);
  };
  std::vector<std::thread> pool;
  size_t count = std::min<size_t>(size_t(threads), n);
  pool.reserve(count);
  for (size_t t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace famind
