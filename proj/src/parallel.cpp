#include "grasscub/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace grasscub {

namespace {
std::atomic<int> g_thread_override{0};
}

void set_thread_override(int threads) { g_thread_override.store(threads); }

int default_threads() {
  const int forced = g_thread_override.load();
  if (forced > 0) return forced;
  if (const char* env = std::getenv("GRASSCUB_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_chunks(std::int64_t n, int n_chunks,
                     const std::function<void(int, std::int64_t, std::int64_t)>& fn,
                     int threads) {
  if (n <= 0) return;
  n_chunks = std::max(1, std::min<std::int64_t>(n_chunks, n) > 0
                             ? static_cast<int>(std::min<std::int64_t>(n_chunks, n))
                             : 1);
  if (threads <= 0) threads = default_threads();

  auto chunk_bounds = [&](int c) {
    const std::int64_t begin = n * c / n_chunks;
    const std::int64_t end = n * (c + 1) / n_chunks;
    return std::pair<std::int64_t, std::int64_t>(begin, end);
  };

  if (threads == 1 || n_chunks == 1) {
    for (int c = 0; c < n_chunks; ++c) {
      auto [begin, end] = chunk_bounds(c);
      fn(c, begin, end);
    }
    return;
  }

  std::atomic<int> next{0};
  auto worker = [&] {
    for (;;) {
      const int c = next.fetch_add(1);
      if (c >= n_chunks) break;
      auto [begin, end] = chunk_bounds(c);
      fn(c, begin, end);
    }
  };
  std::vector<std::thread> pool;
  const int n_workers = std::min(threads, n_chunks);
  pool.reserve(static_cast<std::size_t>(n_workers - 1));
  for (int i = 1; i < n_workers; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

}  // namespace grasscub
