#include "ilkit/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace ilkit {

int worker_count() {
  if (const char* env = std::getenv("ILKIT_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) {
      return static_cast<int>(v > 256 ? 256 : v);
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::optional<std::int64_t> least_index_where(
    std::int64_t count, const std::function<bool(std::int64_t)>& pred) {
  if (count <= 0) return std::nullopt;
  int workers = worker_count();
  // Small scans are cheaper sequentially than thread startup.
  if (workers <= 1 || count < 4096) {
    for (std::int64_t i = 0; i < count; ++i) {
      if (pred(i)) return i;
    }
    return std::nullopt;
  }
  std::atomic<std::int64_t> best{count};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      for (std::int64_t i = t; i < count; i += workers) {
        // Strided indices ascend, so once i passes the best hit nothing on
        // this stride can be the least witness.
        if (i >= best.load(std::memory_order_relaxed)) break;
        if (pred(i)) {
          std::int64_t cur = best.load(std::memory_order_relaxed);
          while (i < cur &&
                 !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
          }
          break;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  std::int64_t found = best.load(std::memory_order_relaxed);
  if (found < count) return found;
  return std::nullopt;
}

}  // namespace ilkit
