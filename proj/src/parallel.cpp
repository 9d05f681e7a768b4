#include "bandsolve/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bandsolve {

namespace {

int default_worker_count() {
  if (const char* env = std::getenv("BANDSOLVE_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

std::atomic<int> g_workers{0};  // 0 = resolve from environment/hardware

}  // namespace

int worker_count() {
  const int pinned = g_workers.load(std::memory_order_relaxed);
  return pinned >= 1 ? pinned : default_worker_count();
}

void set_worker_count(int n) {
  g_workers.store(n >= 1 ? n : 0, std::memory_order_relaxed);
}

namespace detail {

void run_chunked(std::size_t m, void* ctx, chunk_fn fn) {
  if (m == 0) return;
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(worker_count()), m);
  if (workers <= 1) {
    fn(ctx, 0, m);
    return;
  }
#ifdef _OPENMP
#pragma omp parallel for num_threads(static_cast<int>(workers)) \
    schedule(static, 1)
  for (long k = 0; k < static_cast<long>(workers); ++k) {
    const std::size_t j0 = m * static_cast<std::size_t>(k) / workers;
    const std::size_t j1 = m * (static_cast<std::size_t>(k) + 1) / workers;
    fn(ctx, j0, j1);
  }
#else
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t k = 1; k < workers; ++k) {
    const std::size_t j0 = m * k / workers;
    const std::size_t j1 = m * (k + 1) / workers;
    pool.emplace_back([=] { fn(ctx, j0, j1); });
  }
  fn(ctx, 0, m / workers);
  for (auto& t : pool) t.join();
#endif
}

}  // namespace detail

}  // namespace bandsolve
