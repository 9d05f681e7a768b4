#include "bandsolve/common.hpp"

#include <atomic>

namespace bandsolve::alloc_stats {

namespace {
std::atomic<std::int64_t> g_live{0};
std::atomic<std::int64_t> g_events{0};
}  // namespace

std::int64_t live_elements() { return g_live.load(std::memory_order_relaxed); }

std::int64_t allocation_events() {
  return g_events.load(std::memory_order_relaxed);
}

void on_alloc(std::size_t elements) {
  if (elements == 0) return;
  g_live.fetch_add(static_cast<std::int64_t>(elements),
                   std::memory_order_relaxed);
  g_events.fetch_add(1, std::memory_order_relaxed);
}

void on_free(std::size_t elements) {
  if (elements == 0) return;
  g_live.fetch_sub(static_cast<std::int64_t>(elements),
                   std::memory_order_relaxed);
}

}  // namespace bandsolve::alloc_stats
