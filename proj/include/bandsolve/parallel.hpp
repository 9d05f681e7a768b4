#pragma once

#include <cstddef>
#include <type_traits>

namespace bandsolve {

// Number of workers used for system-parallel sweeps. Resolution order:
// set_worker_count() > BANDSOLVE_THREADS > hardware concurrency.
int worker_count();

// n >= 1 pins the count; n = 0 restores the environment/hardware default.
void set_worker_count(int n);

namespace detail {
using chunk_fn = void (*)(void* ctx, std::size_t j0, std::size_t j1);
void run_chunked(std::size_t m, void* ctx, chunk_fn fn);
}  // namespace detail

// Partition the system index range [0, m) into one contiguous chunk per
// worker and run fn(j0, j1) on each. Every system's arithmetic is fixed and
// independent of the partition, so results are bitwise identical for any
// worker count.
template <typename F>
void parallel_columns(std::size_t m, F&& fn) {
  using fn_type = std::remove_reference_t<F>;
  auto trampoline = [](void* ctx, std::size_t j0, std::size_t j1) {
    (*static_cast<fn_type*>(ctx))(j0, j1);
  };
  detail::run_chunked(m, &fn, trampoline);
}

}  // namespace bandsolve
