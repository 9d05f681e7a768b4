#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bandsolve {

using real = double;

// Elimination denominators whose magnitude falls below this are reported as
// breakdown. The solvers are pivot-free and target diagonally dominant /
// symmetric positive definite systems, so only exact or near-exact zero
// pivots are flagged.
inline constexpr real breakdown_eps = 1e-300;

class solve_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class bad_argument : public solve_error {
public:
  using solve_error::solve_error;
};

class shape_mismatch : public solve_error {
public:
  using solve_error::solve_error;
};

class factorization_breakdown : public solve_error {
public:
  using solve_error::solve_error;
};

class division_by_zero : public solve_error {
public:
  using solve_error::solve_error;
};

class singular_correction : public solve_error {
public:
  using solve_error::solve_error;
};

class singular_matrix : public solve_error {
public:
  using solve_error::solve_error;
};

// Malformed IBAT framing (bad magic, version, or payload size).
class format_error : public solve_error {
public:
  using solve_error::solve_error;
};

class io_error : public solve_error {
public:
  using solve_error::solve_error;
};

// Counters over every real_buffer allocation in the library. Tests audit
// element counts against the storage formulas by taking deltas of
// live_elements; allocation_events is monotone and is used to assert that
// timed benchmark loops perform no allocation.
namespace alloc_stats {

std::int64_t live_elements();
std::int64_t allocation_events();
void on_alloc(std::size_t elements);
void on_free(std::size_t elements);

}  // namespace alloc_stats

// Fixed-size buffer of reals. All solver-owned real storage (bands, factor
// vectors, batch payloads) goes through this type so the accounting above
// sees exactly the stored reals and nothing else.
class real_buffer {
public:
  real_buffer() = default;

  explicit real_buffer(std::size_t n, real fill = 0.0) : v_(n, fill) {
    alloc_stats::on_alloc(v_.size());
  }

  explicit real_buffer(std::vector<real> v) : v_(std::move(v)) {
    alloc_stats::on_alloc(v_.size());
  }

  real_buffer(const real_buffer& other) : v_(other.v_) {
    alloc_stats::on_alloc(v_.size());
  }

  real_buffer(real_buffer&& other) noexcept : v_(std::move(other.v_)) {
    other.v_.clear();
  }

  real_buffer& operator=(const real_buffer& other) {
    if (this != &other) {
      alloc_stats::on_free(v_.size());
      v_ = other.v_;
      alloc_stats::on_alloc(v_.size());
    }
    return *this;
  }

  real_buffer& operator=(real_buffer&& other) noexcept {
    if (this != &other) {
      alloc_stats::on_free(v_.size());
      v_ = std::move(other.v_);
      other.v_.clear();
    }
    return *this;
  }

  ~real_buffer() { alloc_stats::on_free(v_.size()); }

  std::size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }
  real* data() { return v_.data(); }
  const real* data() const { return v_.data(); }
  real& operator[](std::size_t i) { return v_[i]; }
  const real& operator[](std::size_t i) const { return v_[i]; }
  auto begin() { return v_.begin(); }
  auto end() { return v_.end(); }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

private:
  std::vector<real> v_;
};

}  // namespace bandsolve
