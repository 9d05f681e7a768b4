#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bandsolve/common.hpp"

namespace bandsolve {

// N x M right-hand-side / solution block in row-interleaved order: element
// (row i, system j) lives at data[i*m + j]. Each sweep step therefore
// streams M consecutive values while the shared factor entry for row i stays
// in register. Workers may write disjoint system ranges concurrently.
class interleaved_batch {
public:
  interleaved_batch() = default;
  interleaved_batch(std::size_t n, std::size_t m);

  std::size_t rows() const { return n_; }
  std::size_t systems() const { return m_; }
  std::size_t size() const { return data_.size(); }

  real& at(std::size_t i, std::size_t j) { return data_[i * m_ + j]; }
  real at(std::size_t i, std::size_t j) const { return data_[i * m_ + j]; }
  real* row(std::size_t i) { return data_.data() + i * m_; }
  const real* row(std::size_t i) const { return data_.data() + i * m_; }
  real* data() { return data_.data(); }
  const real* data() const { return data_.data(); }

  bool same_shape(const interleaved_batch& o) const {
    return n_ == o.n_ && m_ == o.m_;
  }

private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  real_buffer data_;
};

// Layout conversions. The solvers only ever accept the interleaved form;
// converting is the caller's job and is deliberately explicit.
interleaved_batch interleave(const std::vector<std::vector<real>>& systems);
std::vector<std::vector<real>> deinterleave(const interleaved_batch& batch);

// Write row i = values[i] into every system of an existing batch (no
// allocation; used to reset per-system band copies between solves).
void fill_replicated(interleaved_batch& batch, std::span<const real> values);
interleaved_batch replicated_batch(std::span<const real> values,
                                   std::size_t m);

// ----------------------------------------------------------------------------
// Storage accounting for the five solver variants, counting stored reals for
// LHS/factor plus right-hand sides and nothing else.
//
//   tri  per-system  4 N M        tri  shared  3 N + N M
//   pent per-system  6 N M        pent shared  5 N + N M
//                                 pent uniform 4 N + N M
// ----------------------------------------------------------------------------
enum class storage_variant {
  tri_per_system,
  tri_shared,
  pent_per_system,
  pent_shared,
  pent_uniform,
};

const char* variant_name(storage_variant v);

struct footprint_report {
  storage_variant variant;
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t element_count = 0;
  // 1 - shared/baseline against the matching per-system variant; zero for
  // the baselines themselves.
  double reduction_vs_baseline = 0.0;
};

footprint_report footprint(storage_variant v, std::size_t n, std::size_t m);

// ----------------------------------------------------------------------------
// IBAT batch file: little-endian header (magic "IBAT", u32 version = 1,
// u64 n, u64 m) followed by n*m IEEE-754 binary64 values in interleaved
// order. Round trips are byte-exact.
// ----------------------------------------------------------------------------
void write_ibat(const std::string& path, const interleaved_batch& batch);
interleaved_batch read_ibat(const std::string& path);

}  // namespace bandsolve
