#include "bandsolve/batch.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <memory>

namespace bandsolve {

interleaved_batch::interleaved_batch(std::size_t n, std::size_t m)
    : n_(n), m_(m), data_(n * m) {
  if (n == 0 || m == 0) throw bad_argument("batch shape must be positive");
}

interleaved_batch interleave(const std::vector<std::vector<real>>& systems) {
  if (systems.empty()) throw bad_argument("empty batch");
  const std::size_t n = systems.front().size();
  if (n == 0) throw bad_argument("empty system");
  for (const auto& s : systems) {
    if (s.size() != n) {
      throw shape_mismatch("all systems must have the same length");
    }
  }
  const std::size_t m = systems.size();
  interleaved_batch batch(n, m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) batch.at(i, j) = systems[j][i];
  }
  return batch;
}

std::vector<std::vector<real>> deinterleave(const interleaved_batch& batch) {
  std::vector<std::vector<real>> systems(batch.systems());
  for (std::size_t j = 0; j < batch.systems(); ++j) {
    systems[j].resize(batch.rows());
    for (std::size_t i = 0; i < batch.rows(); ++i) {
      systems[j][i] = batch.at(i, j);
    }
  }
  return systems;
}

void fill_replicated(interleaved_batch& batch, std::span<const real> values) {
  if (values.size() != batch.rows()) {
    throw shape_mismatch("replicated values length != batch rows");
  }
  for (std::size_t i = 0; i < batch.rows(); ++i) {
    real* row = batch.row(i);
    const real v = values[i];
    for (std::size_t j = 0; j < batch.systems(); ++j) row[j] = v;
  }
}

interleaved_batch replicated_batch(std::span<const real> values,
                                   std::size_t m) {
  interleaved_batch batch(values.size(), m);
  fill_replicated(batch, values);
  return batch;
}

const char* variant_name(storage_variant v) {
  switch (v) {
    case storage_variant::tri_per_system: return "tri_per_system";
    case storage_variant::tri_shared: return "tri_shared";
    case storage_variant::pent_per_system: return "pent_per_system";
    case storage_variant::pent_shared: return "pent_shared";
    case storage_variant::pent_uniform: return "pent_uniform";
  }
  return "unknown";
}

footprint_report footprint(storage_variant v, std::size_t n, std::size_t m) {
  if (n < 2 || m < 1) throw bad_argument("footprint needs n >= 2, m >= 1");
  const std::uint64_t un = n;
  const std::uint64_t um = m;
  footprint_report r;
  r.variant = v;
  r.n = n;
  r.m = m;
  std::uint64_t baseline = 0;
  switch (v) {
    case storage_variant::tri_per_system:
      r.element_count = 4 * um * un;
      baseline = r.element_count;
      break;
    case storage_variant::tri_shared:
      r.element_count = 3 * un + un * um;
      baseline = 4 * um * un;
      break;
    case storage_variant::pent_per_system:
      r.element_count = 6 * um * un;
      baseline = r.element_count;
      break;
    case storage_variant::pent_shared:
      r.element_count = 5 * un + un * um;
      baseline = 6 * um * un;
      break;
    case storage_variant::pent_uniform:
      r.element_count = 4 * un + un * um;
      baseline = 6 * um * un;
      break;
  }
  r.reduction_vs_baseline =
      1.0 - static_cast<double>(r.element_count) / static_cast<double>(baseline);
  return r;
}

// ----------------------------------------------------------------------------
// IBAT I/O. All header fields and payload values are little-endian.
// ----------------------------------------------------------------------------

namespace {

constexpr char ibat_magic[4] = {'I', 'B', 'A', 'T'};
constexpr std::uint32_t ibat_version = 1;

void put_u32_le(unsigned char* p, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) p[i] = static_cast<unsigned char>(v >> (8 * i));
}

void put_u64_le(unsigned char* p, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) p[i] = static_cast<unsigned char>(v >> (8 * i));
}

std::uint32_t get_u32_le(const unsigned char* p) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(p[i]) << (8 * i);
  return v;
}

std::uint64_t get_u64_le(const unsigned char* p) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
  return v;
}

struct file_closer {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using file_ptr = std::unique_ptr<std::FILE, file_closer>;

}  // namespace

void write_ibat(const std::string& path, const interleaved_batch& batch) {
  file_ptr f(std::fopen(path.c_str(), "wb"));
  if (!f) throw io_error("cannot open for writing: " + path);

  unsigned char header[24];
  std::memcpy(header, ibat_magic, 4);
  put_u32_le(header + 4, ibat_version);
  put_u64_le(header + 8, batch.rows());
  put_u64_le(header + 16, batch.systems());
  if (std::fwrite(header, 1, sizeof header, f.get()) != sizeof header) {
    throw io_error("short write: " + path);
  }

  const std::size_t count = batch.size();
  std::vector<unsigned char> payload(count * 8);
  for (std::size_t k = 0; k < count; ++k) {
    put_u64_le(payload.data() + 8 * k,
               std::bit_cast<std::uint64_t>(batch.data()[k]));
  }
  if (std::fwrite(payload.data(), 1, payload.size(), f.get()) !=
      payload.size()) {
    throw io_error("short write: " + path);
  }
  if (std::fflush(f.get()) != 0) throw io_error("flush failed: " + path);
}

interleaved_batch read_ibat(const std::string& path) {
  file_ptr f(std::fopen(path.c_str(), "rb"));
  if (!f) throw io_error("cannot open for reading: " + path);

  unsigned char header[24];
  if (std::fread(header, 1, sizeof header, f.get()) != sizeof header) {
    throw format_error("truncated IBAT header: " + path);
  }
  if (std::memcmp(header, ibat_magic, 4) != 0) {
    throw format_error("bad IBAT magic: " + path);
  }
  if (get_u32_le(header + 4) != ibat_version) {
    throw format_error("unsupported IBAT version: " + path);
  }
  const std::uint64_t n = get_u64_le(header + 8);
  const std::uint64_t m = get_u64_le(header + 16);
  if (n == 0 || m == 0 || n > (1u << 28) || m > (1u << 28)) {
    throw format_error("implausible IBAT shape: " + path);
  }

  // validate the payload size before allocating anything
  if (std::fseek(f.get(), 0, SEEK_END) != 0) {
    throw io_error("seek failed: " + path);
  }
  const long file_size = std::ftell(f.get());
  if (file_size < 0 ||
      static_cast<std::uint64_t>(file_size) != 24 + n * m * 8) {
    throw format_error("IBAT payload size mismatch: " + path);
  }
  if (std::fseek(f.get(), 24, SEEK_SET) != 0) {
    throw io_error("seek failed: " + path);
  }

  interleaved_batch batch(static_cast<std::size_t>(n),
                          static_cast<std::size_t>(m));
  const std::size_t count = batch.size();
  std::vector<unsigned char> payload(count * 8);
  if (std::fread(payload.data(), 1, payload.size(), f.get()) !=
      payload.size()) {
    throw format_error("truncated IBAT payload: " + path);
  }
  for (std::size_t k = 0; k < count; ++k) {
    batch.data()[k] =
        std::bit_cast<real>(get_u64_le(payload.data() + 8 * k));
  }
  return batch;
}

}  // namespace bandsolve
