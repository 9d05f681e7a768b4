// bandsolve command line tool: benchmark sweeps, one-shot batch solves and
// storage footprint reports on top of the C API.

#include <algorithm>
#include <cerrno>
#include <cstdio>
#include <cstdint>
#include <cstring>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bandsolve.h"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_solver = 1;
constexpr int exit_args = 2;
constexpr int exit_bad_ibat = 3;

// ------------------------------------------------------------------
// small helpers
// ------------------------------------------------------------------

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

bool parse_size_list(const std::string& s, std::vector<size_t>& out) {
  for (const std::string& p : split_csv(s)) {
    try {
      size_t pos = 0;
      const unsigned long long v = std::stoull(p, &pos);
      if (pos != p.size() || v == 0) return false;
      out.push_back(static_cast<size_t>(v));
    } catch (...) {
      return false;
    }
  }
  return !out.empty();
}

bool parse_real_list(const std::string& s, std::vector<double>& out) {
  for (const std::string& p : split_csv(s)) {
    try {
      size_t pos = 0;
      const double v = std::stod(p, &pos);
      if (pos != p.size()) return false;
      out.push_back(v);
    } catch (...) {
      return false;
    }
  }
  return !out.empty();
}

// Temp-file-plus-rename so a failed run never leaves a partial file.
bool atomic_write(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  std::FILE* f = std::fopen(tmp.c_str(), "wb");
  if (!f) return false;
  const bool ok =
      std::fwrite(content.data(), 1, content.size(), f) == content.size() &&
      std::fflush(f) == 0;
  std::fclose(f);
  if (!ok || std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    return false;
  }
  return true;
}

std::string speedup_path(const std::string& out_path) {
  const std::string suffix = ".csv";
  if (out_path.size() > suffix.size() &&
      out_path.compare(out_path.size() - suffix.size(), suffix.size(),
                       suffix) == 0) {
    return out_path.substr(0, out_path.size() - suffix.size()) +
           ".speedup.csv";
  }
  return out_path + ".speedup";
}

struct batch_handle {
  bandsolve_batch* p = nullptr;
  ~batch_handle() { bandsolve_batch_destroy(p); }
};

int map_status_exit(bandsolve_status st) {
  switch (st) {
    case BANDSOLVE_OK: return exit_ok;
    case BANDSOLVE_ERR_BAD_ARG: return exit_args;
    case BANDSOLVE_ERR_BAD_FORMAT:
    case BANDSOLVE_ERR_IO: return exit_bad_ibat;
    default: return exit_solver;
  }
}

// ------------------------------------------------------------------
// bench
// ------------------------------------------------------------------

struct bench_options {
  std::string problem = "diffusion";
  std::string variants = "shared,persystem";
  std::string n_list = "64,128,256";
  std::string m_list = "64,256,1024";
  long steps = 1000;
  double dt = 0.0;
  int threads = 0;
  std::string out = "bench.csv";
  long dump_every = 0;
  std::string dump_prefix;
};

int run_bench(const bench_options& opt) {
  std::vector<int> problems;
  if (opt.problem == "diffusion") {
    problems = {BANDSOLVE_PROBLEM_DIFFUSION};
  } else if (opt.problem == "hyperdiffusion") {
    problems = {BANDSOLVE_PROBLEM_HYPERDIFFUSION};
  } else if (opt.problem == "both") {
    problems = {BANDSOLVE_PROBLEM_DIFFUSION, BANDSOLVE_PROBLEM_HYPERDIFFUSION};
  } else {
    std::fprintf(stderr, "unknown problem '%s'\n", opt.problem.c_str());
    return exit_args;
  }

  std::vector<int> variants;
  for (const std::string& v : split_csv(opt.variants)) {
    if (v == "shared") {
      variants.push_back(BANDSOLVE_VARIANT_SHARED);
    } else if (v == "persystem") {
      variants.push_back(BANDSOLVE_VARIANT_PER_SYSTEM);
    } else if (v == "uniform") {
      variants.push_back(BANDSOLVE_VARIANT_UNIFORM);
    } else {
      std::fprintf(stderr, "unknown variant '%s'\n", v.c_str());
      return exit_args;
    }
  }
  if (variants.empty()) {
    std::fprintf(stderr, "empty variant list\n");
    return exit_args;
  }
  const bool has_uniform =
      std::count(variants.begin(), variants.end(),
                 static_cast<int>(BANDSOLVE_VARIANT_UNIFORM)) > 0;
  const bool has_diffusion =
      std::count(problems.begin(), problems.end(),
                 static_cast<int>(BANDSOLVE_PROBLEM_DIFFUSION)) > 0;
  if (has_uniform && has_diffusion) {
    std::fprintf(stderr,
                 "the uniform variant applies to hyperdiffusion only\n");
    return exit_args;
  }

  std::vector<size_t> ns, ms;
  if (!parse_size_list(opt.n_list, ns) || !parse_size_list(opt.m_list, ms)) {
    std::fprintf(stderr, "bad --n/--m list\n");
    return exit_args;
  }
  if (opt.steps < 1) {
    std::fprintf(stderr, "--steps must be >= 1\n");
    return exit_args;
  }
  if (opt.threads > 0) bandsolve_set_threads(opt.threads);

  std::string csv =
      "problem,variant,n,m,steps,threads,wall_s,per_step_mean_s,"
      "per_step_std_s,elements\n";
  // per (problem, n, m): variant -> per-step mean
  std::map<std::string, std::map<int, double>> cell_means;

  for (int problem : problems) {
    const char* pname =
        problem == BANDSOLVE_PROBLEM_DIFFUSION ? "diffusion" : "hyperdiffusion";
    for (int variant : variants) {
      const char* vname = variant == BANDSOLVE_VARIANT_SHARED ? "shared"
                          : variant == BANDSOLVE_VARIANT_PER_SYSTEM
                              ? "persystem"
                              : "uniform";
      for (size_t n : ns) {
        for (size_t m : ms) {
          bandsolve_bench_params params{};
          params.n = n;
          params.m = m;
          params.steps = opt.steps;
          params.dt = opt.dt;
          params.problem = problem;
          params.variant = variant;
          params.dump_every = opt.dump_every;
          params.dump_prefix =
              opt.dump_prefix.empty() ? nullptr : opt.dump_prefix.c_str();

          bandsolve_bench_result result{};
          const bandsolve_status st = bandsolve_bench_run(&params, &result);
          if (st != BANDSOLVE_OK) {
            std::fprintf(stderr, "bench cell %s/%s n=%zu m=%zu failed: %s\n",
                         pname, vname, n, m, bandsolve_status_string(st));
            return map_status_exit(st);
          }

          char line[320];
          std::snprintf(line, sizeof line,
                        "%s,%s,%zu,%zu,%ld,%d,%.9e,%.9e,%.9e,%llu\n", pname,
                        vname, n, m, result.steps, result.threads,
                        result.wall_s, result.per_step_mean_s,
                        result.per_step_std_s,
                        static_cast<unsigned long long>(result.elements));
          csv += line;

          char key[96];
          std::snprintf(key, sizeof key, "%s,%zu,%zu", pname, n, m);
          cell_means[key][variant] = result.per_step_mean_s;
        }
      }
    }
  }

  if (!atomic_write(opt.out, csv)) {
    std::fprintf(stderr, "cannot write %s\n", opt.out.c_str());
    return exit_solver;
  }

  // companion speedup table: per-system time divided by each other
  // variant's time, per (n, m) cell
  const bool has_per_system =
      std::count(variants.begin(), variants.end(),
                 static_cast<int>(BANDSOLVE_VARIANT_PER_SYSTEM)) > 0;
  if (has_per_system && variants.size() > 1) {
    std::string speedup_csv = "problem,n,m,variant,speedup_vs_persystem\n";
    for (int problem : problems) {
      const char* pname = problem == BANDSOLVE_PROBLEM_DIFFUSION
                              ? "diffusion"
                              : "hyperdiffusion";
      for (size_t n : ns) {
        for (size_t m : ms) {
          char key[96];
          std::snprintf(key, sizeof key, "%s,%zu,%zu", pname, n, m);
          const auto& cell = cell_means[key];
          const auto base = cell.find(BANDSOLVE_VARIANT_PER_SYSTEM);
          if (base == cell.end()) continue;
          for (int variant : variants) {
            if (variant == BANDSOLVE_VARIANT_PER_SYSTEM) continue;
            const auto it = cell.find(variant);
            if (it == cell.end()) continue;
            const char* vname =
                variant == BANDSOLVE_VARIANT_SHARED ? "shared" : "uniform";
            char line[160];
            std::snprintf(line, sizeof line, "%s,%zu,%zu,%s,%.6f\n", pname, n,
                          m, vname, base->second / it->second);
            speedup_csv += line;
          }
        }
      }
    }
    const std::string path = speedup_path(opt.out);
    if (!atomic_write(path, speedup_csv)) {
      std::fprintf(stderr, "cannot write %s\n", path.c_str());
      return exit_solver;
    }
  }
  return exit_ok;
}

// ------------------------------------------------------------------
// solve
// ------------------------------------------------------------------

struct solve_options {
  std::string in_path;
  std::string out_path;
  std::string type;  // tri | pent; inferred from --bands when empty
  std::string bands;
  std::string band_file;
  std::string variant = "shared";
  bool periodic = false;
  bool check = false;
  int threads = 0;
};

struct band_set {
  bool pent = false;
  bool constant = false;
  double const_bands[5] = {0, 0, 0, 0, 0};
  std::vector<double> a, b, c, d, e;  // tri uses b=sub, c=diag, d=sup order?
};

// Band vectors in API order. For tri: sub/diag/sup live in a/b/c.
bool load_band_file(const std::string& path, band_set& bands) {
  std::FILE* f = std::fopen(path.c_str(), "r");
  if (!f) {
    std::fprintf(stderr, "cannot open band file %s\n", path.c_str());
    return false;
  }
  char kind[8] = {0};
  unsigned long long n = 0;
  if (std::fscanf(f, "%7s %llu", kind, &n) != 2 || n < 2) {
    std::fclose(f);
    std::fprintf(stderr, "band file must start with 'tri N' or 'pent N'\n");
    return false;
  }
  bands.pent = std::strcmp(kind, "pent") == 0;
  if (!bands.pent && std::strcmp(kind, "tri") != 0) {
    std::fclose(f);
    std::fprintf(stderr, "unknown band file kind '%s'\n", kind);
    return false;
  }
  const size_t cols = bands.pent ? 5 : 3;
  std::vector<double>* dest[5] = {&bands.a, &bands.b, &bands.c, &bands.d,
                                  &bands.e};
  for (unsigned long long i = 0; i < n; ++i) {
    for (size_t kcol = 0; kcol < cols; ++kcol) {
      double v = 0;
      if (std::fscanf(f, "%lf", &v) != 1) {
        std::fclose(f);
        std::fprintf(stderr, "band file truncated at row %llu\n", i);
        return false;
      }
      dest[kcol]->push_back(v);
    }
  }
  std::fclose(f);
  return true;
}

int run_solve(const solve_options& opt) {
  if (opt.threads > 0) bandsolve_set_threads(opt.threads);

  band_set bands;
  if (!opt.bands.empty() && !opt.band_file.empty()) {
    std::fprintf(stderr, "--bands and --band-file are mutually exclusive\n");
    return exit_args;
  }
  if (!opt.bands.empty()) {
    std::vector<double> vals;
    if (!parse_real_list(opt.bands, vals) ||
        (vals.size() != 3 && vals.size() != 5)) {
      std::fprintf(stderr, "--bands needs 3 (tri) or 5 (pent) values\n");
      return exit_args;
    }
    bands.constant = true;
    bands.pent = vals.size() == 5;
    for (size_t i = 0; i < vals.size(); ++i) bands.const_bands[i] = vals[i];
  } else if (!opt.band_file.empty()) {
    if (!load_band_file(opt.band_file, bands)) return exit_args;
  } else {
    std::fprintf(stderr, "one of --bands or --band-file is required\n");
    return exit_args;
  }
  if (!opt.type.empty() &&
      ((opt.type == "pent") != bands.pent || (opt.type != "pent" && opt.type != "tri"))) {
    std::fprintf(stderr, "--type disagrees with the supplied bands\n");
    return exit_args;
  }
  if (opt.periodic && !bands.constant) {
    std::fprintf(stderr, "periodic solves need constant bands (--bands)\n");
    return exit_args;
  }
  if (opt.variant != "shared" && opt.variant != "persystem" &&
      opt.variant != "uniform") {
    std::fprintf(stderr, "unknown variant '%s'\n", opt.variant.c_str());
    return exit_args;
  }
  if (opt.variant == "uniform" && (!bands.pent || !bands.constant)) {
    std::fprintf(stderr,
                 "the uniform variant needs constant pentadiagonal bands\n");
    return exit_args;
  }
  if (opt.variant == "uniform" && opt.periodic) {
    std::fprintf(stderr,
                 "the uniform variant supports non-periodic solves here; use "
                 "the bench command for the periodic uniform driver\n");
    return exit_args;
  }
  if (opt.in_path.empty() || opt.out_path.empty()) {
    std::fprintf(stderr, "--in and --out are required\n");
    return exit_args;
  }

  batch_handle rhs;
  {
    const bandsolve_status st =
        bandsolve_batch_read_ibat(opt.in_path.c_str(), &rhs.p);
    if (st != BANDSOLVE_OK) {
      std::fprintf(stderr, "cannot read %s: %s\n", opt.in_path.c_str(),
                   bandsolve_status_string(st));
      return exit_bad_ibat;
    }
  }
  const size_t n = bandsolve_batch_rows(rhs.p);
  const size_t m = bandsolve_batch_systems(rhs.p);

  // expand constant bands to full vectors with the structural zero slots
  auto expand = [&](double value, size_t zero_head, size_t zero_tail) {
    std::vector<double> band(n, value);
    for (size_t i = 0; i < zero_head && i < n; ++i) band[i] = 0.0;
    for (size_t i = 0; i < zero_tail && i < n; ++i) band[n - 1 - i] = 0.0;
    return band;
  };
  if (bands.constant) {
    if (bands.pent) {
      bands.a = expand(bands.const_bands[0], 2, 0);
      bands.b = expand(bands.const_bands[1], 1, 0);
      bands.c = expand(bands.const_bands[2], 0, 0);
      bands.d = expand(bands.const_bands[3], 0, 1);
      bands.e = expand(bands.const_bands[4], 0, 2);
    } else {
      bands.a = expand(bands.const_bands[0], 1, 0);
      bands.b = expand(bands.const_bands[1], 0, 0);
      bands.c = expand(bands.const_bands[2], 0, 1);
    }
  }
  if (bands.a.size() != n) {
    std::fprintf(stderr, "band length %zu != batch rows %zu\n",
                 bands.a.size(), n);
    return exit_args;
  }

  // keep the original right-hand sides around for --check
  batch_handle check_rhs;
  if (opt.check) {
    if (bandsolve_batch_create(n, m, &check_rhs.p) != BANDSOLVE_OK) {
      return exit_solver;
    }
    std::memcpy(bandsolve_batch_data(check_rhs.p),
                bandsolve_batch_data_const(rhs.p), n * m * sizeof(double));
  }

  auto replicate = [&](const std::vector<double>& band, batch_handle& out) {
    if (bandsolve_batch_create(n, m, &out.p) != BANDSOLVE_OK) return false;
    double* data = bandsolve_batch_data(out.p);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < m; ++j) data[i * m + j] = band[i];
    }
    return true;
  };

  bandsolve_status st = BANDSOLVE_OK;
  if (!bands.pent) {
    if (opt.periodic) {
      bandsolve_periodic_tri* corr = nullptr;
      st = bandsolve_periodic_tri_create(bands.const_bands[0],
                                         bands.const_bands[1],
                                         bands.const_bands[2], n, &corr);
      if (st == BANDSOLVE_OK) {
        if (opt.variant == "persystem") {
          std::vector<double> sub(n), diag(n), sup(n);
          st = bandsolve_periodic_tri_modified_bands(corr, sub.data(),
                                                     diag.data(), sup.data());
          batch_handle ba, bb, bc;
          if (st == BANDSOLVE_OK &&
              (!replicate(sub, ba) || !replicate(diag, bb) ||
               !replicate(sup, bc))) {
            st = BANDSOLVE_ERR_INTERNAL;
          }
          if (st == BANDSOLVE_OK) {
            st = bandsolve_tri_solve_per_system(ba.p, bb.p, bc.p, rhs.p);
          }
          if (st == BANDSOLVE_OK) {
            st = bandsolve_periodic_tri_correct(corr, rhs.p);
          }
        } else {
          st = bandsolve_periodic_tri_solve(corr, rhs.p);
        }
        bandsolve_periodic_tri_destroy(corr);
      }
    } else if (opt.variant == "persystem") {
      batch_handle ba, bb, bc;
      if (!replicate(bands.a, ba) || !replicate(bands.b, bb) ||
          !replicate(bands.c, bc)) {
        return exit_solver;
      }
      st = bandsolve_tri_solve_per_system(ba.p, bb.p, bc.p, rhs.p);
    } else {
      bandsolve_tri_factor* factor = nullptr;
      st = bandsolve_tri_factor_create(bands.a.data(), bands.b.data(),
                                       bands.c.data(), n, &factor);
      if (st == BANDSOLVE_OK) {
        st = bandsolve_tri_solve_shared(factor, rhs.p);
        bandsolve_tri_factor_destroy(factor);
      }
    }
  } else {
    if (opt.periodic) {
      bandsolve_periodic_pent* corr = nullptr;
      st = bandsolve_periodic_pent_create(
          bands.const_bands[0], bands.const_bands[1], bands.const_bands[2],
          bands.const_bands[3], bands.const_bands[4], n, &corr);
      if (st == BANDSOLVE_OK) {
        if (opt.variant == "persystem") {
          std::vector<double> a(n), b(n), c(n), d(n), e(n);
          st = bandsolve_periodic_pent_modified_bands(
              corr, a.data(), b.data(), c.data(), d.data(), e.data());
          batch_handle ba, bb, bc, bd, be;
          if (st == BANDSOLVE_OK &&
              (!replicate(a, ba) || !replicate(b, bb) || !replicate(c, bc) ||
               !replicate(d, bd) || !replicate(e, be))) {
            st = BANDSOLVE_ERR_INTERNAL;
          }
          if (st == BANDSOLVE_OK) {
            st = bandsolve_pent_solve_per_system(ba.p, bb.p, bc.p, bd.p, be.p,
                                                 rhs.p);
          }
          if (st == BANDSOLVE_OK) {
            st = bandsolve_periodic_pent_correct(corr, rhs.p);
          }
        } else {
          st = bandsolve_periodic_pent_solve(corr, rhs.p);
        }
        bandsolve_periodic_pent_destroy(corr);
      }
    } else if (opt.variant == "persystem") {
      batch_handle ba, bb, bc, bd, be;
      if (!replicate(bands.a, ba) || !replicate(bands.b, bb) ||
          !replicate(bands.c, bc) || !replicate(bands.d, bd) ||
          !replicate(bands.e, be)) {
        return exit_solver;
      }
      st = bandsolve_pent_solve_per_system(ba.p, bb.p, bc.p, bd.p, be.p,
                                           rhs.p);
    } else if (opt.variant == "uniform") {
      bandsolve_uniform_pent_factor* factor = nullptr;
      st = bandsolve_uniform_pent_factor_create(
          bands.const_bands[0], bands.const_bands[1], bands.const_bands[2],
          bands.const_bands[3], bands.const_bands[4], n, &factor);
      if (st == BANDSOLVE_OK) {
        st = bandsolve_pent_solve_uniform(factor, rhs.p);
        bandsolve_uniform_pent_factor_destroy(factor);
      }
    } else {
      bandsolve_pent_factor* factor = nullptr;
      st = bandsolve_pent_factor_create(bands.a.data(), bands.b.data(),
                                        bands.c.data(), bands.d.data(),
                                        bands.e.data(), n, &factor);
      if (st == BANDSOLVE_OK) {
        st = bandsolve_pent_solve_shared(factor, rhs.p);
        bandsolve_pent_factor_destroy(factor);
      }
    }
  }

  if (st != BANDSOLVE_OK) {
    std::fprintf(stderr, "solve failed: %s\n", bandsolve_status_string(st));
    return map_status_exit(st) == exit_args ? exit_args : exit_solver;
  }

  if (opt.check) {
    double residual = 0.0;
    if (!bands.pent) {
      st = bandsolve_tri_residual(bands.a.data(), bands.b.data(),
                                  bands.c.data(), n, opt.periodic ? 1 : 0,
                                  rhs.p, check_rhs.p, &residual);
    } else {
      st = bandsolve_pent_residual(bands.a.data(), bands.b.data(),
                                   bands.c.data(), bands.d.data(),
                                   bands.e.data(), n, opt.periodic ? 1 : 0,
                                   rhs.p, check_rhs.p, &residual);
    }
    if (st != BANDSOLVE_OK) {
      std::fprintf(stderr, "residual check failed: %s\n",
                   bandsolve_status_string(st));
      return exit_solver;
    }
    std::printf("max residual %.6e\n", residual);
  }

  {
    const std::string tmp = opt.out_path + ".tmp";
    st = bandsolve_batch_write_ibat(rhs.p, tmp.c_str());
    if (st != BANDSOLVE_OK ||
        std::rename(tmp.c_str(), opt.out_path.c_str()) != 0) {
      std::remove(tmp.c_str());
      std::fprintf(stderr, "cannot write %s\n", opt.out_path.c_str());
      return exit_solver;
    }
  }
  return exit_ok;
}

// ------------------------------------------------------------------
// footprint
// ------------------------------------------------------------------

int run_footprint(const std::string& n_list, const std::string& m_list,
                  const std::string& format) {
  std::vector<size_t> ns, ms;
  if (!parse_size_list(n_list, ns) || !parse_size_list(m_list, ms)) {
    std::fprintf(stderr, "bad --n/--m list\n");
    return exit_args;
  }
  if (format != "table" && format != "csv") {
    std::fprintf(stderr, "--format must be table or csv\n");
    return exit_args;
  }

  struct row {
    bandsolve_storage_variant v;
    const char* name;
  };
  const row variants[] = {
      {BANDSOLVE_STORAGE_TRI_PER_SYSTEM, "tri_per_system"},
      {BANDSOLVE_STORAGE_TRI_SHARED, "tri_shared"},
      {BANDSOLVE_STORAGE_PENT_PER_SYSTEM, "pent_per_system"},
      {BANDSOLVE_STORAGE_PENT_SHARED, "pent_shared"},
      {BANDSOLVE_STORAGE_PENT_UNIFORM, "pent_uniform"},
  };

  const bool csv = format == "csv";
  if (csv) {
    std::printf("variant,n,m,elements,reduction_vs_baseline\n");
  } else {
    std::printf("%-16s %10s %10s %16s %12s\n", "variant", "n", "m", "elements",
                "reduction");
  }
  for (size_t n : ns) {
    for (size_t m : ms) {
      for (const row& r : variants) {
        uint64_t elements = 0;
        double reduction = 0.0;
        const bandsolve_status st =
            bandsolve_footprint(r.v, n, m, &elements, &reduction);
        if (st != BANDSOLVE_OK) {
          std::fprintf(stderr, "footprint failed: %s\n",
                       bandsolve_status_string(st));
          return exit_args;
        }
        if (csv) {
          std::printf("%s,%zu,%zu,%llu,%.6f\n", r.name, n, m,
                      static_cast<unsigned long long>(elements), reduction);
        } else {
          std::printf("%-16s %10zu %10zu %16llu %11.2f%%\n", r.name, n, m,
                      static_cast<unsigned long long>(elements),
                      100.0 * reduction);
        }
      }
    }
  }
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bandsolve: batched banded solvers with a single shared LHS"};
  app.require_subcommand(1);
  app.set_version_flag("--version", bandsolve_version());

  bench_options bench;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "time the PDE benchmark drivers");
  bench_cmd->add_option("--problem", bench.problem,
                        "diffusion | hyperdiffusion | both");
  bench_cmd->add_option("--variants", bench.variants,
                        "comma list of shared,persystem,uniform");
  bench_cmd->add_option("--n", bench.n_list, "comma list of grid sizes");
  bench_cmd->add_option("--m", bench.m_list, "comma list of batch sizes");
  bench_cmd->add_option("--steps", bench.steps, "time steps per cell");
  bench_cmd->add_option("--dt", bench.dt,
                        "time step size (default: sigma_x = 1)");
  bench_cmd->add_option("--threads", bench.threads,
                        "worker threads (default: BANDSOLVE_THREADS or all)");
  bench_cmd->add_option("--out", bench.out, "timing CSV path");
  bench_cmd->add_option("--dump-every", bench.dump_every,
                        "dump the field every D steps (IBAT)");
  bench_cmd->add_option("--dump-prefix", bench.dump_prefix,
                        "path prefix for field dumps");

  solve_options solve;
  CLI::App* solve_cmd =
      app.add_subcommand("solve", "solve one IBAT batch file");
  solve_cmd->add_option("--in", solve.in_path, "input IBAT file");
  solve_cmd->add_option("--out", solve.out_path, "output IBAT file");
  solve_cmd->add_option("--type", solve.type, "tri | pent");
  solve_cmd->add_option("--bands", solve.bands,
                        "constant bands: a,b,c or a,b,c,d,e");
  solve_cmd->add_option("--band-file", solve.band_file,
                        "per-row bands: 'tri N' or 'pent N' header plus N "
                        "rows");
  solve_cmd->add_option("--variant", solve.variant,
                        "shared | persystem | uniform");
  solve_cmd->add_flag("--periodic", solve.periodic,
                      "cyclic wrap (constant bands only)");
  solve_cmd->add_flag("--check", solve.check, "print the max residual");
  solve_cmd->add_option("--threads", solve.threads, "worker threads");

  std::string fp_n, fp_m, fp_format = "table";
  CLI::App* fp_cmd =
      app.add_subcommand("footprint", "storage accounting per variant");
  fp_cmd->add_option("--n", fp_n, "comma list of grid sizes")->required();
  fp_cmd->add_option("--m", fp_m, "comma list of batch sizes")->required();
  fp_cmd->add_option("--format", fp_format, "table | csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_args;
  }

  if (bench_cmd->parsed()) return run_bench(bench);
  if (solve_cmd->parsed()) return run_solve(solve);
  if (fp_cmd->parsed()) return run_footprint(fp_n, fp_m, fp_format);
  return exit_args;
}
