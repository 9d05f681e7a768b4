#include "bandsolve/pde.hpp"

#include <chrono>
#include <cmath>
#include <memory>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "bandsolve/parallel.hpp"

namespace bandsolve {

const char* problem_name(pde_problem p) {
  return p == pde_problem::diffusion ? "diffusion" : "hyperdiffusion";
}

const char* solver_variant_name(solver_variant v) {
  switch (v) {
    case solver_variant::shared: return "shared";
    case solver_variant::per_system: return "persystem";
    case solver_variant::uniform: return "uniform";
  }
  return "unknown";
}

double bench_config::dt_for_sigma(pde_problem problem, std::size_t n,
                                  double sigma) {
  const double dx = 1.0 / static_cast<double>(n);
  const double pow_dx =
      problem == pde_problem::diffusion ? dx * dx : dx * dx * dx * dx;
  return sigma * 2.0 * pow_dx;
}

double bench_config::effective_dt() const {
  return dt > 0.0 ? dt : dt_for_sigma(problem, n, 1.0);
}

double bench_config::sigma_x() const {
  const double dxv = dx();
  const double pow_dx = problem == pde_problem::diffusion
                            ? dxv * dxv
                            : dxv * dxv * dxv * dxv;
  return effective_dt() / (2.0 * pow_dx);
}

field_batch default_mode_initial(std::size_t n, std::size_t m) {
  if (n < 2 || m < 1) throw bad_argument("field shape must be at least 2 x 1");
  field_batch field{interleaved_batch(n, m), 0};
  const std::size_t mode_span = n / 4 > 0 ? n / 4 : 1;
  for (std::size_t j = 0; j < m; ++j) {
    const double k = static_cast<double>(1 + (j % mode_span));
    for (std::size_t i = 0; i < n; ++i) {
      const double x = static_cast<double>(i + 1) / static_cast<double>(n);
      field.state.at(i, j) = std::sin(2.0 * std::numbers::pi * k * x);
    }
  }
  return field;
}

tri_bands diffusion_lhs(double sigma_x) {
  if (!(sigma_x > 0.0)) throw bad_argument("sigma_x must be positive");
  return tri_bands{-sigma_x, 1.0 + 2.0 * sigma_x, -sigma_x};
}

pent_bands hyper_lhs(double sigma_x) {
  if (!(sigma_x > 0.0)) throw bad_argument("sigma_x must be positive");
  return pent_bands{sigma_x, -4.0 * sigma_x, 1.0 + 6.0 * sigma_x,
                    -4.0 * sigma_x, sigma_x};
}

void diffusion_rhs_into(const interleaved_batch& state, double sigma_x,
                        interleaved_batch& out) {
  if (!state.same_shape(out)) throw shape_mismatch("rhs shape mismatch");
  const std::size_t n = state.rows();
  const std::size_t m = state.systems();
  const real s = sigma_x;
  const real mid = 1.0 - 2.0 * sigma_x;
  parallel_columns(m, [&](std::size_t j0, std::size_t j1) {
    for (std::size_t i = 0; i < n; ++i) {
      const real* up = state.row(i == 0 ? n - 1 : i - 1);
      const real* mi = state.row(i);
      const real* dn = state.row(i + 1 == n ? 0 : i + 1);
      real* o = out.row(i);
      for (std::size_t j = j0; j < j1; ++j) {
        o[j] = s * (up[j] + dn[j]) + mid * mi[j];
      }
    }
  });
}

void hyper_rhs_into(const interleaved_batch& state, double sigma_x,
                    interleaved_batch& out) {
  if (!state.same_shape(out)) throw shape_mismatch("rhs shape mismatch");
  const std::size_t n = state.rows();
  const std::size_t m = state.systems();
  const real s = sigma_x;
  const real s4 = 4.0 * sigma_x;
  const real mid = 1.0 - 6.0 * sigma_x;
  parallel_columns(m, [&](std::size_t j0, std::size_t j1) {
    for (std::size_t i = 0; i < n; ++i) {
      const real* u2 = state.row((i + n - 2) % n);
      const real* u1 = state.row(i == 0 ? n - 1 : i - 1);
      const real* mi = state.row(i);
      const real* d1 = state.row(i + 1 == n ? 0 : i + 1);
      const real* d2 = state.row((i + 2) % n);
      real* o = out.row(i);
      for (std::size_t j = j0; j < j1; ++j) {
        o[j] = -s * (u2[j] + d2[j]) + s4 * (u1[j] + d1[j]) + mid * mi[j];
      }
    }
  });
}

interleaved_batch diffusion_rhs(const interleaved_batch& state,
                                double sigma_x) {
  interleaved_batch out(state.rows(), state.systems());
  diffusion_rhs_into(state, sigma_x, out);
  return out;
}

interleaved_batch hyper_rhs(const interleaved_batch& state, double sigma_x) {
  interleaved_batch out(state.rows(), state.systems());
  hyper_rhs_into(state, sigma_x, out);
  return out;
}

double amplification_factor(pde_problem problem, double sigma_x,
                            double theta) {
  if (problem == pde_problem::diffusion) {
    const double q = 2.0 * sigma_x * (1.0 - std::cos(theta));
    return (1.0 - q) / (1.0 + q);
  }
  const double q = 6.0 - 8.0 * std::cos(theta) + 2.0 * std::cos(2.0 * theta);
  return (1.0 - sigma_x * q) / (1.0 + sigma_x * q);
}

// ----------------------------------------------------------------------------
// Stepping engines. Preparation happens at construction; solve() maps an
// assembled RHS batch to the new field in place. The per-system engines
// rewrite their band copies inside solve(), so the baseline's reset cost is
// part of every timed step.
// ----------------------------------------------------------------------------

namespace {

struct step_engine {
  virtual ~step_engine() = default;
  virtual void solve(interleaved_batch& rhs) = 0;
};

std::span<const real> as_span(const real_buffer& b) {
  return {b.data(), b.size()};
}

struct shared_tri_engine final : step_engine {
  periodic_tri_correction corr;

  shared_tri_engine(const tri_bands& bands, std::size_t n)
      : corr(periodic_tri_prepare(bands.a, bands.b, bands.c, n)) {}

  void solve(interleaved_batch& rhs) override {
    periodic_tri_solve_batch(corr, rhs);
  }
};

struct per_system_tri_engine final : step_engine {
  periodic_tri_correction corr;
  tri_lhs modified;
  interleaved_batch ba, bb, bc;

  per_system_tri_engine(const tri_bands& bands, std::size_t n, std::size_t m)
      : corr(periodic_tri_prepare(bands.a, bands.b, bands.c, n)),
        modified(periodic_tri_splitting(bands.a, bands.b, bands.c, n).modified),
        ba(n, m),
        bb(n, m),
        bc(n, m) {}

  void solve(interleaved_batch& rhs) override {
    fill_replicated(ba, as_span(modified.sub));
    fill_replicated(bb, as_span(modified.diag));
    fill_replicated(bc, as_span(modified.sup));
    tri_solve_per_system_batch(ba, bb, bc, rhs);
    periodic_tri_apply_correction(corr, rhs);
  }
};

struct shared_pent_engine final : step_engine {
  periodic_pent_correction corr;

  shared_pent_engine(const pent_bands& bands, std::size_t n)
      : corr(periodic_pent_prepare(bands.a, bands.b, bands.c, bands.d,
                                   bands.e, n)) {}

  void solve(interleaved_batch& rhs) override {
    periodic_pent_solve_batch(corr, rhs);
  }
};

struct per_system_pent_engine final : step_engine {
  periodic_pent_correction corr;
  pent_lhs modified;
  interleaved_batch ba, bb, bc, bd, be;

  per_system_pent_engine(const pent_bands& bands, std::size_t n,
                         std::size_t m)
      : corr(periodic_pent_prepare(bands.a, bands.b, bands.c, bands.d,
                                   bands.e, n)),
        modified(periodic_pent_splitting(bands.a, bands.b, bands.c, bands.d,
                                         bands.e, n)
                     .modified),
        ba(n, m),
        bb(n, m),
        bc(n, m),
        bd(n, m),
        be(n, m) {}

  void solve(interleaved_batch& rhs) override {
    fill_replicated(ba, as_span(modified.a));
    fill_replicated(bb, as_span(modified.b));
    fill_replicated(bc, as_span(modified.c));
    fill_replicated(bd, as_span(modified.d));
    fill_replicated(be, as_span(modified.e));
    pent_solve_per_system_batch(ba, bb, bc, bd, be, rhs);
    periodic_pent_apply_correction(corr, rhs);
  }
};

struct uniform_pent_engine final : step_engine {
  periodic_pent_correction corr;
  uniform_pent_factor factor;

  uniform_pent_engine(const pent_bands& bands, std::size_t n)
      : corr(periodic_pent_prepare(bands.a, bands.b, bands.c, bands.d,
                                   bands.e, n)),
        factor(to_uniform(corr.factor)) {}

  void solve(interleaved_batch& rhs) override {
    pent_solve_uniform_batch(factor, rhs);
    periodic_pent_apply_correction(corr, rhs);
  }
};

storage_variant storage_of(pde_problem p, solver_variant v) {
  if (p == pde_problem::diffusion) {
    return v == solver_variant::shared ? storage_variant::tri_shared
                                       : storage_variant::tri_per_system;
  }
  switch (v) {
    case solver_variant::shared: return storage_variant::pent_shared;
    case solver_variant::per_system: return storage_variant::pent_per_system;
    case solver_variant::uniform: return storage_variant::pent_uniform;
  }
  return storage_variant::pent_shared;
}

}  // namespace

timing_report run_benchmark(const bench_config& config, field_batch& field) {
  const std::size_t n = config.n;
  const std::size_t m = config.m;
  if (config.steps < 1) throw bad_argument("steps must be >= 1");
  if (config.problem == pde_problem::diffusion) {
    if (n < 3) throw bad_argument("diffusion benchmark needs n >= 3");
    if (config.variant == solver_variant::uniform) {
      throw bad_argument("uniform variant applies to hyperdiffusion only");
    }
  } else if (n < 6) {
    throw bad_argument("hyperdiffusion benchmark needs n >= 6");
  }
  if (field.state.rows() != n || field.state.systems() != m) {
    throw shape_mismatch("field shape != benchmark config");
  }

  const double sigma = config.sigma_x();
  const bool diffusion = config.problem == pde_problem::diffusion;

  // preparation, outside the timed region
  std::unique_ptr<step_engine> engine;
  if (diffusion) {
    const tri_bands bands = diffusion_lhs(sigma);
    if (config.variant == solver_variant::shared) {
      engine = std::make_unique<shared_tri_engine>(bands, n);
    } else {
      engine = std::make_unique<per_system_tri_engine>(bands, n, m);
    }
  } else {
    const pent_bands bands = hyper_lhs(sigma);
    switch (config.variant) {
      case solver_variant::shared:
        engine = std::make_unique<shared_pent_engine>(bands, n);
        break;
      case solver_variant::per_system:
        engine = std::make_unique<per_system_pent_engine>(bands, n, m);
        break;
      case solver_variant::uniform:
        engine = std::make_unique<uniform_pent_engine>(bands, n);
        break;
    }
  }

  interleaved_batch scratch(n, m);
  auto assemble = [&](const interleaved_batch& from, interleaved_batch& to) {
    if (diffusion) {
      diffusion_rhs_into(from, sigma, to);
    } else {
      hyper_rhs_into(from, sigma, to);
    }
  };

  // one untimed warmup step into the scratch buffer; the field is untouched
  assemble(field.state, scratch);
  engine->solve(scratch);

  std::vector<double> per_step;
  per_step.reserve(static_cast<std::size_t>(config.steps));

  const bool guard_alloc =
      config.assert_no_alloc && config.variant != solver_variant::per_system;
  const std::int64_t events_before = alloc_stats::allocation_events();

  using clock = std::chrono::steady_clock;
  for (long k = 0; k < config.steps; ++k) {
    const auto t0 = clock::now();
    assemble(field.state, scratch);
    engine->solve(scratch);
    std::swap(field.state, scratch);
    const auto t1 = clock::now();
    per_step.push_back(std::chrono::duration<double>(t1 - t0).count());
    ++field.time_index;
    if (config.dump_every > 0 && (k + 1) % config.dump_every == 0) {
      write_ibat(config.dump_prefix + "_step" + std::to_string(k + 1) +
                     ".ibat",
                 field.state);
    }
  }

  if (guard_alloc &&
      alloc_stats::allocation_events() != events_before) {
    throw std::logic_error("allocation inside the timed stepping loop");
  }

  timing_report report;
  report.problem = config.problem;
  report.variant = config.variant;
  report.n = n;
  report.m = m;
  report.steps = config.steps;
  report.threads = worker_count();
  double total = 0.0;
  for (double t : per_step) total += t;
  report.wall_seconds_total = total;
  const double mean = total / static_cast<double>(per_step.size());
  report.seconds_per_step_mean = mean;
  double var = 0.0;
  for (double t : per_step) var += (t - mean) * (t - mean);
  report.seconds_per_step_stddev =
      per_step.size() > 1
          ? std::sqrt(var / static_cast<double>(per_step.size() - 1))
          : 0.0;
  report.footprint = footprint(storage_of(config.problem, config.variant), n, m);
  return report;
}

}  // namespace bandsolve
