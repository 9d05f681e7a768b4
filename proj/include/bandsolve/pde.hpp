#pragma once

#include <cstddef>
#include <string>

#include "bandsolve/batch.hpp"
#include "bandsolve/periodic.hpp"

namespace bandsolve {

// Crank-Nicolson drivers for the two periodic model problems used to
// exercise the batch solvers: second-order diffusion (tridiagonal path) and
// fourth-order hyperdiffusion (pentadiagonal path), both on the unit domain
// with unit coefficient after rescaling.

enum class pde_problem { diffusion, hyperdiffusion };
enum class solver_variant { shared, per_system, uniform };

const char* problem_name(pde_problem p);
const char* solver_variant_name(solver_variant v);

struct bench_config {
  std::size_t n = 0;  // grid points per system
  std::size_t m = 0;  // batch size
  double dt = 0.0;    // time step; <= 0 selects the sigma_x = 1 default
  long steps = 1000;
  pde_problem problem = pde_problem::diffusion;
  solver_variant variant = solver_variant::shared;
  long dump_every = 0;  // 0 disables field dumps
  std::string dump_prefix;
  // Asserts that the timed stepping loop performs no allocation (shared and
  // uniform variants only).
  bool assert_no_alloc = true;

  double dx() const { return 1.0 / static_cast<double>(n); }
  // dt / (2 dx^2) for diffusion, dt / (2 dx^4) for hyperdiffusion.
  double sigma_x() const;
  double effective_dt() const;

  static double dt_for_sigma(pde_problem problem, std::size_t n,
                             double sigma);
};

struct field_batch {
  interleaved_batch state;  // C(i, j) at the current step
  long time_index = 0;
};

// Column j carries the single mode sin(2 pi k_j x) with
// k_j = 1 + (j mod max(1, n/4)); x_i = (i+1)/n.
field_batch default_mode_initial(std::size_t n, std::size_t m);

// Crank-Nicolson LHS band values.
struct tri_bands {
  real a, b, c;
};
struct pent_bands {
  real a, b, c, d, e;
};

tri_bands diffusion_lhs(double sigma_x);  // (-s, 1+2s, -s)
pent_bands hyper_lhs(double sigma_x);     // (s, -4s, 1+6s, -4s, s)

// Explicit half of the scheme, indices mod N:
//   diffusion      f_i = s C_{i-1} + (1-2s) C_i + s C_{i+1}
//   hyperdiffusion f_i = -s C_{i-2} + 4s C_{i-1} + (1-6s) C_i
//                        + 4s C_{i+1} - s C_{i+2}
void diffusion_rhs_into(const interleaved_batch& state, double sigma_x,
                        interleaved_batch& out);
void hyper_rhs_into(const interleaved_batch& state, double sigma_x,
                    interleaved_batch& out);
interleaved_batch diffusion_rhs(const interleaved_batch& state,
                                double sigma_x);
interleaved_batch hyper_rhs(const interleaved_batch& state, double sigma_x);

// Per-step multiplier of the Fourier mode with phase angle theta = 2 pi k dx:
//   diffusion      (1 - 2s(1-cos t)) / (1 + 2s(1-cos t))
//   hyperdiffusion (1 - s q) / (1 + s q),  q = 6 - 8 cos t + 2 cos 2t
// |G| <= 1 for every s > 0; the schemes are unconditionally stable.
double amplification_factor(pde_problem problem, double sigma_x, double theta);

struct timing_report {
  pde_problem problem;
  solver_variant variant;
  std::size_t n = 0;
  std::size_t m = 0;
  long steps = 0;
  int threads = 1;
  double wall_seconds_total = 0.0;
  double seconds_per_step_mean = 0.0;
  double seconds_per_step_stddev = 0.0;
  footprint_report footprint;
};

// Runs config.steps iterations of {assemble RHS, periodic banded solve} on
// the field in place. Preparation (prefactorization, correction solves,
// buffer allocation) happens before timing starts and one untimed warmup
// step runs into the scratch buffer without touching the field; the
// per-system variant's band reset is timed inside the loop since that cost
// is intrinsic to the baseline. Field dumps happen between steps, outside
// the per-step timers.
timing_report run_benchmark(const bench_config& config, field_batch& field);

}  // namespace bandsolve
