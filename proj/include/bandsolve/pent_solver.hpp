#pragma once

#include "bandsolve/banded.hpp"
#include "bandsolve/batch.hpp"

namespace bandsolve {

// Batched pentadiagonal solve with one shared factorization: per system the
// forward pass finds g from L g = f, the backward pass finds x from
// R x = g, both walking the interleaved buffer row-outer / system-inner.
// g overwrites f and x overwrites g; no extra N*M scratch exists.
void pent_solve_shared_batch(const pent_factor& factor,
                             interleaved_batch& batch);

// Baseline: six interleaved buffers (five bands plus the RHS), column-local
// fused factorization and solve. The band buffers are consumed; f holds the
// solutions on return.
void pent_solve_per_system_batch(interleaved_batch& a, interleaved_batch& b,
                                 interleaved_batch& c, interleaved_batch& d,
                                 interleaved_batch& e, interleaved_batch& f);

// Pentadiagonal LHS whose five bands are each constant down their diagonal.
struct uniform_pent_lhs {
  real a = 0, b = 0, c = 0, d = 0, e = 0;
  std::size_t n = 0;
};

// Same factor content as pent_factor for the expanded matrix, except that
// the epsilon band collapses to one scalar: 4N stored reals instead of 5N.
struct uniform_pent_factor {
  real_buffer inv_alpha;
  real_buffer beta;
  real_buffer gamma;
  real_buffer delta;
  real eps_scalar = 0;
  std::size_t n = 0;
};

uniform_pent_factor uniform_prefactor(const uniform_pent_lhs& lhs);

// Re-expresses a factor whose stored epsilon band is constant from row 3 on
// in the uniform layout. Throws bad_argument otherwise.
uniform_pent_factor to_uniform(const pent_factor& factor);

// Identical sweep as pent_solve_shared_batch with epsilon_i read from the
// scalar; both variants share one sweep template, so results are bitwise
// equal for matching factors.
void pent_solve_uniform_batch(const uniform_pent_factor& factor,
                              interleaved_batch& batch);

real pent_residual_max(const pent_lhs& lhs, const interleaved_batch& x,
                       const interleaved_batch& rhs);
// Cyclic variant for constant bands; the six wrap corners are
// A[0][n-2] = a, A[0][n-1] = b, A[1][n-1] = a, A[n-2][0] = e,
// A[n-1][0] = d, A[n-1][1] = e.
real pent_residual_max_cyclic(real a, real b, real c, real d, real e,
                              const interleaved_batch& x,
                              const interleaved_batch& rhs);

}  // namespace bandsolve
