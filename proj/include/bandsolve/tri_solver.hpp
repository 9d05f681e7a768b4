#pragma once

#include "bandsolve/banded.hpp"
#include "bandsolve/batch.hpp"

namespace bandsolve {

// Batched Thomas solve with a single shared LHS. Every system's column of
// the batch is overwritten with the solution of A x = d. The factor is
// read-only and may be reused across calls and shared between threads.
// Sweeps run row-outer / system-inner over the interleaved buffer.
void tri_solve_shared_batch(const tri_factor& factor, interleaved_batch& batch);

// Baseline: every system carries its own band copies in three interleaved
// buffers, factorization and solve are fused, and the band buffers are
// consumed in the process. Callers must rewrite a/b/c before solving again.
// d holds the solutions on return.
void tri_solve_per_system_batch(interleaved_batch& a, interleaved_batch& b,
                                interleaved_batch& c, interleaved_batch& d);

// max over systems of ||A x - d||_inf / ||d||_inf
real tri_residual_max(const tri_lhs& lhs, const interleaved_batch& x,
                      const interleaved_batch& rhs);
// Cyclic variant for constant bands: corners A[0][n-1] = a, A[n-1][0] = c.
real tri_residual_max_cyclic(real a, real b, real c,
                             const interleaved_batch& x,
                             const interleaved_batch& rhs);

}  // namespace bandsolve
