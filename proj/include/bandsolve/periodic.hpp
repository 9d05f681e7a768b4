#pragma once

#include "bandsolve/banded.hpp"
#include "bandsolve/batch.hpp"
#include "bandsolve/tri_solver.hpp"
#include "bandsolve/pent_solver.hpp"

namespace bandsolve {

// ============================================================================
// Cyclic (periodic) systems with constant bands are reduced to the strictly
// banded solvers by a low-rank wrap correction.
//
// Tridiagonal, rank 1:  A_cyclic = A' + u (x) v  with
//   u = (-b, 0, ..., 0, c),  v = (1, 0, ..., 0, -a/b).
// A' keeps the constant bands, zeroes the corners, and carries diagonal
// entries 2b (first) and b + ac/b (last). Both cyclic corner entries are
// absorbed by the outer product, which is what makes the splitting exact.
// ============================================================================

struct tri_splitting {
  tri_lhs modified;  // A'
  std::vector<real> u;
  std::vector<real> v;
};

tri_splitting periodic_tri_splitting(real a, real b, real c, std::size_t n);

struct periodic_tri_correction {
  tri_factor factor;  // factorization of A'
  real_buffer z;      // A' z = u, solved once per preparation
  real v_first = 1.0;
  real v_last = 0.0;  // -a/b
  real denom = 0.0;   // 1 + v.z
  std::size_t n = 0;
};

// Requires n >= 3 and b != 0 (division_by_zero otherwise). Throws
// singular_correction when |1 + v.z| <= breakdown_eps, i.e. when the cyclic
// matrix itself is singular.
periodic_tri_correction periodic_tri_prepare(real a, real b, real c,
                                             std::size_t n);

// x = y - ((v.y) / (1 + v.z)) z applied to every system, where y is the
// batch content on entry (the A' solve result).
void periodic_tri_apply_correction(const periodic_tri_correction& corr,
                                   interleaved_batch& batch);

// Full cyclic solve: A' y = d through the shared tridiagonal solver, then
// the rank-1 correction. One banded solve per system plus O(N) arithmetic.
void periodic_tri_solve_batch(const periodic_tri_correction& corr,
                              interleaved_batch& batch);

// ============================================================================
// Pentadiagonal, rank 2 (Woodbury):  A_cyclic = A' + U V^T  with
//   u1 = (-b, -a, 0, ..., 0, e, d)     v1 = e_1 - e_N
//   u2 = (-a,  0, 0, ..., 0, 0, e)     v2 = e_2 - e_{N-1}
// The six wrap corners land in U V^T; the spillover terms stay inside the
// pentadiagonal band, so A' is strictly banded with modified entries
//   c'_1 = c + b     d'_1     = d + a    b'_2 = b + a
//   c'_N = c + d     b'_N     = b + e    d'_{N-1} = d + e.
// The unit scalings keep A' diagonally dominant whenever A is and involve
// no divisions, so a = e = 0 degrades gracefully to the tridiagonal wrap.
// ============================================================================

struct pent_splitting {
  pent_lhs modified;  // A'
  std::vector<real> u1, u2, v1, v2;
};

pent_splitting periodic_pent_splitting(real a, real b, real c, real d, real e,
                                       std::size_t n);

struct periodic_pent_correction {
  pent_factor factor;  // factorization of A'
  real_buffer z1, z2;  // A' Z = U, solved once per preparation
  real cap[2][2] = {{0, 0}, {0, 0}};      // I + V^T Z
  real cap_inv[2][2] = {{0, 0}, {0, 0}};
  std::size_t n = 0;
};

// Requires n >= 6. Throws singular_correction when the capacitance matrix
// is singular to breakdown_eps.
periodic_pent_correction periodic_pent_prepare(real a, real b, real c, real d,
                                               real e, std::size_t n);

// x = y - Z (cap^-1 (V^T y)) per system.
void periodic_pent_apply_correction(const periodic_pent_correction& corr,
                                    interleaved_batch& batch);

void periodic_pent_solve_batch(const periodic_pent_correction& corr,
                               interleaved_batch& batch);

}  // namespace bandsolve
