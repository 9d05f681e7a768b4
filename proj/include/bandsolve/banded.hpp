#pragma once

#include <cstddef>
#include <span>

#include "bandsolve/common.hpp"

namespace bandsolve {

// ============================================================================
// Tridiagonal system A x = d with
//
//   b_1  c_1
//   a_2  b_2  c_2
//         .    .    .
//             a_N-1 b_N-1 c_N-1
//                   a_N   b_N
//
// Bands are stored as full-length vectors; the structurally absent slots
// (sub[0] and sup[n-1], 0-based) must be zero.
// ============================================================================
struct tri_lhs {
  real_buffer sub;   // a_i
  real_buffer diag;  // b_i
  real_buffer sup;   // c_i
  std::size_t n = 0;

  tri_lhs(std::span<const real> a, std::span<const real> b,
          std::span<const real> c);
};

tri_lhs constant_tri_lhs(real a, real b, real c, std::size_t n);

// Reusable elimination coefficients for one tridiagonal LHS. Immutable after
// construction; one factor serves any number of right-hand sides. Reciprocal
// denominators are cached so the per-RHS sweeps multiply instead of divide.
struct tri_factor {
  real_buffer chat;       // c_i / (b_i - a_i chat_{i-1}); last slot zero
  real_buffer inv_denom;  // 1 / (b_i - a_i chat_{i-1}); first entry 1/b_1
  real_buffer sub;        // copy of a_i consumed by the forward sweep
  std::size_t n = 0;
};

// Throws factorization_breakdown if any denominator magnitude drops below
// breakdown_eps. The input is never mutated and may be freed afterwards.
tri_factor tri_prefactor(const tri_lhs& lhs);

// ============================================================================
// Pentadiagonal system A x = f, main diagonal c:
//
//   c_1  d_1  e_1
//   b_2  c_2  d_2  e_2
//   a_3  b_3  c_3  d_3  e_3
//         .    .    .    .    .
//             a_N-1 b_N-1 c_N-1 d_N-1
//                   a_N   b_N   c_N
//
// Structurally absent slots (all 0-based): a[0], a[1], b[0], d[n-1], e[n-1],
// e[n-2]. They must be zero.
// ============================================================================
struct pent_lhs {
  real_buffer a, b, c, d, e;
  std::size_t n = 0;

  pent_lhs(std::span<const real> a_, std::span<const real> b_,
           std::span<const real> c_, std::span<const real> d_,
           std::span<const real> e_);
};

pent_lhs constant_pent_lhs(real a, real b, real c, real d, real e,
                           std::size_t n);

// L R factorization of a pentadiagonal matrix: L carries (epsilon, beta,
// alpha) on its three lower bands, R is unit upper triangular with (gamma,
// delta). epsilon is a verbatim copy of the a band. Immutable after
// construction.
struct pent_factor {
  real_buffer inv_alpha;  // 1 / alpha_i
  real_buffer beta;       // beta_i, i = 2..N; first slot zero
  real_buffer gamma;      // gamma_i, i = 1..N-1; last slot zero
  real_buffer delta;      // delta_i, i = 1..N-2; last two slots zero
  real_buffer epsilon;    // epsilon_i = a_i for all i
  std::size_t n = 0;
};

// Requires n >= 5. Throws factorization_breakdown if any |alpha_i| falls
// below breakdown_eps.
pent_factor pent_prefactor(const pent_lhs& lhs);

}  // namespace bandsolve
