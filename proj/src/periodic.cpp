#include "bandsolve/periodic.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "bandsolve/parallel.hpp"

namespace bandsolve {

tri_splitting periodic_tri_splitting(real a, real b, real c, std::size_t n) {
  if (n < 3) throw bad_argument("periodic tridiagonal wrap needs n >= 3");
  if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c))) {
    throw bad_argument("non-finite band value");
  }
  if (b == 0.0) throw division_by_zero("zero diagonal in periodic splitting");

  std::vector<real> sub(n, a), diag(n, b), sup(n, c);
  sub[0] = 0.0;
  sup[n - 1] = 0.0;
  diag[0] = 2.0 * b;
  diag[n - 1] = b + a * c / b;

  std::vector<real> u(n, 0.0), v(n, 0.0);
  u[0] = -b;
  u[n - 1] = c;
  v[0] = 1.0;
  v[n - 1] = -a / b;

  return tri_splitting{tri_lhs(sub, diag, sup), std::move(u), std::move(v)};
}

periodic_tri_correction periodic_tri_prepare(real a, real b, real c,
                                             std::size_t n) {
  tri_splitting split = periodic_tri_splitting(a, b, c, n);

  periodic_tri_correction corr;
  corr.n = n;
  corr.factor = tri_prefactor(split.modified);
  corr.v_last = split.v[n - 1];

  interleaved_batch zcol(n, 1);
  for (std::size_t i = 0; i < n; ++i) zcol.at(i, 0) = split.u[i];
  tri_solve_shared_batch(corr.factor, zcol);

  corr.z = real_buffer(n);
  real vdotz = 0.0;
  for (std::size_t i = 0; i < n; ++i) corr.z[i] = zcol.at(i, 0);
  vdotz = corr.z[0] + corr.v_last * corr.z[n - 1];
  corr.denom = 1.0 + vdotz;
  if (!(std::abs(corr.denom) > breakdown_eps)) {
    throw singular_correction("cyclic system is singular: 1 + v.z vanishes");
  }
  return corr;
}

void periodic_tri_apply_correction(const periodic_tri_correction& corr,
                                   interleaved_batch& batch) {
  if (corr.n != batch.rows()) {
    throw shape_mismatch("correction order != batch rows");
  }
  const std::size_t n = corr.n;
  const std::size_t m = batch.systems();
  const real* z = corr.z.data();
  const real v_last = corr.v_last;
  const real inv_denom_scale = 1.0 / corr.denom;
  real* y = batch.data();

  // blocked so the update streams whole rows instead of striding column
  // by column through the interleaved buffer
  constexpr std::size_t block = 128;
  parallel_columns(m, [&](std::size_t j0, std::size_t j1) {
    const real* ylast = y + (n - 1) * m;
    real w[block];
    for (std::size_t jb = j0; jb < j1; jb += block) {
      const std::size_t width = std::min(block, j1 - jb);
      for (std::size_t j = 0; j < width; ++j) {
        w[j] = (y[jb + j] + v_last * ylast[jb + j]) * inv_denom_scale;
      }
      for (std::size_t i = 0; i < n; ++i) {
        real* row = y + i * m + jb;
        const real zi = z[i];
        for (std::size_t j = 0; j < width; ++j) {
          row[j] -= w[j] * zi;
        }
      }
    }
  });
}

void periodic_tri_solve_batch(const periodic_tri_correction& corr,
                              interleaved_batch& batch) {
  tri_solve_shared_batch(corr.factor, batch);
  periodic_tri_apply_correction(corr, batch);
}

pent_splitting periodic_pent_splitting(real a, real b, real c, real d, real e,
                                       std::size_t n) {
  if (n < 6) throw bad_argument("periodic pentadiagonal wrap needs n >= 6");
  if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c) &&
        std::isfinite(d) && std::isfinite(e))) {
    throw bad_argument("non-finite band value");
  }

  std::vector<real> av(n, a), bv(n, b), cv(n, c), dv(n, d), ev(n, e);
  av[0] = av[1] = bv[0] = 0.0;
  dv[n - 1] = ev[n - 1] = ev[n - 2] = 0.0;
  cv[0] = c + b;
  dv[0] = d + a;
  bv[1] = b + a;
  dv[n - 2] = d + e;
  bv[n - 1] = b + e;
  cv[n - 1] = c + d;

  std::vector<real> u1(n, 0.0), u2(n, 0.0), v1(n, 0.0), v2(n, 0.0);
  u1[0] = -b;
  u1[1] = -a;
  u1[n - 2] = e;
  u1[n - 1] = d;
  u2[0] = -a;
  u2[n - 1] = e;
  v1[0] = 1.0;
  v1[n - 1] = -1.0;
  v2[1] = 1.0;
  v2[n - 2] = -1.0;

  return pent_splitting{pent_lhs(av, bv, cv, dv, ev), std::move(u1),
                        std::move(u2), std::move(v1), std::move(v2)};
}

periodic_pent_correction periodic_pent_prepare(real a, real b, real c, real d,
                                               real e, std::size_t n) {
  pent_splitting split = periodic_pent_splitting(a, b, c, d, e, n);

  periodic_pent_correction corr;
  corr.n = n;
  corr.factor = pent_prefactor(split.modified);

  interleaved_batch zcols(n, 2);
  for (std::size_t i = 0; i < n; ++i) {
    zcols.at(i, 0) = split.u1[i];
    zcols.at(i, 1) = split.u2[i];
  }
  pent_solve_shared_batch(corr.factor, zcols);

  corr.z1 = real_buffer(n);
  corr.z2 = real_buffer(n);
  for (std::size_t i = 0; i < n; ++i) {
    corr.z1[i] = zcols.at(i, 0);
    corr.z2[i] = zcols.at(i, 1);
  }

  // capacitance I + V^T Z with v1 = e_1 - e_N, v2 = e_2 - e_{N-1}
  corr.cap[0][0] = 1.0 + corr.z1[0] - corr.z1[n - 1];
  corr.cap[0][1] = corr.z2[0] - corr.z2[n - 1];
  corr.cap[1][0] = corr.z1[1] - corr.z1[n - 2];
  corr.cap[1][1] = 1.0 + corr.z2[1] - corr.z2[n - 2];

  const real det =
      corr.cap[0][0] * corr.cap[1][1] - corr.cap[0][1] * corr.cap[1][0];
  if (!(std::abs(det) > breakdown_eps)) {
    throw singular_correction("cyclic system is singular: capacitance");
  }
  const real inv_det = 1.0 / det;
  corr.cap_inv[0][0] = corr.cap[1][1] * inv_det;
  corr.cap_inv[0][1] = -corr.cap[0][1] * inv_det;
  corr.cap_inv[1][0] = -corr.cap[1][0] * inv_det;
  corr.cap_inv[1][1] = corr.cap[0][0] * inv_det;
  return corr;
}

void periodic_pent_apply_correction(const periodic_pent_correction& corr,
                                    interleaved_batch& batch) {
  if (corr.n != batch.rows()) {
    throw shape_mismatch("correction order != batch rows");
  }
  const std::size_t n = corr.n;
  const std::size_t m = batch.systems();
  const real* z1 = corr.z1.data();
  const real* z2 = corr.z2.data();
  const real i00 = corr.cap_inv[0][0];
  const real i01 = corr.cap_inv[0][1];
  const real i10 = corr.cap_inv[1][0];
  const real i11 = corr.cap_inv[1][1];
  real* y = batch.data();

  constexpr std::size_t block = 128;
  parallel_columns(m, [&](std::size_t j0, std::size_t j1) {
    real t1[block], t2[block];
    for (std::size_t jb = j0; jb < j1; jb += block) {
      const std::size_t width = std::min(block, j1 - jb);
      for (std::size_t j = 0; j < width; ++j) {
        const real w1 = y[jb + j] - y[(n - 1) * m + jb + j];
        const real w2 = y[m + jb + j] - y[(n - 2) * m + jb + j];
        t1[j] = i00 * w1 + i01 * w2;
        t2[j] = i10 * w1 + i11 * w2;
      }
      for (std::size_t i = 0; i < n; ++i) {
        real* row = y + i * m + jb;
        const real z1i = z1[i];
        const real z2i = z2[i];
        for (std::size_t j = 0; j < width; ++j) {
          row[j] -= z1i * t1[j] + z2i * t2[j];
        }
      }
    }
  });
}

void periodic_pent_solve_batch(const periodic_pent_correction& corr,
                               interleaved_batch& batch) {
  pent_solve_shared_batch(corr.factor, batch);
  periodic_pent_apply_correction(corr, batch);
}

}  // namespace bandsolve
