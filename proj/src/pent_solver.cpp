#include "bandsolve/pent_solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

#include "bandsolve/parallel.hpp"

namespace bandsolve {

namespace {

// One sweep template serves the shared and uniform variants; eps(i) is the
// only difference, so matching factors give bitwise-equal results.
template <typename Eps>
void pent_sweep(std::size_t n, std::size_t m, const real* inv_alpha,
                const real* beta, const real* gamma, const real* delta,
                Eps eps, real* x, std::size_t j0, std::size_t j1) {
  // g over f
  {
    const real ia0 = inv_alpha[0];
    for (std::size_t j = j0; j < j1; ++j) x[j] *= ia0;
  }
  {
    const real b1 = beta[1];
    const real ia1 = inv_alpha[1];
    real* row = x + m;
    const real* prev = x;
    for (std::size_t j = j0; j < j1; ++j) {
      row[j] = (row[j] - b1 * prev[j]) * ia1;
    }
  }
  for (std::size_t i = 2; i < n; ++i) {
    const real ei = eps(i);
    const real bi = beta[i];
    const real iai = inv_alpha[i];
    real* row = x + i * m;
    const real* p1 = row - m;
    const real* p2 = row - 2 * m;
    for (std::size_t j = j0; j < j1; ++j) {
      row[j] = (row[j] - ei * p2[j] - bi * p1[j]) * iai;
    }
  }
  // x over g
  {
    const real gn2 = gamma[n - 2];
    real* row = x + (n - 2) * m;
    const real* next = row + m;
    for (std::size_t j = j0; j < j1; ++j) {
      row[j] -= gn2 * next[j];
    }
  }
  for (std::size_t i = n - 2; i-- > 0;) {
    const real gi = gamma[i];
    const real di = delta[i];
    real* row = x + i * m;
    const real* n1 = row + m;
    const real* n2 = row + 2 * m;
    for (std::size_t j = j0; j < j1; ++j) {
      row[j] -= gi * n1[j] + di * n2[j];
    }
  }
}

}  // namespace

void pent_solve_shared_batch(const pent_factor& factor,
                             interleaved_batch& batch) {
  if (factor.n != batch.rows()) {
    throw shape_mismatch("factor order != batch rows");
  }
  const std::size_t n = factor.n;
  const std::size_t m = batch.systems();
  const real* eps = factor.epsilon.data();
  parallel_columns(m, [&](std::size_t j0, std::size_t j1) {
    pent_sweep(
        n, m, factor.inv_alpha.data(), factor.beta.data(),
        factor.gamma.data(), factor.delta.data(),
        [eps](std::size_t i) { return eps[i]; }, batch.data(), j0, j1);
  });
}

void pent_solve_uniform_batch(const uniform_pent_factor& factor,
                              interleaved_batch& batch) {
  if (factor.n != batch.rows()) {
    throw shape_mismatch("factor order != batch rows");
  }
  const std::size_t n = factor.n;
  const std::size_t m = batch.systems();
  const real es = factor.eps_scalar;
  parallel_columns(m, [&](std::size_t j0, std::size_t j1) {
    pent_sweep(
        n, m, factor.inv_alpha.data(), factor.beta.data(),
        factor.gamma.data(), factor.delta.data(),
        [es](std::size_t) { return es; }, batch.data(), j0, j1);
  });
}

uniform_pent_factor uniform_prefactor(const uniform_pent_lhs& lhs) {
  const pent_lhs expanded =
      constant_pent_lhs(lhs.a, lhs.b, lhs.c, lhs.d, lhs.e, lhs.n);
  pent_factor f = pent_prefactor(expanded);
  uniform_pent_factor u;
  u.n = f.n;
  u.inv_alpha = std::move(f.inv_alpha);
  u.beta = std::move(f.beta);
  u.gamma = std::move(f.gamma);
  u.delta = std::move(f.delta);
  u.eps_scalar = lhs.a;
  return u;
}

uniform_pent_factor to_uniform(const pent_factor& factor) {
  const std::size_t n = factor.n;
  const real es = n > 2 ? factor.epsilon[2] : 0.0;
  for (std::size_t i = 2; i < n; ++i) {
    if (factor.epsilon[i] != es) {
      throw bad_argument("epsilon band is not uniform");
    }
  }
  uniform_pent_factor u;
  u.n = n;
  u.inv_alpha = factor.inv_alpha;
  u.beta = factor.beta;
  u.gamma = factor.gamma;
  u.delta = factor.delta;
  u.eps_scalar = es;
  return u;
}

void pent_solve_per_system_batch(interleaved_batch& a, interleaved_batch& b,
                                 interleaved_batch& c, interleaved_batch& d,
                                 interleaved_batch& e, interleaved_batch& f) {
  if (!a.same_shape(b) || !a.same_shape(c) || !a.same_shape(d) ||
      !a.same_shape(e) || !a.same_shape(f)) {
    throw shape_mismatch("band/rhs buffers differ in shape");
  }
  const std::size_t n = a.rows();
  const std::size_t m = a.systems();
  if (n < 5) throw bad_argument("pentadiagonal system needs n >= 5");

  real* pa = a.data();
  real* pb = b.data();
  real* pc = c.data();
  real* pd = d.data();
  real* pe = e.data();
  real* pf = f.data();

  std::atomic<bool> broke{false};
  auto alpha_ok = [&](real alpha) {
    return std::abs(alpha) >= breakdown_eps;
  };

  parallel_columns(m, [&](std::size_t j0, std::size_t j1) {
    for (std::size_t j = j0; j < j1; ++j) {
      // fused factorization: beta over b, alpha over c, gamma over d,
      // delta over e; a is untouched and doubles as epsilon
      bool ok = true;
      const auto at = [&](std::size_t i) { return i * m + j; };

      real alpha = pc[at(0)];
      if (!alpha_ok(alpha)) { broke.store(true); continue; }
      pd[at(0)] /= alpha;
      pe[at(0)] /= alpha;

      alpha = pc[at(1)] - pb[at(1)] * pd[at(0)];
      if (!alpha_ok(alpha)) { broke.store(true); continue; }
      pc[at(1)] = alpha;
      pd[at(1)] = (pd[at(1)] - pb[at(1)] * pe[at(0)]) / alpha;
      pe[at(1)] /= alpha;

      for (std::size_t i = 2; i + 2 < n; ++i) {
        const real beta = pb[at(i)] - pa[at(i)] * pd[at(i - 2)];
        pb[at(i)] = beta;
        alpha = pc[at(i)] - pa[at(i)] * pe[at(i - 2)] - beta * pd[at(i - 1)];
        if (!alpha_ok(alpha)) { ok = false; break; }
        pc[at(i)] = alpha;
        pd[at(i)] = (pd[at(i)] - beta * pe[at(i - 1)]) / alpha;
        pe[at(i)] /= alpha;
      }
      if (!ok) { broke.store(true); continue; }
      {
        const std::size_t i = n - 2;
        const real beta = pb[at(i)] - pa[at(i)] * pd[at(i - 2)];
        pb[at(i)] = beta;
        alpha = pc[at(i)] - pa[at(i)] * pe[at(i - 2)] - beta * pd[at(i - 1)];
        if (!alpha_ok(alpha)) { broke.store(true); continue; }
        pc[at(i)] = alpha;
        pd[at(i)] = (pd[at(i)] - beta * pe[at(i - 1)]) / alpha;
      }
      {
        const std::size_t i = n - 1;
        const real beta = pb[at(i)] - pa[at(i)] * pd[at(i - 2)];
        pb[at(i)] = beta;
        alpha = pc[at(i)] - pa[at(i)] * pe[at(i - 2)] - beta * pd[at(i - 1)];
        if (!alpha_ok(alpha)) { broke.store(true); continue; }
        pc[at(i)] = alpha;
      }

      // g over f
      pf[at(0)] /= pc[at(0)];
      pf[at(1)] = (pf[at(1)] - pb[at(1)] * pf[at(0)]) / pc[at(1)];
      for (std::size_t i = 2; i < n; ++i) {
        pf[at(i)] = (pf[at(i)] - pa[at(i)] * pf[at(i - 2)] -
                     pb[at(i)] * pf[at(i - 1)]) /
                    pc[at(i)];
      }
      // x over g
      pf[at(n - 2)] -= pd[at(n - 2)] * pf[at(n - 1)];
      for (std::size_t i = n - 2; i-- > 0;) {
        pf[at(i)] -= pd[at(i)] * pf[at(i + 1)] + pe[at(i)] * pf[at(i + 2)];
      }
    }
  });
  if (broke.load()) {
    throw factorization_breakdown(
        "zero alpha in per-system elimination; outputs are unspecified");
  }
}

namespace {

real pent_residual_pass(std::size_t n, std::size_t m,
                        const interleaved_batch& x,
                        const interleaved_batch& rhs, const real* a,
                        const real* b, const real* c, const real* d,
                        const real* e, bool cyclic, real ca, real cb, real cd,
                        real ce) {
  real worst = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    real rmax = 0.0;
    real dmax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      real acc = c[i] * x.at(i, j);
      if (i >= 2) acc += a[i] * x.at(i - 2, j);
      if (i >= 1) acc += b[i] * x.at(i - 1, j);
      if (i + 1 < n) acc += d[i] * x.at(i + 1, j);
      if (i + 2 < n) acc += e[i] * x.at(i + 2, j);
      if (cyclic) {
        if (i == 0) acc += ca * x.at(n - 2, j) + cb * x.at(n - 1, j);
        if (i == 1) acc += ca * x.at(n - 1, j);
        if (i == n - 2) acc += ce * x.at(0, j);
        if (i == n - 1) acc += cd * x.at(0, j) + ce * x.at(1, j);
      }
      rmax = std::max(rmax, std::abs(acc - rhs.at(i, j)));
      dmax = std::max(dmax, std::abs(rhs.at(i, j)));
    }
    worst = std::max(worst, dmax > 0.0 ? rmax / dmax : rmax);
  }
  return worst;
}

}  // namespace

real pent_residual_max(const pent_lhs& lhs, const interleaved_batch& x,
                       const interleaved_batch& rhs) {
  if (!x.same_shape(rhs) || x.rows() != lhs.n) {
    throw shape_mismatch("residual shapes disagree");
  }
  return pent_residual_pass(lhs.n, x.systems(), x, rhs, lhs.a.data(),
                            lhs.b.data(), lhs.c.data(), lhs.d.data(),
                            lhs.e.data(), false, 0, 0, 0, 0);
}

real pent_residual_max_cyclic(real a, real b, real c, real d, real e,
                              const interleaved_batch& x,
                              const interleaved_batch& rhs) {
  if (!x.same_shape(rhs)) throw shape_mismatch("residual shapes disagree");
  const pent_lhs lhs = constant_pent_lhs(a, b, c, d, e, x.rows());
  return pent_residual_pass(lhs.n, x.systems(), x, rhs, lhs.a.data(),
                            lhs.b.data(), lhs.c.data(), lhs.d.data(),
                            lhs.e.data(), true, a, b, d, e);
}

}  // namespace bandsolve
