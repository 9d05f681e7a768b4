#include "bandsolve/tri_solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

#include "bandsolve/parallel.hpp"

namespace bandsolve {

void tri_solve_shared_batch(const tri_factor& factor,
                            interleaved_batch& batch) {
  if (factor.n != batch.rows()) {
    throw shape_mismatch("factor order != batch rows");
  }
  const std::size_t n = factor.n;
  const std::size_t m = batch.systems();
  const real* sub = factor.sub.data();
  const real* inv = factor.inv_denom.data();
  const real* chat = factor.chat.data();
  real* x = batch.data();

  parallel_columns(m, [&](std::size_t j0, std::size_t j1) {
    // forward sweep: dhat over d
    {
      const real m0 = inv[0];
      real* row = x;
      for (std::size_t j = j0; j < j1; ++j) row[j] *= m0;
    }
    for (std::size_t i = 1; i < n; ++i) {
      const real ai = sub[i];
      const real mi = inv[i];
      real* row = x + i * m;
      const real* prev = row - m;
      for (std::size_t j = j0; j < j1; ++j) {
        row[j] = (row[j] - ai * prev[j]) * mi;
      }
    }
    // backward sweep: x over dhat
    for (std::size_t i = n - 1; i-- > 0;) {
      const real ci = chat[i];
      real* row = x + i * m;
      const real* next = row + m;
      for (std::size_t j = j0; j < j1; ++j) {
        row[j] -= ci * next[j];
      }
    }
  });
}

void tri_solve_per_system_batch(interleaved_batch& a, interleaved_batch& b,
                                interleaved_batch& c, interleaved_batch& d) {
  if (!a.same_shape(b) || !a.same_shape(c) || !a.same_shape(d)) {
    throw shape_mismatch("band/rhs buffers differ in shape");
  }
  const std::size_t n = a.rows();
  const std::size_t m = a.systems();
  if (n < 2) throw bad_argument("tridiagonal system needs n >= 2");

  real* pa = a.data();
  real* pb = b.data();
  real* pc = c.data();
  real* pd = d.data();

  std::atomic<bool> broke{false};
  parallel_columns(m, [&](std::size_t j0, std::size_t j1) {
    for (std::size_t j = j0; j < j1; ++j) {
      // fused factor + forward sweep, reciprocals over b, chat over c,
      // dhat over d
      real denom = pb[j];
      if (!(std::abs(denom) >= breakdown_eps)) {
        broke.store(true);
        continue;
      }
      real r = 1.0 / denom;
      pb[j] = r;
      real cg = pc[j] * r;
      pc[j] = cg;
      real dg = pd[j] * r;
      pd[j] = dg;
      bool column_ok = true;
      for (std::size_t i = 1; i < n; ++i) {
        const std::size_t k = i * m + j;
        denom = pb[k] - pa[k] * cg;
        if (!(std::abs(denom) >= breakdown_eps)) {
          broke.store(true);
          column_ok = false;
          break;
        }
        r = 1.0 / denom;
        pb[k] = r;
        cg = pc[k] * r;
        pc[k] = cg;
        dg = (pd[k] - pa[k] * dg) * r;
        pd[k] = dg;
      }
      if (!column_ok) continue;
      // backward sweep in place over d
      real xnext = pd[(n - 1) * m + j];
      for (std::size_t i = n - 1; i-- > 0;) {
        const std::size_t k = i * m + j;
        const real xi = pd[k] - pc[k] * xnext;
        pd[k] = xi;
        xnext = xi;
      }
    }
  });
  if (broke.load()) {
    throw factorization_breakdown(
        "zero pivot in per-system elimination; outputs are unspecified");
  }
}

namespace {

real residual_pass(std::size_t n, std::size_t m, const interleaved_batch& x,
                   const interleaved_batch& rhs, const real* sub,
                   const real* diag, const real* sup, real corner_tr,
                   real corner_bl) {
  real worst = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    real rmax = 0.0;
    real dmax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      real acc = diag[i] * x.at(i, j);
      if (i > 0) acc += sub[i] * x.at(i - 1, j);
      if (i + 1 < n) acc += sup[i] * x.at(i + 1, j);
      if (i == 0) acc += corner_tr * x.at(n - 1, j);
      if (i == n - 1) acc += corner_bl * x.at(0, j);
      rmax = std::max(rmax, std::abs(acc - rhs.at(i, j)));
      dmax = std::max(dmax, std::abs(rhs.at(i, j)));
    }
    worst = std::max(worst, dmax > 0.0 ? rmax / dmax : rmax);
  }
  return worst;
}

}  // namespace

real tri_residual_max(const tri_lhs& lhs, const interleaved_batch& x,
                      const interleaved_batch& rhs) {
  if (!x.same_shape(rhs) || x.rows() != lhs.n) {
    throw shape_mismatch("residual shapes disagree");
  }
  return residual_pass(lhs.n, x.systems(), x, rhs, lhs.sub.data(),
                       lhs.diag.data(), lhs.sup.data(), 0.0, 0.0);
}

real tri_residual_max_cyclic(real a, real b, real c,
                             const interleaved_batch& x,
                             const interleaved_batch& rhs) {
  if (!x.same_shape(rhs)) throw shape_mismatch("residual shapes disagree");
  const tri_lhs lhs = constant_tri_lhs(a, b, c, x.rows());
  return residual_pass(lhs.n, x.systems(), x, rhs, lhs.sub.data(),
                       lhs.diag.data(), lhs.sup.data(), a, c);
}

}  // namespace bandsolve
