#include "bandsolve/dense.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace bandsolve {

dense_matrix::dense_matrix(std::size_t n) : n_(n), a_(n * n, 0.0) {
  if (n == 0 || n > dense_oracle_max_n) {
    throw bad_argument("dense oracle supports 1 <= n <= 512");
  }
}

dense_lu::dense_lu(const dense_matrix& a)
    : n_(a.n()), lu_(n_ * n_), perm_(n_) {
  for (std::size_t i = 0; i < n_; ++i) {
    perm_[i] = i;
    for (std::size_t j = 0; j < n_; ++j) lu_[i * n_ + j] = a.at(i, j);
  }
  constexpr real pivot_tol = 1e-14;
  for (std::size_t k = 0; k < n_; ++k) {
    std::size_t piv = k;
    real best = std::abs(lu_[perm_[k] * n_ + k]);
    for (std::size_t i = k + 1; i < n_; ++i) {
      const real mag = std::abs(lu_[perm_[i] * n_ + k]);
      if (mag > best) {
        best = mag;
        piv = i;
      }
    }
    if (!(best > pivot_tol)) {
      throw singular_matrix("no pivot above 1e-14 in column " +
                            std::to_string(k));
    }
    std::swap(perm_[k], perm_[piv]);
    const real* prow = &lu_[perm_[k] * n_];
    const real inv_piv = 1.0 / prow[k];
    for (std::size_t i = k + 1; i < n_; ++i) {
      real* row = &lu_[perm_[i] * n_];
      const real l = row[k] * inv_piv;
      row[k] = l;
      if (l != 0.0) {
        for (std::size_t j = k + 1; j < n_; ++j) row[j] -= l * prow[j];
      }
    }
  }
}

void dense_lu::solve_in_place(real* x) const {
  std::vector<real> y(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    real s = x[perm_[i]];
    const real* row = &lu_[perm_[i] * n_];
    for (std::size_t j = 0; j < i; ++j) s -= row[j] * y[j];
    y[i] = s;
  }
  for (std::size_t ii = n_; ii-- > 0;) {
    real s = y[ii];
    const real* row = &lu_[perm_[ii] * n_];
    for (std::size_t j = ii + 1; j < n_; ++j) s -= row[j] * y[j];
    y[ii] = s / row[ii];
  }
  for (std::size_t i = 0; i < n_; ++i) x[i] = y[i];
}

std::vector<real> dense_lu::solve(std::vector<real> rhs) const {
  if (rhs.size() != n_) throw shape_mismatch("rhs length != matrix order");
  solve_in_place(rhs.data());
  return rhs;
}

std::vector<real> dense_solve_oracle(const dense_matrix& a,
                                     std::vector<real> rhs) {
  return dense_lu(a).solve(std::move(rhs));
}

}  // namespace bandsolve
