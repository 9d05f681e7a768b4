#pragma once

#include <cstddef>
#include <vector>

#include "bandsolve/common.hpp"

namespace bandsolve {

// Dense row-major matrix plus a partial-pivot LU. This is the reference
// oracle the test suites check the banded solvers against; nothing on the
// solve path calls it. Size is capped to keep oracle usage at test scale.
inline constexpr std::size_t dense_oracle_max_n = 512;

class dense_matrix {
public:
  explicit dense_matrix(std::size_t n);

  std::size_t n() const { return n_; }
  real& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  real at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

private:
  std::size_t n_;
  std::vector<real> a_;
};

// Factors once; solve() can then be applied to any number of right-hand
// sides. Throws singular_matrix when no pivot above 1e-14 is available.
class dense_lu {
public:
  explicit dense_lu(const dense_matrix& a);

  void solve_in_place(real* x) const;
  std::vector<real> solve(std::vector<real> rhs) const;
  std::size_t n() const { return n_; }

private:
  std::size_t n_;
  std::vector<real> lu_;
  std::vector<std::size_t> perm_;
};

std::vector<real> dense_solve_oracle(const dense_matrix& a,
                                     std::vector<real> rhs);

}  // namespace bandsolve
