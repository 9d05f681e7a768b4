#include "bandsolve/banded.hpp"

#include <cmath>
#include <string>

namespace bandsolve {

namespace {

real_buffer copy_span(std::span<const real> s) {
  real_buffer b(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) b[i] = s[i];
  return b;
}

void require_finite(std::span<const real> s, const char* band) {
  for (real v : s) {
    if (!std::isfinite(v)) {
      throw bad_argument(std::string("non-finite entry in band ") + band);
    }
  }
}

void require_zero_slot(std::span<const real> s, std::size_t i,
                       const char* what) {
  if (s[i] != 0.0) {
    throw bad_argument(std::string("structural band slot must be zero: ") +
                       what);
  }
}

void check_denominator(real denom, std::size_t row) {
  if (!(std::abs(denom) >= breakdown_eps)) {
    throw factorization_breakdown("zero pivot at row " + std::to_string(row));
  }
}

}  // namespace

tri_lhs::tri_lhs(std::span<const real> a, std::span<const real> b,
                 std::span<const real> c) {
  if (a.size() != b.size() || b.size() != c.size()) {
    throw bad_argument("tridiagonal bands must have identical length");
  }
  if (b.size() < 2) {
    throw bad_argument("tridiagonal system needs n >= 2");
  }
  require_finite(a, "sub");
  require_finite(b, "diag");
  require_finite(c, "sup");
  require_zero_slot(a, 0, "sub[0]");
  require_zero_slot(c, c.size() - 1, "sup[n-1]");
  sub = copy_span(a);
  diag = copy_span(b);
  sup = copy_span(c);
  n = b.size();
}

tri_lhs constant_tri_lhs(real a, real b, real c, std::size_t n) {
  if (n < 2) throw bad_argument("tridiagonal system needs n >= 2");
  std::vector<real> sub(n, a), diag(n, b), sup(n, c);
  sub[0] = 0.0;
  sup[n - 1] = 0.0;
  return tri_lhs(sub, diag, sup);
}

tri_factor tri_prefactor(const tri_lhs& lhs) {
  const std::size_t n = lhs.n;
  tri_factor f;
  f.n = n;
  f.chat = real_buffer(n);
  f.inv_denom = real_buffer(n);
  f.sub = lhs.sub;

  real denom = lhs.diag[0];
  check_denominator(denom, 0);
  f.inv_denom[0] = 1.0 / denom;
  f.chat[0] = lhs.sup[0] / denom;
  for (std::size_t i = 1; i < n; ++i) {
    denom = lhs.diag[i] - lhs.sub[i] * f.chat[i - 1];
    check_denominator(denom, i);
    f.inv_denom[i] = 1.0 / denom;
    if (i + 1 < n) f.chat[i] = lhs.sup[i] / denom;
  }
  return f;
}

pent_lhs::pent_lhs(std::span<const real> a_, std::span<const real> b_,
                   std::span<const real> c_, std::span<const real> d_,
                   std::span<const real> e_) {
  const std::size_t len = c_.size();
  if (a_.size() != len || b_.size() != len || d_.size() != len ||
      e_.size() != len) {
    throw bad_argument("pentadiagonal bands must have identical length");
  }
  if (len < 5) {
    throw bad_argument("pentadiagonal system needs n >= 5");
  }
  require_finite(a_, "a");
  require_finite(b_, "b");
  require_finite(c_, "c");
  require_finite(d_, "d");
  require_finite(e_, "e");
  require_zero_slot(a_, 0, "a[0]");
  require_zero_slot(a_, 1, "a[1]");
  require_zero_slot(b_, 0, "b[0]");
  require_zero_slot(d_, len - 1, "d[n-1]");
  require_zero_slot(e_, len - 1, "e[n-1]");
  require_zero_slot(e_, len - 2, "e[n-2]");
  a = copy_span(a_);
  b = copy_span(b_);
  c = copy_span(c_);
  d = copy_span(d_);
  e = copy_span(e_);
  n = len;
}

pent_lhs constant_pent_lhs(real a, real b, real c, real d, real e,
                           std::size_t n) {
  if (n < 5) throw bad_argument("pentadiagonal system needs n >= 5");
  std::vector<real> av(n, a), bv(n, b), cv(n, c), dv(n, d), ev(n, e);
  av[0] = av[1] = bv[0] = 0.0;
  dv[n - 1] = ev[n - 1] = ev[n - 2] = 0.0;
  return pent_lhs(av, bv, cv, dv, ev);
}

// The fourteen factorization steps, 0-based. alpha is kept in a local so the
// stored factor only carries its reciprocal.
pent_factor pent_prefactor(const pent_lhs& lhs) {
  const std::size_t n = lhs.n;
  pent_factor f;
  f.n = n;
  f.inv_alpha = real_buffer(n);
  f.beta = real_buffer(n);
  f.gamma = real_buffer(n);
  f.delta = real_buffer(n);
  f.epsilon = lhs.a;

  std::vector<real> alpha(n);

  alpha[0] = lhs.c[0];
  check_denominator(alpha[0], 0);
  f.gamma[0] = lhs.d[0] / alpha[0];
  f.delta[0] = lhs.e[0] / alpha[0];

  f.beta[1] = lhs.b[1];
  alpha[1] = lhs.c[1] - f.beta[1] * f.gamma[0];
  check_denominator(alpha[1], 1);
  f.gamma[1] = (lhs.d[1] - f.beta[1] * f.delta[0]) / alpha[1];
  f.delta[1] = lhs.e[1] / alpha[1];

  for (std::size_t i = 2; i + 2 < n; ++i) {
    f.beta[i] = lhs.b[i] - lhs.a[i] * f.gamma[i - 2];
    alpha[i] = lhs.c[i] - lhs.a[i] * f.delta[i - 2] - f.beta[i] * f.gamma[i - 1];
    check_denominator(alpha[i], i);
    f.gamma[i] = (lhs.d[i] - f.beta[i] * f.delta[i - 1]) / alpha[i];
    f.delta[i] = lhs.e[i] / alpha[i];
  }

  {
    const std::size_t i = n - 2;
    f.beta[i] = lhs.b[i] - lhs.a[i] * f.gamma[i - 2];
    alpha[i] = lhs.c[i] - lhs.a[i] * f.delta[i - 2] - f.beta[i] * f.gamma[i - 1];
    check_denominator(alpha[i], i);
    f.gamma[i] = (lhs.d[i] - f.beta[i] * f.delta[i - 1]) / alpha[i];
  }
  {
    const std::size_t i = n - 1;
    f.beta[i] = lhs.b[i] - lhs.a[i] * f.gamma[i - 2];
    alpha[i] = lhs.c[i] - lhs.a[i] * f.delta[i - 2] - f.beta[i] * f.gamma[i - 1];
    check_denominator(alpha[i], i);
  }

  for (std::size_t i = 0; i < n; ++i) f.inv_alpha[i] = 1.0 / alpha[i];
  return f;
}

}  // namespace bandsolve
