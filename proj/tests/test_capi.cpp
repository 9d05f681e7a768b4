#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "bandsolve.h"

namespace {

struct batch_guard {
  bandsolve_batch* p = nullptr;
  ~batch_guard() { bandsolve_batch_destroy(p); }
};

}  // namespace

TEST_CASE("status strings and version") {
  CHECK(std::string(bandsolve_status_string(BANDSOLVE_OK)) == "ok");
  CHECK(std::string(bandsolve_status_string(
            BANDSOLVE_ERR_FACTORIZATION_BREAKDOWN)) ==
        "factorization breakdown");
  CHECK(bandsolve_version() != nullptr);
}

TEST_CASE("thread control") {
  bandsolve_set_threads(3);
  CHECK(bandsolve_get_threads() == 3);
  bandsolve_set_threads(0);
  CHECK(bandsolve_get_threads() >= 1);
}

TEST_CASE("batch lifecycle and data access") {
  batch_guard b;
  REQUIRE(bandsolve_batch_create(4, 3, &b.p) == BANDSOLVE_OK);
  CHECK(bandsolve_batch_rows(b.p) == 4);
  CHECK(bandsolve_batch_systems(b.p) == 3);
  double* data = bandsolve_batch_data(b.p);
  REQUIRE(data != nullptr);
  for (int k = 0; k < 12; ++k) CHECK(data[k] == 0.0);

  CHECK(bandsolve_batch_create(0, 3, &b.p) == BANDSOLVE_ERR_BAD_ARG);
  CHECK(bandsolve_batch_create(4, 3, nullptr) == BANDSOLVE_ERR_BAD_ARG);
}

TEST_CASE("tridiagonal factor and shared solve through the C API") {
  // diffusion bands, sigma = 1/2
  const size_t n = 8;
  std::vector<double> sub(n, -0.5), diag(n, 2.0), sup(n, -0.5);
  sub[0] = 0.0;
  sup[n - 1] = 0.0;

  bandsolve_tri_factor* factor = nullptr;
  REQUIRE(bandsolve_tri_factor_create(sub.data(), diag.data(), sup.data(), n,
                                      &factor) == BANDSOLVE_OK);

  batch_guard rhs, x;
  REQUIRE(bandsolve_batch_create(n, 2, &rhs.p) == BANDSOLVE_OK);
  for (size_t k = 0; k < 2 * n; ++k) {
    bandsolve_batch_data(rhs.p)[k] = std::sin(0.7 * static_cast<double>(k));
  }
  REQUIRE(bandsolve_batch_create(n, 2, &x.p) == BANDSOLVE_OK);
  std::memcpy(bandsolve_batch_data(x.p), bandsolve_batch_data(rhs.p),
              2 * n * sizeof(double));

  CHECK(bandsolve_tri_solve_shared(factor, x.p) == BANDSOLVE_OK);

  double residual = -1.0;
  CHECK(bandsolve_tri_residual(sub.data(), diag.data(), sup.data(), n, 0, x.p,
                               rhs.p, &residual) == BANDSOLVE_OK);
  CHECK(residual <= 1e-12);

  // shape mismatch surfaces as a status, never an exception
  batch_guard wrong;
  REQUIRE(bandsolve_batch_create(n + 1, 2, &wrong.p) == BANDSOLVE_OK);
  CHECK(bandsolve_tri_solve_shared(factor, wrong.p) ==
        BANDSOLVE_ERR_SHAPE_MISMATCH);

  bandsolve_tri_factor_destroy(factor);
}

TEST_CASE("tridiagonal factor error codes") {
  const size_t n = 4;
  std::vector<double> zero(n, 0.0);
  bandsolve_tri_factor* factor = nullptr;
  CHECK(bandsolve_tri_factor_create(zero.data(), zero.data(), zero.data(), n,
                                    &factor) ==
        BANDSOLVE_ERR_FACTORIZATION_BREAKDOWN);
  CHECK(factor == nullptr);

  std::vector<double> bad_sub(n, 1.0);  // sub[0] must be zero
  std::vector<double> diag(n, 1.0);
  CHECK(bandsolve_tri_factor_create(bad_sub.data(), diag.data(), zero.data(),
                                    n, &factor) == BANDSOLVE_ERR_BAD_ARG);
  CHECK(bandsolve_tri_factor_create(nullptr, diag.data(), zero.data(), n,
                                    &factor) == BANDSOLVE_ERR_BAD_ARG);
}

TEST_CASE("pentadiagonal solve paths through the C API") {
  const size_t n = 12;
  std::vector<double> a(n, 0.25), b(n, -1.0), c(n, 2.5), d(n, -1.0),
      e(n, 0.25);
  a[0] = a[1] = b[0] = 0.0;
  d[n - 1] = e[n - 1] = e[n - 2] = 0.0;

  bandsolve_pent_factor* factor = nullptr;
  REQUIRE(bandsolve_pent_factor_create(a.data(), b.data(), c.data(), d.data(),
                                       e.data(), n, &factor) == BANDSOLVE_OK);
  bandsolve_uniform_pent_factor* uniform = nullptr;
  REQUIRE(bandsolve_uniform_pent_factor_create(0.25, -1.0, 2.5, -1.0, 0.25, n,
                                               &uniform) == BANDSOLVE_OK);

  batch_guard rhs, xs, xu;
  REQUIRE(bandsolve_batch_create(n, 3, &rhs.p) == BANDSOLVE_OK);
  for (size_t k = 0; k < 3 * n; ++k) {
    bandsolve_batch_data(rhs.p)[k] = std::cos(0.3 * static_cast<double>(k));
  }
  REQUIRE(bandsolve_batch_create(n, 3, &xs.p) == BANDSOLVE_OK);
  REQUIRE(bandsolve_batch_create(n, 3, &xu.p) == BANDSOLVE_OK);
  std::memcpy(bandsolve_batch_data(xs.p), bandsolve_batch_data(rhs.p),
              3 * n * sizeof(double));
  std::memcpy(bandsolve_batch_data(xu.p), bandsolve_batch_data(rhs.p),
              3 * n * sizeof(double));

  CHECK(bandsolve_pent_solve_shared(factor, xs.p) == BANDSOLVE_OK);
  CHECK(bandsolve_pent_solve_uniform(uniform, xu.p) == BANDSOLVE_OK);
  CHECK(std::memcmp(bandsolve_batch_data(xs.p), bandsolve_batch_data(xu.p),
                    3 * n * sizeof(double)) == 0);

  double residual = -1.0;
  CHECK(bandsolve_pent_residual(a.data(), b.data(), c.data(), d.data(),
                                e.data(), n, 0, xs.p, rhs.p,
                                &residual) == BANDSOLVE_OK);
  CHECK(residual <= 1e-12);

  bandsolve_pent_factor_destroy(factor);
  bandsolve_uniform_pent_factor_destroy(uniform);
}

TEST_CASE("periodic handles through the C API") {
  const size_t n = 16;

  bandsolve_periodic_tri* tri = nullptr;
  REQUIRE(bandsolve_periodic_tri_create(-0.5, 2.0, -0.5, n, &tri) ==
          BANDSOLVE_OK);

  batch_guard x, rhs;
  REQUIRE(bandsolve_batch_create(n, 2, &x.p) == BANDSOLVE_OK);
  for (size_t k = 0; k < 2 * n; ++k) {
    bandsolve_batch_data(x.p)[k] = std::sin(1.1 * static_cast<double>(k));
  }
  REQUIRE(bandsolve_batch_create(n, 2, &rhs.p) == BANDSOLVE_OK);
  std::memcpy(bandsolve_batch_data(rhs.p), bandsolve_batch_data(x.p),
              2 * n * sizeof(double));

  CHECK(bandsolve_periodic_tri_solve(tri, x.p) == BANDSOLVE_OK);

  std::vector<double> sub(n, -0.5), diag(n, 2.0), sup(n, -0.5);
  sub[0] = 0.0;
  sup[n - 1] = 0.0;
  double residual = -1.0;
  CHECK(bandsolve_tri_residual(sub.data(), diag.data(), sup.data(), n, 1, x.p,
                               rhs.p, &residual) == BANDSOLVE_OK);
  CHECK(residual <= 1e-10);

  // the exported modified bands reproduce the wrap-free system: first
  // diagonal entry doubles, corners disappear
  std::vector<double> msub(n), mdiag(n), msup(n);
  CHECK(bandsolve_periodic_tri_modified_bands(tri, msub.data(), mdiag.data(),
                                              msup.data()) == BANDSOLVE_OK);
  CHECK(mdiag[0] == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(mdiag[n - 1] == doctest::Approx(2.0 + 0.25 / 2.0).epsilon(1e-12));
  CHECK(msub[1] == -0.5);

  bandsolve_periodic_tri_destroy(tri);

  bandsolve_periodic_pent* pent = nullptr;
  REQUIRE(bandsolve_periodic_pent_create(0.25, -1.0, 2.5, -1.0, 0.25, n,
                                         &pent) == BANDSOLVE_OK);
  batch_guard px, prhs;
  REQUIRE(bandsolve_batch_create(n, 2, &px.p) == BANDSOLVE_OK);
  for (size_t k = 0; k < 2 * n; ++k) {
    bandsolve_batch_data(px.p)[k] = std::cos(0.9 * static_cast<double>(k));
  }
  REQUIRE(bandsolve_batch_create(n, 2, &prhs.p) == BANDSOLVE_OK);
  std::memcpy(bandsolve_batch_data(prhs.p), bandsolve_batch_data(px.p),
              2 * n * sizeof(double));
  CHECK(bandsolve_periodic_pent_solve(pent, px.p) == BANDSOLVE_OK);

  std::vector<double> pa(n, 0.25), pb(n, -1.0), pc(n, 2.5), pd(n, -1.0),
      pe(n, 0.25);
  pa[0] = pa[1] = pb[0] = 0.0;
  pd[n - 1] = pe[n - 1] = pe[n - 2] = 0.0;
  CHECK(bandsolve_pent_residual(pa.data(), pb.data(), pc.data(), pd.data(),
                                pe.data(), n, 1, px.p, prhs.p,
                                &residual) == BANDSOLVE_OK);
  CHECK(residual <= 1e-10);

  // exported A' bands agree with the documented corner folds
  std::vector<double> ma(n), mb(n), mc(n), md(n), me(n);
  CHECK(bandsolve_periodic_pent_modified_bands(pent, ma.data(), mb.data(),
                                               mc.data(), md.data(),
                                               me.data()) == BANDSOLVE_OK);
  CHECK(mc[0] == doctest::Approx(2.5 - 1.0).epsilon(1e-12));       // c + b
  CHECK(mc[n - 1] == doctest::Approx(2.5 - 1.0).epsilon(1e-12));   // c + d
  CHECK(md[0] == doctest::Approx(-1.0 + 0.25).epsilon(1e-12));     // d + a
  CHECK(mb[1] == doctest::Approx(-1.0 + 0.25).epsilon(1e-12));     // b + a
  CHECK(md[n - 2] == doctest::Approx(-1.0 + 0.25).epsilon(1e-12)); // d + e
  CHECK(mb[n - 1] == doctest::Approx(-1.0 + 0.25).epsilon(1e-12)); // b + e
  CHECK(ma[2] == 0.25);

  bandsolve_periodic_pent_destroy(pent);
}

TEST_CASE("periodic error codes") {
  bandsolve_periodic_tri* tri = nullptr;
  CHECK(bandsolve_periodic_tri_create(1.0, 0.0, 1.0, 8, &tri) ==
        BANDSOLVE_ERR_DIVISION_BY_ZERO);
  CHECK(tri == nullptr);
  CHECK(bandsolve_periodic_tri_create(-1.0, 1.0, 0.0, 3, &tri) ==
        BANDSOLVE_ERR_SINGULAR_CORRECTION);
}

TEST_CASE("IBAT round trip through the C API") {
  const char* path = "./capi_roundtrip.ibat";
  batch_guard out;
  REQUIRE(bandsolve_batch_create(5, 3, &out.p) == BANDSOLVE_OK);
  for (size_t k = 0; k < 15; ++k) {
    bandsolve_batch_data(out.p)[k] = 0.125 * static_cast<double>(k) - 1.0;
  }
  REQUIRE(bandsolve_batch_write_ibat(out.p, path) == BANDSOLVE_OK);

  batch_guard in;
  REQUIRE(bandsolve_batch_read_ibat(path, &in.p) == BANDSOLVE_OK);
  CHECK(bandsolve_batch_rows(in.p) == 5);
  CHECK(bandsolve_batch_systems(in.p) == 3);
  CHECK(std::memcmp(bandsolve_batch_data(in.p), bandsolve_batch_data(out.p),
                    15 * sizeof(double)) == 0);
  std::remove(path);

  batch_guard missing;
  CHECK(bandsolve_batch_read_ibat("./no_such_file.ibat", &missing.p) ==
        BANDSOLVE_ERR_IO);

  // truncated header
  std::FILE* f = std::fopen(path, "wb");
  REQUIRE(f);
  std::fwrite("IBAT", 1, 4, f);
  std::fclose(f);
  CHECK(bandsolve_batch_read_ibat(path, &missing.p) ==
        BANDSOLVE_ERR_BAD_FORMAT);
  std::remove(path);
}

TEST_CASE("footprint through the C API") {
  uint64_t elements = 0;
  double reduction = 0.0;
  CHECK(bandsolve_footprint(BANDSOLVE_STORAGE_TRI_SHARED, 10, 4, &elements,
                            &reduction) == BANDSOLVE_OK);
  CHECK(elements == 70);
  CHECK(bandsolve_footprint(static_cast<bandsolve_storage_variant>(99), 10, 4,
                            &elements, &reduction) == BANDSOLVE_ERR_BAD_ARG);
}

TEST_CASE("benchmark driver through the C API") {
  bandsolve_bench_params params{};
  params.n = 24;
  params.m = 4;
  params.steps = 10;
  params.dt = 0.0;
  params.problem = BANDSOLVE_PROBLEM_HYPERDIFFUSION;
  params.variant = BANDSOLVE_VARIANT_UNIFORM;

  bandsolve_bench_result result{};
  CHECK(bandsolve_bench_run(&params, &result) == BANDSOLVE_OK);
  CHECK(result.steps == 10);
  CHECK(result.wall_s >= 0.0);
  CHECK(result.elements == 4 * 24 + 24 * 4);
  CHECK(result.threads >= 1);

  params.problem = BANDSOLVE_PROBLEM_DIFFUSION;  // uniform + diffusion
  CHECK(bandsolve_bench_run(&params, &result) == BANDSOLVE_ERR_BAD_ARG);
  CHECK(bandsolve_bench_run(nullptr, &result) == BANDSOLVE_ERR_BAD_ARG);
}
