/*
 * bandsolve — batched tridiagonal/pentadiagonal solvers with a single
 * shared LHS, interleaved right-hand sides, periodic wrap corrections and
 * Crank-Nicolson benchmark drivers.
 *
 * C interface of the shared library. All objects are opaque handles created
 * and destroyed through these functions; every fallible call returns a
 * bandsolve_status and writes results through out-parameters. Handles are
 * immutable after creation unless a function documents otherwise, and
 * immutable handles may be shared across threads.
 */
#ifndef BANDSOLVE_H
#define BANDSOLVE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bandsolve_status {
  BANDSOLVE_OK = 0,
  BANDSOLVE_ERR_BAD_ARG = 1,
  BANDSOLVE_ERR_SHAPE_MISMATCH = 2,
  BANDSOLVE_ERR_FACTORIZATION_BREAKDOWN = 3,
  BANDSOLVE_ERR_DIVISION_BY_ZERO = 4,
  BANDSOLVE_ERR_SINGULAR_CORRECTION = 5,
  BANDSOLVE_ERR_SINGULAR_MATRIX = 6,
  BANDSOLVE_ERR_BAD_FORMAT = 7, /* malformed IBAT file */
  BANDSOLVE_ERR_IO = 8,
  BANDSOLVE_ERR_INTERNAL = 9
} bandsolve_status;

const char* bandsolve_status_string(bandsolve_status status);
const char* bandsolve_version(void);

/* Worker threads for the system-parallel sweeps. 0 restores the default
 * (BANDSOLVE_THREADS environment variable, else hardware concurrency).
 * Results are bitwise identical for any thread count. */
int bandsolve_get_threads(void);
void bandsolve_set_threads(int threads);

/* ------------------------------------------------------------------ */
/* Interleaved batch: n x m reals, element (i, j) at data[i*m + j].    */
/* ------------------------------------------------------------------ */
typedef struct bandsolve_batch bandsolve_batch;

bandsolve_status bandsolve_batch_create(size_t n, size_t m,
                                        bandsolve_batch** out);
void bandsolve_batch_destroy(bandsolve_batch* batch);
size_t bandsolve_batch_rows(const bandsolve_batch* batch);
size_t bandsolve_batch_systems(const bandsolve_batch* batch);
double* bandsolve_batch_data(bandsolve_batch* batch);
const double* bandsolve_batch_data_const(const bandsolve_batch* batch);

/* IBAT file: little-endian "IBAT" magic, u32 version = 1, u64 n, u64 m,
 * then n*m binary64 values in interleaved order. Byte-exact round trip. */
bandsolve_status bandsolve_batch_read_ibat(const char* path,
                                           bandsolve_batch** out);
bandsolve_status bandsolve_batch_write_ibat(const bandsolve_batch* batch,
                                            const char* path);

/* ------------------------------------------------------------------ */
/* Tridiagonal: bands sub/diag/sup of length n; sub[0] = sup[n-1] = 0. */
/* ------------------------------------------------------------------ */
typedef struct bandsolve_tri_factor bandsolve_tri_factor;

bandsolve_status bandsolve_tri_factor_create(const double* sub,
                                             const double* diag,
                                             const double* sup, size_t n,
                                             bandsolve_tri_factor** out);
void bandsolve_tri_factor_destroy(bandsolve_tri_factor* factor);

/* Overwrites every system's column of the batch with the solution. The
 * factor is read-only and serves any number of calls. */
bandsolve_status bandsolve_tri_solve_shared(const bandsolve_tri_factor* factor,
                                            bandsolve_batch* batch);

/* Baseline with one band copy per system: a/b/c are consumed, d holds the
 * solutions on return. Callers must rewrite the bands before reuse. */
bandsolve_status bandsolve_tri_solve_per_system(bandsolve_batch* a,
                                                bandsolve_batch* b,
                                                bandsolve_batch* c,
                                                bandsolve_batch* d);

/* ------------------------------------------------------------------ */
/* Pentadiagonal: bands a..e of length n, main diagonal c;             */
/* a[0] = a[1] = b[0] = d[n-1] = e[n-1] = e[n-2] = 0.                  */
/* ------------------------------------------------------------------ */
typedef struct bandsolve_pent_factor bandsolve_pent_factor;
typedef struct bandsolve_uniform_pent_factor bandsolve_uniform_pent_factor;

bandsolve_status bandsolve_pent_factor_create(const double* a, const double* b,
                                              const double* c, const double* d,
                                              const double* e, size_t n,
                                              bandsolve_pent_factor** out);
void bandsolve_pent_factor_destroy(bandsolve_pent_factor* factor);
bandsolve_status bandsolve_pent_solve_shared(
    const bandsolve_pent_factor* factor, bandsolve_batch* batch);
bandsolve_status bandsolve_pent_solve_per_system(
    bandsolve_batch* a, bandsolve_batch* b, bandsolve_batch* c,
    bandsolve_batch* d, bandsolve_batch* e, bandsolve_batch* f);

/* Uniform variant: all five bands constant, epsilon kept as one scalar
 * (4N + NM stored reals instead of 5N + NM). */
bandsolve_status bandsolve_uniform_pent_factor_create(
    double a, double b, double c, double d, double e, size_t n,
    bandsolve_uniform_pent_factor** out);
void bandsolve_uniform_pent_factor_destroy(
    bandsolve_uniform_pent_factor* factor);
bandsolve_status bandsolve_pent_solve_uniform(
    const bandsolve_uniform_pent_factor* factor, bandsolve_batch* batch);

/* ------------------------------------------------------------------ */
/* Periodic (cyclic) systems with constant bands.                      */
/* ------------------------------------------------------------------ */
typedef struct bandsolve_periodic_tri bandsolve_periodic_tri;
typedef struct bandsolve_periodic_pent bandsolve_periodic_pent;

bandsolve_status bandsolve_periodic_tri_create(double a, double b, double c,
                                               size_t n,
                                               bandsolve_periodic_tri** out);
void bandsolve_periodic_tri_destroy(bandsolve_periodic_tri* corr);
bandsolve_status bandsolve_periodic_tri_solve(
    const bandsolve_periodic_tri* corr, bandsolve_batch* batch);
/* Modified strictly-banded matrix A' whose factorization backs the cyclic
 * solve; each band pointer may be NULL. Buffers must hold n values. */
bandsolve_status bandsolve_periodic_tri_modified_bands(
    const bandsolve_periodic_tri* corr, double* sub, double* diag,
    double* sup);
/* Rank-1 correction alone, for callers that solved A' y = d themselves. */
bandsolve_status bandsolve_periodic_tri_correct(
    const bandsolve_periodic_tri* corr, bandsolve_batch* batch);

bandsolve_status bandsolve_periodic_pent_create(double a, double b, double c,
                                                double d, double e, size_t n,
                                                bandsolve_periodic_pent** out);
void bandsolve_periodic_pent_destroy(bandsolve_periodic_pent* corr);
bandsolve_status bandsolve_periodic_pent_solve(
    const bandsolve_periodic_pent* corr, bandsolve_batch* batch);
bandsolve_status bandsolve_periodic_pent_modified_bands(
    const bandsolve_periodic_pent* corr, double* a, double* b, double* c,
    double* d, double* e);
bandsolve_status bandsolve_periodic_pent_correct(
    const bandsolve_periodic_pent* corr, bandsolve_batch* batch);

/* ------------------------------------------------------------------ */
/* Storage accounting (stored reals for LHS/factor plus RHS):          */
/*   tri per-system 4NM   tri shared 3N+NM                             */
/*   pent per-system 6NM  pent shared 5N+NM  pent uniform 4N+NM        */
/* ------------------------------------------------------------------ */
typedef enum bandsolve_storage_variant {
  BANDSOLVE_STORAGE_TRI_PER_SYSTEM = 0,
  BANDSOLVE_STORAGE_TRI_SHARED = 1,
  BANDSOLVE_STORAGE_PENT_PER_SYSTEM = 2,
  BANDSOLVE_STORAGE_PENT_SHARED = 3,
  BANDSOLVE_STORAGE_PENT_UNIFORM = 4
} bandsolve_storage_variant;

bandsolve_status bandsolve_footprint(bandsolve_storage_variant variant,
                                     size_t n, size_t m, uint64_t* elements,
                                     double* reduction_vs_baseline);

/* Max over systems of ||A x - rhs||_inf / ||rhs||_inf. When cyclic is
 * nonzero the bands must be constant; the wrap corners are read from the
 * interior band entries. */
bandsolve_status bandsolve_tri_residual(const double* sub, const double* diag,
                                        const double* sup, size_t n,
                                        int cyclic,
                                        const bandsolve_batch* x,
                                        const bandsolve_batch* rhs,
                                        double* out);
bandsolve_status bandsolve_pent_residual(const double* a, const double* b,
                                         const double* c, const double* d,
                                         const double* e, size_t n, int cyclic,
                                         const bandsolve_batch* x,
                                         const bandsolve_batch* rhs,
                                         double* out);

/* ------------------------------------------------------------------ */
/* Crank-Nicolson benchmark drivers (periodic diffusion via the        */
/* tridiagonal path, periodic hyperdiffusion via the pentadiagonal     */
/* path). Timing covers only the stepping loop; preparation and        */
/* allocation are excluded, and the per-system variant's per-step band */
/* reset is timed as part of the loop.                                 */
/* ------------------------------------------------------------------ */
typedef enum bandsolve_problem {
  BANDSOLVE_PROBLEM_DIFFUSION = 0,
  BANDSOLVE_PROBLEM_HYPERDIFFUSION = 1
} bandsolve_problem;

typedef enum bandsolve_variant {
  BANDSOLVE_VARIANT_SHARED = 0,
  BANDSOLVE_VARIANT_PER_SYSTEM = 1,
  BANDSOLVE_VARIANT_UNIFORM = 2 /* hyperdiffusion only */
} bandsolve_variant;

typedef struct bandsolve_bench_params {
  size_t n;
  size_t m;
  long steps;
  double dt; /* <= 0 selects the default with sigma_x = 1 */
  int problem; /* bandsolve_problem */
  int variant; /* bandsolve_variant */
  long dump_every; /* 0 disables IBAT field dumps */
  const char* dump_prefix; /* may be NULL when dump_every is 0 */
} bandsolve_bench_params;

typedef struct bandsolve_bench_result {
  double wall_s;
  double per_step_mean_s;
  double per_step_std_s;
  uint64_t elements; /* storage footprint of the variant */
  int threads;
  long steps;
} bandsolve_bench_result;

bandsolve_status bandsolve_bench_run(const bandsolve_bench_params* params,
                                     bandsolve_bench_result* result);

#ifdef __cplusplus
}
#endif

#endif /* BANDSOLVE_H */
