#include "bandsolve.h"

#include <cstring>
#include <new>
#include <span>

#include "bandsolve/banded.hpp"
#include "bandsolve/batch.hpp"
#include "bandsolve/parallel.hpp"
#include "bandsolve/pde.hpp"
#include "bandsolve/pent_solver.hpp"
#include "bandsolve/periodic.hpp"
#include "bandsolve/tri_solver.hpp"

using namespace bandsolve;

struct bandsolve_batch {
  interleaved_batch impl;
};
struct bandsolve_tri_factor {
  tri_factor impl;
};
struct bandsolve_pent_factor {
  pent_factor impl;
};
struct bandsolve_uniform_pent_factor {
  uniform_pent_factor impl;
};
struct bandsolve_periodic_tri {
  periodic_tri_correction impl;
};
struct bandsolve_periodic_pent {
  periodic_pent_correction impl;
};

namespace {

bandsolve_status map_exception() {
  try {
    throw;
  } catch (const shape_mismatch&) {
    return BANDSOLVE_ERR_SHAPE_MISMATCH;
  } catch (const factorization_breakdown&) {
    return BANDSOLVE_ERR_FACTORIZATION_BREAKDOWN;
  } catch (const division_by_zero&) {
    return BANDSOLVE_ERR_DIVISION_BY_ZERO;
  } catch (const singular_correction&) {
    return BANDSOLVE_ERR_SINGULAR_CORRECTION;
  } catch (const singular_matrix&) {
    return BANDSOLVE_ERR_SINGULAR_MATRIX;
  } catch (const format_error&) {
    return BANDSOLVE_ERR_BAD_FORMAT;
  } catch (const io_error&) {
    return BANDSOLVE_ERR_IO;
  } catch (const bad_argument&) {
    return BANDSOLVE_ERR_BAD_ARG;
  } catch (const std::bad_alloc&) {
    return BANDSOLVE_ERR_INTERNAL;
  } catch (...) {
    return BANDSOLVE_ERR_INTERNAL;
  }
}

template <typename Fn>
bandsolve_status guarded(Fn&& fn) {
  try {
    fn();
    return BANDSOLVE_OK;
  } catch (...) {
    return map_exception();
  }
}

std::span<const real> band_span(const double* p, size_t n) {
  return {p, n};
}

}  // namespace

extern "C" {

const char* bandsolve_status_string(bandsolve_status status) {
  switch (status) {
    case BANDSOLVE_OK: return "ok";
    case BANDSOLVE_ERR_BAD_ARG: return "bad argument";
    case BANDSOLVE_ERR_SHAPE_MISMATCH: return "shape mismatch";
    case BANDSOLVE_ERR_FACTORIZATION_BREAKDOWN:
      return "factorization breakdown";
    case BANDSOLVE_ERR_DIVISION_BY_ZERO: return "division by zero";
    case BANDSOLVE_ERR_SINGULAR_CORRECTION: return "singular correction";
    case BANDSOLVE_ERR_SINGULAR_MATRIX: return "singular matrix";
    case BANDSOLVE_ERR_BAD_FORMAT: return "malformed IBAT data";
    case BANDSOLVE_ERR_IO: return "I/O failure";
    case BANDSOLVE_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* bandsolve_version(void) { return "1.0.0"; }

int bandsolve_get_threads(void) { return worker_count(); }

void bandsolve_set_threads(int threads) { set_worker_count(threads); }

bandsolve_status bandsolve_batch_create(size_t n, size_t m,
                                        bandsolve_batch** out) {
  if (!out) return BANDSOLVE_ERR_BAD_ARG;
  *out = nullptr;
  return guarded([&] { *out = new bandsolve_batch{interleaved_batch(n, m)}; });
}

void bandsolve_batch_destroy(bandsolve_batch* batch) { delete batch; }

size_t bandsolve_batch_rows(const bandsolve_batch* batch) {
  return batch ? batch->impl.rows() : 0;
}

size_t bandsolve_batch_systems(const bandsolve_batch* batch) {
  return batch ? batch->impl.systems() : 0;
}

double* bandsolve_batch_data(bandsolve_batch* batch) {
  return batch ? batch->impl.data() : nullptr;
}

const double* bandsolve_batch_data_const(const bandsolve_batch* batch) {
  return batch ? batch->impl.data() : nullptr;
}

bandsolve_status bandsolve_batch_read_ibat(const char* path,
                                           bandsolve_batch** out) {
  if (!path || !out) return BANDSOLVE_ERR_BAD_ARG;
  *out = nullptr;
  return guarded([&] { *out = new bandsolve_batch{read_ibat(path)}; });
}

bandsolve_status bandsolve_batch_write_ibat(const bandsolve_batch* batch,
                                            const char* path) {
  if (!batch || !path) return BANDSOLVE_ERR_BAD_ARG;
  return guarded([&] { write_ibat(path, batch->impl); });
}

bandsolve_status bandsolve_tri_factor_create(const double* sub,
                                             const double* diag,
                                             const double* sup, size_t n,
                                             bandsolve_tri_factor** out) {
  if (!sub || !diag || !sup || !out) return BANDSOLVE_ERR_BAD_ARG;
  *out = nullptr;
  return guarded([&] {
    tri_lhs lhs(band_span(sub, n), band_span(diag, n), band_span(sup, n));
    *out = new bandsolve_tri_factor{tri_prefactor(lhs)};
  });
}

void bandsolve_tri_factor_destroy(bandsolve_tri_factor* factor) {
  delete factor;
}

bandsolve_status bandsolve_tri_solve_shared(const bandsolve_tri_factor* factor,
                                            bandsolve_batch* batch) {
  if (!factor || !batch) return BANDSOLVE_ERR_BAD_ARG;
  return guarded([&] { tri_solve_shared_batch(factor->impl, batch->impl); });
}

bandsolve_status bandsolve_tri_solve_per_system(bandsolve_batch* a,
                                                bandsolve_batch* b,
                                                bandsolve_batch* c,
                                                bandsolve_batch* d) {
  if (!a || !b || !c || !d) return BANDSOLVE_ERR_BAD_ARG;
  return guarded(
      [&] { tri_solve_per_system_batch(a->impl, b->impl, c->impl, d->impl); });
}

bandsolve_status bandsolve_pent_factor_create(const double* a, const double* b,
                                              const double* c, const double* d,
                                              const double* e, size_t n,
                                              bandsolve_pent_factor** out) {
  if (!a || !b || !c || !d || !e || !out) return BANDSOLVE_ERR_BAD_ARG;
  *out = nullptr;
  return guarded([&] {
    pent_lhs lhs(band_span(a, n), band_span(b, n), band_span(c, n),
                 band_span(d, n), band_span(e, n));
    *out = new bandsolve_pent_factor{pent_prefactor(lhs)};
  });
}

void bandsolve_pent_factor_destroy(bandsolve_pent_factor* factor) {
  delete factor;
}

bandsolve_status bandsolve_pent_solve_shared(
    const bandsolve_pent_factor* factor, bandsolve_batch* batch) {
  if (!factor || !batch) return BANDSOLVE_ERR_BAD_ARG;
  return guarded([&] { pent_solve_shared_batch(factor->impl, batch->impl); });
}

bandsolve_status bandsolve_pent_solve_per_system(
    bandsolve_batch* a, bandsolve_batch* b, bandsolve_batch* c,
    bandsolve_batch* d, bandsolve_batch* e, bandsolve_batch* f) {
  if (!a || !b || !c || !d || !e || !f) return BANDSOLVE_ERR_BAD_ARG;
  return guarded([&] {
    pent_solve_per_system_batch(a->impl, b->impl, c->impl, d->impl, e->impl,
                                f->impl);
  });
}

bandsolve_status bandsolve_uniform_pent_factor_create(
    double a, double b, double c, double d, double e, size_t n,
    bandsolve_uniform_pent_factor** out) {
  if (!out) return BANDSOLVE_ERR_BAD_ARG;
  *out = nullptr;
  return guarded([&] {
    *out = new bandsolve_uniform_pent_factor{
        uniform_prefactor(uniform_pent_lhs{a, b, c, d, e, n})};
  });
}

void bandsolve_uniform_pent_factor_destroy(
    bandsolve_uniform_pent_factor* factor) {
  delete factor;
}

bandsolve_status bandsolve_pent_solve_uniform(
    const bandsolve_uniform_pent_factor* factor, bandsolve_batch* batch) {
  if (!factor || !batch) return BANDSOLVE_ERR_BAD_ARG;
  return guarded([&] { pent_solve_uniform_batch(factor->impl, batch->impl); });
}

bandsolve_status bandsolve_periodic_tri_create(double a, double b, double c,
                                               size_t n,
                                               bandsolve_periodic_tri** out) {
  if (!out) return BANDSOLVE_ERR_BAD_ARG;
  *out = nullptr;
  return guarded([&] {
    *out = new bandsolve_periodic_tri{periodic_tri_prepare(a, b, c, n)};
  });
}

void bandsolve_periodic_tri_destroy(bandsolve_periodic_tri* corr) {
  delete corr;
}

bandsolve_status bandsolve_periodic_tri_solve(
    const bandsolve_periodic_tri* corr, bandsolve_batch* batch) {
  if (!corr || !batch) return BANDSOLVE_ERR_BAD_ARG;
  return guarded([&] { periodic_tri_solve_batch(corr->impl, batch->impl); });
}

bandsolve_status bandsolve_periodic_tri_modified_bands(
    const bandsolve_periodic_tri* corr, double* sub, double* diag,
    double* sup) {
  if (!corr) return BANDSOLVE_ERR_BAD_ARG;
  const tri_factor& f = corr->impl.factor;
  const std::size_t n = f.n;
  return guarded([&] {
    for (std::size_t i = 0; i < n; ++i) {
      const real denom = 1.0 / f.inv_denom[i];
      if (sub) sub[i] = f.sub[i];
      if (diag) diag[i] = i == 0 ? denom : denom + f.sub[i] * f.chat[i - 1];
      if (sup) sup[i] = i + 1 < n ? f.chat[i] * denom : 0.0;
    }
  });
}

bandsolve_status bandsolve_periodic_tri_correct(
    const bandsolve_periodic_tri* corr, bandsolve_batch* batch) {
  if (!corr || !batch) return BANDSOLVE_ERR_BAD_ARG;
  return guarded(
      [&] { periodic_tri_apply_correction(corr->impl, batch->impl); });
}

bandsolve_status bandsolve_periodic_pent_create(
    double a, double b, double c, double d, double e, size_t n,
    bandsolve_periodic_pent** out) {
  if (!out) return BANDSOLVE_ERR_BAD_ARG;
  *out = nullptr;
  return guarded([&] {
    *out =
        new bandsolve_periodic_pent{periodic_pent_prepare(a, b, c, d, e, n)};
  });
}

void bandsolve_periodic_pent_destroy(bandsolve_periodic_pent* corr) {
  delete corr;
}

bandsolve_status bandsolve_periodic_pent_solve(
    const bandsolve_periodic_pent* corr, bandsolve_batch* batch) {
  if (!corr || !batch) return BANDSOLVE_ERR_BAD_ARG;
  return guarded([&] { periodic_pent_solve_batch(corr->impl, batch->impl); });
}

bandsolve_status bandsolve_periodic_pent_correct(
    const bandsolve_periodic_pent* corr, bandsolve_batch* batch) {
  if (!corr || !batch) return BANDSOLVE_ERR_BAD_ARG;
  return guarded(
      [&] { periodic_pent_apply_correction(corr->impl, batch->impl); });
}

bandsolve_status bandsolve_footprint(bandsolve_storage_variant variant,
                                     size_t n, size_t m, uint64_t* elements,
                                     double* reduction_vs_baseline) {
  storage_variant v;
  switch (variant) {
    case BANDSOLVE_STORAGE_TRI_PER_SYSTEM:
      v = storage_variant::tri_per_system;
      break;
    case BANDSOLVE_STORAGE_TRI_SHARED: v = storage_variant::tri_shared; break;
    case BANDSOLVE_STORAGE_PENT_PER_SYSTEM:
      v = storage_variant::pent_per_system;
      break;
    case BANDSOLVE_STORAGE_PENT_SHARED:
      v = storage_variant::pent_shared;
      break;
    case BANDSOLVE_STORAGE_PENT_UNIFORM:
      v = storage_variant::pent_uniform;
      break;
    default: return BANDSOLVE_ERR_BAD_ARG;
  }
  return guarded([&] {
    const footprint_report r = footprint(v, n, m);
    if (elements) *elements = r.element_count;
    if (reduction_vs_baseline) *reduction_vs_baseline = r.reduction_vs_baseline;
  });
}

bandsolve_status bandsolve_tri_residual(const double* sub, const double* diag,
                                        const double* sup, size_t n,
                                        int cyclic, const bandsolve_batch* x,
                                        const bandsolve_batch* rhs,
                                        double* out) {
  if (!sub || !diag || !sup || !x || !rhs || !out) {
    return BANDSOLVE_ERR_BAD_ARG;
  }
  return guarded([&] {
    if (cyclic) {
      if (n < 3) throw bad_argument("cyclic residual needs n >= 3");
      *out = tri_residual_max_cyclic(sub[1], diag[0], sup[0], x->impl,
                                     rhs->impl);
    } else {
      tri_lhs lhs(band_span(sub, n), band_span(diag, n), band_span(sup, n));
      *out = tri_residual_max(lhs, x->impl, rhs->impl);
    }
  });
}

bandsolve_status bandsolve_pent_residual(const double* a, const double* b,
                                         const double* c, const double* d,
                                         const double* e, size_t n, int cyclic,
                                         const bandsolve_batch* x,
                                         const bandsolve_batch* rhs,
                                         double* out) {
  if (!a || !b || !c || !d || !e || !x || !rhs || !out) {
    return BANDSOLVE_ERR_BAD_ARG;
  }
  return guarded([&] {
    if (cyclic) {
      if (n < 6) throw bad_argument("cyclic residual needs n >= 6");
      *out = pent_residual_max_cyclic(a[2], b[1], c[0], d[0], e[0], x->impl,
                                      rhs->impl);
    } else {
      pent_lhs lhs(band_span(a, n), band_span(b, n), band_span(c, n),
                   band_span(d, n), band_span(e, n));
      *out = pent_residual_max(lhs, x->impl, rhs->impl);
    }
  });
}

bandsolve_status bandsolve_bench_run(const bandsolve_bench_params* params,
                                     bandsolve_bench_result* result) {
  if (!params || !result) return BANDSOLVE_ERR_BAD_ARG;
  return guarded([&] {
    bench_config cfg;
    cfg.n = params->n;
    cfg.m = params->m;
    cfg.steps = params->steps;
    cfg.dt = params->dt;
    switch (params->problem) {
      case BANDSOLVE_PROBLEM_DIFFUSION:
        cfg.problem = pde_problem::diffusion;
        break;
      case BANDSOLVE_PROBLEM_HYPERDIFFUSION:
        cfg.problem = pde_problem::hyperdiffusion;
        break;
      default: throw bad_argument("unknown problem");
    }
    switch (params->variant) {
      case BANDSOLVE_VARIANT_SHARED: cfg.variant = solver_variant::shared; break;
      case BANDSOLVE_VARIANT_PER_SYSTEM:
        cfg.variant = solver_variant::per_system;
        break;
      case BANDSOLVE_VARIANT_UNIFORM:
        cfg.variant = solver_variant::uniform;
        break;
      default: throw bad_argument("unknown variant");
    }
    cfg.dump_every = params->dump_every;
    if (params->dump_prefix) cfg.dump_prefix = params->dump_prefix;
    if (cfg.dump_every > 0 && cfg.dump_prefix.empty()) {
      throw bad_argument("dump_every needs dump_prefix");
    }

    field_batch field = default_mode_initial(cfg.n, cfg.m);
    const timing_report report = run_benchmark(cfg, field);
    result->wall_s = report.wall_seconds_total;
    result->per_step_mean_s = report.seconds_per_step_mean;
    result->per_step_std_s = report.seconds_per_step_stddev;
    result->elements = report.footprint.element_count;
    result->threads = report.threads;
    result->steps = report.steps;
  });
}

bandsolve_status bandsolve_periodic_pent_modified_bands(
    const bandsolve_periodic_pent* corr, double* a, double* b, double* c,
    double* d, double* e) {
  if (!corr) return BANDSOLVE_ERR_BAD_ARG;
  return guarded([&] {
    const pent_factor& f = corr->impl.factor;
    const std::size_t n = f.n;
    // reassemble A' = L R from the stored factor, band by band
    std::vector<real> alpha(n), gamma(n, 0.0), delta(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) alpha[i] = 1.0 / f.inv_alpha[i];
    for (std::size_t i = 0; i + 1 < n; ++i) gamma[i] = f.gamma[i];
    for (std::size_t i = 0; i + 2 < n; ++i) delta[i] = f.delta[i];
    for (std::size_t i = 0; i < n; ++i) {
      const real eps = f.epsilon[i];
      const real beta = f.beta[i];
      if (a) a[i] = i >= 2 ? eps : 0.0;
      if (b) {
        b[i] = i >= 1 ? beta + (i >= 2 ? eps * gamma[i - 2] : 0.0) : 0.0;
      }
      if (c) {
        real v = alpha[i];
        if (i >= 1) v += beta * gamma[i - 1];
        if (i >= 2) v += eps * delta[i - 2];
        c[i] = v;
      }
      if (d) {
        real v = i + 1 < n ? alpha[i] * gamma[i] : 0.0;
        if (i >= 1 && i + 1 < n) v += beta * delta[i - 1];
        d[i] = v;
      }
      if (e) e[i] = i + 2 < n ? alpha[i] * delta[i] : 0.0;
    }
  });
}

}  // extern "C"
