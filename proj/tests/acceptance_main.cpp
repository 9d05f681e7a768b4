// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Numerical criteria run against the dense partial-pivot
// oracle; the CLI criterion drives the installed binary.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "bandsolve/banded.hpp"
#include "bandsolve/batch.hpp"
#include "bandsolve/dense.hpp"
#include "bandsolve/parallel.hpp"
#include "bandsolve/pde.hpp"
#include "bandsolve/pent_solver.hpp"
#include "bandsolve/periodic.hpp"
#include "bandsolve/tri_solver.hpp"
#include "support/oracles.hpp"

using namespace bandsolve;
using testsup::rng;

namespace {

constexpr double pi = std::numbers::pi;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

// ---------------------------------------------------------------- 1
bool criterion_tri_oracle(std::string& detail) {
  const auto t0 = std::chrono::steady_clock::now();
  rng r(1001);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = r.index(4, 256);
    const std::size_t m = r.index(1, 32);
    const tri_lhs lhs = testsup::random_dominant_tri(r, n);
    const tri_factor factor = tri_prefactor(lhs);
    interleaved_batch batch = testsup::random_batch(r, n, m);
    const interleaved_batch rhs = batch;
    tri_solve_shared_batch(factor, batch);
    worst = std::max(worst, testsup::max_error_vs_dense(
                                testsup::dense_from_tri(lhs), batch, rhs));
  }
  const double elapsed = seconds_since(t0);
  char buf[128];
  std::snprintf(buf, sizeof buf, "max error %.3e, %.1f s", worst, elapsed);
  detail = buf;
  return worst <= 1e-9 && elapsed < 10.0;
}

// ---------------------------------------------------------------- 2
bool criterion_pent_oracle(std::string& detail) {
  const auto t0 = std::chrono::steady_clock::now();
  rng r(2002);
  double worst_solve = 0.0;
  double worst_lr = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = r.index(5, 256);
    const std::size_t m = r.index(1, 32);
    const pent_lhs lhs = testsup::random_dominant_pent(r, n);
    const pent_factor factor = pent_prefactor(lhs);
    worst_lr = std::max(worst_lr, testsup::lr_reassembly_error(lhs, factor));
    interleaved_batch batch = testsup::random_batch(r, n, m);
    const interleaved_batch rhs = batch;
    pent_solve_shared_batch(factor, batch);
    worst_solve = std::max(
        worst_solve, testsup::max_error_vs_dense(testsup::dense_from_pent(lhs),
                                                 batch, rhs));
  }
  const double elapsed = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof buf, "max error %.3e, max LR error %.3e, %.1f s",
                worst_solve, worst_lr, elapsed);
  detail = buf;
  return worst_solve <= 1e-9 && worst_lr <= 1e-11 && elapsed < 20.0;
}

// ---------------------------------------------------------------- 3
bool criterion_variant_equivalence(std::string& detail) {
  rng r(3003);
  double worst = 0.0;
  const std::size_t ns[5] = {8, 16, 32, 64, 128};
  const std::size_t ms[5] = {1, 2, 4, 8, 16};
  for (std::size_t n : ns) {
    for (std::size_t m : ms) {
      {
        // tridiagonal: shared vs per-system on replicated band copies
        const tri_lhs lhs = testsup::random_dominant_tri(r, n);
        const tri_factor factor = tri_prefactor(lhs);
        interleaved_batch shared_x = testsup::random_batch(r, n, m);
        interleaved_batch d = shared_x;
        interleaved_batch a = replicated_batch({lhs.sub.data(), n}, m);
        interleaved_batch b = replicated_batch({lhs.diag.data(), n}, m);
        interleaved_batch c = replicated_batch({lhs.sup.data(), n}, m);
        tri_solve_shared_batch(factor, shared_x);
        tri_solve_per_system_batch(a, b, c, d);
        worst = std::max(worst, testsup::max_abs_diff(shared_x, d));
      }
      {
        // pentadiagonal with constant bands: shared vs per-system vs uniform
        const auto cb = testsup::random_dominant_pent_const(r);
        const pent_lhs lhs = constant_pent_lhs(cb.a, cb.b, cb.c, cb.d, cb.e, n);
        const pent_factor factor = pent_prefactor(lhs);
        const uniform_pent_factor uf =
            uniform_prefactor(uniform_pent_lhs{cb.a, cb.b, cb.c, cb.d, cb.e, n});
        interleaved_batch shared_x = testsup::random_batch(r, n, m);
        interleaved_batch fx = shared_x;
        interleaved_batch ux = shared_x;
        interleaved_batch a = replicated_batch({lhs.a.data(), n}, m);
        interleaved_batch b = replicated_batch({lhs.b.data(), n}, m);
        interleaved_batch c = replicated_batch({lhs.c.data(), n}, m);
        interleaved_batch d = replicated_batch({lhs.d.data(), n}, m);
        interleaved_batch e = replicated_batch({lhs.e.data(), n}, m);
        pent_solve_shared_batch(factor, shared_x);
        pent_solve_per_system_batch(a, b, c, d, e, fx);
        pent_solve_uniform_batch(uf, ux);
        worst = std::max(worst, testsup::max_abs_diff(shared_x, fx));
        worst = std::max(worst, testsup::max_abs_diff(shared_x, ux));
      }
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "max elementwise gap %.3e", worst);
  detail = buf;
  return worst <= 1e-12;
}

// ---------------------------------------------------------------- 4
bool criterion_periodic(std::string& detail) {
  rng r(4004);
  double worst_split = 0.0;
  for (std::size_t n = 3; n <= 32; ++n) {
    const auto tb = testsup::random_dominant_tri_const(r);
    worst_split =
        std::max(worst_split, testsup::tri_splitting_error(tb.a, tb.b, tb.c, n));
    if (n >= 6) {
      const auto pb = testsup::random_dominant_pent_const(r);
      worst_split = std::max(worst_split, testsup::pent_splitting_error(
                                              pb.a, pb.b, pb.c, pb.d, pb.e, n));
    }
  }

  double worst_solve = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = r.index(1, 8);
    if (trial % 2 == 0) {
      const std::size_t n = r.index(3, 64);
      const auto tb = testsup::random_dominant_tri_const(r);
      const periodic_tri_correction corr =
          periodic_tri_prepare(tb.a, tb.b, tb.c, n);
      interleaved_batch batch = testsup::random_batch(r, n, m);
      const interleaved_batch rhs = batch;
      periodic_tri_solve_batch(corr, batch);
      worst_solve = std::max(
          worst_solve,
          testsup::max_error_vs_dense(
              testsup::dense_cyclic_tri(tb.a, tb.b, tb.c, n), batch, rhs));
    } else {
      const std::size_t n = r.index(6, 64);
      const auto pb = testsup::random_dominant_pent_const(r);
      const periodic_pent_correction corr =
          periodic_pent_prepare(pb.a, pb.b, pb.c, pb.d, pb.e, n);
      interleaved_batch batch = testsup::random_batch(r, n, m);
      const interleaved_batch rhs = batch;
      periodic_pent_solve_batch(corr, batch);
      worst_solve = std::max(
          worst_solve,
          testsup::max_error_vs_dense(
              testsup::dense_cyclic_pent(pb.a, pb.b, pb.c, pb.d, pb.e, n),
              batch, rhs));
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "splitting %.3e, cyclic solve %.3e",
                worst_split, worst_solve);
  detail = buf;
  return worst_split <= 1e-14 && worst_solve <= 1e-9;
}

// ---------------------------------------------------------------- 5
interleaved_batch mode_field(std::size_t n, std::size_t m, double k) {
  interleaved_batch b(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = static_cast<double>(i + 1) / static_cast<double>(n);
    for (std::size_t j = 0; j < m; ++j) {
      b.at(i, j) = std::sin(2.0 * pi * k * x);
    }
  }
  return b;
}

double projection_ratio(const interleaved_batch& now,
                        const interleaved_batch& initial) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < now.rows(); ++i) {
    num += now.at(i, 0) * initial.at(i, 0);
    den += initial.at(i, 0) * initial.at(i, 0);
  }
  return num / den;
}

bool criterion_physics(std::string& detail) {
  double worst_step = 0.0;
  double worst_long = 0.0;
  double worst_mean = 0.0;
  bool stable = true;

  for (pde_problem problem :
       {pde_problem::diffusion, pde_problem::hyperdiffusion}) {
    // per-step amplification across modes
    for (double k : {1.0, 2.0, 5.0}) {
      bench_config cfg;
      cfg.n = 64;
      cfg.m = 2;
      cfg.steps = 1;
      cfg.problem = problem;
      field_batch field{mode_field(cfg.n, cfg.m, k), 0};
      const interleaved_batch initial = field.state;
      run_benchmark(cfg, field);
      const double theta = 2.0 * pi * k / 64.0;
      const double g = amplification_factor(problem, cfg.sigma_x(), theta);
      worst_step =
          std::max(worst_step,
                   std::abs(projection_ratio(field.state, initial) - g) /
                       std::abs(g));
    }

    // 1000-step protocol against G^1000
    {
      bench_config cfg;
      cfg.n = problem == pde_problem::diffusion ? 64 : 128;
      cfg.m = 1;
      cfg.steps = 1000;
      cfg.problem = problem;
      const double k = problem == pde_problem::diffusion ? 1.0 : 3.0;
      field_batch field{mode_field(cfg.n, 1, k), 0};
      const interleaved_batch initial = field.state;
      run_benchmark(cfg, field);
      const double theta = 2.0 * pi * k / static_cast<double>(cfg.n);
      const double g = amplification_factor(problem, cfg.sigma_x(), theta);
      const double expect = std::pow(g, 1000.0);
      worst_long = std::max(
          worst_long, std::abs(projection_ratio(field.state, initial) - expect) /
                          std::abs(expect));
    }

    // per-step mean conservation on a mean-one field
    {
      bench_config cfg;
      cfg.n = 48;
      cfg.m = 2;
      cfg.steps = 1;
      cfg.problem = problem;
      field_batch field{mode_field(cfg.n, cfg.m, 2.0), 0};
      for (std::size_t kk = 0; kk < field.state.size(); ++kk) {
        field.state.data()[kk] = 1.0 + 0.5 * field.state.data()[kk];
      }
      for (int step = 0; step < 20; ++step) {
        run_benchmark(cfg, field);
        for (std::size_t j = 0; j < cfg.m; ++j) {
          double mean = 0.0;
          for (std::size_t i = 0; i < cfg.n; ++i) mean += field.state.at(i, j);
          mean /= static_cast<double>(cfg.n);
          worst_mean = std::max(worst_mean, std::abs(mean - 1.0));
        }
      }
    }

    // unconditional stability across the sigma sweep
    for (double sigma : {0.01, 0.5, 10.0, 1000.0}) {
      for (int k = 0; k <= 256; ++k) {
        const double theta = pi * k / 256.0;
        if (std::abs(amplification_factor(problem, sigma, theta)) > 1.0) {
          stable = false;
        }
      }
      bench_config cfg;
      cfg.n = 32;
      cfg.m = 1;
      cfg.steps = 1;
      cfg.problem = problem;
      cfg.dt = bench_config::dt_for_sigma(problem, cfg.n, sigma);
      field_batch field{mode_field(cfg.n, 1, 3.0), 0};
      double prev = 0.0;
      for (std::size_t i = 0; i < cfg.n; ++i) {
        prev = std::max(prev, std::abs(field.state.at(i, 0)));
      }
      for (int step = 0; step < 10; ++step) {
        run_benchmark(cfg, field);
        double now = 0.0;
        for (std::size_t i = 0; i < cfg.n; ++i) {
          now = std::max(now, std::abs(field.state.at(i, 0)));
        }
        if (now > prev * (1.0 + 1e-14)) stable = false;
        prev = now;
      }
    }
  }

  char buf[160];
  std::snprintf(buf, sizeof buf,
                "per-step %.3e, 1000-step %.3e, mean drift %.3e, stable %s",
                worst_step, worst_long, worst_mean, stable ? "yes" : "no");
  detail = buf;
  return worst_step <= 1e-10 && worst_long <= 1e-8 && worst_mean <= 1e-12 &&
         stable;
}

// ---------------------------------------------------------------- 6
bool criterion_memory(std::string& detail) {
  const std::size_t ns[4] = {8, 16, 32, 64};
  const std::size_t ms[4] = {4, 8, 16, 32};
  bool exact = true;
  for (std::size_t n : ns) {
    for (std::size_t m : ms) {
      {
        const std::int64_t before = alloc_stats::live_elements();
        const tri_factor factor =
            tri_prefactor(constant_tri_lhs(-0.5, 2.0, -0.5, n));
        const interleaved_batch batch(n, m);
        exact = exact &&
                alloc_stats::live_elements() - before ==
                    static_cast<std::int64_t>(
                        footprint(storage_variant::tri_shared, n, m)
                            .element_count);
      }
      {
        const std::int64_t before = alloc_stats::live_elements();
        const interleaved_batch a(n, m), b(n, m), c(n, m), d(n, m);
        exact = exact &&
                alloc_stats::live_elements() - before ==
                    static_cast<std::int64_t>(
                        footprint(storage_variant::tri_per_system, n, m)
                            .element_count);
      }
      {
        const std::int64_t before = alloc_stats::live_elements();
        const pent_factor factor =
            pent_prefactor(constant_pent_lhs(0.25, -1.0, 2.5, -1.0, 0.25, n));
        const interleaved_batch batch(n, m);
        exact = exact &&
                alloc_stats::live_elements() - before ==
                    static_cast<std::int64_t>(
                        footprint(storage_variant::pent_shared, n, m)
                            .element_count);
      }
      {
        const std::int64_t before = alloc_stats::live_elements();
        const interleaved_batch a(n, m), b(n, m), c(n, m), d(n, m), e(n, m),
            f(n, m);
        exact = exact &&
                alloc_stats::live_elements() - before ==
                    static_cast<std::int64_t>(
                        footprint(storage_variant::pent_per_system, n, m)
                            .element_count);
      }
      {
        const std::int64_t before = alloc_stats::live_elements();
        const uniform_pent_factor factor = uniform_prefactor(
            uniform_pent_lhs{0.25, -1.0, 2.5, -1.0, 0.25, n});
        const interleaved_batch batch(n, m);
        exact = exact &&
                alloc_stats::live_elements() - before ==
                    static_cast<std::int64_t>(
                        footprint(storage_variant::pent_uniform, n, m)
                            .element_count);
      }
    }
  }

  const double tri_red =
      footprint(storage_variant::tri_shared, 1024, 1024).reduction_vs_baseline;
  const double pent_red =
      footprint(storage_variant::pent_shared, 1024, 1024)
          .reduction_vs_baseline;
  const bool reductions_match = std::abs(tri_red * 100.0 - 75.0) < 1.0 &&
                                std::abs(pent_red * 100.0 - 83.0) < 1.0;

  char buf[128];
  std::snprintf(buf, sizeof buf,
                "counts exact %s; reductions %.2f%% / %.2f%%",
                exact ? "yes" : "no", tri_red * 100.0, pent_red * 100.0);
  detail = buf;
  return exact && reductions_match;
}

// ---------------------------------------------------------------- 7
bool criterion_determinism(std::string& detail) {
  rng r(7007);
  const int max_workers = std::max(1, worker_count());
  std::vector<int> counts{1, 2};
  if (max_workers > 2) counts.push_back(max_workers);

  bool identical = true;
  const tri_lhs tl = testsup::random_dominant_tri(r, 48);
  const tri_factor tf = tri_prefactor(tl);
  const pent_lhs pl = testsup::random_dominant_pent(r, 48);
  const pent_factor pf = pent_prefactor(pl);
  const interleaved_batch input = testsup::random_batch(r, 48, 17);

  auto check_solver = [&](auto&& solve) {
    interleaved_batch reference(1, 1);
    bool first = true;
    for (int workers : counts) {
      set_worker_count(workers);
      interleaved_batch batch = input;
      solve(batch);
      if (first) {
        reference = std::move(batch);
        first = false;
      } else if (!testsup::bitwise_equal(reference, batch)) {
        identical = false;
      }
    }
    set_worker_count(0);
  };

  check_solver([&](interleaved_batch& b) { tri_solve_shared_batch(tf, b); });
  check_solver([&](interleaved_batch& b) { pent_solve_shared_batch(pf, b); });
  check_solver([&](interleaved_batch& b) {
    const periodic_tri_correction corr =
        periodic_tri_prepare(-0.5, 2.0, -0.5, 48);
    periodic_tri_solve_batch(corr, b);
  });
  check_solver([&](interleaved_batch& b) {
    const periodic_pent_correction corr =
        periodic_pent_prepare(0.25, -1.0, 2.5, -1.0, 0.25, 48);
    periodic_pent_solve_batch(corr, b);
  });
  check_solver([&](interleaved_batch& b) {
    interleaved_batch ba = replicated_batch({tl.sub.data(), tl.n}, 17);
    interleaved_batch bb = replicated_batch({tl.diag.data(), tl.n}, 17);
    interleaved_batch bc = replicated_batch({tl.sup.data(), tl.n}, 17);
    tri_solve_per_system_batch(ba, bb, bc, b);
  });

  // full benchmark fields across worker counts, every variant
  for (solver_variant variant :
       {solver_variant::shared, solver_variant::per_system,
        solver_variant::uniform}) {
    interleaved_batch reference(1, 1);
    bool first = true;
    for (int workers : counts) {
      set_worker_count(workers);
      bench_config cfg;
      cfg.n = 36;
      cfg.m = 9;
      cfg.steps = 12;
      cfg.problem = pde_problem::hyperdiffusion;
      cfg.variant = variant;
      field_batch field = default_mode_initial(cfg.n, cfg.m);
      run_benchmark(cfg, field);
      if (first) {
        reference = std::move(field.state);
        first = false;
      } else if (!testsup::bitwise_equal(reference, field.state)) {
        identical = false;
      }
    }
    set_worker_count(0);
  }

  char buf[96];
  std::snprintf(buf, sizeof buf, "worker counts {1, 2, %d}", max_workers);
  detail = buf;
  return identical;
}

// ---------------------------------------------------------------- 8
bool criterion_speedup_trend(std::string& detail) {
  std::ostringstream note;
  bool ordered = true;
  for (pde_problem problem :
       {pde_problem::diffusion, pde_problem::hyperdiffusion}) {
    double mean[2] = {0.0, 0.0};
    for (int rep = 0; rep < 3; ++rep) {
      int slot = 0;
      for (solver_variant variant :
           {solver_variant::shared, solver_variant::per_system}) {
        bench_config cfg;
        cfg.n = 256;
        cfg.m = 4096;
        cfg.steps = 1000;
        cfg.problem = problem;
        cfg.variant = variant;
        field_batch field = default_mode_initial(cfg.n, cfg.m);
        const timing_report rep_timing = run_benchmark(cfg, field);
        mean[slot] += rep_timing.seconds_per_step_mean / 3.0;
        ++slot;
      }
    }
    if (!(mean[0] <= mean[1])) ordered = false;
    note << problem_name(problem) << " shared " << mean[0] * 1e3
         << " ms/step vs per-system " << mean[1] * 1e3 << " ms/step; ";
  }
  detail = note.str();
  return ordered;
}

// ---------------------------------------------------------------- 9
int run_cli(const std::string& args, std::string* stdout_text = nullptr) {
  const std::string out_file = "./acc_cli_stdout.txt";
  const std::string cmd = std::string(BANDSOLVE_CLI) + " " + args + " > " +
                          out_file + " 2> ./acc_cli_stderr.txt";
  const int status = std::system(cmd.c_str());
  if (stdout_text) {
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    *stdout_text = ss.str();
  }
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

bool file_exists(const std::string& p) {
  std::ifstream f(p);
  return f.good();
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

bool criterion_cli(std::string& detail) {
  bool ok = true;
  std::ostringstream why;

  // footprint: exit code and formula value
  std::string out;
  if (run_cli("footprint --n 10 --m 4 --format csv", &out) != 0 ||
      out.find("tri_shared,10,4,70,") == std::string::npos) {
    ok = false;
    why << "footprint; ";
  }
  if (run_cli("footprint --m 4") != 2) {
    ok = false;
    why << "footprint exit 2; ";
  }

  // bench: schema, row counts, companion speedup file
  std::remove("./acc_bench.csv");
  std::remove("./acc_bench.speedup.csv");
  if (run_cli("bench --problem diffusion --variants shared,persystem "
              "--n 64,128 --m 16,64 --steps 100 --out ./acc_bench.csv") != 0) {
    ok = false;
    why << "bench run; ";
  } else {
    const auto lines = read_lines("./acc_bench.csv");
    if (lines.size() != 9 ||
        lines[0] !=
            "problem,variant,n,m,steps,threads,wall_s,per_step_mean_s,"
            "per_step_std_s,elements") {
      ok = false;
      why << "bench schema; ";
    }
    const auto speedup = read_lines("./acc_bench.speedup.csv");
    if (speedup.size() != 5 ||
        speedup[0] != "problem,n,m,variant,speedup_vs_persystem") {
      ok = false;
      why << "speedup schema; ";
    }
  }
  if (run_cli("bench --variants nonsense") != 2) {
    ok = false;
    why << "bench exit 2; ";
  }

  // solve: byte-exact identity round trip
  {
    rng r(9009);
    const interleaved_batch batch = testsup::random_batch(r, 10, 3);
    write_ibat("./acc_in.ibat", batch);
    if (run_cli("solve --in ./acc_in.ibat --out ./acc_out.ibat --type tri "
                "--bands 0,1,0") != 0) {
      ok = false;
      why << "solve run; ";
    } else {
      std::ifstream f1("./acc_in.ibat", std::ios::binary);
      std::ifstream f2("./acc_out.ibat", std::ios::binary);
      std::stringstream s1, s2;
      s1 << f1.rdbuf();
      s2 << f2.rdbuf();
      if (s1.str() != s2.str()) {
        ok = false;
        why << "solve round trip; ";
      }
    }
    std::string check_out;
    if (run_cli("solve --in ./acc_in.ibat --out ./acc_out.ibat "
                "--bands -0.5,2,-0.5 --check",
                &check_out) != 0 ||
        check_out.find("max residual") == std::string::npos ||
        std::atof(check_out.c_str() + check_out.rfind(' ')) > 1e-9) {
      ok = false;
      why << "solve check; ";
    }
    std::remove("./acc_in.ibat");
    std::remove("./acc_out.ibat");
  }

  // malformed IBAT -> exit 3
  {
    std::ofstream f("./acc_bad.ibat", std::ios::binary);
    f << "IBATxxxx";
  }
  if (run_cli("solve --in ./acc_bad.ibat --out ./acc_out.ibat "
              "--bands 0,1,0") != 3) {
    ok = false;
    why << "ibat exit 3; ";
  }
  std::remove("./acc_bad.ibat");

  // solver failure -> exit 1, no partial output
  {
    rng r(9010);
    write_ibat("./acc_in.ibat", testsup::random_batch(r, 8, 2));
    std::remove("./acc_out.ibat");
    if (run_cli("solve --in ./acc_in.ibat --out ./acc_out.ibat "
                "--bands 0,0,0") != 1 ||
        file_exists("./acc_out.ibat")) {
      ok = false;
      why << "breakdown exit 1; ";
    }
    std::remove("./acc_in.ibat");
  }

  // bad arguments -> exit 2
  if (run_cli("solve --in x --out y") != 2 || run_cli("nonsense") != 2) {
    ok = false;
    why << "solve exit 2; ";
  }

  std::remove("./acc_bench.csv");
  std::remove("./acc_bench.speedup.csv");
  std::remove("./acc_cli_stdout.txt");
  std::remove("./acc_cli_stderr.txt");
  detail = ok ? "exit codes, schema, round trips" : why.str();
  return ok;
}

}  // namespace

int main() {
  struct entry {
    int number;
    const char* name;
    bool (*fn)(std::string&);
  };
  const entry criteria[] = {
      {1, "tridiagonal oracle equivalence", criterion_tri_oracle},
      {2, "pentadiagonal oracle equivalence and LR reassembly",
       criterion_pent_oracle},
      {3, "variant equivalence (shared / per-system / uniform)",
       criterion_variant_equivalence},
      {4, "periodic splitting identity and cyclic oracle",
       criterion_periodic},
      {5, "benchmark physics (amplification, conservation, stability)",
       criterion_physics},
      {6, "memory accounting", criterion_memory},
      {7, "determinism across worker counts", criterion_determinism},
      {8, "speedup trend: shared <= per-system", criterion_speedup_trend},
      {9, "CLI contract", criterion_cli},
  };

  int failures = 0;
  for (const entry& e : criteria) {
    std::string detail;
    bool pass = false;
    try {
      pass = e.fn(detail);
    } catch (const std::exception& ex) {
      detail = std::string("exception: ") + ex.what();
    }
    std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL",
                e.number, e.name, detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
  }
  return failures;
}
