// Timing harness for the two data-parallel kernels (grid sweeps inside the
// PDE solver, Monte Carlo episodes), serial against OpenMP.  Besides the
// speedup it prints the max absolute difference between the two paths,
// which must be exactly zero: the parallel versions only reorder
// independent work.

#include "hjg/mc.hpp"
#include "hjg/pde.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Row {
  const char* kernel;
  double serial_ms;
  double parallel_ms;
  double max_diff;
};

Row bench_pde(int cells, int sweeps) {
  const double lambda = 0.1;
  const hjg::TorusGrid grid(cells);
  const hjg::HamiltonianTable table;
  const double theta = 1.0;
  const double tau = grid.spacing() / (2.0 * theta + lambda * grid.spacing());
  auto H = [&table](double x, double p) { return table.h(x, p); };

  auto run = [&](bool parallel) {
    std::vector<double> v(std::size_t(cells), 0.0);
    std::vector<double> next(std::size_t(cells), 0.0);
    const auto t0 = Clock::now();
    for (int s = 0; s < sweeps; ++s) {
      hjg::detail::jacobi_sweep(lambda, grid, theta, tau, v, next, H,
                                parallel);
      v.swap(next);
    }
    return std::pair<double, std::vector<double>>(ms_since(t0), v);
  };

  const auto [serial_ms, serial_v] = run(false);
  const auto [parallel_ms, parallel_v] = run(true);
  double diff = 0.0;
  for (int k = 0; k < cells; ++k)
    diff = std::max(diff,
                    std::abs(serial_v[std::size_t(k)] -
                             parallel_v[std::size_t(k)]));
  return {"pde-jacobi-sweep", serial_ms, parallel_ms, diff};
}

Row bench_mc(int episodes) {
  const hjg::StationaryP1 y = hjg::StationaryP1::constant(1, 0);
  const hjg::StationaryP2 z{hjg::ActionJ::index(1), hjg::ActionJ::index(2)};
  const std::uint64_t seed = 42;

  const auto t0 = Clock::now();
  const hjg::McResult serial =
      hjg::simulate_mc(y, z, 0.2, hjg::State::omega_plus, seed, episodes,
                       1e-4, hjg::Exec::serial);
  const double serial_ms = ms_since(t0);

  const auto t1 = Clock::now();
  const hjg::McResult parallel =
      hjg::simulate_mc(y, z, 0.2, hjg::State::omega_plus, seed, episodes,
                       1e-4, hjg::Exec::parallel);
  const double parallel_ms = ms_since(t1);

  const double diff = std::max(std::abs(serial.mean - parallel.mean),
                               std::abs(serial.std_err - parallel.std_err));
  return {"mc-episodes", serial_ms, parallel_ms, diff};
}

}  // namespace

int main(int argc, char** argv) {
  int cells = 4096, sweeps = 2000, episodes = 400000;
  for (int a = 1; a + 1 < argc; a += 2) {
    const std::string flag = argv[a];
    const int value = std::atoi(argv[a + 1]);
    if (flag == "--grid")
      cells = value;
    else if (flag == "--sweeps")
      sweeps = value;
    else if (flag == "--episodes")
      episodes = value;
    else {
      std::fprintf(stderr,
                   "usage: hjg-bench [--grid M] [--sweeps K] [--episodes E]\n");
      return 2;
    }
  }

#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled; both paths run serially\n");
#endif
  std::printf("pde: %d cells x %d sweeps; mc: %d episodes\n\n", cells, sweeps,
              episodes);
  std::printf("%-18s %12s %12s %9s %14s\n", "kernel", "serial_ms",
              "parallel_ms", "speedup", "max_abs_diff");

  const Row rows[] = {bench_pde(cells, sweeps), bench_mc(episodes)};
  bool identical = true;
  for (const Row& r : rows) {
    std::printf("%-18s %12.1f %12.1f %8.2fx %14g\n", r.kernel, r.serial_ms,
                r.parallel_ms, r.serial_ms / r.parallel_ms, r.max_diff);
    identical = identical && r.max_diff == 0.0;
  }
  if (!identical) {
    std::fprintf(stderr, "\nserial and parallel results differ\n");
    return 1;
  }
  return 0;
}
