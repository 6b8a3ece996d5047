#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hjg/pde.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

using hjg::Exec;
using hjg::HamiltonianTable;
using hjg::SolveOptions;
using hjg::TorusGrid;

TEST_CASE("grid construction") {
  CHECK_THROWS_AS(TorusGrid(7), std::domain_error);
  CHECK_THROWS_AS(TorusGrid(6), std::domain_error);
  CHECK_THROWS_AS(TorusGrid(0), std::domain_error);
  const TorusGrid g(8);
  CHECK(g.spacing() == 0.25);
  CHECK(g.node(0) == -1.0);
  CHECK(g.node(4) == 0.0);
}

TEST_CASE("numerical flux") {
  const HamiltonianTable H;
  // no jump: the dissipation term drops out entirely
  for (double p : {-1.0, 0.0, 0.5})
    CHECK(hjg::lf_flux(0.5, p, p, 1.0, H) == H.h(0.5, p));
  // central value at p = 1 minus half the jump of 2
  CHECK(hjg::lf_flux(0.25, 0.0, 2.0, 1.0, H) ==
        doctest::Approx(H.h(0.25, 1.0) - 1.0).epsilon(1e-15));
  // monotone: nonincreasing in p_plus, nondecreasing in p_minus
  for (double x : {0.0, 0.4, 1.0})
    for (double pm : {-1.5, 0.0, 1.0})
      for (double pp : {-1.0, 0.25, 2.0}) {
        const double base = hjg::lf_flux(x, pm, pp, 1.0, H);
        CHECK(hjg::lf_flux(x, pm, pp + 0.125, 1.0, H) <= base + 1e-12);
        CHECK(hjg::lf_flux(x, pm + 0.125, pp, 1.0, H) >= base - 1e-12);
      }
}

TEST_CASE("constant Hamiltonian solves to the flat profile") {
  // With H == c the discounted equation is lambda v + c = 0 pointwise.
  const TorusGrid g(16);
  const auto v = hjg::solve_discounted_with(
      0.5, g, SolveOptions{}, [](double, double) { return 0.3; });
  REQUIRE(int(v.size()) == g.cells);
  for (double vk : v) CHECK(std::abs(vk - (-0.6)) <= 1e-6);
}

TEST_CASE("sweep damps differences at the contraction rate") {
  const HamiltonianTable H;
  const TorusGrid g(32);
  const double lambda = 0.3;
  const double tau = g.spacing() / (2.0 + lambda * g.spacing());
  auto flux = [&H](double x, double p) { return H.h(x, p); };

  // constant offsets contract by exactly (1 - tau lambda) in one sweep
  std::vector<double> v(32, 0.0), w(32, 0.7), v1(32), w1(32);
  hjg::detail::jacobi_sweep(lambda, g, 1.0, tau, v, v1, flux, false);
  hjg::detail::jacobi_sweep(lambda, g, 1.0, tau, w, w1, flux, false);
  for (int k = 0; k < 32; ++k)
    CHECK(std::abs((w1[std::size_t(k)] - v1[std::size_t(k)]) -
                   0.7 * (1.0 - tau * lambda)) <= 1e-12);

  // along an actual solve the update norms keep shrinking at least that fast
  std::vector<double> cur(32, 0.0), nxt(32);
  double prev_worst = -1.0;
  for (int it = 0; it < 60; ++it) {
    const double worst =
        hjg::detail::jacobi_sweep(lambda, g, 1.0, tau, cur, nxt, flux, false);
    cur.swap(nxt);
    if (it >= 5)
      CHECK(worst <= prev_worst * (1.0 - tau * lambda) * (1.0 + 1e-9) + 1e-14);
    prev_worst = worst;
  }
}

TEST_CASE("sweep preserves pointwise ordering") {
  const HamiltonianTable H;
  const TorusGrid g(24);
  auto flux = [&H](double x, double p) { return H.h(x, p); };
  const double tau = g.spacing() / (2.0 + 0.4 * g.spacing());
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> noise(0.0, 0.5);
  std::vector<double> v(24), w(24), v1(24), w1(24);
  for (int k = 0; k < 24; ++k) {
    v[std::size_t(k)] = noise(rng) - 0.25;
    w[std::size_t(k)] = v[std::size_t(k)] + noise(rng);
  }
  hjg::detail::jacobi_sweep(0.4, g, 1.0, tau, v, v1, flux, false);
  hjg::detail::jacobi_sweep(0.4, g, 1.0, tau, w, w1, flux, false);
  for (int k = 0; k < 24; ++k)
    CHECK(v1[std::size_t(k)] <= w1[std::size_t(k)] + 1e-12);
}

TEST_CASE("converged field keeps the even symmetry") {
  const HamiltonianTable H;
  const TorusGrid g(64);
  const auto v = hjg::solve_discounted(0.5, g, SolveOptions{}, H);
  // x = 0 sits at node 32; the profile must be symmetric about it
  for (int k = 1; k < 32; ++k)
    CHECK(std::abs(v[std::size_t(32 - k)] - v[std::size_t(32 + k)]) <= 1e-8);
}

TEST_CASE("serial and parallel solves agree bitwise") {
  const HamiltonianTable H;
  const TorusGrid g(128);
  SolveOptions serial;
  serial.exec = Exec::serial;
  SolveOptions parallel;
  parallel.exec = Exec::parallel;
  const auto vs = hjg::solve_discounted(0.3, g, serial, H);
  const auto vp = hjg::solve_discounted(0.3, g, parallel, H);
  REQUIRE(vs.size() == vp.size());
  for (std::size_t k = 0; k < vs.size(); ++k) CHECK(vs[k] == vp[k]);
}

TEST_CASE("iteration cap raises a typed failure") {
  const HamiltonianTable H;
  SolveOptions opts;
  opts.maxiter = 3;
  bool thrown = false;
  try {
    hjg::solve_discounted(0.1, TorusGrid(64), opts, H);
  } catch (const hjg::SolveFailure& f) {
    thrown = true;
    CHECK(f.last_update > 0.0);
  }
  CHECK(thrown);
}

TEST_CASE("option validation") {
  const HamiltonianTable H;
  const TorusGrid g(64);
  SolveOptions bad_theta;
  bad_theta.theta = 0.5;
  CHECK_THROWS_AS(hjg::solve_discounted(0.5, g, bad_theta, H), std::domain_error);
  SolveOptions big_tau;
  big_tau.tau = 1.0;  // far beyond h / (2 theta + lambda h)
  CHECK_THROWS_AS(hjg::solve_discounted(0.5, g, big_tau, H), std::domain_error);
  SolveOptions bad_tol;
  bad_tol.tol = 0.0;
  CHECK_THROWS_AS(hjg::solve_discounted(0.5, g, bad_tol, H), std::domain_error);
  CHECK_THROWS_AS(hjg::solve_discounted(0.0, g, SolveOptions{}, H),
                  std::domain_error);
  CHECK_THROWS_AS(hjg::solve_discounted(1.5, g, SolveOptions{}, H),
                  std::domain_error);
}

TEST_CASE("comparison against the exact solution") {
  const auto coarse = hjg::compare_exact(0.5, 64);
  const auto fine = hjg::compare_exact(0.5, 128);
  CHECK(fine.sup_error < coarse.sup_error);
  CHECK(coarse.sup_error < 0.05);
  REQUIRE(int(coarse.rows.size()) == 64);
  const TorusGrid g(64);
  double sup = 0.0;
  for (int k = 0; k < 64; ++k) {
    const auto& row = coarse.rows[std::size_t(k)];
    CHECK(row.x == g.node(k));
    CHECK(row.gap == std::abs(row.v_numeric - row.u_exact));
    sup = std::max(sup, row.gap);
  }
  CHECK(sup == coarse.sup_error);
  CHECK_THROWS_AS(hjg::compare_exact(0.005, 64), std::domain_error);
  CHECK_THROWS_AS(hjg::compare_exact(1.5, 64), std::domain_error);
}
