#pragma once

#include "hjg/hamiltonian.hpp"
#include "hjg/mc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace hjg {

// Uniform periodic grid on [-1, 1).  An even cell count keeps the two kinks
// of the limit profile exactly on nodes.
struct TorusGrid {
  int cells;

  explicit TorusGrid(int m) : cells(m) {
    if (m < 8 || m % 2 != 0)
      throw std::domain_error("grid cells must be even and >= 8");
  }
  double spacing() const { return 2.0 / cells; }
  double node(int k) const { return -1.0 + k * spacing(); }
};

// Lax-Friedrichs numerical Hamiltonian: central evaluation plus artificial
// dissipation (theta at least the Lipschitz constant of H in p, which is 1
// here, makes the scheme monotone).
double lf_flux(double x, double p_minus, double p_plus, double theta,
               const HamiltonianTable& H);

struct SolveOptions {
  double theta = 1.0;
  double tau = 0.0;       // <= 0 selects the stability bound h/(2 theta + lambda h)
  double tol = 1e-8;      // stop when the sup update falls to tol * tau * lambda
  long maxiter = 2000000;
  Exec exec = Exec::parallel;
};

struct SolveFailure : std::runtime_error {
  double last_update;

  SolveFailure(const std::string& msg, double upd)
      : std::runtime_error(msg), last_update(upd) {}
};

namespace detail {

// One damped Jacobi sweep v -> out for lambda v + F(v) = 0; returns the sup
// of |out - v|.  Every cell reads only the previous iterate, so the serial
// and OpenMP paths compute bit-identical fields.
template <class HFn>
double jacobi_sweep(double lambda, const TorusGrid& g, double theta,
                    double tau, const std::vector<double>& v,
                    std::vector<double>& out, HFn&& H, bool parallel) {
  const int m = g.cells;
  const double h = g.spacing();
  double worst = 0.0;
#pragma omp parallel for schedule(static) reduction(max : worst) \
    if (parallel)
  for (int k = 0; k < m; ++k) {
    const double left = v[std::size_t((k + m - 1) % m)];
    const double right = v[std::size_t((k + 1) % m)];
    const double p_minus = (v[std::size_t(k)] - left) / h;
    const double p_plus = (right - v[std::size_t(k)]) / h;
    const double flux = H(g.node(k), 0.5 * (p_minus + p_plus)) -
                        0.5 * theta * (p_plus - p_minus);
    const double upd = tau * (lambda * v[std::size_t(k)] + flux);
    out[std::size_t(k)] = v[std::size_t(k)] - upd;
    worst = std::max(worst, std::abs(upd));
  }
  return worst;
}

}  // namespace detail

// Iterate damped Jacobi sweeps from the zero field until the sup update
// drops to tol * tau * lambda.  The callable H(x, p) plays the Hamiltonian;
// the production overload below passes the HamiltonianTable.  Throws
// SolveFailure when maxiter sweeps are not enough.
template <class HFn>
std::vector<double> solve_discounted_with(double lambda, const TorusGrid& g,
                                          const SolveOptions& opts, HFn&& H) {
  if (!(lambda > 0.0 && lambda <= 1.0))
    throw std::domain_error("discount must lie in (0, 1]");
  if (!(opts.theta >= 1.0))
    throw std::domain_error("theta must be >= 1 (monotone flux)");
  if (!(opts.tol > 0.0)) throw std::domain_error("tol must be positive");
  const double h = g.spacing();
  const double tau_max = h / (2.0 * opts.theta + lambda * h);
  double tau = opts.tau;
  if (tau <= 0.0) tau = tau_max;
  if (tau > tau_max * (1.0 + 1e-12))
    throw std::domain_error("tau exceeds the monotone stability bound");

  std::vector<double> v(std::size_t(g.cells), 0.0);
  std::vector<double> next(std::size_t(g.cells), 0.0);
  const bool parallel = opts.exec == Exec::parallel;
  double worst = 0.0;
  for (long it = 0; it < opts.maxiter; ++it) {
    worst = detail::jacobi_sweep(lambda, g, opts.theta, tau, v, next, H,
                                 parallel);
    v.swap(next);
    if (!std::isfinite(worst))
      throw SolveFailure("pde solve diverged", worst);
    if (worst <= opts.tol * tau * lambda) return v;
  }
  throw SolveFailure("pde solve hit the iteration cap", worst);
}

std::vector<double> solve_discounted(double lambda, const TorusGrid& g,
                                     const SolveOptions& opts,
                                     const HamiltonianTable& H);

struct CompareRow {
  double x;
  double v_numeric;
  double u_exact;
  double gap;
};

struct CompareResult {
  double sup_error;
  std::vector<CompareRow> rows;
};

// Solve numerically at discount lambda on an M-cell grid and tabulate the
// result against the exact discounted solution evaluated at the nodes
// (lambda is converted to an exact rational bit-for-bit, and nodes are
// exact rationals, so the reference column is correct to a rounding).
// Requires lambda > 0.01: far smaller discounts need more sweeps than is
// reasonable for a comparison table.
CompareResult compare_exact(double lambda, int M,
                            const SolveOptions& opts = {});

}  // namespace hjg
