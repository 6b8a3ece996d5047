#include "hjg/pde.hpp"

namespace hjg {

double lf_flux(double x, double p_minus, double p_plus, double theta,
               const HamiltonianTable& H) {
  if (!(theta > 0.0)) throw std::domain_error("theta must be positive");
  return H.h(x, 0.5 * (p_minus + p_plus)) - 0.5 * theta * (p_plus - p_minus);
}

std::vector<double> solve_discounted(double lambda, const TorusGrid& g,
                                     const SolveOptions& opts,
                                     const HamiltonianTable& H) {
  return solve_discounted_with(
      lambda, g, opts, [&H](double x, double p) { return H.h(x, p); });
}

CompareResult compare_exact(double lambda, int M, const SolveOptions& opts) {
  if (!(lambda > 0.01 && lambda <= 1.0))
    throw std::domain_error("compare_exact: lambda must lie in (0.01, 1]");
  const TorusGrid grid(M);
  const HamiltonianTable table;  // default truncation
  const std::vector<double> v = solve_discounted(lambda, grid, opts, table);

  // Reference: the exact pair at the bit-exact rational value of lambda,
  // interpolated at the exact node coordinates.
  const UPair u = u_pair(Discount(ExactQuad(Rational(lambda))),
                         table.truncation());
  CompareResult out;
  out.sup_error = 0.0;
  out.rows.reserve(std::size_t(M));
  for (int k = 0; k < M; ++k) {
    const ExactQuad xk = ExactQuad(-1) +
                         ExactQuad(Rational(2 * BigInt(k), BigInt(M)));
    const double exact = to_double(u_interp(xk, u));
    const double num = v[std::size_t(k)];
    const double gap = std::abs(num - exact);
    out.rows.push_back({grid.node(k), num, exact, gap});
    out.sup_error = std::max(out.sup_error, gap);
  }
  return out;
}

}  // namespace hjg
