#pragma once

#include "hjg/game.hpp"
#include "hjg/shapley.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hjg {

// Truncation level of the minimizer action set used when evaluating the
// Hamiltonians.  The min over the infinite action set is already attained
// within the first few indexed actions for the momenta that matter, so a
// modest default is exact in practice.
struct HamiltonianSpec {
  int truncation = 16;
};

// The two one-state Hamiltonians
//   h1(p)  = -min_j max_i { g(omega_plus,  i, j) - p * flip(i, j) }
//   hm1(p) = -min_j max_i { g(omega_minus, i, j) + p * flip(i, j) }
// for |p| <= 2, extended outside by h(sign(p) * 2) + |p| - 2 (they grow at
// unit slope once the momentum dominates every payoff difference).
ExactQuad h1(const ExactQuad& p, const HamiltonianSpec& spec = {});
ExactQuad hm1(const ExactQuad& p, const HamiltonianSpec& spec = {});

// Space-dependent Hamiltonian on the 2-periodic line: with x reduced into
// [-1, 1), H(x, p) = |x| h1(|p|) + (1 - |x|) hm1(|p|).
ExactQuad hamiltonian(const ExactQuad& x, const ExactQuad& p,
                      const HamiltonianSpec& spec = {});

// Double-precision evaluation path for grid solvers.  Precomputes the
// truncated action values once; h/h1/hm1 mirror the exact definitions.
class HamiltonianTable {
 public:
  explicit HamiltonianTable(HamiltonianSpec spec = {});

  double h1(double p) const;
  double hm1(double p) const;
  double h(double x, double p) const;
  int truncation() const { return truncation_; }

 private:
  int truncation_;
  std::vector<double> actions_;
};

// The discounted solution pair: u(x) = |x| u_plus + (1 - |x|) u_minus on
// [-1, 1), extended 2-periodically.  Obtained from the stationary game
// value at the shifted discount lambda / (1 + lambda), scaled by
// 1 / (1 + lambda).
struct UPair {
  ExactQuad u_plus;
  ExactQuad u_minus;
  ExactQuad lambda;
};

UPair u_pair(const Discount& lambda, int N);

// Piecewise-linear interpolation of the pair at x (2-periodic reduction
// happens internally, so any x is accepted).
ExactQuad u_interp(const ExactQuad& x, const UPair& u);
double u_interp(double x, const UPair& u);

// lambda * u(x) + H(x, u') at a point of differentiability, evaluated with
// the same truncation N for both the pair and the Hamiltonian.  Exactly
// zero for x strictly between the kinks at the integers; x outside (0, 1)
// is rejected (other differentiability cells follow by symmetry).
ExactQuad interior_residual_at(const ExactQuad& x, const UPair& u, int N);
ExactQuad interior_residual(const ExactQuad& x, const Discount& lambda, int N);

// Sub/supersolution inequalities at the two kinks, checked exactly at the
// endpoints and midpoint of the relevant sub/superdifferential interval:
// at x = 0 every test momentum must give lambda u(0) + H(0, p) >= 0, at
// x = 1 every test momentum must give lambda u(1) + H(1, p) <= 0.
struct ViscosityReport {
  bool x0_ok = false;
  bool x1_ok = false;
  std::string details;

  bool ok() const { return x0_ok && x1_ok; }
};

ViscosityReport viscosity_checks(const Discount& lambda, int N);

// -lambda u(1) for each run; along the two discount sequences these stay
// within [-4 lambda, 4 lambda] yet approach different limits, which is the
// obstruction to a vanishing-discount limit at x = 1.
struct CriticalProbe {
  ExactQuad lambda;
  ExactQuad value;
};

std::vector<CriticalProbe> critical_value_probe(
    const std::vector<std::pair<ExactQuad, int>>& runs);

}  // namespace hjg
