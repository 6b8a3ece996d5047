#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hjg {

struct CheckResult {
  std::string anchor;  // stable identifier of the checked property
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  // Test-only fault injection: nudges a solved value before the fixed-point
  // residual check, which must then fail.  Proves the harness can fail.
  bool perturb = false;
  std::uint64_t seed = 20240901;
  int jobs = 1;
};

// Run the cross-module invariant suite: exact value bounds, Shapley
// residuals, closed-form/oracle equality, monotonicity patterns, payoff
// antisymmetry, Hamiltonian identities, viscosity inequalities, the decay
// of -lambda u(1) along the discount sequences, Monte Carlo 3-sigma
// consistency, and the value split between the two sequences.
std::vector<CheckResult> run_verify(const VerifyOptions& opts = {});

}  // namespace hjg
