#pragma once

#include "hjg/game.hpp"

#include <cstdint>

namespace hjg {

// splitmix64: tiny, splittable, passes BigCrush; one 64-bit word of state.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  // Uniform in [0, 1) with 53 random bits.
  double next_unit();
};

// Whether a data-parallel kernel runs on one thread or under OpenMP.  Both
// paths fill the same per-item slots and reduce serially, so results are
// bit-identical; the parallel path only reorders independent work.
enum class Exec { serial, parallel };

struct McResult {
  double mean;
  double std_err;
  int horizon;  // simulated stages per episode
};

// Monte Carlo estimate of the discounted payoff of the stationary profile
// (y, z) started in k1.  Each stage the minimizer's mixed action j is
// realized as a Bernoulli(j) draw; the stage payoff uses pure actions and
// the state switches exactly when the realized actions differ.  Episodes are
// truncated at the first horizon M with total remaining weight below
// epsilon: (1 - lambda)^M * 2 / lambda <= epsilon.  Requires
// lambda in [0.05, 1] so that M stays practical.
//
// Episode e draws from an independent splitmix64 stream keyed by
// (seed, e), so the estimate depends only on (seed, episodes), not on the
// execution mode or thread count.
McResult simulate_mc(const StationaryP1& y, const StationaryP2& z,
                     double lambda, State k1, std::uint64_t seed,
                     int episodes, double epsilon,
                     Exec exec = Exec::parallel);

}  // namespace hjg
