#include "hjg/mc.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hjg {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t SplitMix64::next() {
  state += kGolden;
  return mix64(state);
}

double SplitMix64::next_unit() {
  return double(next() >> 11) * 0x1.0p-53;
}

McResult simulate_mc(const StationaryP1& y, const StationaryP2& z,
                     double lambda, State k1, std::uint64_t seed,
                     int episodes, double epsilon, Exec exec) {
  if (!(lambda >= 0.05 && lambda <= 1.0))
    throw std::domain_error(
        "simulate_mc: lambda must lie in [0.05, 1] (episode horizon)");
  if (episodes < 1) throw std::domain_error("simulate_mc: episodes < 1");
  if (!(epsilon > 0.0)) throw std::domain_error("simulate_mc: epsilon <= 0");

  // Smallest M with (1 - lambda)^M * 2 / lambda <= epsilon; the tail of the
  // discounted sum beyond stage M is below epsilon in absolute value.
  int horizon = 1;
  if (lambda < 1.0) {
    const double m = std::ceil(std::log(epsilon * lambda / 2.0) /
                               std::log1p(-lambda));
    if (m > 1.0) horizon = int(m);
  }

  // The maximizer's decision in each state is fixed for the whole run (it
  // reacts to the announced mixed action, not to its realization).
  const int i_plus = y.act(State::omega_plus, z.a.value());
  const int i_minus = y.act(State::omega_minus, z.b.value());
  const double j_plus = to_double(z.a.value());
  const double j_minus = to_double(z.b.value());

  std::vector<double> vals(std::size_t(episodes), 0.0);
  auto run_episode = [&](int e) {
    // Per-episode stream: scramble (seed, e) through the splitmix finalizer
    // so neighbouring episodes land in unrelated stretches of state space.
    SplitMix64 rng(mix64(seed + kGolden * std::uint64_t(e + 1)));
    State k = k1;
    double weight = 1.0;
    double total = 0.0;
    for (int m = 0; m < horizon; ++m) {
      const bool plus = k == State::omega_plus;
      const int i = plus ? i_plus : i_minus;
      const double j = plus ? j_plus : j_minus;
      const int realized = rng.next_unit() < j ? 1 : 0;
      double pay = 0.0;
      if (i == 1 && realized == 1) pay = 1.0;
      if (i == 0 && realized == 0) pay = 2.0;
      if (!plus) pay = -pay;
      total += weight * pay;
      if (i != realized) k = other(k);
      weight *= 1.0 - lambda;
    }
    vals[std::size_t(e)] = total;
  };

  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (int e = 0; e < episodes; ++e) run_episode(e);
  } else {
    for (int e = 0; e < episodes; ++e) run_episode(e);
  }

  // Serial reduction in index order keeps the result independent of the
  // execution mode.
  double sum = 0.0;
  for (double v : vals) sum += v;
  const double mean = sum / episodes;
  double varsum = 0.0;
  for (double v : vals) varsum += (v - mean) * (v - mean);
  const double std_err =
      episodes > 1 ? std::sqrt(varsum / (double(episodes - 1) * episodes))
                   : 0.0;
  return {mean, std_err, horizon};
}

}  // namespace hjg
