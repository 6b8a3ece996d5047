#include "hjg/verify.hpp"

#include "hjg/hamiltonian.hpp"
#include "hjg/mc.hpp"
#include "hjg/shapley.hpp"

#include <cmath>
#include <functional>
#include <sstream>

namespace hjg {

namespace {

Rational random_ratio(SplitMix64& rng, bool allow_one) {
  const int den = 2 + int(rng.next() % 96);
  const int hi = allow_one ? den : den - 1;
  const int num = 1 + int(rng.next() % std::uint64_t(hi));
  return Rational(num, den);
}

CheckResult run_check(const std::string& anchor,
                      const std::function<std::string()>& body) {
  CheckResult res;
  res.anchor = anchor;
  try {
    res.detail = body();
    res.pass = true;
  } catch (const std::exception& ex) {
    res.pass = false;
    res.detail = ex.what();
  }
  return res;
}

[[noreturn]] void fail(const std::string& what) {
  throw std::runtime_error(what);
}

std::string check_value_bounds() {
  const ExactQuad discounts[] = {ExactQuad(1), ExactQuad::ratio(1, 2),
                                 ExactQuad::ratio(1, 10), lambda_seq(5),
                                 mu_seq(5)};
  for (const ExactQuad& lam : discounts) {
    const StationaryResult sv = stationary_value(Discount(lam), 16);
    if (!(sv.w.w_minus <= sv.w.w_plus &&
          sv.w.w_plus <= sv.w.w_minus + ExactQuad(2)))
      fail("bounds violated at lambda = " + exact_string(lam));
  }
  return "w_minus <= w_plus <= w_minus + 2 exact at 5 discounts";
}

std::string check_fixed_point(std::uint64_t seed, bool perturb) {
  SplitMix64 rng(seed);
  for (int c = 0; c < 5; ++c) {
    const Discount lam(ExactQuad(random_ratio(rng, true)));
    const int N = 1 + int(rng.next() % 20);
    StationaryResult sv = stationary_value(lam, N);
    if (perturb) sv.w.w_plus = sv.w.w_plus + ExactQuad::ratio(1, 1000);
    const auto [rp, rm] = shapley_residual(sv.w, lam, N);
    if (!rp.is_zero() || !rm.is_zero())
      fail("nonzero residual at lambda = " + exact_string(lam.value) +
           ", N = " + std::to_string(N) +
           (perturb ? " (fault injected)" : ""));
  }
  return "dynamic-programming residual (0, 0) exact at 5 random (lambda, N)";
}

std::string check_oracle_equivalence(std::uint64_t seed) {
  SplitMix64 rng(seed);
  for (int c = 0; c < 200; ++c) {
    const Discount lam(ExactQuad(random_ratio(rng, true)));
    const ExactQuad a(random_ratio(rng, false));
    const ExactQuad b(random_ratio(rng, false));
    const int i = int(rng.next() % 2), ip = int(rng.next() % 2);
    if (gamma_closed(i, ip, lam, a, b) !=
        gamma_linear_oracle(i, ip, lam, a, b).from_plus)
      fail("closed form != linear solve at case " + std::to_string(c));
  }
  return "closed forms equal the 2x2 linear solve on 200 random inputs";
}

std::string check_gamma_monotonicity() {
  std::vector<ExactQuad> grid;
  for (int n = 1; n <= 6; ++n) grid.push_back(ActionJ::index(n).value());
  const ExactQuad lams[] = {ExactQuad::ratio(1, 2), ExactQuad::ratio(1, 10),
                            ExactQuad::ratio(1, 100)};
  // Direction of each gamma in (a, b): +1 nondecreasing, -1 nonincreasing.
  const struct {
    int i, ip, da, db;
  } patterns[] = {
      {0, 0, -1, +1}, {1, 1, +1, -1}, {1, 0, +1, +1}, {0, 1, -1, -1}};
  for (const ExactQuad& lam : lams) {
    const Discount d(lam);
    for (const auto& pat : patterns) {
      for (std::size_t ai = 0; ai + 1 < grid.size(); ++ai) {
        for (std::size_t bi = 0; bi < grid.size(); ++bi) {
          // grid is decreasing in the index, so step ai -> ai+1 lowers a.
          const ExactQuad lo =
              gamma_closed(pat.i, pat.ip, d, grid[ai + 1], grid[bi]);
          const ExactQuad hi =
              gamma_closed(pat.i, pat.ip, d, grid[ai], grid[bi]);
          if (pat.da > 0 ? !(lo <= hi) : !(lo >= hi))
            fail("a-monotonicity broken for gamma^{" +
                 std::to_string(pat.i) + "," + std::to_string(pat.ip) + "}");
          const ExactQuad blo =
              gamma_closed(pat.i, pat.ip, d, grid[bi], grid[ai + 1]);
          const ExactQuad bhi =
              gamma_closed(pat.i, pat.ip, d, grid[bi], grid[ai]);
          if (pat.db > 0 ? !(blo <= bhi) : !(blo >= bhi))
            fail("b-monotonicity broken for gamma^{" +
                 std::to_string(pat.i) + "," + std::to_string(pat.ip) + "}");
        }
      }
    }
  }
  return "four sign patterns exact on a 6x6 action grid, 3 discounts";
}

std::string check_payoff_antisymmetry(std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<ExactQuad> samples = {ExactQuad(0), ExactQuad(1),
                                    ActionJ::limit().value()};
  for (int c = 0; c < 64; ++c) samples.push_back(ExactQuad(random_ratio(rng, true)));
  for (const ExactQuad& j : samples) {
    for (int i = 0; i <= 1; ++i) {
      if (payoff_g(State::omega_minus, i, j) != -payoff_g(State::omega_plus, i, j))
        fail("payoff antisymmetry broken");
      const ExactQuad f = flip_prob(State::omega_plus, i, j);
      if (sign(f) < 0 || sign(f - 1) > 0) fail("flip probability outside [0, 1]");
    }
  }
  return "g(omega_minus) = -g(omega_plus) and flip in [0,1] on 67 actions";
}

std::string check_hamiltonian_identities() {
  // Exact closed values of the two one-state Hamiltonians at p = 0.
  const ExactQuad h1_expect(Rational(17, 8), Rational(-2));
  const ExactQuad hm1_expect(Rational(33, 16), Rational(-1));
  for (int N : {4, 16}) {
    const HamiltonianSpec spec{N};
    if (h1(ExactQuad(0), spec) != h1_expect) fail("h1(0) mismatch");
    if (hm1(ExactQuad(0), spec) != hm1_expect) fail("hm1(0) mismatch");
  }
  const HamiltonianSpec spec{16};
  const ExactQuad xs[] = {ExactQuad(0), ExactQuad::ratio(1, 3), ExactQuad(1)};
  for (const ExactQuad& x : xs) {
    for (int mag : {3, 5, 10}) {
      for (int sgn : {-1, 1}) {
        const ExactQuad p(mag * sgn);
        const ExactQuad expect = hamiltonian(x, ExactQuad(2 * sgn), spec) +
                                 abs(p) - ExactQuad(2);
        if (hamiltonian(x, p, spec) != expect) fail("coercive extension broken");
      }
    }
    for (int k = 0; k <= 8; ++k) {
      const ExactQuad p = ExactQuad::ratio(k, 4) - ExactQuad(1);
      if (hamiltonian(x, p, spec) != hamiltonian(-x, p, spec))
        fail("x-symmetry broken");
      if (hamiltonian(x, p, spec) != hamiltonian(x, -p, spec))
        fail("p-symmetry broken");
      if (hamiltonian(x, p, spec) != hamiltonian(x + ExactQuad(2), p, spec))
        fail("2-periodicity broken");
    }
  }
  return "p = 0 values, coercive extension, symmetry, periodicity exact";
}

std::string check_viscosity() {
  const ExactQuad xs[] = {ExactQuad::ratio(1, 7), ExactQuad::ratio(1, 2),
                          ExactQuad::ratio(6, 7)};
  const ExactQuad interiors[] = {ExactQuad::ratio(1, 4),
                                 ExactQuad::ratio(1, 10), lambda_seq(5)};
  for (const ExactQuad& lam : interiors) {
    const UPair u = u_pair(Discount(lam), 16);
    for (const ExactQuad& x : xs)
      if (!interior_residual_at(x, u, 16).is_zero())
        fail("nonzero interior residual at lambda = " + exact_string(lam));
  }
  const ExactQuad kinks[] = {ExactQuad::ratio(1, 4), ExactQuad::ratio(1, 10),
                             lambda_seq(5), mu_seq(5)};
  for (const ExactQuad& lam : kinks) {
    const ViscosityReport rep = viscosity_checks(Discount(lam), 16);
    if (!rep.ok())
      fail("kink inequality failed at lambda = " + exact_string(lam) + ": " +
           rep.details);
  }
  return "interior residual 0 exact (9 points); kink inequalities at 4 discounts";
}

std::string check_critical_decay() {
  std::vector<std::pair<ExactQuad, int>> runs;
  for (int n = 3; n <= 8; ++n) runs.push_back({lambda_seq(n), n + 10});
  const std::vector<CriticalProbe> probes = critical_value_probe(runs);
  ExactQuad prev;
  for (std::size_t k = 0; k < probes.size(); ++k) {
    const ExactQuad mag = abs(probes[k].value);
    if (!(mag <= ExactQuad(4) * probes[k].lambda))
      fail("|lambda u(1)| exceeds 4 lambda at n = " + std::to_string(k + 3));
    if (k >= 1 && !(ExactQuad(2) * mag <= prev))
      fail("decay slower than 2x at n = " + std::to_string(k + 3));
    prev = mag;
  }
  return "-lambda_n u(1) obeys the 4 lambda bound and halves each step";
}

std::string check_mc_consistency(std::uint64_t seed) {
  const ExactQuad j1 = ActionJ::index(1).value();
  const ExactQuad j2 = ActionJ::index(2).value();
  const ExactQuad j3 = ActionJ::index(3).value();
  {
    const Discount lam(ExactQuad::ratio(1, 2));
    const StationaryP2 z{ActionJ::index(1), ActionJ::index(1)};
    const McResult mc = simulate_mc(StationaryP1::constant(1, 1), z, 0.5,
                                    State::omega_plus, seed, 100000, 1e-4);
    const double closed = to_double(gamma_closed(1, 1, lam, j1, j1));
    if (!(std::abs(mc.mean - closed) <= 3.0 * mc.std_err))
      fail("MC off closed form, start omega_plus");
  }
  {
    const Discount lam(ExactQuad::ratio(1, 4));
    const StationaryP2 z{ActionJ::index(2), ActionJ::index(3)};
    const McResult mc = simulate_mc(StationaryP1::constant(0, 1), z, 0.25,
                                    State::omega_minus, seed + 1, 100000, 1e-4);
    const double closed =
        to_double(gamma_linear_oracle(0, 1, lam, j2, j3).from_minus);
    if (!(std::abs(mc.mean - closed) <= 3.0 * mc.std_err))
      fail("MC off closed form, start omega_minus");
  }
  return "2 profiles within 3 stderr of closed forms, 1e5 episodes each";
}

std::string check_oscillation(int jobs) {
  std::vector<SweepEntry> entries;
  for (int n = 6; n <= 8; ++n)
    entries.push_back({"lambda", n, lambda_seq(n), n + 10});
  for (int n = 6; n <= 8; ++n)
    entries.push_back({"mu", n, mu_seq(n), n + 10});
  const std::vector<SequenceRecord> recs = sweep(entries, false, jobs);
  bool first_l = true, first_m = true;
  ExactQuad min_lambda, max_mu;
  for (const SequenceRecord& r : recs) {
    if (r.seq == "mu") {
      if (!(r.w.w_plus >= ExactQuad::ratio(3, 4)))
        fail("mu-series value below 3/4 at n = " + std::to_string(r.n));
      if (first_m || r.w.w_plus > max_mu) max_mu = r.w.w_plus;
      first_m = false;
    } else {
      if (first_l || r.w.w_plus < min_lambda) min_lambda = r.w.w_plus;
      first_l = false;
    }
  }
  if (!(max_mu - min_lambda >= ExactQuad::ratio(1, 25)))
    fail("series separation below 0.04");
  return "mu-series >= 3/4 and series split >= 0.04 for n = 6..8, exact";
}

}  // namespace

std::vector<CheckResult> run_verify(const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  out.push_back(run_check("value-bounds", check_value_bounds));
  out.push_back(run_check("shapley-fixed-point", [&] {
    return check_fixed_point(opts.seed, opts.perturb);
  }));
  out.push_back(run_check("oracle-equivalence",
                          [&] { return check_oracle_equivalence(opts.seed); }));
  out.push_back(run_check("gamma-monotonicity", check_gamma_monotonicity));
  out.push_back(run_check("payoff-antisymmetry", [&] {
    return check_payoff_antisymmetry(opts.seed);
  }));
  out.push_back(
      run_check("hamiltonian-identities", check_hamiltonian_identities));
  out.push_back(run_check("viscosity", check_viscosity));
  out.push_back(run_check("critical-value-decay", check_critical_decay));
  out.push_back(run_check("mc-consistency",
                          [&] { return check_mc_consistency(opts.seed); }));
  out.push_back(
      run_check("oscillation", [&] { return check_oscillation(opts.jobs); }));
  return out;
}

}  // namespace hjg
