#include "hjg/shapley.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace hjg {

std::vector<ActionJ> truncated_action_set(int N) {
  if (N < 1) throw std::domain_error("truncation must be >= 1");
  std::vector<ActionJ> out;
  out.reserve(std::size_t(N) + 1);
  for (int n = 1; n <= N; ++n) out.push_back(ActionJ::index(n));
  out.push_back(ActionJ::limit());
  return out;
}

BestResponse best_response_value(const Discount& lambda, const ExactQuad& a,
                                 const ExactQuad& b, State start) {
  BestResponse best;
  bool first = true;
  for (int i = 0; i <= 1; ++i) {
    for (int ip = 0; ip <= 1; ++ip) {
      const ExactQuad v =
          start == State::omega_plus
              ? gamma_closed(i, ip, lambda, a, b)
              : gamma_linear_oracle(i, ip, lambda, a, b).from_minus;
      if (first || v > best.value) {
        best = {v, i, ip};
        first = false;
      }
    }
  }
  return best;
}

StationaryResult stationary_value(const Discount& lambda, int N) {
  const std::vector<ActionJ> actions = truncated_action_set(N);
  std::vector<ExactQuad> vals;
  vals.reserve(actions.size());
  for (const ActionJ& j : actions) vals.push_back(j.value());

  StationaryResult out;
  for (State start : {State::omega_plus, State::omega_minus}) {
    bool first = true;
    ExactQuad best;
    StationaryP2 arg;
    for (std::size_t ai = 0; ai < actions.size(); ++ai) {
      for (std::size_t bi = 0; bi < actions.size(); ++bi) {
        const ExactQuad v =
            best_response_value(lambda, vals[ai], vals[bi], start).value;
        if (first || v < best) {
          best = v;
          arg = {actions[ai], actions[bi]};
          first = false;
        }
      }
    }
    if (start == State::omega_plus) {
      out.w.w_plus = best;
      out.argmin_plus = arg;
    } else {
      out.w.w_minus = best;
      out.argmin_minus = arg;
    }
  }
  // The two values always straddle as w_minus <= w_plus <= w_minus + 2
  // (swapping start states flips payoffs, and stage payoffs differ by at
  // most 2).  A violation means the solver itself is broken.
  if (!(out.w.w_minus <= out.w.w_plus &&
        out.w.w_plus <= out.w.w_minus + ExactQuad(2)))
    throw std::logic_error("stationary_value: value bounds violated");
  return out;
}

std::pair<ExactQuad, ExactQuad> shapley_residual(const ValuePair& w,
                                                 const Discount& lambda,
                                                 int N) {
  const std::vector<ActionJ> actions = truncated_action_set(N);
  const ExactQuad beta = ExactQuad(1) - lambda.value;
  auto apply = [&](State k) {
    const ExactQuad& here = k == State::omega_plus ? w.w_plus : w.w_minus;
    const ExactQuad& there = k == State::omega_plus ? w.w_minus : w.w_plus;
    bool first_j = true;
    ExactQuad outer;
    for (const ActionJ& aj : actions) {
      const ExactQuad j = aj.value();
      bool first_i = true;
      ExactQuad inner;
      for (int i = 0; i <= 1; ++i) {
        const ExactQuad f = flip_prob(k, i, j);
        const ExactQuad v = payoff_g(k, i, j) +
                            beta * ((ExactQuad(1) - f) * here + f * there);
        if (first_i || v > inner) {
          inner = v;
          first_i = false;
        }
      }
      if (first_j || inner < outer) {
        outer = inner;
        first_j = false;
      }
    }
    return outer;
  };
  return {apply(State::omega_plus) - w.w_plus,
          apply(State::omega_minus) - w.w_minus};
}

IterationResult value_iteration(double lambda, int N, double tol) {
  if (!(lambda > 0.0 && lambda <= 1.0))
    throw std::domain_error("discount must lie in (0, 1]");
  if (!(tol > 0.0)) throw std::domain_error("tol must be positive");
  std::vector<double> j_vals;
  for (const ActionJ& aj : truncated_action_set(N))
    j_vals.push_back(to_double(aj.value()));

  const double beta = 1.0 - lambda;
  auto apply = [&](double here, double there, bool plus) {
    double outer = 0.0;
    bool first_j = true;
    for (double j : j_vals) {
      // i = 1: payoff +-j, switch with probability 1 - j.
      // i = 0: payoff +-2(1 - j), switch with probability j.
      const double sgn = plus ? 1.0 : -1.0;
      const double v1 = sgn * j + beta * (j * here + (1.0 - j) * there);
      const double v0 =
          sgn * 2.0 * (1.0 - j) + beta * ((1.0 - j) * here + j * there);
      const double inner = std::max(v0, v1);
      if (first_j || inner < outer) {
        outer = inner;
        first_j = false;
      }
    }
    return outer;
  };

  // Updates contract by (1 - lambda) per step from the zero start, so the
  // stop threshold tol * lambda is reached within the a-priori bound below;
  // the slack only guards floating-point edge cases.
  long cap = 4;
  if (lambda < 1.0) {
    const double steps =
        std::ceil(std::log(tol * lambda / 4.0) / std::log1p(-lambda));
    if (steps > 0.0) cap = long(steps);
  }
  cap += 16;

  double wp = 0.0, wm = 0.0;
  long iters = 0;
  for (;;) {
    const double np = apply(wp, wm, true);
    const double nm = apply(wm, wp, false);
    if (!std::isfinite(np) || !std::isfinite(nm))
      throw std::runtime_error("value_iteration: iterate diverged");
    const double d = std::max(std::abs(np - wp), std::abs(nm - wm));
    if (d <= tol * lambda) return {np, nm, iters};
    wp = np;
    wm = nm;
    if (++iters > cap)
      throw std::runtime_error("value_iteration: failed to converge");
  }
}

ExactQuad lambda_seq(int n) {
  if (n < 3) throw std::domain_error("discount exceeds 1");
  // 4^-n (12 + 8 sqrt(2)); at n = 3 this is (3 + 2 sqrt(2)) / 16 < 1.
  return ExactQuad::pow2(-2 * n) * ExactQuad(Rational(12), Rational(8));
}

ExactQuad mu_seq(int n) { return lambda_seq(n) / ExactQuad(2); }

ExactQuad p_star(const ExactQuad& lambda) {
  if (sign(lambda) < 0 || sign(lambda - 1) > 0)
    throw std::domain_error("p_star: lambda outside [0, 1]");
  // 2 - sqrt(2) + (3/4 - 1/sqrt(2)) lambda
  return ExactQuad(Rational(2), Rational(-1)) +
         ExactQuad(Rational(3, 4), Rational(-1, 2)) * lambda;
}

StationaryP1 threshold_strategy(const Discount& lambda) {
  return StationaryP1::threshold(p_star(lambda.value));
}

ExactQuad guarantee(const StationaryP1& y, const Discount& lambda, int N) {
  const std::vector<ActionJ> actions = truncated_action_set(N);
  bool first = true;
  ExactQuad worst;
  for (const ActionJ& aj : actions) {
    const ExactQuad a = aj.value();
    const int i = y.act(State::omega_plus, a);
    for (const ActionJ& bj : actions) {
      const ExactQuad b = bj.value();
      const int ip = y.act(State::omega_minus, b);
      const ExactQuad v = gamma_closed(i, ip, lambda, a, b);
      if (first || v < worst) {
        worst = v;
        first = false;
      }
    }
  }
  return worst;
}

std::vector<SequenceRecord> sweep(const std::vector<SweepEntry>& entries,
                                  bool stability, int jobs) {
  // Validate up front so bad input surfaces as the usual domain errors,
  // not from inside the parallel region.
  for (const SweepEntry& e : entries) {
    Discount check(e.lambda);
    if (e.truncation < 1)
      throw std::domain_error("truncation must be >= 1");
  }

  std::vector<SequenceRecord> out(entries.size());
  std::vector<std::string> errors(entries.size());
  const std::ptrdiff_t count = std::ptrdiff_t(entries.size());
  const int threads = std::max(1, jobs);
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (jobs > 1)
  for (std::ptrdiff_t idx = 0; idx < count; ++idx) {
    try {
      const SweepEntry& e = entries[std::size_t(idx)];
      const Discount lam(e.lambda);
      const StationaryResult sv = stationary_value(lam, e.truncation);
      double gap = 0.0;
      if (stability) {
        const StationaryResult again = stationary_value(lam, e.truncation + 2);
        gap = std::max(std::abs(to_double(again.w.w_plus - sv.w.w_plus)),
                       std::abs(to_double(again.w.w_minus - sv.w.w_minus)));
      }
      if (abs(sv.w.w_plus) > ExactQuad(4) || abs(sv.w.w_minus) > ExactQuad(4))
        throw std::logic_error("stationary value violates |w| <= 4");
      out[std::size_t(idx)] = {e.seq, e.n,          e.lambda,
                               sv.w,  e.truncation, gap};
    } catch (const std::exception& ex) {
      errors[std::size_t(idx)] = ex.what()[0] ? ex.what() : "unknown error";
    }
  }
  for (const std::string& msg : errors)
    if (!msg.empty()) throw std::runtime_error("sweep: " + msg);
  return out;
}

}  // namespace hjg
