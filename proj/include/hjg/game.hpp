#pragma once

#include "hjg/exact_quad.hpp"

namespace hjg {

// The two game states.  Payoffs in omega_minus are the exact negatives of
// those in omega_plus; the switching rule is the same in both.
enum class State { omega_plus, omega_minus };

inline State other(State k) {
  return k == State::omega_plus ? State::omega_minus : State::omega_plus;
}

// Minimizer action j_n = 2 - sqrt(2) + 4^-n for n >= 1, together with the
// accumulation point j_0 = 2 - sqrt(2) of the action set.  The index n == 0
// is reserved for that limit action.
struct ActionJ {
  int n = 0;

  static ActionJ limit() { return ActionJ{0}; }
  static ActionJ index(int n);  // n >= 1

  bool is_limit() const { return n == 0; }
  ExactQuad value() const;
};

// A stationary strategy of the minimizer: one action per state.
struct StationaryP2 {
  ActionJ a;  // played in omega_plus
  ActionJ b;  // played in omega_minus

  ActionJ at(State k) const { return k == State::omega_plus ? a : b; }
};

// A stationary strategy of the maximizer.  Either a constant choice per
// state, or the threshold reaction "match small j, oppose large j" around a
// cutoff p (the form the optimal strategies take along the two discount
// sequences).
class StationaryP1 {
 public:
  static StationaryP1 constant(int i_plus, int i_minus);
  static StationaryP1 threshold(ExactQuad cutoff);

  // Action in state k against minimizer action j.
  int act(State k, const ExactQuad& j) const;

  bool is_threshold() const { return threshold_; }
  const ExactQuad& cutoff() const;

 private:
  StationaryP1() = default;
  bool threshold_ = false;
  ExactQuad cutoff_;
  int i_plus_ = 0;
  int i_minus_ = 0;
};

// Discount factor lambda, constrained to (0, 1].
struct Discount {
  ExactQuad value;
  explicit Discount(ExactQuad v);
};

// Stage payoff g(k, i, j) = +-(i j + 2 (1 - i)(1 - j)); positive sign in
// omega_plus, negative in omega_minus.  Requires i in {0,1}, j in [0,1].
ExactQuad payoff_g(State k, int i, const ExactQuad& j);

// Probability of switching state, i(1 - j) + (1 - i) j.  Independent of the
// current state; the argument is kept for signature symmetry with payoff_g.
ExactQuad flip_prob(State k, int i, const ExactQuad& j);

// Discounted value, started in omega_plus, of the stationary profile where
// the maximizer plays i in omega_plus and i_prime in omega_minus and the
// minimizer plays a in omega_plus and b in omega_minus.  Evaluates the four
// closed-form expressions (one per (i, i_prime)); their denominators are
// sign-definite on 0 < a, b < 1, 0 < lambda <= 1.
ExactQuad gamma_closed(int i, int i_prime, const Discount& lambda,
                       const ExactQuad& a, const ExactQuad& b);

struct GammaPair {
  ExactQuad from_plus;   // started in omega_plus
  ExactQuad from_minus;  // started in omega_minus
};

// The same stationary values obtained by an independent route: assemble the
// 2x2 linear system the pair of discounted values satisfies (one balance
// equation per start state, built only from payoff_g and flip_prob) and
// solve it by Cramer's rule.  Serves as a cross-check oracle for
// gamma_closed and also supplies the omega_minus-started value.
GammaPair gamma_linear_oracle(int i, int i_prime, const Discount& lambda,
                              const ExactQuad& a, const ExactQuad& b);

}  // namespace hjg
