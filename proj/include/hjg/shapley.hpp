#pragma once

#include "hjg/game.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hjg {

// Minimizer actions admitted at truncation level N: the indexed actions
// j_1 .. j_N in that order, then the limit action 2 - sqrt(2).  The order
// doubles as the tie-breaking order of the enumeration solver.
std::vector<ActionJ> truncated_action_set(int N);

struct ValuePair {
  ExactQuad w_plus;   // value started in omega_plus
  ExactQuad w_minus;  // value started in omega_minus
};

struct BestResponse {
  ExactQuad value;
  int i_plus = 0;   // maximizer action in omega_plus
  int i_minus = 0;  // maximizer action in omega_minus
};

// Exact best reply of the maximizer against the stationary minimizer pair
// (a, b): the largest of the four constant-per-state policies' discounted
// values from the given start state.  Ties resolve to the lexicographically
// smallest (i_plus, i_minus).
BestResponse best_response_value(const Discount& lambda, const ExactQuad& a,
                                 const ExactQuad& b, State start);

struct StationaryResult {
  ValuePair w;
  StationaryP2 argmin_plus;   // minimizing pair for the omega_plus start
  StationaryP2 argmin_minus;  // minimizing pair for the omega_minus start
};

// Exact discounted value of the N-truncated game: minimize the best-reply
// value over all (N+1)^2 stationary minimizer pairs, separately per start
// state.  Ties resolve to the first pair in truncated_action_set order.
// Both components are checked against the bounds w_minus <= w_plus <=
// w_minus + 2 before returning.
StationaryResult stationary_value(const Discount& lambda, int N);

// One application of the dynamic-programming (Shapley) operator of the
// N-truncated game to the candidate value pair w, minus w.  The pair
// returned by stationary_value makes both components exactly zero.
std::pair<ExactQuad, ExactQuad> shapley_residual(const ValuePair& w,
                                                 const Discount& lambda,
                                                 int N);

struct IterationResult {
  double w_plus;
  double w_minus;
  long iterations;
};

// Fixed-point iteration of the Shapley operator in binary64, from the zero
// pair, stopped when the sup-norm change drops to tol * lambda.  Cheap
// independent cross-check of the exact solver.
IterationResult value_iteration(double lambda, int N, double tol);

// The two discount sequences along which the values split: lambda_n =
// 4^-n (12 + 8 sqrt(2)) and mu_n = lambda_n / 2.  Both require n >= 3;
// below that the expression exceeds 1 and is not a discount.
ExactQuad lambda_seq(int n);
ExactQuad mu_seq(int n);

// Cutoff p*(lambda) = 2 - sqrt(2) + (3/4 - 1/sqrt(2)) lambda separating
// "small" from "large" minimizer actions.  Accepts 0 <= lambda <= 1 (the
// value at 0 is the accumulation point of the action set).
ExactQuad p_star(const ExactQuad& lambda);

// The threshold strategy with cutoff p*(lambda).
StationaryP1 threshold_strategy(const Discount& lambda);

// Worst-case discounted value (over stationary minimizer pairs at
// truncation N, started in omega_plus) the fixed strategy y secures.
ExactQuad guarantee(const StationaryP1& y, const Discount& lambda, int N);

struct SweepEntry {
  std::string seq;   // label, e.g. "lambda", "mu", "custom"
  int n = 0;         // sequence index; 0 when not applicable
  ExactQuad lambda;
  int truncation = 16;
};

struct SequenceRecord {
  std::string seq;
  int n = 0;
  ExactQuad lambda;
  ValuePair w;
  int truncation = 16;
  // Sup-norm distance to the value recomputed at truncation + 2; measures
  // how settled the truncated value is.
  double stability_gap = 0.0;
};

// Solve a batch of discounts exactly.  Entries are independent and may be
// processed by several OpenMP threads (jobs > 1); records come back in
// input order either way.  Every record is checked against the a-priori
// bound |w| <= 4 on stationary values.
std::vector<SequenceRecord> sweep(const std::vector<SweepEntry>& entries,
                                  bool stability, int jobs);

}  // namespace hjg
