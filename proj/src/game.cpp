#include "hjg/game.hpp"

#include <stdexcept>

namespace hjg {

ActionJ ActionJ::index(int n) {
  if (n < 1) throw std::domain_error("ActionJ::index: n must be >= 1");
  return ActionJ{n};
}

ExactQuad ActionJ::value() const {
  if (n < 0) throw std::domain_error("ActionJ: negative index");
  ExactQuad v(Rational(2), Rational(-1));  // 2 - sqrt(2)
  if (n > 0) v.rat += Rational(BigInt(1), BigInt(1) << (2 * n));
  return v;
}

StationaryP1 StationaryP1::constant(int i_plus, int i_minus) {
  if ((i_plus != 0 && i_plus != 1) || (i_minus != 0 && i_minus != 1))
    throw std::domain_error("StationaryP1: actions must be 0 or 1");
  StationaryP1 y;
  y.i_plus_ = i_plus;
  y.i_minus_ = i_minus;
  return y;
}

StationaryP1 StationaryP1::threshold(ExactQuad cutoff) {
  StationaryP1 y;
  y.threshold_ = true;
  y.cutoff_ = std::move(cutoff);
  return y;
}

int StationaryP1::act(State k, const ExactQuad& j) const {
  if (!threshold_) return k == State::omega_plus ? i_plus_ : i_minus_;
  // Match the opponent below the cutoff, oppose above it: in omega_plus the
  // matching action against small j is 0, in omega_minus it is 1.
  const bool small = j <= cutoff_;
  if (k == State::omega_plus) return small ? 0 : 1;
  return small ? 1 : 0;
}

const ExactQuad& StationaryP1::cutoff() const {
  if (!threshold_) throw std::logic_error("StationaryP1: no cutoff");
  return cutoff_;
}

Discount::Discount(ExactQuad v) : value(std::move(v)) {
  if (sign(value) <= 0 || sign(value - 1) > 0)
    throw std::domain_error("discount must lie in (0, 1]");
}

namespace {

void check_actions(int i, const ExactQuad& j) {
  if (i != 0 && i != 1)
    throw std::domain_error("maximizer action must be 0 or 1");
  if (sign(j) < 0 || sign(j - 1) > 0)
    throw std::domain_error("minimizer action outside [0, 1]");
}

}  // namespace

ExactQuad payoff_g(State k, int i, const ExactQuad& j) {
  check_actions(i, j);
  const ExactQuad base = i == 1 ? j : ExactQuad(2) * (ExactQuad(1) - j);
  return k == State::omega_plus ? base : -base;
}

ExactQuad flip_prob(State /*k*/, int i, const ExactQuad& j) {
  check_actions(i, j);
  return i == 1 ? ExactQuad(1) - j : j;
}

namespace {

void check_gamma_domain(int i, int i_prime, const ExactQuad& a,
                        const ExactQuad& b) {
  if ((i != 0 && i != 1) || (i_prime != 0 && i_prime != 1))
    throw std::domain_error("maximizer action must be 0 or 1");
  if (sign(a) <= 0 || sign(a - 1) >= 0 || sign(b) <= 0 || sign(b - 1) >= 0)
    throw std::domain_error("minimizer actions must lie strictly in (0, 1)");
}

}  // namespace

ExactQuad gamma_closed(int i, int i_prime, const Discount& lambda,
                       const ExactQuad& a, const ExactQuad& b) {
  check_gamma_domain(i, i_prime, a, b);
  const ExactQuad& lam = lambda.value;
  ExactQuad num, den;
  if (i == 0 && i_prime == 0) {
    num = ExactQuad(-2) * (a - b - lam + b * lam);
    den = lam * (a + b + lam - a * lam - b * lam);
  } else if (i == 1 && i_prime == 1) {
    num = -(a - b + lam * b);
    den = lam * (a + b + lam - a * lam - b * lam - 2);
  } else if (i == 1 && i_prime == 0) {
    num = ExactQuad(2) * a + ExactQuad(2) * b + ExactQuad(2) * lam - a * b -
          a * lam - ExactQuad(2) * b * lam + a * b * lam - 2;
    den = lam * (b - a + lam * a - b * lam + 1);
  } else {
    num = -(ExactQuad(2) * a + ExactQuad(2) * b - a * b -
            ExactQuad(2) * b * lam + a * b * lam - 2);
    den = lam * (a - b - a * lam + b * lam + 1);
  }
  if (den.is_zero())
    throw std::runtime_error("gamma_closed: vanishing denominator");
  return num / den;
}

GammaPair gamma_linear_oracle(int i, int i_prime, const Discount& lambda,
                              const ExactQuad& a, const ExactQuad& b) {
  check_gamma_domain(i, i_prime, a, b);
  // The pair (v, v~) of discounted values started in omega_plus / omega_minus
  // satisfies one balance equation per start state:
  //   v  = g1 + (1 - lam) [(1 - f1) v  + f1 v~]
  //   v~ = g2 + (1 - lam) [(1 - f2) v~ + f2 v ]
  const ExactQuad& lam = lambda.value;
  const ExactQuad beta = ExactQuad(1) - lam;
  const ExactQuad g1 = payoff_g(State::omega_plus, i, a);
  const ExactQuad f1 = flip_prob(State::omega_plus, i, a);
  const ExactQuad g2 = payoff_g(State::omega_minus, i_prime, b);
  const ExactQuad f2 = flip_prob(State::omega_minus, i_prime, b);
  const ExactQuad a11 = lam + beta * f1;
  const ExactQuad a12 = -(beta * f1);
  const ExactQuad a21 = -(beta * f2);
  const ExactQuad a22 = lam + beta * f2;
  const ExactQuad det = a11 * a22 - a12 * a21;
  if (det.is_zero())
    throw std::runtime_error("gamma_linear_oracle: singular system");
  GammaPair out;
  out.from_plus = (g1 * a22 - g2 * a12) / det;
  out.from_minus = (a11 * g2 - a21 * g1) / det;
  return out;
}

}  // namespace hjg
