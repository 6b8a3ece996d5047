#include "hjg/hamiltonian.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hjg {

namespace {

// Shared min-max core of the two one-state Hamiltonians: sgn picks the
// state's payoff sign and the momentum enters the running payoff with the
// opposite orientation in the two states.
ExactQuad minmax_core(const ExactQuad& p, int payoff_sign,
                      const HamiltonianSpec& spec) {
  const State k =
      payoff_sign > 0 ? State::omega_plus : State::omega_minus;
  const ExactQuad drift = payoff_sign > 0 ? -p : p;
  bool first = true;
  ExactQuad outer;
  for (const ActionJ& aj : truncated_action_set(spec.truncation)) {
    const ExactQuad j = aj.value();
    bool first_i = true;
    ExactQuad inner;
    for (int i = 0; i <= 1; ++i) {
      const ExactQuad v = payoff_g(k, i, j) + drift * flip_prob(k, i, j);
      if (first_i || v > inner) {
        inner = v;
        first_i = false;
      }
    }
    if (first || inner < outer) {
      outer = inner;
      first = false;
    }
  }
  return -outer;
}

ExactQuad one_state(const ExactQuad& p, int payoff_sign,
                    const HamiltonianSpec& spec) {
  const ExactQuad ap = abs(p);
  if (sign(ap - 2) > 0) {
    // Beyond |p| = 2 the momentum term dominates every payoff difference
    // and the Hamiltonian continues with unit slope.
    const ExactQuad edge(sign(p) > 0 ? 2 : -2);
    return minmax_core(edge, payoff_sign, spec) + ap - ExactQuad(2);
  }
  return minmax_core(p, payoff_sign, spec);
}

}  // namespace

ExactQuad h1(const ExactQuad& p, const HamiltonianSpec& spec) {
  return one_state(p, +1, spec);
}

ExactQuad hm1(const ExactQuad& p, const HamiltonianSpec& spec) {
  return one_state(p, -1, spec);
}

namespace {

// Reduce x into the period cell [-1, 1) and return |x| there.
ExactQuad folded(const ExactQuad& x) {
  const BigInt cell = floor_int((x + ExactQuad(1)) / ExactQuad(2));
  return abs(x - ExactQuad(2) * ExactQuad(Rational(cell)));
}

double folded(double x) {
  return std::abs(x - 2.0 * std::floor((x + 1.0) / 2.0));
}

}  // namespace

ExactQuad hamiltonian(const ExactQuad& x, const ExactQuad& p,
                      const HamiltonianSpec& spec) {
  const ExactQuad y = folded(x);
  const ExactQuad ap = abs(p);
  return y * h1(ap, spec) + (ExactQuad(1) - y) * hm1(ap, spec);
}

HamiltonianTable::HamiltonianTable(HamiltonianSpec spec)
    : truncation_(spec.truncation) {
  for (const ActionJ& aj : truncated_action_set(spec.truncation))
    actions_.push_back(to_double(aj.value()));
}

double HamiltonianTable::h1(double p) const {
  const double ap = std::abs(p);
  if (ap > 2.0) return h1(p > 0 ? 2.0 : -2.0) + ap - 2.0;
  double outer = 0.0;
  bool first = true;
  for (double j : actions_) {
    const double v1 = j - p * (1.0 - j);
    const double v0 = 2.0 * (1.0 - j) - p * j;
    const double inner = std::max(v0, v1);
    if (first || inner < outer) {
      outer = inner;
      first = false;
    }
  }
  return -outer;
}

double HamiltonianTable::hm1(double p) const {
  const double ap = std::abs(p);
  if (ap > 2.0) return hm1(p > 0 ? 2.0 : -2.0) + ap - 2.0;
  double outer = 0.0;
  bool first = true;
  for (double j : actions_) {
    const double v1 = -j + p * (1.0 - j);
    const double v0 = -2.0 * (1.0 - j) + p * j;
    const double inner = std::max(v0, v1);
    if (first || inner < outer) {
      outer = inner;
      first = false;
    }
  }
  return -outer;
}

double HamiltonianTable::h(double x, double p) const {
  const double y = folded(x);
  const double ap = std::abs(p);
  return y * h1(ap) + (1.0 - y) * hm1(ap);
}

UPair u_pair(const Discount& lambda, int N) {
  const ExactQuad& lam = lambda.value;
  const Discount shifted(lam / (ExactQuad(1) + lam));
  const StationaryResult sv = stationary_value(shifted, N);
  const ExactQuad scale = ExactQuad(1) / (ExactQuad(1) + lam);
  return {scale * sv.w.w_plus, scale * sv.w.w_minus, lam};
}

ExactQuad u_interp(const ExactQuad& x, const UPair& u) {
  const ExactQuad y = folded(x);
  return y * u.u_plus + (ExactQuad(1) - y) * u.u_minus;
}

double u_interp(double x, const UPair& u) {
  const double y = folded(x);
  return y * to_double(u.u_plus) + (1.0 - y) * to_double(u.u_minus);
}

ExactQuad interior_residual_at(const ExactQuad& x, const UPair& u, int N) {
  if (sign(x) <= 0 || sign(x - 1) >= 0)
    throw std::domain_error(
        "interior_residual: x at a kink or outside (0, 1)");
  const ExactQuad slope = u.u_plus - u.u_minus;
  const HamiltonianSpec spec{N};
  return u.lambda * u_interp(x, u) + hamiltonian(x, slope, spec);
}

ExactQuad interior_residual(const ExactQuad& x, const Discount& lambda,
                            int N) {
  return interior_residual_at(x, u_pair(lambda, N), N);
}

ViscosityReport viscosity_checks(const Discount& lambda, int N) {
  const UPair u = u_pair(lambda, N);
  const ExactQuad s = u.u_plus - u.u_minus;
  const HamiltonianSpec spec{N};
  const ExactQuad momenta[3] = {-s, ExactQuad(0), s};

  ViscosityReport rep;
  rep.x0_ok = true;
  rep.x1_ok = true;
  std::ostringstream detail;

  // x = 0 is a convex kink (local minimum): every subdifferential momentum
  // must see a nonnegative residual.
  detail << "x=0:";
  for (const ExactQuad& p : momenta) {
    const ExactQuad r =
        lambda.value * u.u_minus + hamiltonian(ExactQuad(0), p, spec);
    rep.x0_ok = rep.x0_ok && sign(r) >= 0;
    detail << ' ' << approx(r, 6);
  }
  // x = 1 is a concave kink (local maximum): every superdifferential
  // momentum must see a nonpositive residual.
  detail << "; x=1:";
  for (const ExactQuad& p : momenta) {
    const ExactQuad r =
        lambda.value * u.u_plus + hamiltonian(ExactQuad(1), p, spec);
    rep.x1_ok = rep.x1_ok && sign(r) <= 0;
    detail << ' ' << approx(r, 6);
  }
  rep.details = detail.str();
  return rep;
}

std::vector<CriticalProbe> critical_value_probe(
    const std::vector<std::pair<ExactQuad, int>>& runs) {
  std::vector<CriticalProbe> out;
  out.reserve(runs.size());
  for (const auto& [lam, N] : runs) {
    const UPair u = u_pair(Discount(lam), N);
    out.push_back({lam, -(lam * u.u_plus)});
  }
  return out;
}

}  // namespace hjg
