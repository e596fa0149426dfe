#include "radg/duel.hpp"

#include <cmath>

namespace radg {

const char* to_string(Region r) {
  return r == Region::PursuerWins ? "PursuerWins" : "EvaderWins";
}

double barrier_1v1(const DuelState& s) {
  const double a = s.alpha().value;
  return norm_sq(s.evader) - a * a * norm_sq(s.pursuer);
}

Region classify_1v1(const DuelState& s) {
  return barrier_1v1(s) > 0.0 ? Region::PursuerWins : Region::EvaderWins;
}

namespace {

void require_supported(SpeedRatio alpha) {
  if (!is_supported(alpha)) {
    throw UnsupportedRegime("no value function for speed ratio " + std::to_string(alpha.value) +
                            " > 1");
  }
}

DuelValue pursuit_value(const DuelState& s) {
  const SpeedRatio alpha = s.alpha();
  const Vec3 sep = s.evader - s.pursuer;
  const double d = norm(sep);
  if (d == 0.0) throw DegenerateGeometry("evader and pursuer positions coincide");

  DuelValue out;
  out.region = Region::PursuerWins;
  if (is_equal_speed(alpha)) {
    // Distance from the target to the bisector plane, differentiated directly.
    const double v = (norm_sq(s.evader) - norm_sq(s.pursuer)) / (2.0 * d);
    const Vec3 n = sep / d;
    out.value = v;
    out.grad_evader = (s.evader - v * n) / d;
    out.grad_pursuer = (v * n - s.pursuer) / d;
    return out;
  }
  const double a = alpha.value;
  const double a2 = a * a;
  const double den = 1.0 - a2;
  const Vec3 center = (s.evader - a2 * s.pursuer) / den;
  const double rc = a * d / den;
  const double big_rc = norm(center);
  if (big_rc == 0.0) throw SingularControl("Apollonius centre at the target");
  const Vec3 c_hat = center / big_rc;
  const Vec3 sep_over_r = sep / rc;
  out.value = big_rc - rc;
  out.grad_evader = c_hat / den - (a2 / (den * den)) * sep_over_r;
  out.grad_pursuer = -(a2 / den) * c_hat + (a2 / (den * den)) * sep_over_r;
  return out;
}

DuelValue race_value(const DuelState& s) {
  const double a = s.alpha().value;
  const double re = norm(s.evader);
  const double rp = norm(s.pursuer);
  if (rp == 0.0) throw SingularControl("pursuer at the target: evader-region gradient undefined");
  DuelValue out;
  out.region = Region::EvaderWins;
  out.value = -rp + re / a;
  out.grad_evader = re > 0.0 ? s.evader / (a * re) : Vec3{};
  out.grad_pursuer = -s.pursuer / rp;
  return out;
}

}  // namespace

DuelValue value_pursuer_region(const DuelState& s) {
  require_supported(s.alpha());
  if (classify_1v1(s) != Region::PursuerWins) {
    throw RegionMismatch("pursuer-region value requested for an evader-winning state");
  }
  return pursuit_value(s);
}

DuelValue value_evader_region(const DuelState& s) {
  require_supported(s.alpha());
  if (classify_1v1(s) != Region::EvaderWins) {
    throw RegionMismatch("evader-region value requested for a pursuer-winning state");
  }
  return race_value(s);
}

DuelValue duel_value(const DuelState& s) {
  return classify_1v1(s) == Region::PursuerWins ? value_pursuer_region(s) : value_evader_region(s);
}

DuelValue evaluate_in_region(const DuelState& s, Region region) {
  require_supported(s.alpha());
  return region == Region::PursuerWins ? pursuit_value(s) : race_value(s);
}

double value_in_region(const DuelState& s, Region region) {
  const double a = s.alpha().value;
  if (region == Region::EvaderWins) return -norm(s.pursuer) + norm(s.evader) / a;
  require_supported(s.alpha());
  const Vec3 sep = s.evader - s.pursuer;
  const double d = norm(sep);
  if (d == 0.0) return norm(s.evader);
  if (is_equal_speed(s.alpha())) return (norm_sq(s.evader) - norm_sq(s.pursuer)) / (2.0 * d);
  const double a2 = a * a;
  const double den = 1.0 - a2;
  return norm((s.evader - a2 * s.pursuer) / den) - a * d / den;
}

DuelControls controls_from_gradient(const DuelValue& v, double evader_speed,
                                    double pursuer_speed) {
  const double rho_e = norm(v.grad_evader);
  const double rho_p = norm(v.grad_pursuer);
  if (!(rho_e > 0.0) || !(rho_p > 0.0)) {
    throw SingularControl("zero-norm value gradient");
  }
  return {-(evader_speed / rho_e) * v.grad_evader, (pursuer_speed / rho_p) * v.grad_pursuer};
}

DuelControls optimal_controls(const DuelState& s) {
  return controls_from_gradient(duel_value(s), s.evader_speed, s.pursuer_speed);
}

DuelControls optimal_controls(const DuelState& s, Region fixed_region) {
  return controls_from_gradient(evaluate_in_region(s, fixed_region), s.evader_speed,
                                s.pursuer_speed);
}

double hji_residual(const DuelValue& v, SpeedRatio alpha) {
  return -alpha.value * norm(v.grad_evader) + norm(v.grad_pursuer);
}

}  // namespace radg
