#pragma once

#include "radg/core.hpp"
#include "radg/geometry.hpp"

namespace radg {

/// One evader against one pursuer, target at the origin.
struct DuelState {
  Vec3 evader;
  Vec3 pursuer;
  double evader_speed{1.0};   // U
  double pursuer_speed{1.0};  // V

  SpeedRatio alpha() const { return speed_ratio(evader_speed, pursuer_speed); }
};

enum class Region { PursuerWins, EvaderWins };

const char* to_string(Region r);

/// Value of the duel together with its gradient in both players' positions.
struct DuelValue {
  Region region{Region::PursuerWins};
  double value{0.0};
  Vec3 grad_evader;
  Vec3 grad_pursuer;
};

/// Admissible headings: |evader| == U, |pursuer| == V.
struct DuelControls {
  Vec3 evader;
  Vec3 pursuer;
};

/// B = R_E^2 - alpha^2 R_P^2. Positive in the pursuer winning region.
double barrier_1v1(const DuelState& s);

/// Boundary B == 0 belongs to the evader.
Region classify_1v1(const DuelState& s);

/// V^P = |I|, the distance of the interception point from the target.
/// Requires B > 0 and alpha <= 1.
DuelValue value_pursuer_region(const DuelState& s);

/// V^E = -R_P + R_E / alpha, minus the pursuer's distance from the target
/// when the evader arrives. Requires B <= 0, alpha <= 1 and the pursuer away
/// from the origin (the value itself is defined there, its gradient is not).
DuelValue value_evader_region(const DuelState& s);

/// Dispatches on the sign of the barrier.
DuelValue duel_value(const DuelState& s);

/// Evaluates the closed form of `region` without checking which region the
/// state is in. Used along trajectories whose region label is fixed at t = 0.
/// Still throws for alpha > 1 and for singular gradients.
DuelValue evaluate_in_region(const DuelState& s, Region region);

/// Value only, for `region`'s closed form; defined also at capture
/// (coincident players) and at the target, where gradients are not.
double value_in_region(const DuelState& s, Region region);

/// Saddle-point headings from a value gradient: the evader descends, the
/// pursuer ascends, each at full speed.
DuelControls controls_from_gradient(const DuelValue& v, double evader_speed, double pursuer_speed);

DuelControls optimal_controls(const DuelState& s);
DuelControls optimal_controls(const DuelState& s, Region fixed_region);

/// -alpha |dV/dx_E| + |dV/dx_P|; vanishes wherever the value solves the HJI equation.
double hji_residual(const DuelValue& v, SpeedRatio alpha);

}  // namespace radg
