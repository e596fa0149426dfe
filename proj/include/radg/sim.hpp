#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "radg/game.hpp"

namespace radg {

enum class TeamStrategy {
  Optimal,
  StraightToTarget,
  InitialHeading,  // optimal controls at t = 0, then held fixed
  Custom,
};

/// Custom strategies return one velocity per team member. Entries for
/// frozen players are ignored.
using ControlHook = std::function<std::vector<Vec3>(double t, const Positions& x)>;

struct StrategyProfile {
  TeamStrategy evaders{TeamStrategy::Optimal};
  TeamStrategy pursuers{TeamStrategy::Optimal};
  ControlHook evader_hook;
  ControlHook pursuer_hook;

  static StrategyProfile optimal() { return {}; }
  static StrategyProfile straight_evaders() {
    StrategyProfile p;
    p.evaders = TeamStrategy::StraightToTarget;
    return p;
  }
};

/// A control whose norm exceeds the player's speed.
class InadmissibleControl : public Error {
 public:
  using Error::Error;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<Positions> positions;
  std::vector<Event> events;
  std::vector<PairOutcome> plan;
  bool pursuer_region{false};
  double realized_payoff{0.0};

  double t_final() const { return events.empty() ? times.back() : events.back().t; }
};

double default_step(const Scenario& s);
double default_max_time(const Scenario& s);

/// Forward Euler with controls re-evaluated every step and events located
/// inside the step. `step` defaults to default_step(s).
Trajectory simulate(const Scenario& s, const Assignment& chosen, const StrategyProfile& profile,
                    std::optional<double> step = std::nullopt);

struct Straightness {
  std::vector<double> evaders;
  std::vector<double> pursuers;

  double worst() const;
};

/// Largest distance of any sample from the chord joining a player's first and
/// last positions, over the chord length. Stationary players score 0.
Straightness straightness_check(const Trajectory& traj);

/// Sum over the chosen pairs of the value in their t = 0 region. Pairs with
/// alpha > 1 on the evader side use the race value, which the straight-line
/// law keeps constant; alpha > 1 pairs on the pursuer side have no value.
double team_value(const Scenario& s, const std::vector<PairOutcome>& plan, const Positions& x);

/// max |V(x(t)) - V(x(0))| along optimal play.
double value_conservation_check(const Scenario& s, const Assignment& chosen,
                                std::optional<double> step = std::nullopt);

}  // namespace radg
