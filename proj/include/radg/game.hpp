#pragma once

#include <optional>
#include <vector>

#include "radg/assignment.hpp"
#include "radg/core.hpp"
#include "radg/duel.hpp"

namespace radg {

enum class Team { PursuerTeam, EvaderTeam };

const char* to_string(Team t);

/// One matched pair of the chosen assignment, labelled at t = 0.
struct PairOutcome {
  std::size_t evader{0};
  std::size_t pursuer{0};
  SpeedRatio alpha;
  PairKind kind{PairKind::Capture};
  Region region{Region::PursuerWins};
  double value{0.0};  // entry of the value matrix
};

struct GameSolution {
  Team winner{Team::EvaderTeam};
  double barrier_value{0.0};
  OptimalAssignmentSet gamma_star;
  OptimalAssignmentSet theta_star;
  double value{0.0};
  bool on_dispersal_surface{false};
  // False when an evader-team value relies on a pair with alpha > 1.
  bool certified{true};
  Assignment chosen;  // first member of theta_star
  std::vector<PairOutcome> per_pair;
  double penalty{0.0};
  double l_star{0.0};
  double l_bar_star{0.0};
};

/// min over evaders of a[i][gamma(i)].
double multiplayer_barrier(const PayoffMatrix& a, const Assignment& gamma);
double multiplayer_barrier(const Scenario& s, const Assignment& gamma);

/// Winner, barrier and gamma_star only; theta_star is left equal to gamma_star.
GameSolution classify(const Scenario& s);

GameSolution solve(const Scenario& s);

/// Region labels of the chosen pairs, fixed from the scenario's initial state.
std::vector<PairOutcome> plan_pairs(const Scenario& s, const Assignment& chosen);

struct Positions {
  std::vector<Vec3> evaders;
  std::vector<Vec3> pursuers;

  static Positions initial(const Scenario& s);
};

struct Frozen {
  std::vector<bool> evaders;
  std::vector<bool> pursuers;

  static Frozen none(const Scenario& s);
};

/// Velocities per player, same layout as Positions.
struct TeamControls {
  std::vector<Vec3> evaders;
  std::vector<Vec3> pursuers;
};

/// Optimal feedback controls at `x` under the fixed pair labels of `plan`.
/// Unmatched and frozen players stay put. Pairs with alpha > 1 both head
/// straight for the target; a player already at the target holds there.
TeamControls team_controls(const Scenario& s, const std::vector<PairOutcome>& plan,
                           const Positions& x, const Frozen& frozen);
TeamControls team_controls(const Scenario& s, const Assignment& chosen, const Positions& x,
                           const Frozen& frozen);

enum class EventType { Capture, Reach, GameOver };

const char* to_string(EventType t);

struct Event {
  EventType type{EventType::GameOver};
  double t{0.0};
  std::optional<std::size_t> evader;
  std::optional<std::size_t> pursuer;
  std::optional<Vec3> point;
};

/// Events triggered at `x` by players not yet frozen. Reach wins over Capture
/// for the same evader. GameOver is appended once every evader is resolved.
std::vector<Event> termination_check(const Positions& x, const std::vector<PairOutcome>& plan,
                                     const Frozen& frozen, double capture_radius,
                                     double target_radius, double t = 0.0);

}  // namespace radg
