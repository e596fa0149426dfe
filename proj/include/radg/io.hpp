#pragma once

#include <string>

#include <json.hpp>

#include "radg/core.hpp"
#include "radg/game.hpp"
#include "radg/sim.hpp"

namespace radg {

/// Scenario document:
///   { "pursuers": [{"id": 1, "position": [x, y, z], "speed": v}, ...],
///     "evaders":  [...],
///     "penalty_L": L,                                   (optional)
///     "tolerances": {"capture_radius": r, "target_radius": r,
///                    "tie_tolerance": t},               (optional, each optional)
///     "seed": k }                                       (optional)
/// Unknown keys are rejected. Errors name the offending key path.
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);

nlohmann::json scenario_to_json(const Scenario& s);
std::string emit_scenario(const Scenario& s);

nlohmann::json to_json(const Assignment& a);
nlohmann::json to_json(const OptimalAssignmentSet& set);
nlohmann::json solution_to_json(const GameSolution& g);

/// Header `t,P1.x,P1.y,P1.z,...,E1.x,...` and one row per sample.
std::string trajectory_csv(const Trajectory& traj);

/// List of {type, t, i, j?, point?} with 1-based indices.
nlohmann::json events_to_json(const Trajectory& traj);

}  // namespace radg
