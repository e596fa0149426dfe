#pragma once

#include <string>

#include "radg/io.hpp"

inline radg::Scenario example(int k) {
  return radg::load_scenario(std::string(RADG_SCENARIOS) + "/ex" + std::to_string(k) + ".json");
}

inline radg::Player evader(int id, radg::Vec3 x, double speed) {
  return radg::Player{id, radg::Role::Evader, x, speed};
}

inline radg::Player pursuer(int id, radg::Vec3 x, double speed) {
  return radg::Player{id, radg::Role::Pursuer, x, speed};
}
