#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "radg/assignment.hpp"
#include "radg/core.hpp"

namespace radg {

/// Ranges for random instances. Positions are uniform in the cube
/// [-half_width, half_width]^3.
struct RandomScenarioConfig {
  double half_width{15.0};
  double pursuer_speed_min{1.5};
  double pursuer_speed_max{2.5};
  double evader_speed_min{0.8};
  double evader_speed_max{2.0};
};

/// n pursuers, m evaders. Same seed, same scenario.
Scenario random_scenario(std::size_t n, std::size_t m, std::uint64_t seed,
                         const RandomScenarioConfig& cfg = {});

/// Seed of trial `trial` at size (n, m) derived from a base seed.
std::uint64_t trial_seed(std::uint64_t base, std::size_t n, std::size_t m, std::size_t trial);

struct BenchRow {
  std::size_t n{0};
  std::size_t m{0};
  std::optional<double> brute_seconds;  // empty when the cap is exceeded
  double lp_seconds{0.0};
  double build_seconds{0.0};
  std::size_t trials{0};
  // LP and brute force agreed on the optimum payoff in every timed trial.
  bool agree{true};
};

struct BenchOptions {
  std::vector<std::pair<std::size_t, std::size_t>> sizes;  // (n, m)
  std::size_t trials{5};
  std::uint64_t seed{1};
  std::uint64_t cap{kDefaultBruteForceCap};
  unsigned workers{0};  // 0: hardware concurrency
};

/// Mean wall-clock seconds per solver call over the trials of each size.
std::vector<BenchRow> run_bench(const BenchOptions& opt);

/// Parses "(3,3),(10,8)" or "3x3,10x8".
std::vector<std::pair<std::size_t, std::size_t>> parse_sizes(const std::string& text);

}  // namespace radg
