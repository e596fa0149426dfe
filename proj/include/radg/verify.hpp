#pragma once

#include <string>
#include <vector>

#include "radg/core.hpp"
#include "radg/duel.hpp"

namespace radg {

struct PropertyResult {
  std::string name;
  bool passed{true};
  double worst{0.0};  // largest residual seen
  double tolerance{0.0};
  std::size_t checked{0};
  std::size_t skipped{0};  // degenerate cases, not failures
  std::string note;
};

/// Central finite differences of value_in_region(s, region) in the evader
/// and pursuer positions, step h per coordinate.
struct FdGradient {
  Vec3 evader;
  Vec3 pursuer;
};
FdGradient fd_gradient(const DuelState& s, Region region, double h);

/// Runs the property suite over every scenario:
///   hji_residual, gradient_fd, locus_sampling   per supported pair
///   lp_vs_brute, equal_loss_count, barrier_invariance, theta_subset
///                                               per scenario
std::vector<PropertyResult> verify_scenarios(const std::vector<Scenario>& scenarios);

bool all_passed(const std::vector<PropertyResult>& results);

}  // namespace radg
