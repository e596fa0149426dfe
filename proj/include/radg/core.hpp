#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "radg/errors.hpp"
#include "radg/vec3.hpp"

namespace radg {

enum class Role { Pursuer, Evader };

struct Player {
  int id{0};  // 1-based in all user-facing output
  Role role{Role::Pursuer};
  Vec3 position;
  double speed{1.0};
};

/// One game instance. The target sits at the origin.
///
/// Optional fields are resolved from the instance itself when absent:
/// the capture and target radii scale with the initial spread of the players,
/// and the penalty is chosen large enough for both assignment guarantees
/// (see `resolved_penalty` in assignment.hpp).
struct Scenario {
  std::vector<Player> evaders;
  std::vector<Player> pursuers;
  std::optional<double> penalty;
  std::optional<double> capture_radius;
  std::optional<double> target_radius;
  double tie_tolerance{1e-9};
  std::optional<unsigned long long> seed;

  std::size_t num_evaders() const { return evaders.size(); }
  std::size_t num_pursuers() const { return pursuers.size(); }
};

/// alpha = U_i / V_j, evader speed over pursuer speed.
struct SpeedRatio {
  double value{1.0};

  constexpr bool operator==(const SpeedRatio&) const = default;
};

inline constexpr double kEqualSpeedTolerance = 1e-9;

inline bool is_equal_speed(SpeedRatio a) {
  return a.value > 1.0 - kEqualSpeedTolerance && a.value < 1.0 + kEqualSpeedTolerance;
}
inline bool is_supported(SpeedRatio a) { return a.value < 1.0 + kEqualSpeedTolerance; }

SpeedRatio speed_ratio(const Player& evader, const Player& pursuer);
SpeedRatio speed_ratio(double evader_speed, double pursuer_speed);

/// Empty result means the scenario is valid. Never throws.
std::vector<std::string> validate_scenario(const Scenario& s);

/// Throws InvalidScenario listing every violation.
void require_valid(const Scenario& s);

/// Largest distance between any two of: the players' initial positions and the target.
double max_initial_distance(const Scenario& s);

double effective_capture_radius(const Scenario& s);
double effective_target_radius(const Scenario& s);

/// A feasible matching: every evader has exactly one pursuer, every pursuer
/// at most one evader. Indices are 0-based positions in the scenario lists.
class Assignment {
 public:
  Assignment() = default;

  /// `pursuer_of_evader[i]` is the pursuer index matched to evader i.
  Assignment(std::vector<std::size_t> pursuer_of_evader, std::size_t num_pursuers);

  static Assignment from_pairs(const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                               std::size_t num_evaders, std::size_t num_pursuers);

  std::size_t num_evaders() const { return pursuer_of_evader_.size(); }
  std::size_t num_pursuers() const { return num_pursuers_; }
  std::size_t pursuer_of(std::size_t evader) const { return pursuer_of_evader_.at(evader); }
  const std::vector<std::size_t>& pursuer_of_evader() const { return pursuer_of_evader_; }

  /// Evader matched to the pursuer, if any.
  std::optional<std::size_t> evader_of(std::size_t pursuer) const;

  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  bool operator==(const Assignment&) const = default;
  auto operator<=>(const Assignment& o) const { return pursuer_of_evader_ <=> o.pursuer_of_evader_; }

 private:
  std::vector<std::size_t> pursuer_of_evader_;
  std::size_t num_pursuers_{0};
};

/// "{12,21,33}" style: evader index then pursuer index, both 1-based.
/// Falls back to "{1-2,2-1}" once any index exceeds 9.
std::string to_string(const Assignment& a);

/// Accepts both forms produced by `to_string`, with or without braces.
Assignment parse_assignment(const std::string& text, std::size_t num_evaders,
                            std::size_t num_pursuers);

}  // namespace radg
