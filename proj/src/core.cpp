#include "radg/core.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>
#include <sstream>

namespace radg {

SpeedRatio speed_ratio(double evader_speed, double pursuer_speed) {
  if (!(evader_speed > 0.0) || !(pursuer_speed > 0.0) || !std::isfinite(evader_speed) ||
      !std::isfinite(pursuer_speed)) {
    throw InvalidScenario("speed must be positive and finite");
  }
  return SpeedRatio{evader_speed / pursuer_speed};
}

SpeedRatio speed_ratio(const Player& evader, const Player& pursuer) {
  return speed_ratio(evader.speed, pursuer.speed);
}

namespace {

void check_players(const std::vector<Player>& players, const char* team,
                   std::vector<std::string>& errors) {
  std::set<int> ids;
  for (std::size_t k = 0; k < players.size(); ++k) {
    const Player& p = players[k];
    std::ostringstream where;
    where << team << '[' << k + 1 << "] (id " << p.id << ")";
    if (!(p.speed > 0.0) || !std::isfinite(p.speed)) {
      errors.push_back(where.str() + ": speed must be positive");
    }
    if (!is_finite(p.position)) {
      errors.push_back(where.str() + ": position must be finite");
    }
    if (!ids.insert(p.id).second) {
      errors.push_back(where.str() + ": duplicate id");
    }
  }
}

}  // namespace

std::vector<std::string> validate_scenario(const Scenario& s) {
  std::vector<std::string> errors;
  if (s.evaders.empty()) errors.emplace_back("at least one evader required (m >= 1)");
  if (s.pursuers.size() < s.evaders.size()) {
    errors.emplace_back("n >= m violated: " + std::to_string(s.pursuers.size()) +
                        " pursuers for " + std::to_string(s.evaders.size()) + " evaders");
  }
  check_players(s.evaders, "evader", errors);
  check_players(s.pursuers, "pursuer", errors);
  for (const Player& p : s.evaders) {
    if (p.role != Role::Evader) errors.emplace_back("evader list holds a pursuer");
  }
  for (const Player& p : s.pursuers) {
    if (p.role != Role::Pursuer) errors.emplace_back("pursuer list holds an evader");
  }
  if (s.penalty && (!(*s.penalty > 0.0) || !std::isfinite(*s.penalty))) {
    errors.emplace_back("penalty_L must be positive");
  }
  if (s.capture_radius && (!(*s.capture_radius >= 0.0) || !std::isfinite(*s.capture_radius))) {
    errors.emplace_back("capture_radius must be non-negative");
  }
  if (s.target_radius && (!(*s.target_radius >= 0.0) || !std::isfinite(*s.target_radius))) {
    errors.emplace_back("target_radius must be non-negative");
  }
  if (!(s.tie_tolerance > 0.0) || !std::isfinite(s.tie_tolerance)) {
    errors.emplace_back("tie_tolerance must be positive");
  }
  return errors;
}

void require_valid(const Scenario& s) {
  const auto errors = validate_scenario(s);
  if (errors.empty()) return;
  std::string msg = "invalid scenario:";
  for (const auto& e : errors) msg += "\n  " + e;
  throw InvalidScenario(msg);
}

double max_initial_distance(const Scenario& s) {
  std::vector<Vec3> points{Vec3{}};
  for (const auto& p : s.evaders) points.push_back(p.position);
  for (const auto& p : s.pursuers) points.push_back(p.position);
  double best = 0.0;
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      best = std::max(best, distance(points[a], points[b]));
    }
  }
  return best;
}

double effective_capture_radius(const Scenario& s) {
  return s.capture_radius ? *s.capture_radius : 1e-6 * max_initial_distance(s);
}

double effective_target_radius(const Scenario& s) {
  return s.target_radius ? *s.target_radius : effective_capture_radius(s);
}

Assignment::Assignment(std::vector<std::size_t> pursuer_of_evader, std::size_t num_pursuers)
    : pursuer_of_evader_(std::move(pursuer_of_evader)), num_pursuers_(num_pursuers) {
  if (pursuer_of_evader_.size() > num_pursuers_) {
    throw InvalidScenario("assignment has more evaders than pursuers");
  }
  std::vector<bool> used(num_pursuers_, false);
  for (std::size_t j : pursuer_of_evader_) {
    if (j >= num_pursuers_) throw InvalidScenario("assignment references unknown pursuer");
    if (used[j]) throw InvalidScenario("pursuer assigned to more than one evader");
    used[j] = true;
  }
}

Assignment Assignment::from_pairs(const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                                  std::size_t num_evaders, std::size_t num_pursuers) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> of(num_evaders, kUnset);
  for (const auto& [i, j] : pairs) {
    if (i >= num_evaders) throw InvalidScenario("assignment references unknown evader");
    if (of[i] != kUnset) throw InvalidScenario("evader assigned more than once");
    of[i] = j;
  }
  if (std::find(of.begin(), of.end(), kUnset) != of.end()) {
    throw InvalidScenario("every evader must be assigned exactly once");
  }
  return Assignment(std::move(of), num_pursuers);
}

std::optional<std::size_t> Assignment::evader_of(std::size_t pursuer) const {
  for (std::size_t i = 0; i < pursuer_of_evader_.size(); ++i) {
    if (pursuer_of_evader_[i] == pursuer) return i;
  }
  return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> Assignment::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(pursuer_of_evader_.size());
  for (std::size_t i = 0; i < pursuer_of_evader_.size(); ++i) {
    out.emplace_back(i, pursuer_of_evader_[i]);
  }
  return out;
}

std::string to_string(const Assignment& a) {
  const bool compact = a.num_evaders() <= 9 && a.num_pursuers() <= 9;
  std::string out = "{";
  for (std::size_t i = 0; i < a.num_evaders(); ++i) {
    if (i) out += ',';
    out += std::to_string(i + 1);
    if (!compact) out += '-';
    out += std::to_string(a.pursuer_of(i) + 1);
  }
  return out + "}";
}

Assignment parse_assignment(const std::string& text, std::size_t num_evaders,
                            std::size_t num_pursuers) {
  std::string body;
  for (char c : text) {
    if (c != '{' && c != '}' && !std::isspace(static_cast<unsigned char>(c))) body += c;
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t i = 0;
    std::size_t j = 0;
    try {
      if (const auto dash = item.find('-'); dash != std::string::npos) {
        i = std::stoul(item.substr(0, dash));
        j = std::stoul(item.substr(dash + 1));
      } else if (item.size() == 2 && std::isdigit(static_cast<unsigned char>(item[0])) &&
                 std::isdigit(static_cast<unsigned char>(item[1]))) {
        i = static_cast<std::size_t>(item[0] - '0');
        j = static_cast<std::size_t>(item[1] - '0');
      } else {
        throw ParseError("bad assignment pair '" + item + "'");
      }
    } catch (const std::logic_error&) {
      throw ParseError("bad assignment pair '" + item + "'");
    }
    if (i == 0 || j == 0) throw ParseError("assignment indices are 1-based");
    pairs.emplace_back(i - 1, j - 1);
  }
  return Assignment::from_pairs(pairs, num_evaders, num_pursuers);
}

}  // namespace radg
