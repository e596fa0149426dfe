#include "radg/io.hpp"

#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

namespace radg {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

void reject_unknown(const json& obj, const std::string& path, const std::set<std::string>& known) {
  for (const auto& [key, _] : obj.items()) {
    if (!known.contains(key)) fail(path.empty() ? key : path + "." + key, "unknown key");
  }
}

double number(const json& v, const std::string& path) {
  if (!v.is_number()) fail(path, "expected a number");
  return v.get<double>();
}

Vec3 vec3(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 3) fail(path, "expected an array of 3 numbers");
  return {number(v[0], path + "[0]"), number(v[1], path + "[1]"), number(v[2], path + "[2]")};
}

std::vector<Player> players(const json& doc, const std::string& key, Role role) {
  if (!doc.contains(key)) fail(key, "missing");
  const json& list = doc.at(key);
  if (!list.is_array()) fail(key, "expected an array of players");
  std::vector<Player> out;
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string path = key + "[" + std::to_string(k) + "]";
    const json& p = list[k];
    if (!p.is_object()) fail(path, "expected an object");
    reject_unknown(p, path, {"id", "position", "speed"});
    Player player;
    player.role = role;
    player.id = static_cast<int>(k + 1);
    if (p.contains("id")) {
      if (!p["id"].is_number_integer()) fail(path + ".id", "expected an integer");
      player.id = p["id"].get<int>();
    }
    if (!p.contains("position")) fail(path + ".position", "missing");
    player.position = vec3(p["position"], path + ".position");
    if (!p.contains("speed")) fail(path + ".speed", "missing");
    player.speed = number(p["speed"], path + ".speed");
    out.push_back(player);
  }
  return out;
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("top level must be an object");
  reject_unknown(doc, "", {"pursuers", "evaders", "penalty_L", "tolerances", "seed"});

  Scenario s;
  s.pursuers = players(doc, "pursuers", Role::Pursuer);
  s.evaders = players(doc, "evaders", Role::Evader);
  if (doc.contains("penalty_L")) s.penalty = number(doc["penalty_L"], "penalty_L");
  if (doc.contains("tolerances")) {
    const json& t = doc["tolerances"];
    if (!t.is_object()) fail("tolerances", "expected an object");
    reject_unknown(t, "tolerances", {"capture_radius", "target_radius", "tie_tolerance"});
    if (t.contains("capture_radius")) {
      s.capture_radius = number(t["capture_radius"], "tolerances.capture_radius");
    }
    if (t.contains("target_radius")) {
      s.target_radius = number(t["target_radius"], "tolerances.target_radius");
    }
    if (t.contains("tie_tolerance")) {
      s.tie_tolerance = number(t["tie_tolerance"], "tolerances.tie_tolerance");
    }
  }
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) fail("seed", "expected a non-negative integer");
    s.seed = doc["seed"].get<unsigned long long>();
  }
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_scenario(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

json scenario_to_json(const Scenario& s) {
  auto team = [](const std::vector<Player>& ps) {
    json list = json::array();
    for (const Player& p : ps) {
      list.push_back({{"id", p.id},
                      {"position", {p.position.x, p.position.y, p.position.z}},
                      {"speed", p.speed}});
    }
    return list;
  };
  json doc = {{"pursuers", team(s.pursuers)}, {"evaders", team(s.evaders)}};
  if (s.penalty) doc["penalty_L"] = *s.penalty;
  json tol = {{"tie_tolerance", s.tie_tolerance}};
  if (s.capture_radius) tol["capture_radius"] = *s.capture_radius;
  if (s.target_radius) tol["target_radius"] = *s.target_radius;
  doc["tolerances"] = tol;
  if (s.seed) doc["seed"] = *s.seed;
  return doc;
}

std::string emit_scenario(const Scenario& s) { return scenario_to_json(s).dump(2) + "\n"; }

json to_json(const Assignment& a) {
  json pairs = json::array();
  for (const auto& [i, j] : a.pairs()) pairs.push_back({i + 1, j + 1});
  return {{"label", to_string(a)}, {"pairs", pairs}};
}

json to_json(const OptimalAssignmentSet& set) {
  json list = json::array();
  for (const Assignment& a : set.assignments) list.push_back(to_json(a));
  return {{"assignments", list}, {"team_payoff", set.team_payoff}};
}

json solution_to_json(const GameSolution& g) {
  json pairs = json::array();
  for (const PairOutcome& p : g.per_pair) {
    const char* kind = p.kind == PairKind::Capture ? "capture"
                       : p.kind == PairKind::Race  ? "race"
                                                   : "unsupported";
    pairs.push_back({{"i", p.evader + 1},
                     {"j", p.pursuer + 1},
                     {"alpha", p.alpha.value},
                     {"kind", kind},
                     {"region", to_string(p.region)},
                     {"value", p.value}});
  }
  return {{"winner", to_string(g.winner)},
          {"barrier_value", g.barrier_value},
          {"gamma_star", to_json(g.gamma_star)},
          {"theta_star", to_json(g.theta_star)},
          {"chosen", to_json(g.chosen)},
          {"value", g.value},
          {"certified", g.certified},
          {"on_dispersal_surface", g.on_dispersal_surface},
          {"penalty_L", g.penalty},
          {"L_star", g.l_star},
          {"L_bar_star", g.l_bar_star},
          {"per_pair", pairs}};
}

std::string trajectory_csv(const Trajectory& traj) {
  std::ostringstream out;
  out << std::setprecision(17);
  out << 't';
  if (!traj.positions.empty()) {
    const Positions& first = traj.positions.front();
    for (std::size_t j = 0; j < first.pursuers.size(); ++j) {
      out << ",P" << j + 1 << ".x,P" << j + 1 << ".y,P" << j + 1 << ".z";
    }
    for (std::size_t i = 0; i < first.evaders.size(); ++i) {
      out << ",E" << i + 1 << ".x,E" << i + 1 << ".y,E" << i + 1 << ".z";
    }
  }
  out << '\n';
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    out << traj.times[k];
    for (const Vec3& p : traj.positions[k].pursuers) out << ',' << p.x << ',' << p.y << ',' << p.z;
    for (const Vec3& e : traj.positions[k].evaders) out << ',' << e.x << ',' << e.y << ',' << e.z;
    out << '\n';
  }
  return out.str();
}

json events_to_json(const Trajectory& traj) {
  json list = json::array();
  for (const Event& e : traj.events) {
    json item = {{"type", to_string(e.type)}, {"t", e.t}};
    if (e.evader) item["i"] = *e.evader + 1;
    if (e.pursuer) item["j"] = *e.pursuer + 1;
    if (e.point) item["point"] = {e.point->x, e.point->y, e.point->z};
    list.push_back(item);
  }
  return list;
}

}  // namespace radg
