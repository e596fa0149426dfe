#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "radg/bench.hpp"
#include "radg/io.hpp"
#include "support.hpp"

using namespace radg;

namespace {

bool same(const Scenario& a, const Scenario& b) {
  auto eq = [](const std::vector<Player>& x, const std::vector<Player>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (x[k].id != y[k].id || x[k].role != y[k].role || !(x[k].position == y[k].position) ||
          x[k].speed != y[k].speed) {
        return false;
      }
    }
    return true;
  };
  return eq(a.evaders, b.evaders) && eq(a.pursuers, b.pursuers) && a.penalty == b.penalty &&
         a.capture_radius == b.capture_radius && a.target_radius == b.target_radius &&
         a.tie_tolerance == b.tie_tolerance && a.seed == b.seed;
}

std::string error_of(const std::string& text) {
  try {
    parse_scenario(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("fixtures load") {
  const Scenario s = example(2);
  CHECK(s.num_pursuers() == 3);
  CHECK(s.num_evaders() == 3);
  CHECK(s.evaders[2].position == Vec3{-6.73, -10.65, -12.49});
  CHECK(s.pursuers[1].speed == 2.23);
  CHECK(s.evaders[0].role == Role::Evader);
}

TEST_CASE("emit then parse is the identity") {
  for (int k : {2, 3, 4}) {
    const Scenario s = example(k);
    CHECK(same(parse_scenario(emit_scenario(s)), s));
  }
  Scenario r = random_scenario(5, 4, 99);
  r.penalty = 12.5;
  r.capture_radius = 1e-3;
  r.target_radius = 2e-3;
  r.tie_tolerance = 1e-7;
  CHECK(same(parse_scenario(emit_scenario(r)), r));
}

TEST_CASE("diagnostics name the key") {
  CHECK(error_of("{\"pursuers\": [], \"evaders\": [], \"bogus\": 1}").find("bogus") != std::string::npos);
  CHECK(error_of("{\"evaders\": []}").find("pursuers: missing") != std::string::npos);
  CHECK(error_of(R"({"pursuers": [{"position": [1, 2], "speed": 1}], "evaders": []})")
            .find("pursuers[0].position") != std::string::npos);
  CHECK(error_of(R"({"pursuers": [{"position": [1, 2, 3], "speed": "fast"}], "evaders": []})")
            .find("pursuers[0].speed") != std::string::npos);
  CHECK(error_of(R"({"pursuers": [], "evaders": [], "tolerances": {"capture": 1}})")
            .find("tolerances.capture") != std::string::npos);
  CHECK(error_of("{\"pursuers\": [,]}").find("line 1") != std::string::npos);
  CHECK_THROWS_AS(load_scenario("/nonexistent/file.json"), ParseError);
}

TEST_CASE("ids default to list position") {
  const Scenario s = parse_scenario(R"({"pursuers": [{"position": [1, 2, 3], "speed": 2}],
                                        "evaders": [{"position": [0, 1, 0], "speed": 1}]})");
  CHECK(s.pursuers[0].id == 1);
  CHECK(s.evaders[0].role == Role::Evader);
}

TEST_CASE("trajectory export") {
  const Scenario s = example(4);
  const GameSolution g = solve(s);
  const Trajectory t = simulate(s, g.chosen, StrategyProfile::optimal());
  const std::string csv = trajectory_csv(t);
  CHECK(csv.substr(0, csv.find('\n')) ==
        "t,P1.x,P1.y,P1.z,P2.x,P2.y,P2.z,P3.x,P3.y,P3.z,E1.x,E1.y,E1.z,E2.x,E2.y,E2.z");
  CHECK(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')) == t.times.size() + 1);

  const auto ev = events_to_json(t);
  REQUIRE(ev.size() == t.events.size());
  CHECK(ev[0]["type"] == "Capture");
  CHECK(ev[0]["i"].get<int>() >= 1);
  CHECK(ev[0]["point"].size() == 3);
  CHECK(ev.back()["type"] == "GameOver");
  CHECK(!ev.back().contains("i"));
}

TEST_CASE("solution report") {
  const auto j = solution_to_json(solve(example(4)));
  CHECK(j["winner"] == "PursuerTeam");
  CHECK(j["on_dispersal_surface"] == true);
  CHECK(j["gamma_star"]["assignments"].size() == 4);
  CHECK(j["per_pair"][0]["i"] == 1);
}

TEST_CASE("bench size lists") {
  const auto s = parse_sizes("(3,3),(10,8), (20,15)");
  REQUIRE(s.size() == 3);
  CHECK(s[1] == std::pair<std::size_t, std::size_t>{10, 8});
  CHECK(parse_sizes("12x10").front() == std::pair<std::size_t, std::size_t>{12, 10});
  CHECK_THROWS_AS(parse_sizes("(3,3),banana"), ParseError);
  CHECK_THROWS_AS(parse_sizes(""), ParseError);
}

TEST_CASE("random scenarios are seeded") {
  const Scenario a = random_scenario(4, 3, 42);
  CHECK(same(a, random_scenario(4, 3, 42)));
  CHECK(!same(a, random_scenario(4, 3, 43)));
  for (const Player& p : a.pursuers) {
    CHECK(p.speed >= 1.5);
    CHECK(p.speed <= 2.5);
    CHECK(std::abs(p.position.x) <= 15.0);
  }
  for (const Player& e : a.evaders) {
    CHECK(e.speed >= 0.8);
    CHECK(e.speed <= 2.0);
  }
  CHECK(trial_seed(1, 3, 3, 0) != trial_seed(1, 3, 3, 1));
  CHECK(trial_seed(1, 3, 3, 0) == trial_seed(1, 3, 3, 0));
}

TEST_CASE("bench rows") {
  BenchOptions opt;
  opt.sizes = {{1, 1}, {4, 3}, {12, 10}};
  opt.trials = 2;
  const auto rows = run_bench(opt);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].brute_seconds.has_value());
  CHECK(rows[0].agree);
  CHECK(rows[1].agree);
  CHECK(!rows[2].brute_seconds.has_value());
  opt.sizes = {{2, 3}};
  CHECK_THROWS_AS(run_bench(opt), InvalidScenario);
}
