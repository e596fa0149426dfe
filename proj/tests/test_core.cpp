#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "radg/core.hpp"
#include "support.hpp"

using namespace radg;

TEST_CASE("speed ratio") {
  CHECK(speed_ratio(1.0, 2.0).value == 0.5);
  CHECK(speed_ratio(1.69, 2.28).value == doctest::Approx(0.7412).epsilon(1e-4));
  CHECK(speed_ratio(1.3, 1.3).value == 1.0);
  CHECK(is_equal_speed(speed_ratio(1.3, 1.3)));
  CHECK_THROWS_AS(speed_ratio(0.0, 1.0), InvalidScenario);
  CHECK_THROWS_AS(speed_ratio(1.0, -2.0), InvalidScenario);
}

TEST_CASE("validate_scenario") {
  Scenario ok = example(2);
  CHECK(validate_scenario(ok).empty());

  Scenario short_team = ok;
  short_team.pursuers.pop_back();
  short_team.evaders.push_back(evader(4, {1, 1, 1}, 1.0));
  const auto errs = validate_scenario(short_team);
  REQUIRE(!errs.empty());
  CHECK(errs.front().find("n >= m violated") != std::string::npos);

  Scenario stopped = ok;
  stopped.evaders[1].speed = 0.0;
  const auto errs2 = validate_scenario(stopped);
  REQUIRE(errs2.size() == 1);
  CHECK(errs2[0].find("speed must be positive") != std::string::npos);

  Scenario dup = ok;
  dup.pursuers[2].id = 1;
  dup.penalty = -1.0;
  CHECK(validate_scenario(dup).size() == 2);
  CHECK_THROWS_AS(require_valid(dup), InvalidScenario);

  Scenario empty;
  empty.pursuers.push_back(pursuer(1, {0, 0, 1}, 1.0));
  CHECK(!validate_scenario(empty).empty());
}

TEST_CASE("default radii scale with the instance") {
  Scenario s;
  s.evaders.push_back(evader(1, {3, 4, 0}, 1.0));
  s.pursuers.push_back(pursuer(1, {-3, -4, 0}, 2.0));
  CHECK(max_initial_distance(s) == doctest::Approx(10.0));
  CHECK(effective_capture_radius(s) == doctest::Approx(1e-5));
  CHECK(effective_target_radius(s) == doctest::Approx(1e-5));
  s.capture_radius = 0.1;
  CHECK(effective_target_radius(s) == doctest::Approx(0.1));
  s.target_radius = 0.2;
  CHECK(effective_target_radius(s) == doctest::Approx(0.2));

  // The target takes part in the spread even when every player sits on one side.
  Scenario far;
  far.evaders.push_back(evader(1, {10, 0, 0}, 1.0));
  far.pursuers.push_back(pursuer(1, {11, 0, 0}, 2.0));
  CHECK(max_initial_distance(far) == doctest::Approx(11.0));
}

TEST_CASE("assignment invariants") {
  const Assignment a({1, 0, 2}, 3);
  CHECK(a.pursuer_of(0) == 1);
  CHECK(a.evader_of(0) == 1u);
  CHECK(!Assignment({0}, 2).evader_of(1).has_value());
  CHECK(to_string(a) == "{12,21,33}");
  CHECK_THROWS_AS(Assignment({0, 0}, 3), InvalidScenario);
  CHECK_THROWS_AS(Assignment({0, 3}, 3), InvalidScenario);
  CHECK_THROWS_AS(Assignment({0, 1, 2}, 2), InvalidScenario);
  CHECK_THROWS_AS(Assignment::from_pairs({{0, 1}, {0, 2}}, 2, 3), InvalidScenario);
  CHECK_THROWS_AS(Assignment::from_pairs({{0, 1}}, 2, 3), InvalidScenario);
  CHECK(Assignment::from_pairs({{1, 0}, {0, 1}, {2, 2}}, 3, 3) == a);
}

TEST_CASE("assignment text round trip") {
  CHECK(parse_assignment("{21,12,33}", 3, 3) == Assignment({1, 0, 2}, 3));
  CHECK(parse_assignment("13, 21", 2, 3) == Assignment({2, 0}, 3));

  std::vector<std::size_t> big(11);
  for (std::size_t i = 0; i < big.size(); ++i) big[i] = big.size() - i;
  const Assignment wide(big, 12);
  const std::string text = to_string(wide);
  CHECK(text.substr(0, 6) == "{1-12,");
  CHECK(parse_assignment(text, 11, 12) == wide);

  CHECK_THROWS_AS(parse_assignment("{1x}", 1, 1), ParseError);
  CHECK_THROWS_AS(parse_assignment("{01}", 1, 1), ParseError);
  CHECK_THROWS_AS(parse_assignment("{11,21}", 2, 2), InvalidScenario);
}
