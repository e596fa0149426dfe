#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "radg/bench.hpp"
#include "radg/game.hpp"
#include "support.hpp"

using namespace radg;

TEST_CASE("Example 2: pursuers win") {
  const Scenario s = example(2);
  const GameSolution g = solve(s);
  CHECK(g.winner == Team::PursuerTeam);
  CHECK(g.barrier_value > 0.0);
  CHECK(g.certified);
  CHECK(!g.on_dispersal_surface);
  CHECK(g.value == doctest::Approx(17.488).epsilon(1e-4));
  double sum = 0.0;
  for (const PairOutcome& p : g.per_pair) {
    CHECK(p.region == Region::PursuerWins);
    sum += p.value;
  }
  CHECK(sum == doctest::Approx(g.value));
  CHECK(classify(s).winner == Team::PursuerTeam);

  // Any assignment with the alpha > 1 pair (E3, P1) sits at or below -L.
  const Assignment bad({1, 2, 0}, 3);
  CHECK(multiplayer_barrier(s, bad) <= -g.penalty);
}

TEST_CASE("Example 3: evaders win, refinement picks one assignment") {
  const Scenario s = example(3);
  const GameSolution g = solve(s);
  CHECK(g.winner == Team::EvaderTeam);
  CHECK(g.barrier_value <= 0.0);
  CHECK(g.gamma_star.assignments.size() == 2);
  REQUIRE(g.theta_star.assignments.size() == 1);
  CHECK(g.chosen == g.theta_star.assignments[0]);
  for (const Assignment& a : g.gamma_star.assignments) CHECK(multiplayer_barrier(s, a) <= 0.0);
  // The refined member still pairs E3 with a faster evader-side opponent.
  CHECK(!g.certified);
  CHECK(!g.on_dispersal_surface);
  CHECK(g.value == doctest::Approx(g.theta_star.team_payoff));
}

TEST_CASE("Example 4: dispersal surface") {
  const GameSolution g = solve(example(4));
  CHECK(g.winner == Team::PursuerTeam);
  CHECK(g.on_dispersal_surface);
  REQUIRE(g.gamma_star.assignments.size() == 4);
  std::set<std::string> labels;
  for (const Assignment& a : g.gamma_star.assignments) labels.insert(to_string(a));
  CHECK(labels == std::set<std::string>{"{13,21}", "{12,21}", "{11,23}", "{11,22}"});
  CHECK(g.value == doctest::Approx(1.5398).epsilon(1e-4));
  CHECK(g.theta_star.assignments == g.gamma_star.assignments);
}

TEST_CASE("single evader on the target loses immediately") {
  Scenario s;
  s.evaders.push_back(evader(1, {0, 0, 0}, 1.0));
  s.pursuers.push_back(pursuer(1, {1, 2, 3}, 2.0));
  const GameSolution g = solve(s);
  CHECK(g.winner == Team::EvaderTeam);
  CHECK(g.value == doctest::Approx(-norm(Vec3{1, 2, 3})));
}

TEST_CASE("winner is the same for every member of Gamma*") {
  // Mirror the evaders through a plane of the pursuers' symmetry to create ties.
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Scenario s = random_scenario(2, 1, seed);
    s.pursuers[1].position = Vec3{-s.pursuers[0].position.x, s.pursuers[0].position.y, s.pursuers[0].position.z};
    s.pursuers[1].speed = s.pursuers[0].speed;
    s.evaders[0].position.x = 0.0;
    const GameSolution g = solve(s);
    CHECK(g.gamma_star.assignments.size() == 2);
    std::set<bool> signs;
    for (const Assignment& a : g.gamma_star.assignments) signs.insert(multiplayer_barrier(s, a) > 0.0);
    CHECK(signs.size() == 1);
  }
}

TEST_CASE("team controls at t = 0") {
  const Scenario s = example(2);
  const GameSolution g = solve(s);
  const Positions x = Positions::initial(s);
  const TeamControls u = team_controls(s, g.chosen, x, Frozen::none(s));
  for (const PairOutcome& p : g.per_pair) {
    const Vec3 xe = x.evaders[p.evader];
    const Vec3 xp = x.pursuers[p.pursuer];
    const Vec3 i = closest_point_to_origin(apollonius_locus(xe, xp, p.alpha)).point;
    const Vec3 v = u.pursuers[p.pursuer];
    CHECK(norm(cross(v, i - xp)) / (norm(v) * norm(i - xp)) < 1e-9);
    CHECK(dot(v, i - xp) > 0.0);
    CHECK(norm(v) == doctest::Approx(s.pursuers[p.pursuer].speed));
  }

  // Evader-region pair: straight for the target.
  const Scenario r = example(3);
  const GameSolution gr = solve(r);
  const Positions xr = Positions::initial(r);
  const TeamControls ur = team_controls(r, gr.chosen, xr, Frozen::none(r));
  for (const PairOutcome& p : gr.per_pair) {
    if (p.region != Region::EvaderWins) continue;
    const Vec3 expect = -r.evaders[p.evader].speed / norm(xr.evaders[p.evader]) * xr.evaders[p.evader];
    CHECK(norm(ur.evaders[p.evader] - expect) < 1e-12);
  }

  Frozen f = Frozen::none(s);
  f.evaders[0] = true;
  f.pursuers[g.chosen.pursuer_of(0)] = true;
  const TeamControls uf = team_controls(s, g.chosen, x, f);
  CHECK(norm(uf.evaders[0]) == 0.0);
  CHECK(norm(uf.pursuers[g.chosen.pursuer_of(0)]) == 0.0);
}

TEST_CASE("unmatched pursuers hold") {
  Scenario s = example(4);
  const GameSolution g = solve(s);
  const TeamControls u = team_controls(s, g.chosen, Positions::initial(s), Frozen::none(s));
  std::size_t idle = 0;
  for (std::size_t j = 0; j < 3; ++j) {
    if (!g.chosen.evader_of(j)) {
      CHECK(norm(u.pursuers[j]) == 0.0);
      ++idle;
    }
  }
  CHECK(idle == 1);
}

TEST_CASE("termination check") {
  const std::vector<PairOutcome> plan{{0, 0, SpeedRatio{0.5}, PairKind::Capture, Region::PursuerWins, 1.0}};
  const Frozen none{{false}, {false}};

  auto ev = termination_check({{{1, 2, 3}}, {{1, 2, 3}}}, plan, none, 1e-6, 1e-6);
  REQUIRE(ev.size() == 2);
  CHECK(ev[0].type == EventType::Capture);
  CHECK(ev[1].type == EventType::GameOver);

  ev = termination_check({{{0, 0, 0}}, {{0, 0, 0}}}, plan, none, 1e-6, 1e-6);
  REQUIRE(ev.size() == 2);
  CHECK(ev[0].type == EventType::Reach);

  CHECK(termination_check({{{1, 0, 0}}, {{3, 0, 0}}}, plan, none, 1e-6, 1e-6).empty());

  const Frozen done{{true}, {true}};
  CHECK(termination_check({{{0, 0, 0}}, {{0, 0, 0}}}, plan, done, 1e-6, 1e-6).empty());
}
