#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "radg/duel.hpp"
#include "radg/verify.hpp"

using namespace radg;

namespace {

// Random well-conditioned states in the requested region.
std::vector<DuelState> random_states(Region want, std::size_t count, unsigned seed, bool equal_speed = false) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-10.0, 10.0);
  std::uniform_real_distribution<double> ratio(0.1, 0.98);
  std::vector<DuelState> out;
  while (out.size() < count) {
    DuelState s{{coord(rng), coord(rng), coord(rng)}, {coord(rng), coord(rng), coord(rng)}, 1.0, 1.0};
    s.pursuer_speed = 2.0;
    s.evader_speed = equal_speed ? 2.0 : 2.0 * ratio(rng);
    if (distance(s.evader, s.pursuer) < 0.5 || norm(s.pursuer) < 0.5 || norm(s.evader) < 0.5) continue;
    if (classify_1v1(s) != want) continue;
    // Keep clear of the barrier, where the pursuer-region value vanishes.
    if (want == Region::PursuerWins && value_in_region(s, want) < 0.05) continue;
    out.push_back(s);
  }
  return out;
}

double rel(const Vec3& a, const Vec3& b) { return norm(a - b) / std::max(norm(b), 1e-12); }

}  // namespace

TEST_CASE("barrier") {
  CHECK(barrier_1v1({{0, 0, 2}, {0, 0, 1}, 1, 1}) == doctest::Approx(3.0));
  CHECK(barrier_1v1({{0, 0, 1}, {0, 0, 3}, 0.5, 1}) == doctest::Approx(-1.25));
  CHECK(barrier_1v1({{0, 0, 0}, {0, 0, 3}, 0.5, 1}) <= 0.0);
  CHECK(classify_1v1({{0, 0, 0}, {0, 0, 3}, 0.5, 1}) == Region::EvaderWins);
  // B = 0 belongs to the evader: R_E = 1, alpha R_P = 0.5 * 2.
  CHECK(classify_1v1({{0, 0, 1}, {0, 2, 0}, 0.5, 1}) == Region::EvaderWins);
}

TEST_CASE("pursuer-region value") {
  const DuelValue v = value_pursuer_region({{0, 0, 1}, {0, 0, -1}, 0.5, 1});
  CHECK(v.region == Region::PursuerWins);
  CHECK(v.value == doctest::Approx(1.0 / 3.0));

  const DuelValue eq = value_pursuer_region({{0, 0, 2}, {0, 0, 1}, 1, 1});
  CHECK(eq.value == doctest::Approx(1.5));

  // Example 2 pair (E2, P1): value equals the nearest sampled locus point.
  const DuelState s{{-8.07, 2.73, -5.91}, {-6.77, -2.95, 0.01}, 1.01, 1.71};
  const double value = value_pursuer_region(s).value;
  double nearest = 1e300;
  for (const Vec3& x : sample_locus(apollonius_locus(s.evader, s.pursuer, s.alpha()), 200000)) {
    nearest = std::min(nearest, norm(x));
  }
  CHECK(value == doctest::Approx(nearest).epsilon(1e-4));
  CHECK(value == doctest::Approx(6.345).epsilon(1e-3));

  CHECK_THROWS_AS(value_pursuer_region({{0, 0, 1}, {0, 0, 3}, 0.5, 1}), RegionMismatch);
  CHECK_THROWS_AS(value_pursuer_region({{0, 0, 5}, {0, 0, 1}, 1.5, 1}), UnsupportedRegime);
  CHECK_THROWS_AS(value_pursuer_region({{0, 0, 5}, {0, 0, 5}, 0.5, 1}), DegenerateGeometry);
}

TEST_CASE("evader-region value") {
  const DuelValue v = value_evader_region({{0, 0, 1}, {0, 0, 3}, 0.5, 1});
  CHECK(v.value == doctest::Approx(-1.0));
  CHECK(v.region == Region::EvaderWins);
  CHECK(value_evader_region({{0, 0, 0}, {0, 4, 3}, 0.5, 1}).value == doctest::Approx(-5.0));
  // Pursuer on the target always wins, so the region check fires first.
  CHECK_THROWS_AS(value_evader_region({{0, 0, 1}, {0, 0, 0}, 0.5, 1}), RegionMismatch);
  // The value itself stays defined with the pursuer on the target.
  CHECK(value_in_region({{0, 0, 1}, {0, 0, 0}, 0.5, 1}, Region::EvaderWins) == doctest::Approx(2.0));
  CHECK_THROWS_AS(value_evader_region({{0, 0, 5}, {0, 0, 1}, 0.5, 1}), RegionMismatch);
}

TEST_CASE("duel_value dispatches on the barrier and keeps the sign invariant") {
  for (Region r : {Region::PursuerWins, Region::EvaderWins}) {
    for (const DuelState& s : random_states(r, 200, 3)) {
      const DuelValue v = duel_value(s);
      CHECK(v.region == r);
      if (r == Region::PursuerWins) {
        CHECK(v.value > 0.0);
      } else {
        CHECK(v.value <= 0.0);
      }
    }
  }
}

TEST_CASE("HJI residual vanishes in both regions") {
  for (Region r : {Region::PursuerWins, Region::EvaderWins}) {
    double worst = 0.0;
    for (const DuelState& s : random_states(r, 1000, 11)) {
      worst = std::max(worst, std::abs(hji_residual(duel_value(s), s.alpha())));
    }
    CHECK(worst < 1e-9);
  }
  double worst = 0.0;
  for (const DuelState& s : random_states(Region::PursuerWins, 300, 12, true)) {
    worst = std::max(worst, std::abs(hji_residual(duel_value(s), s.alpha())));
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("analytic gradients match central differences") {
  for (bool equal : {false, true}) {
    for (Region r : {Region::PursuerWins, Region::EvaderWins}) {
      if (equal && r == Region::EvaderWins) continue;
      double worst = 0.0;
      for (const DuelState& s : random_states(r, 300, 21, equal)) {
        const double scale = std::max({norm(s.evader), norm(s.pursuer), 1.0});
        const DuelValue v = duel_value(s);
        const FdGradient g = fd_gradient(s, r, 1e-6 * scale);
        worst = std::max({worst, rel(g.evader, v.grad_evader), rel(g.pursuer, v.grad_pursuer)});
      }
      CHECK(worst < 1e-5);
    }
  }
}

TEST_CASE("optimal controls") {
  const DuelControls c = optimal_controls({{0, 0, 1}, {0, 0, -1}, 0.5, 1});
  CHECK(c.evader.z == doctest::Approx(-0.5));
  CHECK(std::abs(c.evader.x) + std::abs(c.evader.y) < 1e-15);
  CHECK(c.pursuer.z == doctest::Approx(1.0));

  const DuelControls r = optimal_controls({{0, 3, 4}, {6, 0, 8}, 0.5, 1});
  CHECK(rel(r.evader, Vec3{0, -0.3, -0.4}) < 1e-12);
  CHECK(rel(r.pursuer, Vec3{-0.6, 0, -0.8}) < 1e-12);

  // Both players head for the interception point.
  for (const DuelState& s : random_states(Region::PursuerWins, 200, 31)) {
    const DuelControls u = optimal_controls(s);
    CHECK(norm(u.evader) == doctest::Approx(s.evader_speed).epsilon(1e-12));
    CHECK(norm(u.pursuer) == doctest::Approx(s.pursuer_speed).epsilon(1e-12));
    const Vec3 i = closest_point_to_origin(apollonius_locus(s.evader, s.pursuer, s.alpha())).point;
    CHECK(norm(cross(u.pursuer, i - s.pursuer)) / (norm(u.pursuer) * norm(i - s.pursuer)) < 1e-9);
    CHECK(norm(cross(u.evader, i - s.evader)) / (norm(u.evader) * norm(i - s.evader)) < 1e-9);
    CHECK(dot(u.pursuer, i - s.pursuer) > 0.0);
  }
  CHECK_THROWS_AS(controls_from_gradient(DuelValue{}, 1.0, 1.0), SingularControl);
}

TEST_CASE("fixed-region evaluation ignores the current barrier sign") {
  const DuelState s{{0, 0, 1}, {0, 0, 3}, 0.5, 1};
  CHECK(evaluate_in_region(s, Region::EvaderWins).value == doctest::Approx(-1.0));
  CHECK_NOTHROW(evaluate_in_region(s, Region::PursuerWins));
  CHECK(value_in_region({{0, 0, 1}, {0, 0, 1}, 0.5, 1}, Region::PursuerWins) == doctest::Approx(1.0));
}

TEST_CASE("equal-speed value is the alpha -> 1 limit") {
  const Vec3 e{3, -1, 4};
  const Vec3 p{0.5, 0.2, 1};
  const DuelValue at_one = value_pursuer_region({e, p, 1.0, 1.0});
  const DuelValue below = value_pursuer_region({e, p, 1.0 - 1e-7, 1.0});
  CHECK(below.value == doctest::Approx(at_one.value).epsilon(1e-5));
  CHECK(norm(below.grad_evader - at_one.grad_evader) < 1e-4);
  CHECK(norm(below.grad_pursuer - at_one.grad_pursuer) < 1e-4);
}
