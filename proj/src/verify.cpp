#include "radg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "radg/assignment.hpp"
#include "radg/game.hpp"
#include "radg/geometry.hpp"

namespace radg {

FdGradient fd_gradient(const DuelState& s, Region region, double h) {
  FdGradient g;
  for (int k = 0; k < 3; ++k) {
    DuelState plus = s;
    DuelState minus = s;
    plus.evader[k] += h;
    minus.evader[k] -= h;
    g.evader[k] = (value_in_region(plus, region) - value_in_region(minus, region)) / (2.0 * h);
    plus = s;
    minus = s;
    plus.pursuer[k] += h;
    minus.pursuer[k] -= h;
    g.pursuer[k] = (value_in_region(plus, region) - value_in_region(minus, region)) / (2.0 * h);
  }
  return g;
}

bool all_passed(const std::vector<PropertyResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const PropertyResult& r) { return r.passed; });
}

namespace {

PropertyResult named(const char* name, double tolerance) {
  PropertyResult r;
  r.name = name;
  r.tolerance = tolerance;
  return r;
}

void observe(PropertyResult& r, double residual) {
  ++r.checked;
  r.worst = std::max(r.worst, residual);
  if (!(residual <= r.tolerance)) r.passed = false;
}

double relative_error(const Vec3& approx, const Vec3& exact) {
  return norm(approx - exact) / std::max(norm(exact), 1e-12);
}

void check_pair(const DuelState& d, PropertyResult& hji, PropertyResult& fd, PropertyResult& locus) {
  const SpeedRatio alpha = d.alpha();
  const double scale = std::max({norm(d.evader), norm(d.pursuer), distance(d.evader, d.pursuer), 1.0});
  if (!is_supported(alpha)) return;
  const Region region = classify_1v1(d);
  try {
    const DuelValue v = evaluate_in_region(d, region);
    observe(hji, std::abs(hji_residual(v, alpha)));
    const FdGradient g = fd_gradient(d, region, 1e-6 * scale);
    observe(fd, std::max(relative_error(g.evader, v.grad_evader), relative_error(g.pursuer, v.grad_pursuer)));
  } catch (const DegenerateGeometry&) {
    ++hji.skipped;
    ++fd.skipped;
  } catch (const SingularControl&) {
    ++hji.skipped;
    ++fd.skipped;
  }

  try {
    const ApolloniusLocus l = apollonius_locus(d.evader, d.pursuer, alpha);
    double worst = 0.0;
    const auto points = sample_locus(l, 64, scale);
    for (const Vec3& x : points) {
      worst = std::max(worst, std::abs(locus_residual(x, d.evader, d.pursuer, alpha)) /
                                  std::max(norm_sq(x - d.evader), scale * scale));
    }
    if (region == Region::PursuerWins) {
      // The closest point sits on the locus, no sample is nearer, and its
      // distance is the pursuer-region value.
      const ClosestPoint c = closest_point_to_origin(l);
      worst = std::max(worst, std::abs(locus_residual(c.point, d.evader, d.pursuer, alpha)) / (scale * scale));
      worst = std::max(worst, std::abs(c.distance - value_in_region(d, region)) / scale);
      for (const Vec3& x : points) worst = std::max(worst, (c.distance - norm(x)) / scale);
    }
    observe(locus, worst);
  } catch (const DegenerateGeometry&) {
    ++locus.skipped;
  }
}

std::size_t loss_count(const Matrix& a, const Assignment& g, double penalty) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < g.num_evaders(); ++i) count += a(i, g.pursuer_of(i)) == -penalty;
  return count;
}

}  // namespace

std::vector<PropertyResult> verify_scenarios(const std::vector<Scenario>& scenarios) {
  PropertyResult hji = named("hji_residual", 1e-9);
  PropertyResult fd = named("gradient_fd", 1e-5);
  PropertyResult locus = named("locus_sampling", 1e-9);
  PropertyResult oracle = named("lp_vs_brute", 1e-12);
  PropertyResult losses = named("equal_loss_count", 0.0);
  PropertyResult barrier = named("barrier_invariance", 0.0);
  PropertyResult theta = named("theta_subset", 0.0);
  std::size_t strict_refinements = 0;

  for (const Scenario& s : scenarios) {
    require_valid(s);
    for (const Player& e : s.evaders) {
      for (const Player& p : s.pursuers) {
        check_pair(DuelState{e.position, p.position, e.speed, p.speed}, hji, fd, locus);
      }
    }

    GameSolution g;
    PayoffMatrix a;
    try {
      g = solve(s);
      a = build_payoff_matrix(s);
    } catch (const DegenerateGeometry&) {
      ++oracle.skipped;
      ++losses.skipped;
      ++barrier.skipped;
      ++theta.skipped;
      continue;
    }

    if (count_feasible_assignments(s.num_evaders(), s.num_pursuers()) <= 1'000'000) {
      const OptimalAssignmentSet brute = brute_force_assignment(a, s.tie_tolerance);
      const double lp = team_payoff(a.a, solve_assignment_lp(a));
      double gap = std::abs(lp - brute.team_payoff) / std::max(1.0, std::abs(brute.team_payoff));
      // The enumerated optimal set must coincide with the exhaustive one.
      if (brute.assignments != g.gamma_star.assignments) gap = std::max(gap, 1.0);
      observe(oracle, gap);
    } else {
      ++oracle.skipped;
    }

    std::set<std::size_t> counts;
    std::set<bool> signs;
    for (const Assignment& member : g.gamma_star.assignments) {
      counts.insert(loss_count(a.a, member, a.penalty));
      signs.insert(multiplayer_barrier(a, member) > 0.0);
    }
    observe(losses, static_cast<double>(counts.size() - 1));
    observe(barrier, static_cast<double>(signs.size() - 1));

    std::size_t outside = 0;
    for (const Assignment& member : g.theta_star.assignments) {
      outside += !std::binary_search(g.gamma_star.assignments.begin(), g.gamma_star.assignments.end(), member);
    }
    observe(theta, g.theta_star.assignments.empty() ? 1.0 : static_cast<double>(outside));
    if (g.theta_star.assignments.size() < g.gamma_star.assignments.size()) ++strict_refinements;
  }
  theta.note = std::to_string(strict_refinements) + " strict refinement(s)";
  return {hji, fd, locus, oracle, losses, barrier, theta};
}

}  // namespace radg
