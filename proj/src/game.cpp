#include "radg/game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace radg {

const char* to_string(Team t) { return t == Team::PursuerTeam ? "PursuerTeam" : "EvaderTeam"; }

const char* to_string(EventType t) {
  switch (t) {
    case EventType::Capture:
      return "Capture";
    case EventType::Reach:
      return "Reach";
    case EventType::GameOver:
      return "GameOver";
  }
  return "?";
}

double multiplayer_barrier(const PayoffMatrix& a, const Assignment& gamma) {
  double b = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < gamma.num_evaders(); ++i) b = std::min(b, a.a(i, gamma.pursuer_of(i)));
  return b;
}

double multiplayer_barrier(const Scenario& s, const Assignment& gamma) {
  return multiplayer_barrier(build_payoff_matrix(s), gamma);
}

namespace {

std::vector<PairOutcome> outcomes(const PairTable& t, const ValueMatrix& v, const Assignment& chosen) {
  std::vector<PairOutcome> out;
  for (const auto& [i, j] : chosen.pairs()) {
    const PairInfo& info = t(i, j);
    PairOutcome p;
    p.evader = i;
    p.pursuer = j;
    p.alpha = info.alpha;
    p.kind = info.kind;
    p.region = info.barrier > 0.0 ? Region::PursuerWins : Region::EvaderWins;
    p.value = v.v(i, j);
    out.push_back(p);
  }
  return out;
}

GameSolution classify_impl(const Scenario& s, const PairTable& t, const PayoffMatrix& a) {
  GameSolution g;
  g.penalty = a.penalty;
  g.l_star = best_case_payoff(t);
  g.l_bar_star = refinement_bound(t);
  g.gamma_star = enumerate_optimal_set(a, s.tie_tolerance);
  g.barrier_value = multiplayer_barrier(a, g.gamma_star.assignments.front());
  g.winner = g.barrier_value > 0.0 ? Team::PursuerTeam : Team::EvaderTeam;
  g.theta_star = g.gamma_star;
  g.value = g.gamma_star.team_payoff;
  g.chosen = g.gamma_star.assignments.front();
  g.on_dispersal_surface = g.gamma_star.assignments.size() > 1;
  return g;
}

}  // namespace

GameSolution classify(const Scenario& s) {
  require_valid(s);
  const PairTable t(s);
  return classify_impl(s, t, build_payoff_matrix(t, resolved_penalty(s, t)));
}

GameSolution solve(const Scenario& s) {
  require_valid(s);
  const PairTable t(s);
  const double penalty = resolved_penalty(s, t);
  const PayoffMatrix a = build_payoff_matrix(t, penalty);
  const ValueMatrix v = build_value_matrix(t, penalty);
  GameSolution g = classify_impl(s, t, a);
  if (g.winner == Team::EvaderTeam) {
    g.theta_star = refine_theta_star(g.gamma_star, v, s.tie_tolerance);
    g.value = g.theta_star.team_payoff;
    g.chosen = g.theta_star.assignments.front();
    g.on_dispersal_surface = g.theta_star.assignments.size() > 1;
  }
  g.per_pair = outcomes(t, v, g.chosen);
  g.certified = std::none_of(g.per_pair.begin(), g.per_pair.end(),
                             [](const PairOutcome& p) { return p.kind == PairKind::Unsupported; });
  return g;
}

std::vector<PairOutcome> plan_pairs(const Scenario& s, const Assignment& chosen) {
  require_valid(s);
  const PairTable t(s);
  return outcomes(t, build_value_matrix(t, resolved_penalty(s, t)), chosen);
}

Positions Positions::initial(const Scenario& s) {
  Positions x;
  for (const Player& p : s.evaders) x.evaders.push_back(p.position);
  for (const Player& p : s.pursuers) x.pursuers.push_back(p.position);
  return x;
}

Frozen Frozen::none(const Scenario& s) {
  return Frozen{std::vector<bool>(s.num_evaders(), false), std::vector<bool>(s.num_pursuers(), false)};
}

namespace {

Vec3 toward_target(const Vec3& x, double speed) {
  const double r = norm(x);
  return r > 0.0 ? -(speed / r) * x : Vec3{};
}

}  // namespace

TeamControls team_controls(const Scenario& s, const std::vector<PairOutcome>& plan,
                           const Positions& x, const Frozen& frozen) {
  TeamControls u{std::vector<Vec3>(s.num_evaders()), std::vector<Vec3>(s.num_pursuers())};
  for (const PairOutcome& p : plan) {
    const bool e_live = !frozen.evaders[p.evader];
    const bool p_live = !frozen.pursuers[p.pursuer];
    if (!e_live && !p_live) continue;
    const double ue = s.evaders[p.evader].speed;
    const double vp = s.pursuers[p.pursuer].speed;
    Vec3 ce, cp;
    if (p.kind == PairKind::Unsupported) {
      ce = toward_target(x.evaders[p.evader], ue);
      cp = toward_target(x.pursuers[p.pursuer], vp);
    } else if (p.region == Region::EvaderWins) {
      // Both race for the target; the gradient directions reduce to this and
      // stay defined once a player sits on the origin.
      ce = toward_target(x.evaders[p.evader], ue);
      cp = toward_target(x.pursuers[p.pursuer], vp);
    } else {
      const DuelState d{x.evaders[p.evader], x.pursuers[p.pursuer], ue, vp};
      const DuelControls c = optimal_controls(d, Region::PursuerWins);
      ce = c.evader;
      cp = c.pursuer;
    }
    if (e_live) u.evaders[p.evader] = ce;
    if (p_live) u.pursuers[p.pursuer] = cp;
  }
  return u;
}

TeamControls team_controls(const Scenario& s, const Assignment& chosen, const Positions& x,
                           const Frozen& frozen) {
  return team_controls(s, plan_pairs(s, chosen), x, frozen);
}

std::vector<Event> termination_check(const Positions& x, const std::vector<PairOutcome>& plan,
                                     const Frozen& frozen, double capture_radius,
                                     double target_radius, double t) {
  std::vector<Event> events;
  std::vector<bool> resolved = frozen.evaders;
  for (std::size_t i = 0; i < x.evaders.size(); ++i) {
    if (frozen.evaders[i]) continue;
    if (norm(x.evaders[i]) <= target_radius) {
      Event e{EventType::Reach, t, i, std::nullopt, x.evaders[i]};
      for (const PairOutcome& p : plan) {
        if (p.evader == i) e.pursuer = p.pursuer;
      }
      events.push_back(e);
      resolved[i] = true;
    }
  }
  for (const PairOutcome& p : plan) {
    if (resolved[p.evader] || frozen.pursuers[p.pursuer]) continue;
    if (distance(x.evaders[p.evader], x.pursuers[p.pursuer]) <= capture_radius) {
      events.push_back(Event{EventType::Capture, t, p.evader, p.pursuer, x.evaders[p.evader]});
      resolved[p.evader] = true;
    }
  }
  const bool any_new = !events.empty();
  if (any_new && std::all_of(resolved.begin(), resolved.end(), [](bool b) { return b; })) {
    events.push_back(Event{EventType::GameOver, t, std::nullopt, std::nullopt, std::nullopt});
  }
  return events;
}

}  // namespace radg
