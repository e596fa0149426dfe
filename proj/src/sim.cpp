#include "radg/sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace radg {

double default_step(const Scenario& s) {
  double vmax = 0.0;
  for (const Player& p : s.evaders) vmax = std::max(vmax, p.speed);
  for (const Player& p : s.pursuers) vmax = std::max(vmax, p.speed);
  return 1e-3 * max_initial_distance(s) / vmax;
}

double default_max_time(const Scenario& s) {
  double vmin = std::numeric_limits<double>::infinity();
  for (const Player& p : s.evaders) vmin = std::min(vmin, p.speed);
  for (const Player& p : s.pursuers) vmin = std::min(vmin, p.speed);
  return 10.0 * max_initial_distance(s) / vmin;
}

namespace {

Vec3 toward_target(const Vec3& x, double speed) {
  const double r = norm(x);
  return r > 0.0 ? -(speed / r) * x : Vec3{};
}

// First tau in (0, h] with |a + tau b| <= r, given |a| > r. The distance is
// convex in tau, so a root exists iff the minimum over [0, h] is below r.
std::optional<double> first_crossing(const Vec3& a, const Vec3& b, double r, double h) {
  const double bb = norm_sq(b);
  if (bb == 0.0) return std::nullopt;
  const double tau_min = std::clamp(-dot(a, b) / bb, 0.0, h);
  auto g = [&](double tau) { return norm(a + tau * b) - r; };
  if (g(tau_min) > 0.0) return std::nullopt;
  double lo = 0.0;
  double hi = tau_min;
  const double tol = 1e-12 * h;
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) > 0.0 ? lo : hi) = mid;
  }
  return hi;
}

class Simulator {
 public:
  Simulator(const Scenario& s, const Assignment& chosen, const StrategyProfile& profile, double step)
      : s_(s), profile_(profile), step_(step), max_time_(default_max_time(s)) {
    traj_.plan = plan_pairs(s, chosen);
    traj_.pursuer_region = std::all_of(traj_.plan.begin(), traj_.plan.end(), [](const PairOutcome& p) {
      return p.kind == PairKind::Capture;
    });
    capture_radius_ = effective_capture_radius(s);
    target_radius_ = effective_target_radius(s);
    // Events located by bisection can land a rounding error short of the radius.
    slack_ = 1e-12 * max_initial_distance(s);
    x_ = Positions::initial(s);
    frozen_ = Frozen::none(s);
  }

  Trajectory run() {
    record();
    apply(termination_check(x_, traj_.plan, frozen_, capture_radius_, target_radius_, t_));
    if (profile_.pursuers == TeamStrategy::InitialHeading) {
      initial_pursuers_ = team_controls(s_, traj_.plan, x_, frozen_).pursuers;
    }
    if (profile_.evaders == TeamStrategy::InitialHeading) {
      initial_evaders_ = team_controls(s_, traj_.plan, x_, frozen_).evaders;
    }
    while (!over_) {
      if (t_ >= max_time_) {
        throw NoTermination("no termination by t = " + std::to_string(max_time_));
      }
      const TeamControls u = controls();
      double tau = local_step();
      const double h = tau;
      bool event = false;
      for (const PairOutcome& p : traj_.plan) {
        if (frozen_.evaders[p.evader]) continue;
        const Vec3& xe = x_.evaders[p.evader];
        const Vec3& ue = u.evaders[p.evader];
        if (auto r = first_crossing(xe, ue, target_radius_, h); r && *r <= tau) {
          tau = *r;
          event = true;
        }
        if (frozen_.pursuers[p.pursuer]) continue;
        const Vec3 a = xe - x_.pursuers[p.pursuer];
        const Vec3 b = ue - u.pursuers[p.pursuer];
        if (auto r = first_crossing(a, b, capture_radius_, h); r && *r <= tau) {
          tau = *r;
          event = true;
        }
      }
      advance(u, tau);
      if (event) {
        apply(termination_check(x_, traj_.plan, frozen_, capture_radius_ + slack_,
                                target_radius_ + slack_, t_));
      }
    }
    traj_.realized_payoff = realized_payoff();
    return std::move(traj_);
  }

 private:
  // Near a live pair the step shrinks with the separation so that closed-loop
  // pursuit cannot chatter around the evader at an amplitude of order step * V.
  double local_step() const {
    double h = step_;
    for (const PairOutcome& p : traj_.plan) {
      if (frozen_.evaders[p.evader] || frozen_.pursuers[p.pursuer]) continue;
      const double closing = s_.evaders[p.evader].speed + s_.pursuers[p.pursuer].speed;
      const double d = distance(x_.evaders[p.evader], x_.pursuers[p.pursuer]);
      const double floor = std::max(capture_radius_, slack_) / closing;
      h = std::min(h, std::max(0.5 * d / closing, floor));
    }
    return h;
  }

  std::vector<Vec3> team(TeamStrategy strategy, const ControlHook& hook,
                         const std::vector<Vec3>& optimal, const std::vector<Vec3>& initial,
                         const std::vector<Player>& players, const std::vector<Vec3>& pos) const {
    switch (strategy) {
      case TeamStrategy::Optimal:
        return optimal;
      case TeamStrategy::InitialHeading:
        return initial;
      case TeamStrategy::StraightToTarget: {
        std::vector<Vec3> out;
        for (std::size_t k = 0; k < players.size(); ++k) out.push_back(toward_target(pos[k], players[k].speed));
        return out;
      }
      case TeamStrategy::Custom: {
        if (!hook) throw InadmissibleControl("custom strategy without a hook");
        auto out = hook(t_, x_);
        if (out.size() != players.size()) {
          throw InadmissibleControl("custom strategy returned " + std::to_string(out.size()) +
                                    " controls for " + std::to_string(players.size()) + " players");
        }
        for (std::size_t k = 0; k < out.size(); ++k) {
          if (!is_finite(out[k])) throw IntegrationDiverged("non-finite control");
          if (norm(out[k]) > players[k].speed * (1.0 + 1e-9)) {
            throw InadmissibleControl("control of player " + std::to_string(players[k].id) +
                                      " exceeds its speed");
          }
        }
        return out;
      }
    }
    return optimal;
  }

  TeamControls controls() const {
    const bool need_optimal =
        profile_.evaders == TeamStrategy::Optimal || profile_.pursuers == TeamStrategy::Optimal;
    TeamControls opt{std::vector<Vec3>(s_.num_evaders()), std::vector<Vec3>(s_.num_pursuers())};
    if (need_optimal) opt = team_controls(s_, traj_.plan, x_, frozen_);
    TeamControls u{team(profile_.evaders, profile_.evader_hook, opt.evaders, initial_evaders_, s_.evaders,
                        x_.evaders),
                   team(profile_.pursuers, profile_.pursuer_hook, opt.pursuers, initial_pursuers_,
                        s_.pursuers, x_.pursuers)};
    // Unmatched pursuers hold position whatever the strategy says.
    std::vector<bool> matched(s_.num_pursuers(), false);
    for (const PairOutcome& p : traj_.plan) matched[p.pursuer] = true;
    for (std::size_t j = 0; j < u.pursuers.size(); ++j) {
      if (frozen_.pursuers[j] || !matched[j]) u.pursuers[j] = Vec3{};
    }
    for (std::size_t i = 0; i < u.evaders.size(); ++i) {
      if (frozen_.evaders[i]) u.evaders[i] = Vec3{};
    }
    return u;
  }

  void advance(const TeamControls& u, double tau) {
    for (std::size_t i = 0; i < x_.evaders.size(); ++i) {
      if (!frozen_.evaders[i]) x_.evaders[i] = x_.evaders[i] + tau * u.evaders[i];
    }
    for (std::size_t j = 0; j < x_.pursuers.size(); ++j) {
      if (!frozen_.pursuers[j]) x_.pursuers[j] = x_.pursuers[j] + tau * u.pursuers[j];
    }
    for (const Vec3& v : x_.evaders) {
      if (!is_finite(v)) throw IntegrationDiverged("non-finite evader position at t = " + std::to_string(t_));
    }
    for (const Vec3& v : x_.pursuers) {
      if (!is_finite(v)) throw IntegrationDiverged("non-finite pursuer position at t = " + std::to_string(t_));
    }
    if (tau > 0.0) {
      t_ += tau;
      record();
    }
  }

  void record() {
    traj_.times.push_back(t_);
    traj_.positions.push_back(x_);
  }

  void apply(const std::vector<Event>& events) {
    for (const Event& e : events) {
      traj_.events.push_back(e);
      if (e.type == EventType::GameOver) over_ = true;
      if (e.evader) frozen_.evaders[*e.evader] = true;
      if (e.pursuer) frozen_.pursuers[*e.pursuer] = true;
    }
  }

  double realized_payoff() const {
    double total = 0.0;
    for (const Event& e : traj_.events) {
      if (traj_.pursuer_region) {
        if (e.type != EventType::GameOver) total += norm(x_.evaders[*e.evader]);
      } else if (e.type == EventType::Capture) {
        total += norm(x_.evaders[*e.evader]);
      } else if (e.type == EventType::Reach && e.pursuer) {
        total -= norm(x_.pursuers[*e.pursuer]);
      }
    }
    return total;
  }

  const Scenario& s_;
  const StrategyProfile& profile_;
  double step_;
  double max_time_;
  double capture_radius_{0.0};
  double target_radius_{0.0};
  double slack_{0.0};
  double t_{0.0};
  bool over_{false};
  Positions x_;
  Frozen frozen_;
  std::vector<Vec3> initial_evaders_;
  std::vector<Vec3> initial_pursuers_;
  Trajectory traj_;
};

double chord_deviation(const std::vector<Positions>& samples, bool evader, std::size_t k) {
  auto at = [&](std::size_t n) -> const Vec3& {
    return evader ? samples[n].evaders[k] : samples[n].pursuers[k];
  };
  const Vec3 a = at(0);
  const Vec3 chord = at(samples.size() - 1) - a;
  const double len = norm(chord);
  if (len == 0.0) return 0.0;
  double worst = 0.0;
  for (std::size_t n = 0; n < samples.size(); ++n) {
    worst = std::max(worst, norm(cross(at(n) - a, chord)) / len);
  }
  return worst / len;
}

}  // namespace

Trajectory simulate(const Scenario& s, const Assignment& chosen, const StrategyProfile& profile,
                    std::optional<double> step) {
  require_valid(s);
  const double h = step.value_or(default_step(s));
  if (!(h > 0.0) || !std::isfinite(h)) throw InvalidScenario("step must be positive");
  if (chosen.num_evaders() != s.num_evaders() || chosen.num_pursuers() != s.num_pursuers()) {
    throw InvalidScenario("assignment does not match the scenario's team sizes");
  }
  return Simulator(s, chosen, profile, h).run();
}

double Straightness::worst() const {
  double w = 0.0;
  for (double d : evaders) w = std::max(w, d);
  for (double d : pursuers) w = std::max(w, d);
  return w;
}

Straightness straightness_check(const Trajectory& traj) {
  Straightness out;
  if (traj.positions.empty()) return out;
  for (std::size_t i = 0; i < traj.positions.front().evaders.size(); ++i) {
    out.evaders.push_back(chord_deviation(traj.positions, true, i));
  }
  for (std::size_t j = 0; j < traj.positions.front().pursuers.size(); ++j) {
    out.pursuers.push_back(chord_deviation(traj.positions, false, j));
  }
  return out;
}

double team_value(const Scenario& s, const std::vector<PairOutcome>& plan, const Positions& x) {
  double total = 0.0;
  for (const PairOutcome& p : plan) {
    if (p.kind == PairKind::Unsupported && p.region == Region::PursuerWins) {
      throw UnsupportedRegime("pair (" + std::to_string(p.evader + 1) + "," +
                              std::to_string(p.pursuer + 1) + ") has no value: alpha > 1, B > 0");
    }
    const DuelState d{x.evaders[p.evader], x.pursuers[p.pursuer], s.evaders[p.evader].speed,
                      s.pursuers[p.pursuer].speed};
    total += value_in_region(d, p.region);
  }
  return total;
}

double value_conservation_check(const Scenario& s, const Assignment& chosen,
                                std::optional<double> step) {
  const Trajectory traj = simulate(s, chosen, StrategyProfile::optimal(), step);
  const double v0 = team_value(s, traj.plan, traj.positions.front());
  double drift = 0.0;
  for (const Positions& x : traj.positions) drift = std::max(drift, std::abs(team_value(s, traj.plan, x) - v0));
  return drift;
}

}  // namespace radg
