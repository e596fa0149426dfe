#include "radg/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <regex>
#include <string>
#include <thread>

namespace radg {

Scenario random_scenario(std::size_t n, std::size_t m, std::uint64_t seed,
                         const RandomScenarioConfig& cfg) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-cfg.half_width, cfg.half_width);
  std::uniform_real_distribution<double> vp(cfg.pursuer_speed_min, cfg.pursuer_speed_max);
  std::uniform_real_distribution<double> ue(cfg.evader_speed_min, cfg.evader_speed_max);
  Scenario s;
  s.seed = seed;
  for (std::size_t j = 0; j < n; ++j) {
    const Vec3 x{coord(rng), coord(rng), coord(rng)};
    s.pursuers.push_back(Player{static_cast<int>(j + 1), Role::Pursuer, x, vp(rng)});
  }
  for (std::size_t i = 0; i < m; ++i) {
    const Vec3 x{coord(rng), coord(rng), coord(rng)};
    s.evaders.push_back(Player{static_cast<int>(i + 1), Role::Evader, x, ue(rng)});
  }
  return s;
}

std::uint64_t trial_seed(std::uint64_t base, std::size_t n, std::size_t m, std::size_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(base), static_cast<std::uint32_t>(base >> 32),
                    static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(m),
                    static_cast<std::uint32_t>(trial)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct TrialTiming {
  std::optional<double> brute;
  double lp{0.0};
  double build{0.0};
  bool agree{true};
};

TrialTiming time_trial(std::size_t n, std::size_t m, std::uint64_t seed, std::uint64_t cap) {
  const Scenario s = random_scenario(n, m, seed);
  TrialTiming out;
  auto t0 = Clock::now();
  const PayoffMatrix a = build_payoff_matrix(s);
  out.build = seconds_since(t0);

  t0 = Clock::now();
  const Assignment lp = solve_assignment_lp(a);
  out.lp = seconds_since(t0);

  if (count_feasible_assignments(m, n) <= cap) {
    t0 = Clock::now();
    const OptimalAssignmentSet brute = brute_force_assignment(a, s.tie_tolerance, cap);
    out.brute = seconds_since(t0);
    out.agree = payoff_ties(team_payoff(a.a, lp), brute.team_payoff, s.tie_tolerance);
  }
  return out;
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchOptions& opt) {
  std::vector<BenchRow> rows;
  const unsigned workers = opt.workers ? opt.workers : std::max(1u, std::thread::hardware_concurrency());
  for (const auto& [n, m] : opt.sizes) {
    if (m < 1 || n < m) throw InvalidScenario("bench size needs n >= m >= 1");
    std::vector<TrialTiming> timings(opt.trials);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t k = next++; k < opt.trials; k = next++) {
        timings[k] = time_trial(n, m, trial_seed(opt.seed, n, m, k), opt.cap);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < std::min<std::size_t>(workers, opt.trials); ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();

    BenchRow row;
    row.n = n;
    row.m = m;
    row.trials = opt.trials;
    double brute = 0.0;
    bool all_brute = opt.trials > 0;
    for (const TrialTiming& t : timings) {
      row.lp_seconds += t.lp;
      row.build_seconds += t.build;
      row.agree = row.agree && t.agree;
      if (t.brute) {
        brute += *t.brute;
      } else {
        all_brute = false;
      }
    }
    if (opt.trials > 0) {
      const double k = static_cast<double>(opt.trials);
      row.lp_seconds /= k;
      row.build_seconds /= k;
      if (all_brute) row.brute_seconds = brute / k;
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<std::pair<std::size_t, std::size_t>> parse_sizes(const std::string& text) {
  static const std::regex item(R"(\(?\s*(\d+)\s*[,x]\s*(\d+)\s*\)?)");
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::smatch m;
  std::size_t consumed = 0;
  auto begin = text.cbegin();
  while (std::regex_search(begin, text.cend(), m, item)) {
    const std::string gap(begin, begin + m.position(0));
    if (gap.find_first_not_of(" ,;") != std::string::npos) {
      throw ParseError("sizes: unexpected '" + gap + "'");
    }
    out.emplace_back(std::stoul(m[1]), std::stoul(m[2]));
    begin += m.position(0) + m.length(0);
    consumed = static_cast<std::size_t>(begin - text.cbegin());
  }
  const std::string tail = text.substr(consumed);
  if (out.empty() || tail.find_first_not_of(" ,;") != std::string::npos) {
    throw ParseError("sizes: expected a list like (3,3),(10,8)");
  }
  return out;
}

}  // namespace radg
