// radg: solve, simulate and benchmark multiplayer reach-avoid games.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>

#include "radg/bench.hpp"
#include "radg/game.hpp"
#include "radg/io.hpp"
#include "radg/sim.hpp"
#include "radg/verify.hpp"

namespace fs = std::filesystem;
using namespace radg;

namespace {

enum Exit { kOk = 0, kUsage = 2, kInput = 3, kRuntime = 4, kProperty = 5 };

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

fs::path sibling(const std::string& scenario_path, const std::string& suffix) {
  fs::path p(scenario_path);
  return p.parent_path() / (p.stem().string() + suffix);
}

std::string join(const OptimalAssignmentSet& set) {
  std::string out;
  for (const Assignment& a : set.assignments) out += (out.empty() ? "" : " ") + to_string(a);
  return out;
}

int cmd_solve(const std::string& path, const std::string& report) {
  const Scenario s = load_scenario(path);
  const GameSolution g = solve(s);
  std::cout << std::setprecision(6);
  std::cout << "winner        " << to_string(g.winner) << '\n'
            << "barrier       " << g.barrier_value << '\n'
            << "Gamma*        " << join(g.gamma_star) << "  (payoff " << g.gamma_star.team_payoff << ")\n"
            << "Theta*        " << join(g.theta_star) << '\n'
            << "assignment    " << to_string(g.chosen) << '\n'
            << "value         " << g.value << (g.certified ? "" : "  (uncertified)") << '\n'
            << "dispersal     " << (g.on_dispersal_surface ? "true" : "false") << '\n'
            << "L             " << g.penalty << "  (L* " << g.l_star << ", Lbar* " << g.l_bar_star << ")\n";
  for (const PairOutcome& p : g.per_pair) {
    std::cout << "  E" << p.evader + 1 << " <- P" << p.pursuer + 1 << "  alpha " << p.alpha.value << "  "
              << to_string(p.region) << "  " << p.value << '\n';
  }
  const fs::path out = report.empty() ? sibling(path, ".solution.json") : fs::path(report);
  write_file(out, solution_to_json(g).dump(2) + "\n");
  std::cout << "report        " << out.string() << '\n';
  return kOk;
}

int cmd_simulate(const std::string& path, const std::string& profile_name, std::optional<double> step,
                 const std::string& out_path) {
  const Scenario s = load_scenario(path);
  StrategyProfile profile;
  if (profile_name == "straight-evaders") {
    profile = StrategyProfile::straight_evaders();
  } else if (profile_name == "straight-evaders-fixed-pursuers") {
    profile = StrategyProfile::straight_evaders();
    profile.pursuers = TeamStrategy::InitialHeading;
  }
  const GameSolution g = solve(s);
  const Trajectory traj = simulate(s, g.chosen, profile, step);
  const fs::path csv = out_path.empty() ? sibling(path, ".trajectory.csv") : fs::path(out_path);
  fs::path events = csv;
  events.replace_extension(".events.json");
  write_file(csv, trajectory_csv(traj));
  write_file(events, events_to_json(traj).dump(2) + "\n");
  std::cout << std::setprecision(6);
  std::cout << "assignment  " << to_string(g.chosen) << '\n'
            << "payoff      " << traj.realized_payoff << '\n'
            << "t_f         " << traj.t_final() << '\n'
            << "samples     " << traj.times.size() << '\n';
  for (const Event& e : traj.events) {
    std::cout << "  " << std::setw(8) << std::left << to_string(e.type) << std::right << " t=" << e.t;
    if (e.evader) std::cout << " E" << *e.evader + 1;
    if (e.pursuer) std::cout << " P" << *e.pursuer + 1;
    if (e.point) std::cout << " at " << *e.point;
    std::cout << '\n';
  }
  std::cout << "trajectory  " << csv.string() << "\nevents      " << events.string() << '\n';
  return kOk;
}

int cmd_bench(const BenchOptions& opt, const std::string& out_path) {
  const auto rows = run_bench(opt);
  nlohmann::json report = nlohmann::json::array();
  std::printf("%-10s %14s %14s %14s\n", "n,m", "brute (s)", "lp (s)", "build (ms)");
  bool agree = true;
  for (const BenchRow& r : rows) {
    char brute[32] = "NA";
    if (r.brute_seconds) std::snprintf(brute, sizeof brute, "%.6f", *r.brute_seconds);
    char size[32];
    std::snprintf(size, sizeof size, "%zu,%zu", r.n, r.m);
    std::printf("%-10s %14s %14.6f %14.4f\n", size, brute, r.lp_seconds, 1e3 * r.build_seconds);
    nlohmann::json row = {{"n", r.n},
                          {"m", r.m},
                          {"trials", r.trials},
                          {"lp_seconds", r.lp_seconds},
                          {"build_seconds", r.build_seconds},
                          {"agree", r.agree}};
    row["brute_seconds"] = r.brute_seconds ? nlohmann::json(*r.brute_seconds) : nlohmann::json("NA");
    report.push_back(row);
    agree = agree && r.agree;
  }
  if (!out_path.empty()) write_file(out_path, report.dump(2) + "\n");
  if (!agree) {
    std::cerr << "LP and brute force disagree on some instance\n";
    return kProperty;
  }
  return kOk;
}

int cmd_verify(const std::string& path, const std::vector<std::uint64_t>& random) {
  std::vector<Scenario> scenarios;
  if (!random.empty()) {
    const std::size_t n = random[0], m = random[1], trials = random[2];
    if (m < 1 || n < m) throw InvalidScenario("--random needs n >= m >= 1");
    for (std::size_t k = 0; k < trials; ++k) scenarios.push_back(random_scenario(n, m, trial_seed(random[3], n, m, k)));
  } else {
    scenarios.push_back(load_scenario(path));
  }
  const auto results = verify_scenarios(scenarios);
  for (const PropertyResult& r : results) {
    std::printf("%-4s %-20s worst %.3e (tol %.0e)  checked %zu  skipped %zu%s%s\n", r.passed ? "PASS" : "FAIL",
                r.name.c_str(), r.worst, r.tolerance, r.checked, r.skipped, r.note.empty() ? "" : "  ",
                r.note.c_str());
  }
  return all_passed(results) ? kOk : kProperty;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiplayer reach-avoid differential games in 3D"};
  app.require_subcommand(1);

  std::string file, report, profile = "optimal", out;
  std::optional<double> step;
  auto* solve_cmd = app.add_subcommand("solve", "Classify the game, find the optimal assignment and value");
  solve_cmd->add_option("file", file, "Scenario JSON")->required();
  solve_cmd->add_option("--report", report, "Report path (default: <file>.solution.json)");

  auto* sim_cmd = app.add_subcommand("simulate", "Integrate the closed-loop game to termination");
  sim_cmd->add_option("file", file, "Scenario JSON")->required();
  sim_cmd->add_option("--profile", profile, "Strategy profile")
      ->check(CLI::IsMember({"optimal", "straight-evaders", "straight-evaders-fixed-pursuers"}));
  sim_cmd->add_option("--step", step, "Integration step (s)")->check(CLI::PositiveNumber);
  sim_cmd->add_option("--out", out, "Trajectory CSV path; events go next to it");

  BenchOptions bench;
  std::string sizes = "(3,3),(7,5),(10,8),(11,7),(12,10),(20,15),(50,40),(100,100)";
  auto* bench_cmd = app.add_subcommand("bench", "Time LP against brute-force assignment");
  bench_cmd->add_option("--sizes", sizes, "List of (n,m) pairs")->capture_default_str();
  bench_cmd->add_option("--trials", bench.trials, "Trials per size")->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "Base seed")->capture_default_str();
  bench_cmd->add_option("--cap", bench.cap, "Largest feasible set brute force may enumerate")
      ->capture_default_str();
  bench_cmd->add_option("--workers", bench.workers, "Parallel trials (0: all cores)");
  bench_cmd->add_option("--out", out, "JSON report path");

  std::vector<std::uint64_t> random;
  auto* verify_cmd = app.add_subcommand("verify", "Run the property suite");
  auto* verify_file = verify_cmd->add_option("file", file, "Scenario JSON");
  auto* verify_random = verify_cmd->add_option("--random", random, "n m trials seed")->expected(4);
  verify_file->excludes(verify_random);
  verify_cmd->callback([&] {
    if (file.empty() && random.empty()) throw CLI::RequiredError("file or --random");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(file, report);
    if (*sim_cmd) return cmd_simulate(file, profile, step, out);
    if (*bench_cmd) {
      bench.sizes = parse_sizes(sizes);
      return cmd_bench(bench, out);
    }
    if (*verify_cmd) return cmd_verify(file, random);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const InvalidScenario& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntime;
  }
  return kUsage;
}
