#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "radg/core.hpp"
#include "radg/duel.hpp"

namespace radg {

/// Dense row-major m x n matrix; rows are evaders, columns pursuers.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  std::size_t rows_{0};
  std::size_t cols_{0};
  std::vector<double> data_;
};

/// How one evader-pursuer pairing plays out when matched at the current state.
enum class PairKind {
  Capture,      // alpha <= 1, B > 0: pursuer intercepts, payoff V^P
  Race,         // alpha <= 1, B <= 0: evader reaches the target, payoff V^E
  Unsupported,  // alpha > 1: no closed-form value
};

struct PairInfo {
  SpeedRatio alpha;
  double barrier{0.0};
  PairKind kind{PairKind::Capture};
  double value{0.0};  // V^P or V^E; unset (0) for Unsupported
};

/// Per-pair quantities for every (evader, pursuer) combination of a scenario.
/// Independent of the penalty L.
class PairTable {
 public:
  explicit PairTable(const Scenario& s);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const PairInfo& operator()(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }

 private:
  std::size_t rows_{0};
  std::size_t cols_{0};
  std::vector<PairInfo> cells_;
};

/// a_ij: V^P for capturable pairs, -L otherwise.
struct PayoffMatrix {
  Matrix a;
  double penalty{0.0};
};

/// V_ij: V^P, V^E or -L by pair kind.
struct ValueMatrix {
  Matrix v;
};

/// A non-empty set of equally good assignments sharing `team_payoff`,
/// sorted lexicographically.
struct OptimalAssignmentSet {
  std::vector<Assignment> assignments;
  double team_payoff{0.0};
};

/// Sum of L* contributions: per evader the best capturing payoff, 0 if none.
double best_case_payoff(const PairTable& t);
double best_case_payoff(const Scenario& s);

/// 2 * sum over evaders of max |V_ij| over pursuers no slower than it.
double refinement_bound(const PairTable& t);
double refinement_bound(const Scenario& s);

/// Scenario's penalty when present, otherwise 10 * max(L*, Lbar*, 1).
double resolved_penalty(const Scenario& s, const PairTable& t);
double resolved_penalty(const Scenario& s);

PayoffMatrix build_payoff_matrix(const PairTable& t, double penalty);
PayoffMatrix build_payoff_matrix(const Scenario& s);
ValueMatrix build_value_matrix(const PairTable& t, double penalty);
ValueMatrix build_value_matrix(const Scenario& s);

/// Sum of the matched entries.
double team_payoff(const Matrix& m, const Assignment& a);

/// True when the payoffs tie under the tolerance: relative when the
/// reference magnitude exceeds one, absolute otherwise.
bool payoff_ties(double a, double b, double tie_tolerance);

/// Maximum-weight rectangular assignment (rows <= cols), Hungarian method.
/// Returns one maximiser of the team payoff.
Assignment solve_assignment_lp(const Matrix& payoff);
inline Assignment solve_assignment_lp(const PayoffMatrix& p) { return solve_assignment_lp(p.a); }

/// Every assignment within tolerance of the optimum, by k-best enumeration.
OptimalAssignmentSet enumerate_optimal_set(const Matrix& payoff, double tie_tolerance);
inline OptimalAssignmentSet enumerate_optimal_set(const PayoffMatrix& p, double tie_tolerance) {
  return enumerate_optimal_set(p.a, tie_tolerance);
}

/// Members of `gamma_star` maximising the value-matrix sum.
OptimalAssignmentSet refine_theta_star(const OptimalAssignmentSet& gamma_star, const ValueMatrix& v,
                                       double tie_tolerance);

/// n! / (n - m)!, saturating at UINT64_MAX.
std::uint64_t count_feasible_assignments(std::size_t m, std::size_t n);

/// Calls `visit` with every feasible assignment (as pursuer-of-evader) in
/// lexicographic order.
void for_each_feasible_assignment(std::size_t m, std::size_t n,
                                  const std::function<void(const std::vector<std::size_t>&)>& visit);

inline constexpr std::uint64_t kDefaultBruteForceCap = 10'000'000;

/// Exhaustive oracle. Throws TooLarge when the feasible set exceeds `cap`.
OptimalAssignmentSet brute_force_assignment(const Matrix& payoff, double tie_tolerance = 1e-9,
                                            std::uint64_t cap = kDefaultBruteForceCap);
inline OptimalAssignmentSet brute_force_assignment(const PayoffMatrix& p, double tie_tolerance = 1e-9,
                                                   std::uint64_t cap = kDefaultBruteForceCap) {
  return brute_force_assignment(p.a, tie_tolerance, cap);
}

}  // namespace radg
