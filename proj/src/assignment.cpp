#include "radg/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>
#include <string>
#include <utility>

namespace radg {

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

PairTable::PairTable(const Scenario& s)
    : rows_(s.num_evaders()), cols_(s.num_pursuers()), cells_(rows_ * cols_) {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const DuelState duel{s.evaders[i].position, s.pursuers[j].position, s.evaders[i].speed,
                           s.pursuers[j].speed};
      PairInfo& cell = cells_[i * cols_ + j];
      cell.alpha = duel.alpha();
      cell.barrier = barrier_1v1(duel);
      if (!is_supported(cell.alpha)) {
        cell.kind = PairKind::Unsupported;
      } else if (cell.barrier > 0.0) {
        cell.kind = PairKind::Capture;
        try {
          cell.value = value_pursuer_region(duel).value;
        } catch (const DegenerateGeometry& e) {
          throw DegenerateGeometry("pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                   "): " + e.what());
        }
      } else {
        cell.kind = PairKind::Race;
        cell.value = value_in_region(duel, Region::EvaderWins);
      }
    }
  }
}

double best_case_payoff(const PairTable& t) {
  double total = 0.0;
  for (std::size_t i = 0; i < t.rows(); ++i) {
    std::optional<double> best;
    for (std::size_t j = 0; j < t.cols(); ++j) {
      if (t(i, j).kind == PairKind::Capture) best = std::max(best.value_or(t(i, j).value), t(i, j).value);
    }
    total += best.value_or(0.0);
  }
  return total;
}

double best_case_payoff(const Scenario& s) { return best_case_payoff(PairTable(s)); }

double refinement_bound(const PairTable& t) {
  double total = 0.0;
  for (std::size_t i = 0; i < t.rows(); ++i) {
    double best = 0.0;
    for (std::size_t j = 0; j < t.cols(); ++j) {
      if (t(i, j).kind != PairKind::Unsupported) best = std::max(best, std::abs(t(i, j).value));
    }
    total += best;
  }
  return 2.0 * total;
}

double refinement_bound(const Scenario& s) { return refinement_bound(PairTable(s)); }

double resolved_penalty(const Scenario& s, const PairTable& t) {
  if (s.penalty) return *s.penalty;
  return 10.0 * std::max({best_case_payoff(t), refinement_bound(t), 1.0});
}

double resolved_penalty(const Scenario& s) { return resolved_penalty(s, PairTable(s)); }

PayoffMatrix build_payoff_matrix(const PairTable& t, double penalty) {
  PayoffMatrix out{Matrix(t.rows(), t.cols()), penalty};
  for (std::size_t i = 0; i < t.rows(); ++i) {
    for (std::size_t j = 0; j < t.cols(); ++j) {
      out.a(i, j) = t(i, j).kind == PairKind::Capture ? t(i, j).value : -penalty;
    }
  }
  return out;
}

PayoffMatrix build_payoff_matrix(const Scenario& s) {
  require_valid(s);
  const PairTable t(s);
  return build_payoff_matrix(t, resolved_penalty(s, t));
}

ValueMatrix build_value_matrix(const PairTable& t, double penalty) {
  ValueMatrix out{Matrix(t.rows(), t.cols())};
  for (std::size_t i = 0; i < t.rows(); ++i) {
    for (std::size_t j = 0; j < t.cols(); ++j) {
      out.v(i, j) = t(i, j).kind == PairKind::Unsupported ? -penalty : t(i, j).value;
    }
  }
  return out;
}

ValueMatrix build_value_matrix(const Scenario& s) {
  require_valid(s);
  const PairTable t(s);
  return build_value_matrix(t, resolved_penalty(s, t));
}

double team_payoff(const Matrix& m, const Assignment& a) {
  double total = 0.0;
  for (std::size_t i = 0; i < a.num_evaders(); ++i) total += m(i, a.pursuer_of(i));
  return total;
}

bool payoff_ties(double a, double b, double tie_tolerance) {
  const double scale = std::max(std::abs(a), std::abs(b));
  const double tol = scale > 1.0 ? tie_tolerance * scale : tie_tolerance;
  return std::abs(a - b) <= tol;
}

namespace {

// Minimum-cost assignment of every row to a distinct column, rows <= cols.
// Shortest augmenting paths with potentials; O(rows^2 * cols).
std::vector<std::size_t> hungarian_min(const Matrix& cost) {
  const std::size_t n = cost.rows();
  const std::size_t m = cost.cols();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
  std::vector<std::size_t> p(m + 1, 0), way(m + 1, 0);
  std::vector<double> minv(m + 1);
  std::vector<char> used(m + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = p[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= m; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> row_to_col(n, 0);
  for (std::size_t j = 1; j <= m; ++j) {
    if (p[j] != 0) row_to_col[p[j] - 1] = j - 1;
  }
  return row_to_col;
}

void require_rectangular(const Matrix& payoff) {
  if (payoff.rows() > payoff.cols()) {
    throw InvalidScenario("assignment needs at least as many pursuers as evaders");
  }
}

constexpr std::size_t kFree = static_cast<std::size_t>(-1);

// Murty subproblem: evaders with a fixed pursuer, plus forbidden pairs.
struct Constraints {
  std::vector<std::size_t> fixed;  // kFree when unconstrained
  std::set<std::pair<std::size_t, std::size_t>> forbidden;
};

// Best assignment honouring the constraints, or nullopt when none exists.
std::optional<std::vector<std::size_t>> solve_constrained(const Matrix& payoff, const Constraints& c,
                                                         double big) {
  const std::size_t m = payoff.rows();
  const std::size_t n = payoff.cols();
  std::vector<std::size_t> free_rows;
  std::vector<char> col_taken(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (c.fixed[i] == kFree) {
      free_rows.push_back(i);
    } else {
      col_taken[c.fixed[i]] = 1;
    }
  }
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < n; ++j) {
    if (!col_taken[j]) free_cols.push_back(j);
  }
  std::vector<std::size_t> result = c.fixed;
  if (free_rows.empty()) return result;

  Matrix cost(free_rows.size(), free_cols.size());
  for (std::size_t r = 0; r < free_rows.size(); ++r) {
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
      const bool banned = c.forbidden.contains({free_rows[r], free_cols[k]});
      cost(r, k) = banned ? big : -payoff(free_rows[r], free_cols[k]);
    }
  }
  const auto sol = hungarian_min(cost);
  for (std::size_t r = 0; r < free_rows.size(); ++r) {
    const std::size_t i = free_rows[r];
    const std::size_t j = free_cols[sol[r]];
    if (c.forbidden.contains({i, j})) return std::nullopt;
    result[i] = j;
  }
  return result;
}

double pair_sum(const Matrix& payoff, const std::vector<std::size_t>& of) {
  double total = 0.0;
  for (std::size_t i = 0; i < of.size(); ++i) total += payoff(i, of[i]);
  return total;
}

}  // namespace

Assignment solve_assignment_lp(const Matrix& payoff) {
  require_rectangular(payoff);
  Matrix cost(payoff.rows(), payoff.cols());
  for (std::size_t i = 0; i < payoff.rows(); ++i) {
    for (std::size_t j = 0; j < payoff.cols(); ++j) cost(i, j) = -payoff(i, j);
  }
  return Assignment(hungarian_min(cost), payoff.cols());
}

OptimalAssignmentSet enumerate_optimal_set(const Matrix& payoff, double tie_tolerance) {
  require_rectangular(payoff);
  const std::size_t m = payoff.rows();
  double max_abs = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < payoff.cols(); ++j) max_abs = std::max(max_abs, std::abs(payoff(i, j)));
  }
  const double big = 2.0 * static_cast<double>(m + 1) * (max_abs + 1.0);

  struct Node {
    double payoff;
    std::vector<std::size_t> of;
    Constraints constraints;
  };
  auto worse = [](const Node& a, const Node& b) {
    if (a.payoff != b.payoff) return a.payoff < b.payoff;
    return a.of > b.of;
  };
  std::priority_queue<Node, std::vector<Node>, decltype(worse)> queue(worse);

  Constraints root{std::vector<std::size_t>(m, kFree), {}};
  auto first = solve_constrained(payoff, root, big);
  const double optimum = pair_sum(payoff, *first);
  queue.push(Node{optimum, std::move(*first), std::move(root)});

  OptimalAssignmentSet out;
  out.team_payoff = optimum;
  while (!queue.empty()) {
    Node node = queue.top();
    queue.pop();
    if (!payoff_ties(node.payoff, optimum, tie_tolerance) && node.payoff < optimum) break;
    out.assignments.emplace_back(node.of, payoff.cols());

    // Partition the remaining solution space of this node around its solution.
    Constraints child = node.constraints;
    for (std::size_t i = 0; i < m; ++i) {
      if (node.constraints.fixed[i] != kFree) continue;
      Constraints branch = child;
      branch.forbidden.insert({i, node.of[i]});
      if (auto sol = solve_constrained(payoff, branch, big)) {
        const double value = pair_sum(payoff, *sol);
        queue.push(Node{value, std::move(*sol), std::move(branch)});
      }
      child.fixed[i] = node.of[i];
    }
  }
  std::sort(out.assignments.begin(), out.assignments.end());
  return out;
}

OptimalAssignmentSet refine_theta_star(const OptimalAssignmentSet& gamma_star, const ValueMatrix& v,
                                       double tie_tolerance) {
  if (gamma_star.assignments.empty()) throw std::invalid_argument("empty optimal set");
  std::vector<double> sums;
  sums.reserve(gamma_star.assignments.size());
  for (const auto& a : gamma_star.assignments) sums.push_back(team_payoff(v.v, a));
  const double best = *std::max_element(sums.begin(), sums.end());
  OptimalAssignmentSet out;
  out.team_payoff = best;
  for (std::size_t k = 0; k < sums.size(); ++k) {
    if (payoff_ties(sums[k], best, tie_tolerance)) out.assignments.push_back(gamma_star.assignments[k]);
  }
  std::sort(out.assignments.begin(), out.assignments.end());
  return out;
}

std::uint64_t count_feasible_assignments(std::size_t m, std::size_t n) {
  if (m > n) return 0;
  std::uint64_t count = 1;
  for (std::size_t k = n - m + 1; k <= n; ++k) {
    if (count > std::numeric_limits<std::uint64_t>::max() / k) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    count *= k;
  }
  return count;
}

void for_each_feasible_assignment(std::size_t m, std::size_t n,
                                  const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (m > n) return;
  std::vector<std::size_t> of(m, 0);
  std::vector<char> used(n, 0);
  // Iterative depth-first walk over injective maps.
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == m) {
      visit(of);
      return;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      used[j] = 1;
      of[i] = j;
      self(self, i + 1);
      used[j] = 0;
    }
  };
  recurse(recurse, 0);
}

OptimalAssignmentSet brute_force_assignment(const Matrix& payoff, double tie_tolerance,
                                            std::uint64_t cap) {
  require_rectangular(payoff);
  const std::size_t m = payoff.rows();
  const std::size_t n = payoff.cols();
  const std::uint64_t count = count_feasible_assignments(m, n);
  if (count > cap) {
    throw TooLarge("brute force needs " + std::to_string(count) + " assignments, cap is " +
                   std::to_string(cap));
  }

  double best = -std::numeric_limits<double>::infinity();
  std::vector<std::pair<double, std::vector<std::size_t>>> near;
  std::vector<std::size_t> of(m, 0);
  std::vector<char> used(n, 0);
  auto recurse = [&](auto&& self, std::size_t i, double partial) -> void {
    if (i == m) {
      if (partial > best) {
        best = partial;
        std::erase_if(near, [&](const auto& e) { return !payoff_ties(e.first, best, tie_tolerance); });
      }
      if (payoff_ties(partial, best, tie_tolerance)) near.emplace_back(partial, of);
      return;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      used[j] = 1;
      of[i] = j;
      self(self, i + 1, partial + payoff(i, j));
      used[j] = 0;
    }
  };
  recurse(recurse, 0, 0.0);

  OptimalAssignmentSet out;
  out.team_payoff = best;
  for (auto& [value, assignment] : near) {
    if (payoff_ties(value, best, tie_tolerance)) out.assignments.emplace_back(std::move(assignment), n);
  }
  std::sort(out.assignments.begin(), out.assignments.end());
  return out;
}

}  // namespace radg
