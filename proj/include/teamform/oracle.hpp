// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TEAMFORM_ORACLE_HPP_
#define TEAMFORM_ORACLE_HPP_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "teamform/assignment.hpp"
#include "teamform/errors.hpp"
#include "teamform/instance.hpp"
#include "teamform/team_assignment.hpp"
#include "teamform/threshold_search.hpp"

// Exhaustive reference solvers for tiny instances. They share no code path
// with the solvers they check beyond the Assignment bookkeeping.

namespace teamform {

struct OracleLimits {
  int max_pairs = 16;
  std::uint64_t max_matchings = 2'000'000;
};

struct OracleSolution {
  std::vector<Pair> pairs;  // ascending
  double value = 0.0;
};

namespace detail {

inline void check_pairs(const Instance& instance, const OracleLimits& limits) {
  const long long pairs = static_cast<long long>(instance.num_experts()) * instance.num_tasks();
  if (pairs > limits.max_pairs || pairs > 30) {
    throw SizeError("oracle limited to " + std::to_string(limits.max_pairs) +
                    " expert-task pairs, got " + std::to_string(pairs));
  }
}

// Keeps the better solution; on a tie the lexicographically smaller pair list.
inline void consider(OracleSolution& best, bool& have, double value, std::vector<Pair> pairs) {
  std::sort(pairs.begin(), pairs.end());
  if (!have || objective_less(best.value, value) ||
      (!objective_less(value, best.value) && pairs < best.pairs)) {
    best = {std::move(pairs), value};
    have = true;
  }
}

}  // namespace detail

// Maximizes λ·C − Lmax over all 2^(n·m) assignments, enumerated by bitmask
// with bit i·m + j standing for (expert i, task j).
inline OracleSolution brute_force_opt(const Instance& instance, double lambda,
                                      const OracleLimits& limits = {}) {
  if (!(lambda > 0.0)) throw InputError("lambda must be positive");
  detail::check_pairs(instance, limits);
  const int n = instance.num_experts();
  const int m = instance.num_tasks();
  const std::uint64_t total = std::uint64_t{1} << (n * m);
  OracleSolution best;
  bool have = false;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<Pair> pairs;
    for (int b = 0; b < n * m; ++b) {
      if (mask >> b & 1) pairs.push_back({b / m, b % m});
    }
    const Assignment a(instance, pairs);
    detail::consider(best, have, a.objective(lambda), std::move(pairs));
  }
  return best;
}

// Same maximization, visiting assignments in reflected Gray-code order so that
// consecutive assignments differ by one added or removed pair.
inline OracleSolution brute_force_opt_gray(const Instance& instance, double lambda,
                                           const OracleLimits& limits = {}) {
  if (!(lambda > 0.0)) throw InputError("lambda must be positive");
  detail::check_pairs(instance, limits);
  const int m = instance.num_tasks();
  const int bits = instance.num_experts() * m;
  const std::uint64_t total = std::uint64_t{1} << bits;
  Assignment a(instance);
  OracleSolution best;
  bool have = false;
  detail::consider(best, have, a.objective(lambda), {});
  for (std::uint64_t step = 1; step < total; ++step) {
    const int b = std::countr_zero(step);
    const int expert = b / m;
    const int task = b % m;
    if (!a.remove(expert, task)) a.add(expert, task);
    detail::consider(best, have, a.objective(lambda), a.pairs());
  }
  return best;
}

// Maximum total coverage over assignments where every expert holds at most
// tau tasks. Enumerates, per expert, every task subset of size <= tau.
inline double brute_force_coverage_opt(const Instance& instance, int tau,
                                       const OracleLimits& limits = {}) {
  detail::check_pairs(instance, limits);
  if (tau <= 0) return 0.0;
  const int n = instance.num_experts();
  const int m = instance.num_tasks();
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t s = 0; s < (1u << m); ++s) {
    if (std::popcount(s) <= tau) subsets.push_back(s);
  }
  Assignment a(instance);
  double best = 0.0;
  std::function<void(int)> dfs = [&](int expert) {
    if (expert == n) {
      best = std::max(best, a.total_coverage());
      return;
    }
    for (std::uint32_t s : subsets) {
      for (int j = 0; j < m; ++j) {
        if (s >> j & 1) a.add(expert, j);
      }
      dfs(expert + 1);
      for (int j = 0; j < m; ++j) {
        if (s >> j & 1) a.remove(expert, j);
      }
    }
  };
  dfs(0);
  return best;
}

struct OracleMatching {
  std::vector<int> task_team;  // -1 when unassigned
  std::int64_t scaled_value = 0;
  double value = 0.0;
};

// Optimum of the team-matching integer program: each task takes at most one
// team and each expert, summed over every team containing it, serves at most
// tau tasks. membership[k] lists the experts of team k.
inline OracleMatching brute_force_teams_matching(const CostMatrix& cost,
                                                 const std::vector<std::vector<int>>& membership,
                                                 int tau, const OracleLimits& limits = {}) {
  if (static_cast<int>(membership.size()) != cost.num_teams()) {
    throw InputError("membership must list every team");
  }
  const int teams = cost.num_teams();
  const int tasks = cost.num_tasks();
  double leaves = 1.0;
  for (int j = 0; j < tasks; ++j) leaves *= teams + 1;
  if (leaves > static_cast<double>(limits.max_matchings)) {
    throw SizeError("matching enumeration exceeds limit");
  }
  int experts = 0;
  for (const auto& members : membership) {
    for (int x : members) experts = std::max(experts, x + 1);
  }
  std::vector<int> load(static_cast<std::size_t>(experts), 0);
  std::vector<int> current(static_cast<std::size_t>(tasks), -1);
  OracleMatching best{current, 0, 0.0};
  std::function<void(int, std::int64_t)> dfs = [&](int task, std::int64_t value) {
    if (task == tasks) {
      if (value > best.scaled_value) best = {current, value, 0.0};
      return;
    }
    dfs(task + 1, value);
    for (int k = 0; k < teams; ++k) {
      const auto& members = membership[static_cast<std::size_t>(k)];
      const bool fits = std::all_of(members.begin(), members.end(), [&](int x) {
        return load[static_cast<std::size_t>(x)] < tau;
      });
      if (!fits) continue;
      for (int x : members) ++load[static_cast<std::size_t>(x)];
      current[static_cast<std::size_t>(task)] = k;
      dfs(task + 1, value + cost.scaled(k, task));
      current[static_cast<std::size_t>(task)] = -1;
      for (int x : members) --load[static_cast<std::size_t>(x)];
    }
  };
  if (tau > 0) dfs(0, 0);
  best.value = static_cast<double>(best.scaled_value) / static_cast<double>(cost.scale());
  return best;
}

// Per-team capacity only: team k is treated as the single expert k.
inline OracleMatching brute_force_team_capacity_matching(const CostMatrix& cost, int tau,
                                                         const OracleLimits& limits = {}) {
  std::vector<std::vector<int>> identity(static_cast<std::size_t>(cost.num_teams()));
  for (int k = 0; k < cost.num_teams(); ++k) identity[static_cast<std::size_t>(k)] = {k};
  return brute_force_teams_matching(cost, identity, tau, limits);
}

using Rational = boost::rational<std::int64_t>;

// Fractional optimum (in scaled units) of
//   max Σ c_kj x_kj  s.t.  Σ_k x_kj <= 1,  Σ_j x_kj <= tau,  x >= 0
// by a dense simplex over exact rationals with Bland's rule.
inline Rational lp_relaxation_value(const CostMatrix& cost, int tau) {
  const int teams = cost.num_teams();
  const int tasks = cost.num_tasks();
  const int vars = teams * tasks;
  const int rows = tasks + teams;
  const int cols = vars + rows;  // structural then slack
  // tableau[r] = coefficients..., rhs ; objective row holds reduced costs.
  std::vector<std::vector<Rational>> t(static_cast<std::size_t>(rows) + 1,
                                       std::vector<Rational>(static_cast<std::size_t>(cols) + 1));
  auto at = [&](int r, int c) -> Rational& {
    return t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  };
  for (int k = 0; k < teams; ++k) {
    for (int j = 0; j < tasks; ++j) {
      const int v = k * tasks + j;
      at(j, v) = 1;
      at(tasks + k, v) = 1;
      at(rows, v) = -Rational(cost.scaled(k, j));
    }
  }
  // Mixed rational/int comparisons recurse under C++20 rewritten operators in
  // some Boost releases, so compare against a Rational zero.
  const Rational zero(0);
  std::vector<int> basis(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r) {
    at(r, vars + r) = 1;
    at(r, cols) = r < tasks ? 1 : tau;
    basis[static_cast<std::size_t>(r)] = vars + r;
  }
  while (true) {
    int enter = -1;
    for (int c = 0; c < cols; ++c) {
      if (at(rows, c) < zero) {
        enter = c;
        break;
      }
    }
    if (enter < 0) break;
    int leave = -1;
    Rational best_ratio;
    for (int r = 0; r < rows; ++r) {
      if (at(r, enter) <= zero) continue;
      const Rational ratio = at(r, cols) / at(r, enter);
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[static_cast<std::size_t>(r)] < basis[static_cast<std::size_t>(leave)])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave < 0) throw InputError("unbounded relaxation");
    const Rational pivot = at(leave, enter);
    for (int c = 0; c <= cols; ++c) at(leave, c) /= pivot;
    for (int r = 0; r <= rows; ++r) {
      if (r == leave || at(r, enter) == zero) continue;
      const Rational factor = at(r, enter);
      for (int c = 0; c <= cols; ++c) at(r, c) -= factor * at(leave, c);
    }
    basis[static_cast<std::size_t>(leave)] = enter;
  }
  return at(rows, cols);
}

}  // namespace teamform

#endif  // TEAMFORM_ORACLE_HPP_
