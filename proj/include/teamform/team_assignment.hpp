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

#ifndef TEAMFORM_TEAM_ASSIGNMENT_HPP_
#define TEAMFORM_TEAM_ASSIGNMENT_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <span>
#include <tuple>
#include <vector>

#include "teamform/assignment.hpp"
#include "teamform/coordination_graph.hpp"
#include "teamform/errors.hpp"
#include "teamform/instance.hpp"

namespace teamform {

// Team-by-task coverage C_kj = covered_kj / |J_j|, also held as integers
// scaled by the lcm of all task sizes so matchings compare exactly. If that
// lcm exceeds kMaxExactScale the matrix falls back to the fixed scale
// kMaxExactScale with rounding and exact() turns false.
class CostMatrix {
 public:
  static constexpr std::int64_t kMaxExactScale = std::int64_t{1} << 40;

  CostMatrix(std::vector<std::vector<int>> covered, std::vector<int> task_sizes)
      : covered_(std::move(covered)), sizes_(std::move(task_sizes)) {
    for (int size : sizes_) {
      if (size < 1) throw InputError("task size must be positive");
    }
    for (const auto& row : covered_) {
      if (row.size() != sizes_.size()) throw InputError("ragged cost matrix");
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j] < 0 || row[j] > sizes_[j]) throw InputError("covered count out of range");
      }
    }
    scale_ = 1;
    for (int size : sizes_) {
      const std::int64_t next = std::lcm(scale_, std::int64_t{size});
      if (next > kMaxExactScale) {
        exact_ = false;
        scale_ = kMaxExactScale;
        break;
      }
      scale_ = next;
    }
    scaled_.reserve(covered_.size());
    for (const auto& row : covered_) {
      std::vector<std::int64_t> out(row.size());
      for (std::size_t j = 0; j < row.size(); ++j) {
        out[j] = exact_ ? row[j] * (scale_ / sizes_[j])
                        : std::llround(static_cast<double>(row[j]) *
                                       static_cast<double>(scale_) / sizes_[j]);
      }
      scaled_.push_back(std::move(out));
    }
  }

  // covered_kj = |(∪ members' skills) ∩ J_j|.
  static CostMatrix from_teams(const Instance& instance, std::span<const Team> teams) {
    std::vector<std::vector<int>> covered;
    covered.reserve(teams.size());
    for (const Team& team : teams) {
      SkillSet skills(instance.num_skills());
      for (int member : team.members) skills.insert_all(instance.expert(member).skills);
      std::vector<int> row(static_cast<std::size_t>(instance.num_tasks()));
      for (int j = 0; j < instance.num_tasks(); ++j) {
        row[static_cast<std::size_t>(j)] =
            static_cast<int>(SkillSet::common_count(skills, instance.task(j).skills));
      }
      covered.push_back(std::move(row));
    }
    std::vector<int> sizes(static_cast<std::size_t>(instance.num_tasks()));
    for (int j = 0; j < instance.num_tasks(); ++j) sizes[static_cast<std::size_t>(j)] = instance.task_size(j);
    return CostMatrix(std::move(covered), std::move(sizes));
  }

  int num_teams() const { return static_cast<int>(covered_.size()); }
  int num_tasks() const { return static_cast<int>(sizes_.size()); }
  std::int64_t scale() const { return scale_; }
  bool exact() const { return exact_; }

  std::int64_t scaled(int team, int task) const { return scaled_[u(team)][u(task)]; }
  Fraction fraction(int team, int task) const { return {covered_[u(team)][u(task)], sizes_[u(task)]}; }
  double value(int team, int task) const { return fraction(team, task).value(); }

 private:
  static std::size_t u(int k) { return static_cast<std::size_t>(k); }

  std::vector<std::vector<int>> covered_;
  std::vector<int> sizes_;
  std::vector<std::vector<std::int64_t>> scaled_;
  std::int64_t scale_ = 1;
  bool exact_ = true;
};

struct TeamTaskMatching {
  std::vector<int> task_team;   // team per task, -1 when unassigned
  std::int64_t scaled_value = 0;
  double value = 0.0;
};

namespace detail {

inline TeamTaskMatching finish_matching(const CostMatrix& cost, std::vector<int> task_team) {
  TeamTaskMatching out{std::move(task_team)};
  for (int j = 0; j < cost.num_tasks(); ++j) {
    const int k = out.task_team[static_cast<std::size_t>(j)];
    if (k >= 0) out.scaled_value += cost.scaled(k, j);
  }
  out.value = static_cast<double>(out.scaled_value) / static_cast<double>(cost.scale());
  return out;
}

}  // namespace detail

// Maximum-weight assignment with at most one team per task and at most tau
// tasks per team. The constraint matrix is that of a bipartite b-matching, so
// the LP optimum is integral and a min-cost flow finds it: source -> team
// (capacity tau), team -> task (capacity 1, cost -C_kj), task -> sink. Unit
// augmentations along shortest paths (Dijkstra on reduced costs) continue
// while they still lower the cost. Zero-cost pairs are never matched.
//
// capacity[k] bounds the tasks of team k; the overload taking tau uses the
// same bound for every team.
inline TeamTaskMatching assign_teams_exact(const CostMatrix& cost, std::span<const int> capacity) {
  if (static_cast<int>(capacity.size()) != cost.num_teams()) {
    throw InputError("one capacity per team required");
  }
  for (int c : capacity) {
    if (c < 0) throw InputError("capacity must be non-negative");
  }
  const int teams = cost.num_teams();
  const int tasks = cost.num_tasks();
  const int source = teams + tasks;
  const int sink = source + 1;
  const auto nodes = static_cast<std::size_t>(sink) + 1;

  struct Arc {
    int to;
    int cap;
    std::int64_t cost;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out(nodes);
  auto add_arc = [&](int from, int to, int cap, std::int64_t c) {
    out[static_cast<std::size_t>(from)].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({to, cap, c});
    out[static_cast<std::size_t>(to)].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({from, 0, -c});
  };
  int total = 0;
  for (int k = 0; k < teams; ++k) {
    add_arc(source, k, capacity[static_cast<std::size_t>(k)], 0);
    total += capacity[static_cast<std::size_t>(k)];
  }
  for (int k = 0; k < teams; ++k) {
    for (int j = 0; j < tasks; ++j) {
      if (cost.scaled(k, j) > 0) add_arc(k, teams + j, 1, -cost.scaled(k, j));
    }
  }
  for (int j = 0; j < tasks; ++j) add_arc(teams + j, sink, 1, 0);

  // Initial potentials: exact shortest distances in the acyclic start graph.
  constexpr std::int64_t kUnreached = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> potential(nodes, 0);
  for (int j = 0; j < tasks; ++j) {
    std::int64_t best = 0;
    for (int k = 0; k < teams; ++k) best = std::min(best, -cost.scaled(k, j));
    potential[static_cast<std::size_t>(teams + j)] = best;
    potential[static_cast<std::size_t>(sink)] = std::min(potential[static_cast<std::size_t>(sink)], best);
  }

  std::vector<std::int64_t> dist(nodes);
  std::vector<int> via(nodes);
  using Item = std::pair<std::int64_t, int>;
  for (int round = 0; round < total; ++round) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    std::fill(via.begin(), via.end(), -1);
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[static_cast<std::size_t>(source)] = 0;
    heap.emplace(0, source);
    while (!heap.empty()) {
      auto [d, v] = heap.top();
      heap.pop();
      if (d > dist[static_cast<std::size_t>(v)]) continue;
      for (int a : out[static_cast<std::size_t>(v)]) {
        const Arc& arc = arcs[static_cast<std::size_t>(a)];
        if (arc.cap == 0) continue;
        const std::int64_t nd = d + arc.cost + potential[static_cast<std::size_t>(v)] -
                                potential[static_cast<std::size_t>(arc.to)];
        if (nd < dist[static_cast<std::size_t>(arc.to)]) {
          dist[static_cast<std::size_t>(arc.to)] = nd;
          via[static_cast<std::size_t>(arc.to)] = a;
          heap.emplace(nd, arc.to);
        }
      }
    }
    if (dist[static_cast<std::size_t>(sink)] == kUnreached) break;
    const std::int64_t path_cost = dist[static_cast<std::size_t>(sink)] +
                                   potential[static_cast<std::size_t>(sink)] -
                                   potential[static_cast<std::size_t>(source)];
    if (path_cost >= 0) break;
    for (std::size_t v = 0; v < nodes; ++v) {
      if (dist[v] != kUnreached) potential[v] += dist[v];
    }
    for (int v = sink; v != source;) {
      const int a = via[static_cast<std::size_t>(v)];
      arcs[static_cast<std::size_t>(a)].cap -= 1;
      arcs[static_cast<std::size_t>(a ^ 1)].cap += 1;
      v = arcs[static_cast<std::size_t>(a ^ 1)].to;
    }
  }

  std::vector<int> task_team(static_cast<std::size_t>(tasks), -1);
  for (int k = 0; k < teams; ++k) {
    for (int a : out[static_cast<std::size_t>(k)]) {
      const Arc& arc = arcs[static_cast<std::size_t>(a)];
      if (a % 2 == 0 && arc.to >= teams && arc.to < teams + tasks && arc.cap == 0) {
        task_team[static_cast<std::size_t>(arc.to - teams)] = k;
      }
    }
  }
  return detail::finish_matching(cost, std::move(task_team));
}

inline TeamTaskMatching assign_teams_exact(const CostMatrix& cost, int tau) {
  if (tau < 0) throw InputError("tau must be non-negative");
  const std::vector<int> capacity(static_cast<std::size_t>(cost.num_teams()), tau);
  return assign_teams_exact(cost, capacity);
}

// Repeatedly takes the feasible (team, task) pair of largest remaining
// coverage, ties by smallest (team, task). At least half of the optimum.
inline TeamTaskMatching assign_teams_greedy(const CostMatrix& cost, std::span<const int> capacity) {
  if (static_cast<int>(capacity.size()) != cost.num_teams()) {
    throw InputError("one capacity per team required");
  }
  struct Cell {
    Fraction value;
    int team;
    int task;
  };
  std::vector<Cell> cells;
  for (int k = 0; k < cost.num_teams(); ++k) {
    for (int j = 0; j < cost.num_tasks(); ++j) {
      if (cost.scaled(k, j) > 0) cells.push_back({cost.fraction(k, j), k, j});
    }
  }
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    if (a.value != b.value) return a.value > b.value;
    return std::tie(a.team, a.task) < std::tie(b.team, b.task);
  });
  std::vector<int> task_team(static_cast<std::size_t>(cost.num_tasks()), -1);
  std::vector<int> uses(static_cast<std::size_t>(cost.num_teams()), 0);
  for (const Cell& c : cells) {
    auto& slot = task_team[static_cast<std::size_t>(c.task)];
    auto& used = uses[static_cast<std::size_t>(c.team)];
    if (slot >= 0 || used >= capacity[static_cast<std::size_t>(c.team)]) continue;
    slot = c.team;
    ++used;
  }
  return detail::finish_matching(cost, std::move(task_team));
}

inline TeamTaskMatching assign_teams_greedy(const CostMatrix& cost, int tau) {
  if (tau < 0) throw InputError("tau must be non-negative");
  const std::vector<int> capacity(static_cast<std::size_t>(cost.num_teams()), tau);
  return assign_teams_greedy(cost, capacity);
}

// Every member of the team matched to a task is assigned to that task.
inline Assignment expand_matching(const Instance& instance, std::span<const Team> teams,
                                  const TeamTaskMatching& matching) {
  Assignment out(instance);
  for (int j = 0; j < instance.num_tasks(); ++j) {
    const int k = matching.task_team[static_cast<std::size_t>(j)];
    if (k < 0) continue;
    for (int member : teams[static_cast<std::size_t>(k)].members) out.add(member, j);
  }
  return out;
}

// Removes pairs of overloaded experts, cheapest coverage loss first, until no
// expert holds more than tau tasks. After a removal the losses of the
// remaining overloaded members on that task are recomputed. Pairs of experts
// within their limit are never touched. Ties pick the smallest (expert, task).
inline Assignment team_pruning(const Assignment& assignment, int tau) {
  if (tau < 0) throw InputError("tau must be non-negative");
  const Instance& instance = assignment.instance();
  Assignment out = assignment;

  struct Entry {
    Fraction loss;
    int expert;
    int task;
    std::uint32_t stamp;
  };
  struct Higher {
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.loss != b.loss) return a.loss > b.loss;
      return std::tie(a.expert, a.task) > std::tie(b.expert, b.task);
    }
  };
  std::priority_queue<Entry, std::vector<Entry>, Higher> queue;
  std::vector<std::uint32_t> version(static_cast<std::size_t>(instance.num_tasks()), 0);

  for (int i = 0; i < instance.num_experts(); ++i) {
    if (out.load(i) <= tau) continue;
    for (int j : out.tasks_of(i)) queue.push({out.loss(i, j), i, j, 0});
  }
  while (!queue.empty()) {
    const Entry top = queue.top();
    queue.pop();
    if (top.stamp != version[static_cast<std::size_t>(top.task)]) continue;
    if (out.load(top.expert) <= tau) continue;
    out.remove(top.expert, top.task);
    const std::uint32_t stamp = ++version[static_cast<std::size_t>(top.task)];
    for (int member : out.team(top.task)) {
      if (out.load(member) > tau) queue.push({out.loss(member, top.task), member, top.task, stamp});
    }
  }
  return out;
}

}  // namespace teamform

#endif  // TEAMFORM_TEAM_ASSIGNMENT_HPP_
