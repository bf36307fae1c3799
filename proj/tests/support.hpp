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

#ifndef TEAMFORM_TESTS_SUPPORT_HPP_
#define TEAMFORM_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "teamform/teamform.hpp"

// Fixtures and independent reference implementations. The references use
// std::set arithmetic and plain loops so they share nothing with the library
// beyond the Instance type.

namespace teamform::testing {

// Experts X1={a,b}, X2={c}, X3={a,c,d}; tasks J1={a,b}, J2={c,d}.
inline Instance tiny() {
  return Instance::from_names({"X1", "X2", "X3"}, {{"a", "b"}, {"c"}, {"a", "c", "d"}},
                              {"J1", "J2"}, {{"a", "b"}, {"c", "d"}});
}

// Each expert holds each skill with probability p_expert; each task holds each
// skill with probability p_task and at least one skill.
inline Instance random_instance(Rng64& rng, int n, int m, int skills, double p_expert = 0.4,
                                double p_task = 0.5) {
  std::vector<std::vector<SkillId>> experts(static_cast<std::size_t>(n));
  std::vector<std::vector<SkillId>> tasks(static_cast<std::size_t>(m));
  for (auto& e : experts) {
    for (int s = 0; s < skills; ++s) {
      if (rng.bernoulli(p_expert)) e.push_back(static_cast<SkillId>(s));
    }
  }
  for (auto& t : tasks) {
    for (int s = 0; s < skills; ++s) {
      if (rng.bernoulli(p_task)) t.push_back(static_cast<SkillId>(s));
    }
    if (t.empty()) t.push_back(static_cast<SkillId>(rng.below(static_cast<std::uint64_t>(skills))));
  }
  return Instance::from_ids(static_cast<std::size_t>(skills), experts, tasks);
}

inline int random_int(Rng64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
}

inline std::vector<Edge> random_edges(Rng64& rng, int n, double p, double max_weight) {
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (rng.bernoulli(p)) edges.push_back({a, b, rng.uniform() * max_weight});
    }
  }
  return edges;
}

inline std::set<SkillId> skill_set(const SkillSet& s) { return {s.ids().begin(), s.ids().end()}; }

// Coverage of every task recomputed from a pair list.
inline double reference_coverage(const Instance& instance, const std::vector<Pair>& pairs) {
  double total = 0.0;
  for (int j = 0; j < instance.num_tasks(); ++j) {
    const auto need = skill_set(instance.task(j).skills);
    std::set<SkillId> have;
    for (const Pair& p : pairs) {
      if (p.task != j) continue;
      for (SkillId s : instance.expert(p.expert).skills.ids()) {
        if (need.count(s)) have.insert(s);
      }
    }
    total += static_cast<double>(have.size()) / static_cast<double>(need.size());
  }
  return total;
}

inline int reference_max_load(const Instance& instance, const std::vector<Pair>& pairs) {
  std::vector<int> load(static_cast<std::size_t>(instance.num_experts()), 0);
  for (const Pair& p : pairs) ++load[static_cast<std::size_t>(p.expert)];
  return load.empty() ? 0 : *std::max_element(load.begin(), load.end());
}

// Non-lazy greedy: every step rescans all pairs, takes the largest exact gain
// (smallest (expert, task) on ties) and stops once no gain is positive.
// run(cap) may be called with growing caps to continue from the current state.
class NaiveGreedy {
 public:
  explicit NaiveGreedy(const Instance& instance)
      : instance_(instance),
        covered_(static_cast<std::size_t>(instance.num_tasks())),
        team_(static_cast<std::size_t>(instance.num_tasks())),
        load_(static_cast<std::size_t>(instance.num_experts()), 0) {}

  const std::vector<Pair>& picks() const { return picks_; }

  void run(int cap) {
    const int n = instance_.num_experts();
    const int m = instance_.num_tasks();
    while (true) {
      int best_i = -1;
      int best_j = -1;
      long long best_num = 0;
      long long best_den = 1;
      for (int i = 0; i < n; ++i) {
        if (load_[static_cast<std::size_t>(i)] >= cap) continue;
        for (int j = 0; j < m; ++j) {
          if (team_[static_cast<std::size_t>(j)].count(i)) continue;
          long long num = 0;
          for (SkillId s : instance_.expert(i).skills.ids()) {
            if (instance_.task(j).skills.contains(s) && !covered_[static_cast<std::size_t>(j)].count(s)) ++num;
          }
          const long long den = instance_.task_size(j);
          if (num * best_den > best_num * den) {
            best_i = i;
            best_j = j;
            best_num = num;
            best_den = den;
          }
        }
      }
      if (best_i < 0) return;
      for (SkillId s : instance_.expert(best_i).skills.ids()) {
        if (instance_.task(best_j).skills.contains(s)) covered_[static_cast<std::size_t>(best_j)].insert(s);
      }
      team_[static_cast<std::size_t>(best_j)].insert(best_i);
      ++load_[static_cast<std::size_t>(best_i)];
      picks_.push_back({best_i, best_j});
    }
  }

 private:
  const Instance& instance_;
  std::vector<std::set<SkillId>> covered_;
  std::vector<std::set<int>> team_;
  std::vector<int> load_;
  std::vector<Pair> picks_;
};

// Pairs of a fresh non-lazy run at capacity tau, in pick order.
inline std::vector<Pair> naive_greedy(const Instance& instance, int tau) {
  NaiveGreedy g(instance);
  g.run(tau);
  return g.picks();
}

// Plain Floyd-Warshall on the raw edge list.
inline std::vector<std::vector<double>> floyd_warshall(int n, const std::vector<Edge>& edges) {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> d(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n), inf));
  for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 0.0;
  for (const Edge& e : edges) {
    if (e.from == e.to) continue;
    auto& ab = d[static_cast<std::size_t>(e.from)][static_cast<std::size_t>(e.to)];
    ab = std::min(ab, e.weight);
    d[static_cast<std::size_t>(e.to)][static_cast<std::size_t>(e.from)] = ab;
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const double via = d[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +
                           d[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        auto& ij = d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (via < ij) ij = via;
      }
    }
  }
  return d;
}

// Random matrix of covered counts over random task sizes.
inline CostMatrix random_cost(Rng64& rng, int teams, int tasks, int max_size = 4) {
  std::vector<int> sizes(static_cast<std::size_t>(tasks));
  for (auto& s : sizes) s = random_int(rng, 1, max_size);
  std::vector<std::vector<int>> counts(static_cast<std::size_t>(teams), std::vector<int>(static_cast<std::size_t>(tasks)));
  for (auto& row : counts) {
    for (int j = 0; j < tasks; ++j) row[static_cast<std::size_t>(j)] = random_int(rng, 0, sizes[static_cast<std::size_t>(j)]);
  }
  return CostMatrix(counts, sizes);
}

// Exhaustive per-team-capacity matching value in scaled units, written
// independently of the oracle module.
inline std::int64_t enumerate_matching(const CostMatrix& cost, int tau) {
  const int teams = cost.num_teams();
  const int tasks = cost.num_tasks();
  std::vector<int> used(static_cast<std::size_t>(teams), 0);
  std::int64_t best = 0;
  auto rec = [&](auto&& self, int j, std::int64_t value) -> void {
    if (j == tasks) {
      best = std::max(best, value);
      return;
    }
    self(self, j + 1, value);
    for (int k = 0; k < teams; ++k) {
      if (used[static_cast<std::size_t>(k)] >= tau) continue;
      ++used[static_cast<std::size_t>(k)];
      self(self, j + 1, value + cost.scaled(k, j));
      --used[static_cast<std::size_t>(k)];
    }
  };
  rec(rec, 0, 0);
  return best;
}

}  // namespace teamform::testing

#endif  // TEAMFORM_TESTS_SUPPORT_HPP_
