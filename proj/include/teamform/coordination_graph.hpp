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

#ifndef TEAMFORM_COORDINATION_GRAPH_HPP_
#define TEAMFORM_COORDINATION_GRAPH_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <queue>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "teamform/errors.hpp"

namespace teamform {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct Edge {
  int from = 0;
  int to = 0;
  double weight = 0.0;
};

// Undirected expert graph with non-negative coordination costs and the
// all-pairs shortest-path distances derived from it (kInfinity between
// components).
class CoordinationGraph {
 public:
  CoordinationGraph() = default;

  int num_experts() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }

  double distance(int a, int b) const {
    return closure_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) +
                    static_cast<std::size_t>(b)];
  }

  bool adjacent(int a, int b) const {
    const auto& adj = neighbors_[static_cast<std::size_t>(a)];
    return std::binary_search(adj.begin(), adj.end(), b);
  }
  const std::vector<int>& neighbors(int a) const { return neighbors_[static_cast<std::size_t>(a)]; }

  friend CoordinationGraph metric_closure(int n, std::span<const Edge> edges);

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<double> closure_;
};

// Builds the graph and its shortest-path closure. Parallel edges keep the
// cheapest weight; self loops are ignored. Sparse graphs run Dijkstra from
// every source, dense ones Floyd-Warshall.
inline CoordinationGraph metric_closure(int n, std::span<const Edge> edges) {
  if (n < 0) throw InputError("negative expert count");
  CoordinationGraph g;
  g.n_ = n;
  const auto un = static_cast<std::size_t>(n);
  g.closure_.assign(un * un, kInfinity);
  for (std::size_t i = 0; i < un; ++i) g.closure_[i * un + i] = 0.0;

  std::vector<std::vector<std::pair<int, double>>> adj(un);
  g.neighbors_.assign(un, {});
  for (const Edge& e : edges) {
    if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n) {
      throw InputError("edge endpoint out of range");
    }
    if (!(e.weight >= 0.0)) throw InputError("edge weights must be non-negative");
    if (e.from == e.to) continue;
    g.edges_.push_back(e);
    const auto a = static_cast<std::size_t>(e.from);
    const auto b = static_cast<std::size_t>(e.to);
    adj[a].emplace_back(e.to, e.weight);
    adj[b].emplace_back(e.from, e.weight);
    g.neighbors_[a].push_back(e.to);
    g.neighbors_[b].push_back(e.from);
  }
  for (auto& nb : g.neighbors_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }

  double* d = g.closure_.data();
  if (g.edges_.size() * 8 >= un * un) {
    for (const Edge& e : g.edges_) {
      const auto a = static_cast<std::size_t>(e.from);
      const auto b = static_cast<std::size_t>(e.to);
      d[a * un + b] = std::min(d[a * un + b], e.weight);
      d[b * un + a] = std::min(d[b * un + a], e.weight);
    }
    for (std::size_t k = 0; k < un; ++k) {
      const double* row_k = d + k * un;
      for (std::size_t i = 0; i < un; ++i) {
        const double dik = d[i * un + k];
        if (dik == kInfinity) continue;
        double* row_i = d + i * un;
        for (std::size_t j = 0; j < un; ++j) {
          const double via = dik + row_k[j];
          if (via < row_i[j]) row_i[j] = via;
        }
      }
    }
  } else {
    using Item = std::pair<double, int>;
    for (std::size_t s = 0; s < un; ++s) {
      double* dist = d + s * un;
      std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
      heap.emplace(0.0, static_cast<int>(s));
      while (!heap.empty()) {
        auto [du, u] = heap.top();
        heap.pop();
        if (du > dist[u]) continue;
        for (auto [v, w] : adj[static_cast<std::size_t>(u)]) {
          if (du + w < dist[v]) {
            dist[v] = du + w;
            heap.emplace(dist[v], v);
          }
        }
      }
    }
  }
  return g;
}

// A set of experts together with the member that attains its radius.
struct Team {
  std::vector<int> members;  // ascending, non-empty
  int center = 0;
  double radius = 0.0;

  bool contains(int expert) const {
    return std::binary_search(members.begin(), members.end(), expert);
  }
};

struct RadiusResult {
  double radius = 0.0;
  int center = 0;
};

// min over members c of max over members x of d(c, x). Ties pick the smallest
// center.
inline RadiusResult team_radius(std::span<const int> members, const CoordinationGraph& graph) {
  if (members.empty()) throw InputError("team must be non-empty");
  RadiusResult best{kInfinity, members.front()};
  bool found = false;
  for (int c : members) {
    double worst = 0.0;
    for (int x : members) worst = std::max(worst, graph.distance(c, x));
    if (!found || worst < best.radius) {
      best = {worst, c};
      found = true;
    }
  }
  return best;
}

inline double team_diameter(std::span<const int> members, const CoordinationGraph& graph) {
  if (members.empty()) throw InputError("team must be non-empty");
  double diameter = 0.0;
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      diameter = std::max(diameter, graph.distance(members[a], members[b]));
    }
  }
  return diameter;
}

inline Team make_team(std::vector<int> members, const CoordinationGraph& graph) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  const RadiusResult r = team_radius(members, graph);
  return Team{std::move(members), r.center, r.radius};
}

// One team per expert i: {i} ∪ {j : d(i, j) <= r}.
inline std::vector<Team> candidate_teams_r(const CoordinationGraph& graph, double r) {
  if (!(r > 0.0)) throw InputError("radius must be positive");
  std::vector<Team> teams;
  teams.reserve(static_cast<std::size_t>(graph.num_experts()));
  for (int i = 0; i < graph.num_experts(); ++i) {
    std::vector<int> members;
    for (int j = 0; j < graph.num_experts(); ++j) {
      if (j == i || graph.distance(i, j) <= r) members.push_back(j);
    }
    teams.push_back(make_team(std::move(members), graph));
  }
  return teams;
}

// candidate_teams_r at r' = r/k, 2r/k, ..., r; repeated member sets are
// dropped, keeping the first occurrence.
inline std::vector<Team> candidate_teams_allr(const CoordinationGraph& graph, double r, int k) {
  if (!(r > 0.0)) throw InputError("radius must be positive");
  if (k < 1) throw InputError("k must be at least 1");
  std::vector<Team> teams;
  std::set<std::vector<int>> seen;
  for (int step = 1; step <= k; ++step) {
    const double radius = step == k ? r : r * step / k;
    for (Team& team : candidate_teams_r(graph, radius)) {
      if (seen.insert(team.members).second) teams.push_back(std::move(team));
    }
  }
  return teams;
}

// Drops repeated member sets, keeping the first occurrence.
inline std::vector<Team> dedupe_teams(std::vector<Team> teams) {
  std::set<std::vector<int>> seen;
  std::vector<Team> out;
  for (Team& team : teams) {
    if (seen.insert(team.members).second) out.push_back(std::move(team));
  }
  return out;
}

}  // namespace teamform

#endif  // TEAMFORM_COORDINATION_GRAPH_HPP_
