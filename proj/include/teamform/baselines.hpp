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

#ifndef TEAMFORM_BASELINES_HPP_
#define TEAMFORM_BASELINES_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <tuple>
#include <vector>

#include "teamform/assignment.hpp"
#include "teamform/coordination_graph.hpp"
#include "teamform/errors.hpp"
#include "teamform/instance.hpp"
#include "teamform/rng.hpp"
#include "teamform/threshold_greedy.hpp"
#include "teamform/threshold_search.hpp"

namespace teamform {

struct BaselineConfig {
  double beta = 0.0;  // minimum coverage gain for an assignment
  std::uint64_t seed = 0;
  std::optional<int> tau;         // GreedyIndividual: fixed workload
  std::optional<double> radius;   // GreedyIndividual: pairwise distance bound
  double lambda = 1.0;            // GreedyIndividual: objective for the τ search
  SearchMode search = SearchMode::kExpLinear;

  void validate() const {
    if (!(beta >= 0.0)) throw InputError("beta must be non-negative");
  }
};

// Default grid for tuning beta.
inline constexpr std::array<double, 5> kBetaGrid = {0.0, 0.1, 0.2, 0.3, 0.5};

// Tasks in index order; for each, experts are visited in a freshly shuffled
// order and the one with the largest gain on that task (first in the shuffle
// on ties) is added while its gain exceeds beta.
inline Assignment task_greedy(const Instance& instance, const BaselineConfig& config) {
  config.validate();
  Rng64 rng(config.seed);
  Assignment out(instance);
  std::vector<int> order(static_cast<std::size_t>(instance.num_experts()));
  std::iota(order.begin(), order.end(), 0);
  for (int j = 0; j < instance.num_tasks(); ++j) {
    rng.shuffle(std::span<int>(order));
    std::vector<int> pool;
    for (int i : order) {
      if (out.gain_count(i, j) > 0) pool.push_back(i);
    }
    while (true) {
      int best = -1;
      Fraction best_gain;
      for (int i : pool) {
        if (out.contains(i, j)) continue;
        const Fraction g = out.gain(i, j);
        if (best < 0 || g > best_gain) {
          best = i;
          best_gain = g;
        }
      }
      if (best < 0 || !(best_gain.value() > config.beta)) break;
      out.add(best, j);
    }
  }
  return out;
}

namespace detail {

struct StaticPair {
  Fraction value;
  int expert;
  int task;
};

// All pairs with positive gain on the empty assignment, by decreasing gain,
// ties by (expert, task).
inline std::vector<StaticPair> static_gains(const Instance& instance) {
  const Assignment empty(instance);
  std::vector<StaticPair> pairs;
  for (int i = 0; i < instance.num_experts(); ++i) {
    for (int j = 0; j < instance.num_tasks(); ++j) {
      const Fraction v = empty.gain(i, j);
      if (v.num > 0) pairs.push_back({v, i, j});
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const StaticPair& a, const StaticPair& b) {
    if (a.value != b.value) return a.value > b.value;
    return std::tie(a.expert, a.task) < std::tie(b.expert, b.task);
  });
  return pairs;
}

}  // namespace detail

// Adds pairs by decreasing gain measured on the empty assignment, never
// re-evaluated, as long as that gain exceeds beta.
inline Assignment no_update_greedy(const Instance& instance, const BaselineConfig& config) {
  config.validate();
  Assignment out(instance);
  for (const auto& p : detail::static_gains(instance)) {
    if (!(p.value.value() > config.beta)) break;
    out.add(p.expert, p.task);
  }
  return out;
}

// Static-gain order with a workload cap tau; an expert joins a task only if it
// is within distance radius of every expert already on that task.
inline Assignment greedy_individual_at(const Instance& instance, const CoordinationGraph& graph,
                                       int tau, double radius, double beta = 0.0) {
  if (tau < 0) throw InputError("tau must be non-negative");
  if (!(radius > 0.0)) throw InputError("radius must be positive");
  if (graph.num_experts() != instance.num_experts()) {
    throw InputError("graph and instance disagree on the number of experts");
  }
  Assignment out(instance);
  for (const auto& p : detail::static_gains(instance)) {
    if (!(p.value.value() > beta)) break;
    if (out.load(p.expert) >= tau) continue;
    const auto& team = out.team(p.task);
    const bool close = std::all_of(team.begin(), team.end(), [&](int member) {
      return graph.distance(p.expert, member) <= radius;
    });
    if (close) out.add(p.expert, p.task);
  }
  return out;
}

// With config.tau set, a single run at that workload. Otherwise the same
// threshold search as NThreshold over λ·C − τ.
inline ThresholdResult greedy_individual(const Instance& instance, const CoordinationGraph& graph,
                                         const BaselineConfig& config) {
  config.validate();
  if (!config.radius) throw InputError("greedy-individual requires a radius");
  const double r = *config.radius;
  if (config.tau) {
    Assignment a = greedy_individual_at(instance, graph, *config.tau, r, config.beta);
    ThresholdTrace trace;
    const double c = a.total_coverage();
    trace.entries.push_back({*config.tau, c, config.lambda * c - *config.tau});
    trace.best_tau = *config.tau;
    trace.best_objective = trace.entries.back().objective;
    return detail::finish(std::move(a), std::move(trace), config.lambda);
  }
  if (!(config.lambda > 0.0)) throw InputError("lambda must be positive");
  std::map<int, double> coverage;
  std::map<int, Assignment> runs;
  const auto search = search_thresholds(
      instance.num_tasks(), config.search, /*early_stop=*/true, [&](int tau) {
        Assignment a = greedy_individual_at(instance, graph, tau, r, config.beta);
        const double c = a.total_coverage();
        coverage[tau] = c;
        runs.emplace(tau, std::move(a));
        return config.lambda * c - tau;
      });
  Assignment chosen = search.best_tau > 0 ? runs.at(search.best_tau) : Assignment(instance);
  return detail::finish(std::move(chosen), detail::make_trace(search, coverage), config.lambda);
}

struct BetaTuning {
  double beta = 0.0;
  double objective = 0.0;  // λ·C − Lmax of the chosen run
  Assignment assignment;
};

// Runs `solve(beta)` over the grid and keeps the best realized objective
// (ties: first beta in the grid).
template <typename Solve>
BetaTuning tune_beta(double lambda, std::span<const double> grid, Solve&& solve) {
  if (grid.empty()) throw InputError("beta grid is empty");
  std::optional<BetaTuning> best;
  for (double beta : grid) {
    Assignment a = solve(beta);
    const double value = a.objective(lambda);
    if (!best || objective_less(best->objective, value)) {
      best.emplace(BetaTuning{beta, value, std::move(a)});
    }
  }
  return std::move(*best);
}

}  // namespace teamform

#endif  // TEAMFORM_BASELINES_HPP_
