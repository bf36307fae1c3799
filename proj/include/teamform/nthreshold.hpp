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

#ifndef TEAMFORM_NTHRESHOLD_HPP_
#define TEAMFORM_NTHRESHOLD_HPP_

#include <map>
#include <string>
#include <vector>

#include "teamform/assignment.hpp"
#include "teamform/coordination_graph.hpp"
#include "teamform/errors.hpp"
#include "teamform/instance.hpp"
#include "teamform/team_assignment.hpp"
#include "teamform/threshold_greedy.hpp"
#include "teamform/threshold_search.hpp"

namespace teamform {

enum class CandidateMode { kR, kAllR };
enum class Matcher { kExact, kGreedy };

struct NThresholdConfig {
  double radius = 0.0;
  double lambda = 0.0;
  CandidateMode candidates = CandidateMode::kR;
  int k = 5;  // radius splits for kAllR
  Matcher matcher = Matcher::kExact;
  SearchMode search = SearchMode::kExpLinear;
  // Stop at the first drop of F_τ. Heuristic here, since the per-threshold
  // solutions are not nested; disable to scan every τ.
  bool early_stop = true;

  void validate() const {
    if (!(radius > 0.0)) throw InputError("radius must be positive");
    if (!(lambda > 0.0)) throw InputError("lambda must be positive");
    if (k < 1) throw InputError("k must be at least 1");
  }
};

// Variant label such as "NThreshold-R-LP" or "NThreshold-All-Greedy".
inline std::string variant_name(const NThresholdConfig& config) {
  std::string name = "NThreshold-";
  name += config.candidates == CandidateMode::kR ? "R-" : "All-";
  name += config.matcher == Matcher::kExact ? "LP" : "Greedy";
  return name;
}

struct NThresholdResult : ThresholdResult {
  std::vector<Team> candidates;   // deduplicated
  std::vector<int> multiplicity;  // copies of each candidate before deduplication
  int repaired_teams = 0;         // at the selected τ
};

struct CandidateFamily {
  std::vector<Team> teams;
  std::vector<int> multiplicity;
};

// All candidate teams of the configured mode with repeated member sets merged.
// A team generated c times may serve c·τ tasks, which is what the matching
// over the raw family allows.
inline CandidateFamily candidate_family(const CoordinationGraph& graph, const NThresholdConfig& config) {
  config.validate();
  std::vector<Team> raw;
  const int splits = config.candidates == CandidateMode::kR ? 1 : config.k;
  for (int step = 1; step <= splits; ++step) {
    const double radius = step == splits ? config.radius : config.radius * step / splits;
    for (Team& team : candidate_teams_r(graph, radius)) raw.push_back(std::move(team));
  }
  CandidateFamily family;
  std::map<std::vector<int>, std::size_t> index;
  for (Team& team : raw) {
    auto [it, inserted] = index.try_emplace(team.members, family.teams.size());
    if (inserted) {
      family.teams.push_back(std::move(team));
      family.multiplicity.push_back(1);
    } else {
      ++family.multiplicity[it->second];
    }
  }
  return family;
}

// Shrinks every task team whose radius exceeds r to the ball of radius r, around
// one of its members, that covers the most skills of the task (ties: smallest
// center). Only removes pairs. Returns the number of teams changed.
inline int enforce_radius(Assignment& assignment, const CoordinationGraph& graph, double r) {
  const Instance& instance = assignment.instance();
  int changed = 0;
  for (int j = 0; j < instance.num_tasks(); ++j) {
    const std::vector<int> members = assignment.team(j);
    if (members.size() < 2 || team_radius(members, graph).radius <= r) continue;
    int best_center = -1;
    std::size_t best_cover = 0;
    for (int c : members) {
      SkillSet cover(instance.num_skills());
      for (int x : members) {
        if (graph.distance(c, x) <= r) cover.insert_common(instance.expert(x).skills, instance.task(j).skills);
      }
      if (best_center < 0 || cover.size() > best_cover) {
        best_center = c;
        best_cover = cover.size();
      }
    }
    for (int x : members) {
      if (graph.distance(best_center, x) > r) assignment.remove(x, j);
    }
    ++changed;
  }
  return changed;
}

// For each visited threshold τ: match candidate teams to tasks with at most τ
// tasks per generated team, give every task all members of its team, prune experts back
// to load τ, restore the radius bound where pruning removed a team's center,
// and score F_τ = λ·C − τ. The best-scoring assignment is returned.
inline NThresholdResult nthreshold(const Instance& instance, const CoordinationGraph& graph,
                                   const NThresholdConfig& config) {
  config.validate();
  if (graph.num_experts() != instance.num_experts()) {
    throw InputError("graph and instance disagree on the number of experts");
  }
  CandidateFamily family = candidate_family(graph, config);
  const std::vector<Team>& teams = family.teams;
  const CostMatrix cost = CostMatrix::from_teams(instance, teams);
  std::vector<int> capacity(teams.size());

  struct Step {
    Assignment assignment;
    int repaired;
  };
  std::map<int, Step> steps;
  std::map<int, double> coverage;
  auto evaluate = [&](int tau) {
    for (std::size_t k = 0; k < teams.size(); ++k) capacity[k] = tau * family.multiplicity[k];
    const TeamTaskMatching matching = config.matcher == Matcher::kExact
                                          ? assign_teams_exact(cost, capacity)
                                          : assign_teams_greedy(cost, capacity);
    Assignment pruned = team_pruning(expand_matching(instance, teams, matching), tau);
    const int repaired = enforce_radius(pruned, graph, config.radius);
    const double c = pruned.total_coverage();
    coverage[tau] = c;
    steps.emplace(tau, Step{std::move(pruned), repaired});
    return config.lambda * c - tau;
  };
  const auto search =
      search_thresholds(instance.num_tasks(), config.search, config.early_stop, evaluate);

  Assignment chosen = search.best_tau > 0 ? steps.at(search.best_tau).assignment : Assignment(instance);
  const int repaired = search.best_tau > 0 ? steps.at(search.best_tau).repaired : 0;
  return NThresholdResult{
      {detail::finish(std::move(chosen), detail::make_trace(search, coverage), config.lambda)},
      std::move(family.teams),
      std::move(family.multiplicity),
      repaired};
}

}  // namespace teamform

#endif  // TEAMFORM_NTHRESHOLD_HPP_
