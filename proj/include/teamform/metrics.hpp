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

#ifndef TEAMFORM_METRICS_HPP_
#define TEAMFORM_METRICS_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "teamform/assignment.hpp"
#include "teamform/coordination_graph.hpp"
#include "teamform/errors.hpp"
#include "teamform/instance.hpp"

namespace teamform {

struct TeamRow {
  int task = 0;
  int size = 0;
  double radius = 0.0;
  double density = 0.0;
  std::optional<double> pairwise;  // absent for singleton teams
};

struct TeamReport {
  std::vector<TeamRow> rows;  // non-empty teams, in task order
  double avg_size = 0.0;
  int max_size = 0;
  double avg_radius = 0.0;
  double avg_density = 0.0;
  std::optional<double> avg_pairwise;
  int singleton_teams = 0;  // rows left out of avg_pairwise
};

// Density is 1 + (sum of member degrees in the team-induced subgraph) / |T|,
// so an edgeless team scores exactly 1.
inline TeamRow team_row(int task, const std::vector<int>& members, const CoordinationGraph& graph) {
  TeamRow row;
  row.task = task;
  row.size = static_cast<int>(members.size());
  row.radius = team_radius(members, graph).radius;
  int degree_sum = 0;
  double distance_sum = 0.0;
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      if (graph.adjacent(members[a], members[b])) degree_sum += 2;
      distance_sum += graph.distance(members[a], members[b]);
    }
  }
  row.density = 1.0 + static_cast<double>(degree_sum) / row.size;
  if (row.size >= 2) {
    const double pairs = row.size * (row.size - 1) / 2.0;
    row.pairwise = distance_sum / pairs;
  }
  return row;
}

inline TeamReport team_characteristics(const Assignment& assignment, const Instance& instance,
                                       const CoordinationGraph& graph) {
  if (&assignment.instance() != &instance) {
    throw InputError("assignment belongs to a different instance");
  }
  if (graph.num_experts() < instance.num_experts()) {
    throw InputError("graph does not cover every expert");
  }
  TeamReport report;
  double pairwise_sum = 0.0;
  int pairwise_count = 0;
  for (int t = 0; t < instance.num_tasks(); ++t) {
    const auto& members = assignment.team(t);
    if (members.empty()) continue;
    TeamRow row = team_row(t, members, graph);
    report.avg_size += row.size;
    report.max_size = std::max(report.max_size, row.size);
    report.avg_radius += row.radius;
    report.avg_density += row.density;
    if (row.pairwise) {
      pairwise_sum += *row.pairwise;
      ++pairwise_count;
    } else {
      ++report.singleton_teams;
    }
    report.rows.push_back(std::move(row));
  }
  if (!report.rows.empty()) {
    const double count = static_cast<double>(report.rows.size());
    report.avg_size /= count;
    report.avg_radius /= count;
    report.avg_density /= count;
  }
  if (pairwise_count > 0) report.avg_pairwise = pairwise_sum / pairwise_count;
  return report;
}

}  // namespace teamform

#endif  // TEAMFORM_METRICS_HPP_
