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

#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "support.hpp"
#include "teamform/teamform.hpp"

namespace teamform {
namespace {

// Path 0 -0.2- 1 -0.3- 2 plus an isolated expert 3.
CoordinationGraph path_graph() {
  const std::vector<Edge> edges = {{0, 1, 0.2}, {1, 2, 0.3}};
  return metric_closure(4, edges);
}

TEST(TeamRow, SingletonHasNoPairwiseDistance) {
  const TeamRow row = team_row(0, {2}, path_graph());
  EXPECT_EQ(row.size, 1);
  EXPECT_DOUBLE_EQ(row.radius, 0.0);
  EXPECT_DOUBLE_EQ(row.density, 1.0);
  EXPECT_FALSE(row.pairwise.has_value());
}

TEST(TeamRow, AdjacentPair) {
  const TeamRow row = team_row(0, {0, 1}, path_graph());
  EXPECT_DOUBLE_EQ(row.radius, 0.2);
  EXPECT_DOUBLE_EQ(row.density, 2.0);
  EXPECT_DOUBLE_EQ(*row.pairwise, 0.2);
}

TEST(TeamRow, NonAdjacentPairUsesClosureDistance) {
  const TeamRow row = team_row(0, {0, 2}, path_graph());
  EXPECT_DOUBLE_EQ(row.radius, 0.5);
  EXPECT_DOUBLE_EQ(row.density, 1.0);
  EXPECT_DOUBLE_EQ(*row.pairwise, 0.5);
}

TEST(TeamRow, PathOfThree) {
  const TeamRow row = team_row(0, {0, 1, 2}, path_graph());
  EXPECT_DOUBLE_EQ(row.radius, 0.3);               // centred on expert 1
  EXPECT_DOUBLE_EQ(row.density, 1.0 + 4.0 / 3.0);  // two edges
  EXPECT_DOUBLE_EQ(*row.pairwise, (0.2 + 0.5 + 0.3) / 3.0);
}

TEST(TeamRow, DisconnectedMembersHaveInfiniteRadius) {
  const TeamRow row = team_row(0, {0, 3}, path_graph());
  EXPECT_EQ(row.radius, kInfinity);
  EXPECT_EQ(*row.pairwise, kInfinity);
}

TEST(TeamCharacteristics, AveragesOverNonEmptyTeams) {
  const Instance inst = Instance::from_ids(1, {{0}, {0}, {0}, {0}}, {{0}, {0}, {0}});
  Assignment a(inst);
  a.add(0, 0);
  a.add(1, 0);
  a.add(2, 2);
  const TeamReport report = team_characteristics(a, inst, path_graph());
  ASSERT_EQ(report.rows.size(), 2u);
  EXPECT_EQ(report.rows[0].task, 0);
  EXPECT_EQ(report.rows[1].task, 2);
  EXPECT_DOUBLE_EQ(report.avg_size, 1.5);
  EXPECT_EQ(report.max_size, 2);
  EXPECT_DOUBLE_EQ(report.avg_radius, 0.1);
  EXPECT_DOUBLE_EQ(report.avg_density, 1.5);
  EXPECT_DOUBLE_EQ(*report.avg_pairwise, 0.2);
  EXPECT_EQ(report.singleton_teams, 1);
}

TEST(TeamCharacteristics, EmptyAssignment) {
  const Instance inst = Instance::from_ids(1, {{0}, {0}, {0}, {0}}, {{0}});
  const TeamReport report = team_characteristics(Assignment(inst), inst, path_graph());
  EXPECT_TRUE(report.rows.empty());
  EXPECT_DOUBLE_EQ(report.avg_size, 0.0);
  EXPECT_FALSE(report.avg_pairwise.has_value());
}

TEST(TeamCharacteristics, RejectsMismatchedInputs) {
  const Instance inst = Instance::from_ids(1, {{0}, {0}, {0}, {0}, {0}}, {{0}});
  const Instance other = Instance::from_ids(1, {{0}, {0}, {0}, {0}, {0}}, {{0}});
  const Assignment a(inst);
  EXPECT_THROW(team_characteristics(a, other, metric_closure(5, {})), InputError);
  EXPECT_THROW(team_characteristics(a, inst, path_graph()), InputError);
}

TEST(TeamCharacteristics, MatchesDirectComputation) {
  Rng64 rng(80);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = testing::random_int(rng, 2, 15);
    const int m = testing::random_int(rng, 1, 6);
    const Instance inst = testing::random_instance(rng, n, m, 6);
    const auto edges = testing::random_edges(rng, n, 0.4, 1.0);
    const CoordinationGraph g = metric_closure(n, edges);
    const auto d = testing::floyd_warshall(n, edges);
    Assignment a(inst);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < m; ++j) {
        if (rng.bernoulli(0.3)) a.add(i, j);
      }
    }
    const TeamReport report = team_characteristics(a, inst, g);
    for (const TeamRow& row : report.rows) {
      const auto& team = a.team(row.task);
      double radius = kInfinity;
      for (int c : team) {
        double worst = 0.0;
        for (int x : team) worst = std::max(worst, d[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)]);
        radius = std::min(radius, worst);
      }
      if (radius == kInfinity) {
        ASSERT_EQ(row.radius, kInfinity);
      } else {
        ASSERT_NEAR(row.radius, radius, 1e-12);
      }
      int induced = 0;
      for (const Edge& e : edges) {
        if (e.from != e.to && a.contains(e.from, row.task) && a.contains(e.to, row.task)) ++induced;
      }
      // random_edges emits each unordered pair at most once.
      ASSERT_DOUBLE_EQ(row.density, 1.0 + 2.0 * induced / row.size);
    }
  }
}

}  // namespace
}  // namespace teamform
