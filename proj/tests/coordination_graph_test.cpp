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

#include <cmath>
#include <set>
#include <vector>

#include "support.hpp"
#include "teamform/teamform.hpp"

namespace teamform {
namespace {

CoordinationGraph triangle() {
  // d(0,1)=0.2, d(0,2)=0.4, d(1,2)=0.9 closes to 0.6.
  const std::vector<Edge> edges{{0, 1, 0.2}, {0, 2, 0.4}, {1, 2, 0.9}};
  return metric_closure(3, edges);
}

std::set<std::vector<int>> family(const std::vector<Team>& teams) {
  std::set<std::vector<int>> out;
  for (const auto& t : teams) out.insert(t.members);
  return out;
}

TEST(MetricClosure, PathSumsWeights) {
  const std::vector<Edge> edges{{0, 1, 0.2}, {1, 2, 0.3}};
  const auto g = metric_closure(3, edges);
  EXPECT_DOUBLE_EQ(g.distance(0, 2), 0.5);
  EXPECT_DOUBLE_EQ(g.distance(2, 0), 0.5);
  EXPECT_DOUBLE_EQ(g.distance(1, 1), 0.0);
}

TEST(MetricClosure, DisconnectedIsInfinite) {
  const auto g = metric_closure(2, std::vector<Edge>{});
  EXPECT_TRUE(std::isinf(g.distance(0, 1)));
}

TEST(MetricClosure, TwoHopBeatsDirectEdge) {
  const auto g = triangle();
  EXPECT_NEAR(g.distance(1, 2), 0.6, 1e-15);
  EXPECT_TRUE(g.adjacent(1, 2));
}

TEST(MetricClosure, ParallelEdgesKeepMinimumAndLoopsIgnored) {
  const std::vector<Edge> edges{{0, 1, 0.8}, {1, 0, 0.3}, {1, 1, 0.0}};
  const auto g = metric_closure(2, edges);
  EXPECT_DOUBLE_EQ(g.distance(0, 1), 0.3);
  EXPECT_EQ(g.neighbors(1), std::vector<int>{0});
}

TEST(MetricClosure, RejectsBadEdges) {
  EXPECT_THROW(metric_closure(2, std::vector<Edge>{{0, 1, -0.1}}), InputError);
  EXPECT_THROW(metric_closure(2, std::vector<Edge>{{0, 2, 0.1}}), InputError);
}

TEST(MetricClosure, MatchesFloydWarshallSparseAndDense) {
  Rng64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = testing::random_int(rng, 1, 30);
    const double p = trial % 2 == 0 ? 0.05 : 0.6;  // both closure strategies
    const auto edges = testing::random_edges(rng, n, p, 1.0);
    const auto g = metric_closure(n, edges);
    const auto ref = testing::floyd_warshall(n, edges);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        const double want = ref[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        if (std::isinf(want)) {
          ASSERT_TRUE(std::isinf(g.distance(a, b)));
        } else {
          ASSERT_NEAR(g.distance(a, b), want, 1e-12);
        }
      }
    }
  }
}

TEST(MetricClosure, IdempotentOnClosedCompleteGraph) {
  Rng64 rng(32);
  const int n = 12;
  const auto g = metric_closure(n, testing::random_edges(rng, n, 0.3, 1.0));
  std::vector<Edge> complete;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!std::isinf(g.distance(a, b))) complete.push_back({a, b, g.distance(a, b)});
    }
  }
  const auto again = metric_closure(n, complete);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (std::isinf(g.distance(a, b))) {
        EXPECT_TRUE(std::isinf(again.distance(a, b)));
      } else {
        EXPECT_NEAR(again.distance(a, b), g.distance(a, b), 1e-12);
      }
    }
  }
}

TEST(TeamRadius, Singleton) {
  const auto g = triangle();
  const std::vector<int> one{1};
  const auto r = team_radius(one, g);
  EXPECT_EQ(r.radius, 0.0);
  EXPECT_EQ(r.center, 1);
  EXPECT_EQ(team_diameter(one, g), 0.0);
}

TEST(TeamRadius, ThreeMembers) {
  // Experts 1, 2, 3 with d(1,2)=0.2, d(1,3)=0.4, d(2,3)=0.5.
  const std::vector<Edge> edges{{1, 2, 0.2}, {1, 3, 0.4}, {2, 3, 0.5}};
  const auto g = metric_closure(4, edges);
  const std::vector<int> team{1, 2, 3};
  const auto r = team_radius(team, g);
  EXPECT_DOUBLE_EQ(r.radius, 0.4);
  EXPECT_EQ(r.center, 1);
  EXPECT_DOUBLE_EQ(team_diameter(team, g), 0.5);
}

TEST(TeamRadius, InfinitePairGivesInfiniteRadius) {
  const auto g = metric_closure(3, std::vector<Edge>{{0, 1, 0.1}});
  const std::vector<int> team{0, 1, 2};
  EXPECT_TRUE(std::isinf(team_radius(team, g).radius));
}

TEST(TeamRadius, TwoMembersRadiusEqualsDiameter) {
  const auto g = metric_closure(2, std::vector<Edge>{{0, 1, 0.7}});
  const std::vector<int> team{0, 1};
  EXPECT_DOUBLE_EQ(team_radius(team, g).radius, 0.7);
  EXPECT_DOUBLE_EQ(team_diameter(team, g), 0.7);
}

TEST(TeamRadius, RejectsEmpty) {
  const auto g = triangle();
  EXPECT_THROW(team_radius(std::vector<int>{}, g), InputError);
}

TEST(TeamRadius, BetweenHalfDiameterAndDiameter) {
  Rng64 rng(33);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = testing::random_int(rng, 1, 8);
    const auto g = metric_closure(n, testing::random_edges(rng, n, 0.7, 1.0));
    std::vector<int> members;
    for (int i = 0; i < n; ++i) {
      if (rng.bernoulli(0.6)) members.push_back(i);
    }
    if (members.empty()) members.push_back(0);
    const double r = team_radius(members, g).radius;
    const double d = team_diameter(members, g);
    if (std::isinf(d)) {
      EXPECT_TRUE(std::isinf(r));
      continue;
    }
    EXPECT_LE(d / 2, r + 1e-12);
    EXPECT_LE(r, d + 1e-12);
  }
}

TEST(CandidateTeams, SmallRadiusGivesSingletons) {
  const auto teams = candidate_teams_r(triangle(), 0.1);
  ASSERT_EQ(teams.size(), 3u);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(teams[static_cast<std::size_t>(i)].members, std::vector<int>{i});
}

TEST(CandidateTeams, LargeRadiusGivesFullSet) {
  const auto teams = candidate_teams_r(triangle(), 0.7);
  for (const auto& t : teams) EXPECT_EQ(t.members, (std::vector<int>{0, 1, 2}));
}

TEST(CandidateTeams, TriangleCenterOne) {
  // Relabelled triangle: d(1,2)=0.2, d(1,3)=0.4, d(2,3)=0.5.
  const std::vector<Edge> edges{{1, 2, 0.2}, {1, 3, 0.4}, {2, 3, 0.5}};
  const auto teams = candidate_teams_r(metric_closure(4, edges), 0.3);
  EXPECT_EQ(teams[1].members, (std::vector<int>{1, 2}));
}

TEST(CandidateTeams, AllRWithOneSplitEqualsR) {
  const auto g = triangle();
  EXPECT_EQ(family(candidate_teams_allr(g, 0.5, 1)), family(candidate_teams_r(g, 0.5)));
}

TEST(CandidateTeams, AllRTriangleTwoSplits) {
  const auto g = triangle();
  auto expected = family(candidate_teams_r(g, 0.3));
  for (const auto& m : family(candidate_teams_r(g, 0.6))) expected.insert(m);
  const auto teams = candidate_teams_allr(g, 0.6, 2);
  EXPECT_EQ(family(teams), expected);
  EXPECT_EQ(teams.size(), expected.size());
}

TEST(CandidateTeams, NoEdgesGivesSingletonsForAnyK) {
  const auto g = metric_closure(4, std::vector<Edge>{});
  for (int k = 1; k <= 5; ++k) {
    const auto teams = candidate_teams_allr(g, 1.0, k);
    ASSERT_EQ(teams.size(), 4u);
    for (const auto& t : teams) EXPECT_EQ(t.members.size(), 1u);
  }
}

TEST(CandidateTeams, RadiusBoundAndAllRSuperset) {
  Rng64 rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = testing::random_int(rng, 1, 25);
    const auto g = metric_closure(n, testing::random_edges(rng, n, 0.2, 1.0));
    const double r = 0.05 + rng.uniform();
    const auto teams = candidate_teams_r(g, r);
    ASSERT_EQ(static_cast<int>(teams.size()), n);
    for (int i = 0; i < n; ++i) {
      const Team& t = teams[static_cast<std::size_t>(i)];
      ASSERT_TRUE(t.contains(i));
      ASSERT_LE(team_radius(t.members, g).radius, r);
      ASSERT_LE(t.radius, r);
    }
    const auto all = family(candidate_teams_allr(g, r, testing::random_int(rng, 1, 6)));
    for (const auto& m : family(teams)) ASSERT_TRUE(all.count(m));
  }
}

TEST(CandidateTeams, RejectsBadParameters) {
  const auto g = triangle();
  EXPECT_THROW(candidate_teams_r(g, 0.0), InputError);
  EXPECT_THROW(candidate_teams_allr(g, 1.0, 0), InputError);
}

}  // namespace
}  // namespace teamform
