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

#include <vector>

#include "support.hpp"
#include "teamform/teamform.hpp"

namespace teamform {
namespace {

using testing::tiny;

ThresholdGreedyOptions with_search(SearchMode mode) {
  ThresholdGreedyOptions o;
  o.search = mode;
  return o;
}

TEST(SearchThresholds, LinearStopsAtFirstDrop) {
  std::vector<double> f{0, 1, 3, 4, 2, 9};  // index = tau
  const auto r = search_thresholds(5, SearchMode::kLinear, true, [&](int t) { return f[static_cast<std::size_t>(t)]; });
  EXPECT_EQ(r.best_tau, 3);
  EXPECT_EQ(r.visited.size(), 4u);
  EXPECT_EQ(r.visited.rbegin()->first, 4);
}

TEST(SearchThresholds, FullScanWithoutEarlyStop) {
  std::vector<double> f{0, 1, 3, 4, 2, 9};
  const auto r = search_thresholds(5, SearchMode::kExpLinear, false, [&](int t) { return f[static_cast<std::size_t>(t)]; });
  EXPECT_EQ(r.best_tau, 5);
  EXPECT_EQ(r.visited.size(), 5u);
}

TEST(SearchThresholds, ExpLinearFindsConcaveMaximum) {
  for (int peak = 1; peak <= 40; ++peak) {
    auto f = [&](int t) { return 100.0 - (t - peak) * (t - peak); };
    const auto lin = search_thresholds(40, SearchMode::kLinear, true, f);
    const auto exp = search_thresholds(40, SearchMode::kExpLinear, true, f);
    EXPECT_EQ(lin.best_tau, peak);
    EXPECT_EQ(exp.best_tau, peak);
    EXPECT_DOUBLE_EQ(exp.best_objective, 100.0);
  }
}

TEST(SearchThresholds, TiesPreferSmallerTau) {
  std::vector<double> f{0, 2, 5, 5, 5, 1, 0, -1, -2};
  for (auto mode : {SearchMode::kLinear, SearchMode::kExpLinear}) {
    const auto r = search_thresholds(8, mode, true, [&](int t) { return f[static_cast<std::size_t>(t)]; });
    EXPECT_EQ(r.best_tau, 2);
  }
}

TEST(SearchThresholds, EmptyWinsWhenAllNonPositive) {
  const auto r = search_thresholds(6, SearchMode::kExpLinear, true, [](int t) { return -static_cast<double>(t); });
  EXPECT_EQ(r.best_tau, 0);
  EXPECT_DOUBLE_EQ(r.best_objective, 0.0);
}

TEST(SearchThresholds, NeverExceedsMaxTau) {
  const auto r = search_thresholds(5, SearchMode::kExpLinear, true, [](int t) { return static_cast<double>(t); });
  EXPECT_EQ(r.best_tau, 5);
  EXPECT_LE(r.visited.rbegin()->first, 5);
}

TEST(SearchMode, ParsesNames) {
  EXPECT_EQ(parse_search_mode("linear"), SearchMode::kLinear);
  EXPECT_EQ(parse_search_mode("exp_linear"), SearchMode::kExpLinear);
  EXPECT_EQ(to_string(SearchMode::kExpLinear), "exp_linear");
  EXPECT_THROW(parse_search_mode("binary"), InputError);
}

TEST(ThresholdGreedy, TinyLambdaTwo) {
  const Instance inst = tiny();
  for (auto mode : {SearchMode::kLinear, SearchMode::kExpLinear}) {
    const auto r = threshold_greedy(inst, 2.0, with_search(mode));
    EXPECT_EQ(r.trace.best_tau, 1);
    EXPECT_DOUBLE_EQ(r.trace.best_objective, 3.0);
    EXPECT_DOUBLE_EQ(r.realized_objective, 3.0);
    EXPECT_EQ(r.assignment.pairs(), (std::vector<Pair>{{0, 0}, {2, 1}}));
  }
  EXPECT_DOUBLE_EQ(brute_force_opt(inst, 2.0).value, 3.0);
}

TEST(ThresholdGreedy, SmallLambdaGivesEmpty) {
  const Instance inst = tiny();
  const auto r = threshold_greedy(inst, 0.4);
  EXPECT_EQ(r.trace.best_tau, 0);
  EXPECT_EQ(r.assignment.size(), 0u);
  EXPECT_DOUBLE_EQ(r.realized_objective, 0.0);
}

TEST(ThresholdGreedy, SingleTaskTakesEveryUsefulExpert) {
  // Expert 3 duplicates expert 0 and adds nothing.
  const Instance inst = Instance::from_names({"p", "q", "r", "s"}, {{"a"}, {"b"}, {"c"}, {"a"}}, {"t"},
                                             {{"a", "b", "c", "d"}});
  CoverageChain chain(inst, true);
  const Assignment at_one = chain.assignment(1);
  EXPECT_EQ(at_one.pairs(), (std::vector<Pair>{{0, 0}, {1, 0}, {2, 0}}));

  // At λ = 1 the τ = 1 candidate scores 0.75 - 1 < 0, so the empty
  // assignment wins; a larger λ selects τ = 1.
  EXPECT_EQ(threshold_greedy(inst, 1.0).trace.best_tau, 0);
  const auto r = threshold_greedy(inst, 2.0);
  EXPECT_EQ(r.trace.best_tau, 1);
  EXPECT_EQ(r.assignment.pairs(), at_one.pairs());
}

TEST(ThresholdGreedy, FullCoverageTieAtLambdaOneKeepsEmpty) {
  const Instance inst = Instance::from_names({"p", "q"}, {{"a"}, {"b"}}, {"t"}, {{"a", "b"}});
  const auto r = threshold_greedy(inst, 1.0);
  ASSERT_EQ(r.trace.entries.size(), 1u);
  EXPECT_EQ(r.trace.entries[0].tau, 1);
  EXPECT_DOUBLE_EQ(r.trace.entries[0].objective, 0.0);
  EXPECT_EQ(r.trace.best_tau, 0);
}

TEST(ThresholdGreedy, RejectsNonPositiveLambda) {
  const Instance inst = tiny();
  EXPECT_THROW(threshold_greedy(inst, 0.0), InputError);
}

TEST(ThresholdGreedy, TraceShapeAndRealizedLoad) {
  Rng64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const Instance inst = testing::random_instance(rng, testing::random_int(rng, 1, 15), testing::random_int(rng, 1, 15), 10, 0.3, 0.4);
    const double lambda = 0.5 + 4.0 * rng.uniform();
    for (bool warm : {true, false}) {
      ThresholdGreedyOptions o;
      o.warm_start = warm;
      const auto r = threshold_greedy(inst, lambda, o);
      int last = 0;
      double best = 0.0;
      for (const auto& e : r.trace.entries) {
        ASSERT_GT(e.tau, last);
        ASSERT_LE(e.tau, inst.num_tasks());
        last = e.tau;
        ASSERT_DOUBLE_EQ(e.objective, lambda * e.coverage - e.tau);
        best = std::max(best, e.objective);
      }
      ASSERT_NEAR(r.trace.best_objective, best, 1e-9);
      ASSERT_LE(r.realized_lmax, r.trace.best_tau);
      ASSERT_GE(r.realized_objective + 1e-12, r.trace.best_objective);
    }
  }
}

TEST(ThresholdGreedy, SearchModesAgreeOnChain) {
  Rng64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const Instance inst = testing::random_instance(rng, testing::random_int(rng, 1, 12), testing::random_int(rng, 1, 30), 8, 0.3, 0.4);
    const double lambda = 0.2 + 5.0 * rng.uniform();
    const auto lin = threshold_greedy(inst, lambda, with_search(SearchMode::kLinear));
    const auto exp = threshold_greedy(inst, lambda, with_search(SearchMode::kExpLinear));
    ThresholdGreedyOptions full;
    full.early_stop = false;
    const auto all = threshold_greedy(inst, lambda, full);
    ASSERT_EQ(lin.trace.best_tau, exp.trace.best_tau);
    ASSERT_EQ(lin.trace.best_objective, exp.trace.best_objective);
    ASSERT_EQ(all.trace.best_tau, exp.trace.best_tau);
    ASSERT_EQ(lin.assignment, exp.assignment);
  }
}

TEST(LambdaSweep, SingleLambdaMatchesThresholdGreedy) {
  const Instance inst = tiny();
  const std::vector<double> one{2.0};
  const auto report = lambda_sweep(inst, one);
  const auto r = threshold_greedy(inst, 2.0);
  ASSERT_EQ(report.rows.size(), 1u);
  EXPECT_EQ(report.rows[0].best_tau, r.trace.best_tau);
  EXPECT_EQ(report.rows[0].objective, r.trace.best_objective);
}

TEST(LambdaSweep, TinyDescendingList) {
  const Instance inst = tiny();
  const std::vector<double> lambdas{4.0, 2.0, 0.4};
  const auto report = lambda_sweep(inst, lambdas);
  ASSERT_EQ(report.rows.size(), 3u);
  EXPECT_EQ(report.rows[0].best_tau, 1);
  EXPECT_EQ(report.rows[1].best_tau, 1);
  EXPECT_EQ(report.rows[2].best_tau, 0);
  EXPECT_DOUBLE_EQ(report.rows[0].objective, 7.0);
  EXPECT_EQ(report.rows[2].max_load, 0);
}

TEST(LambdaSweep, SingleTaskAlwaysTauOne) {
  const Instance inst = Instance::from_names({"p", "q"}, {{"a"}, {"b"}}, {"t"}, {{"a", "b", "c"}});
  const std::vector<double> lambdas{10.0, 5.0, 2.0};
  for (const auto& row : lambda_sweep(inst, lambdas).rows) EXPECT_EQ(row.best_tau, 1);
}

TEST(LambdaSweep, RejectsBadLists) {
  const Instance inst = tiny();
  EXPECT_THROW(lambda_sweep(inst, std::vector<double>{}), InputError);
  EXPECT_THROW(lambda_sweep(inst, std::vector<double>{1.0, 2.0}), InputError);
  EXPECT_THROW(lambda_sweep(inst, std::vector<double>{1.0, -2.0}), InputError);
}

TEST(LambdaSweep, RowsEqualIndependentRuns) {
  Rng64 rng(10);
  const std::vector<double> lambdas{5.0, 2.0, 1.0, 0.5, 0.1};
  for (int trial = 0; trial < 100; ++trial) {
    const Instance inst = testing::random_instance(rng, testing::random_int(rng, 1, 12), testing::random_int(rng, 1, 25), 8, 0.3, 0.4);
    const auto report = lambda_sweep(inst, lambdas);
    int prev = inst.num_tasks() + 1;
    for (const auto& row : report.rows) {
      const auto r = threshold_greedy(inst, row.lambda);
      ASSERT_EQ(row.best_tau, r.trace.best_tau);
      ASSERT_EQ(row.objective, r.trace.best_objective);
      ASSERT_EQ(row.coverage, r.coverage);
      ASSERT_EQ(row.max_load, r.realized_lmax);
      ASSERT_LE(row.best_tau, prev);
      prev = row.best_tau;
    }
  }
}

}  // namespace
}  // namespace teamform
