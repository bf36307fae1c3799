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

#ifndef TEAMFORM_THRESHOLD_GREEDY_HPP_
#define TEAMFORM_THRESHOLD_GREEDY_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "teamform/assignment.hpp"
#include "teamform/errors.hpp"
#include "teamform/greedy_cover.hpp"
#include "teamform/instance.hpp"
#include "teamform/threshold_search.hpp"

namespace teamform {

struct ThresholdTraceEntry {
  int tau = 0;
  double coverage = 0.0;
  double objective = 0.0;  // λ·C_τ − τ
};

struct ThresholdTrace {
  std::vector<ThresholdTraceEntry> entries;  // ascending tau
  int best_tau = 0;
  double best_objective = 0.0;
};

// Output of a threshold-search solver. `trace.best_objective` is the selection
// value λ·C − τ*; the realized fields use the actual maximum load of the
// returned assignment, which may be below τ*.
struct ThresholdResult {
  Assignment assignment;
  ThresholdTrace trace;
  double coverage = 0.0;
  int realized_lmax = 0;
  double realized_objective = 0.0;
};

struct ThresholdGreedyOptions {
  SearchMode search = SearchMode::kExpLinear;
  // Continue one greedy run across thresholds (nested A_1 ⊆ A_2 ⊆ ...). When
  // false each threshold gets a fresh greedy run.
  bool warm_start = true;
  bool early_stop = true;
};

// Coverage C_τ of the greedy assignment at each threshold, computed on demand.
class CoverageChain {
 public:
  CoverageChain(const Instance& instance, bool warm_start)
      : instance_(&instance), warm_start_(warm_start) {}

  double coverage(int tau) {
    if (tau <= 0) return 0.0;
    if (warm_start_) {
      advance_to(tau);
      return chain_coverage_.at(static_cast<std::size_t>(tau) - 1);
    }
    auto it = fresh_.find(tau);
    if (it == fresh_.end()) {
      GreedyState run(*instance_, tau);
      it = fresh_.emplace(tau, run.assignment()).first;
    }
    return it->second.total_coverage();
  }

  Assignment assignment(int tau) {
    if (tau <= 0) return Assignment(*instance_);
    if (!warm_start_) {
      coverage(tau);
      return fresh_.at(tau);
    }
    advance_to(tau);
    const auto& picks = state_->picks();
    std::vector<Pair> prefix(picks.begin(),
                             picks.begin() + static_cast<std::ptrdiff_t>(state_->picks_at(tau)));
    return Assignment(*instance_, prefix);
  }

  // Largest threshold with a known coverage in warm-start mode.
  int computed() const { return static_cast<int>(chain_coverage_.size()); }

 private:
  void advance_to(int tau) {
    if (!state_) {
      state_.emplace(*instance_, 1);
      chain_coverage_.push_back(state_->assignment().total_coverage());
    }
    while (state_->capacity() < tau) {
      state_->extend_capacity();
      chain_coverage_.push_back(state_->assignment().total_coverage());
    }
  }

  const Instance* instance_;
  bool warm_start_;
  std::optional<GreedyState> state_;
  std::vector<double> chain_coverage_;
  std::map<int, Assignment> fresh_;
};

namespace detail {

inline ThresholdTrace make_trace(const ThresholdSearchResult& search,
                                 const std::map<int, double>& coverage) {
  ThresholdTrace trace;
  for (const auto& [tau, value] : search.visited) {
    trace.entries.push_back({tau, coverage.at(tau), value});
  }
  trace.best_tau = search.best_tau;
  trace.best_objective = search.best_objective;
  return trace;
}

inline ThresholdResult finish(Assignment assignment, ThresholdTrace trace, double lambda) {
  ThresholdResult result{std::move(assignment), std::move(trace)};
  result.coverage = result.assignment.total_coverage();
  result.realized_lmax = result.assignment.max_load();
  result.realized_objective = lambda * result.coverage - result.realized_lmax;
  return result;
}

}  // namespace detail

// Tries per-expert workload thresholds τ, runs the capacity-τ greedy for
// each and keeps the assignment maximizing F_τ = λ·C(A_τ) − τ.
inline ThresholdResult threshold_greedy(const Instance& instance, double lambda,
                                        const ThresholdGreedyOptions& options = {}) {
  if (!(lambda > 0.0)) throw InputError("lambda must be positive");
  CoverageChain chain(instance, options.warm_start);
  std::map<int, double> coverage;
  auto search = search_thresholds(instance.num_tasks(), options.search, options.early_stop,
                                  [&](int tau) {
                                    const double c = chain.coverage(tau);
                                    coverage[tau] = c;
                                    return lambda * c - tau;
                                  });
  return detail::finish(chain.assignment(search.best_tau),
                        detail::make_trace(search, coverage), lambda);
}

struct LambdaSweepRow {
  double lambda = 0.0;
  int best_tau = 0;
  double coverage = 0.0;
  int max_load = 0;
  double objective = 0.0;  // λ·C_τ* − τ*
};

struct LambdaSweepReport {
  std::vector<LambdaSweepRow> rows;
};

// Evaluates a descending list of λ values from one warm-start chain. The chain
// is grown only as far as the largest λ needs; smaller λ never select a larger
// threshold, so every row is read off the recorded (τ, C_τ) pairs.
inline LambdaSweepReport lambda_sweep(const Instance& instance, std::span<const double> lambdas,
                                      SearchMode search = SearchMode::kExpLinear) {
  if (lambdas.empty()) throw InputError("lambda list is empty");
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    if (!(lambdas[k] > 0.0)) throw InputError("lambda must be positive");
    if (k > 0 && lambdas[k] > lambdas[k - 1]) throw InputError("lambdas must be descending");
  }
  CoverageChain chain(instance, /*warm_start=*/true);
  const double top = lambdas.front();
  search_thresholds(instance.num_tasks(), search, /*early_stop=*/true,
                    [&](int tau) { return top * chain.coverage(tau) - tau; });

  LambdaSweepReport report;
  for (double lambda : lambdas) {
    LambdaSweepRow row{lambda};
    for (int tau = 1; tau <= chain.computed(); ++tau) {
      const double value = lambda * chain.coverage(tau) - tau;
      if (objective_less(row.objective, value)) {
        row.best_tau = tau;
        row.objective = value;
      }
    }
    row.coverage = chain.coverage(row.best_tau);
    row.max_load = chain.assignment(row.best_tau).max_load();
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace teamform

#endif  // TEAMFORM_THRESHOLD_GREEDY_HPP_
