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

#ifndef TEAMFORM_THRESHOLD_SEARCH_HPP_
#define TEAMFORM_THRESHOLD_SEARCH_HPP_

#include <algorithm>
#include <cmath>
#include <map>
#include <string_view>

#include "teamform/errors.hpp"

namespace teamform {

enum class SearchMode { kLinear, kExpLinear };

inline std::string_view to_string(SearchMode mode) {
  return mode == SearchMode::kLinear ? "linear" : "exp_linear";
}

inline SearchMode parse_search_mode(std::string_view text) {
  if (text == "linear") return SearchMode::kLinear;
  if (text == "exp_linear") return SearchMode::kExpLinear;
  throw InputError("unknown search mode: " + std::string(text));
}

// Objective values closer than this (relative) are treated as ties.
inline bool objective_less(double a, double b) {
  const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return a < b - 1e-9 * scale;
}

struct ThresholdSearchResult {
  std::map<int, double> visited;  // tau -> F_tau
  int best_tau = 0;               // 0 means the empty assignment
  double best_objective = 0.0;
};

// Searches tau in [1, max_tau] for the maximum of f(tau).
//
// kLinear visits 1, 2, ... and stops at the first tau with f(tau+1) < f(tau).
// kExpLinear probes 1, 2, 4, ... until a probe drops below the previous one
// (or max_tau is reached), then scans linearly from the probe before the last
// increase up to the first drop, and finally walks left while the value stays
// tied so that the smallest maximizing tau is reported. On sequences whose
// increments are non-increasing both modes agree.
//
// Without early stopping every tau in [1, max_tau] is visited. The empty
// assignment (f = 0) is always a candidate, and ties prefer the smaller tau.
template <typename Objective>
ThresholdSearchResult search_thresholds(int max_tau, SearchMode mode, bool early_stop,
                                        Objective&& f) {
  ThresholdSearchResult result;
  auto eval = [&](int tau) {
    auto it = result.visited.find(tau);
    if (it != result.visited.end()) return it->second;
    const double value = f(tau);
    result.visited.emplace(tau, value);
    return value;
  };
  auto linear_from = [&](int start) {
    double prev = eval(start);
    for (int tau = start + 1; tau <= max_tau; ++tau) {
      const double value = eval(tau);
      if (early_stop && objective_less(value, prev)) break;
      prev = value;
    }
  };

  if (max_tau >= 1) {
    if (!early_stop || mode == SearchMode::kLinear) {
      linear_from(1);
    } else {
      int before = 1;
      int probe = 1;
      eval(1);
      while (probe < max_tau) {
        const int next = std::min(2 * probe, max_tau);
        const bool drop = objective_less(eval(next), eval(probe));
        if (drop) break;
        before = probe;
        probe = next;
      }
      linear_from(before);
    }
  }

  for (const auto& [tau, value] : result.visited) {
    if (objective_less(result.best_objective, value)) {
      result.best_tau = tau;
      result.best_objective = value;
    }
  }
  if (early_stop && mode == SearchMode::kExpLinear) {
    while (result.best_tau > 1 &&
           !objective_less(eval(result.best_tau - 1), result.best_objective)) {
      --result.best_tau;
      result.best_objective = result.visited.at(result.best_tau);
    }
  }
  return result;
}

}  // namespace teamform

#endif  // TEAMFORM_THRESHOLD_SEARCH_HPP_
