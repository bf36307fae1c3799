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

#ifndef TEAMFORM_GREEDY_COVER_HPP_
#define TEAMFORM_GREEDY_COVER_HPP_

#include <cstddef>
#include <cstdint>
#include <queue>
#include <vector>

#include "teamform/assignment.hpp"
#include "teamform/errors.hpp"
#include "teamform/instance.hpp"

namespace teamform {

// Lazy greedy maximization of total coverage where every expert may be used at
// most `capacity` times.
//
// Candidate pairs sit in a max-queue keyed by a possibly stale gain. A gain
// can only shrink as the task's cover grows, so a popped entry whose stamp
// matches the task's version holds the true maximum. Entries of experts that
// run out of uses are parked and re-queued by extend_capacity(), which makes
// the run at capacity τ+1 a continuation of the run at τ.
//
// Equal gains resolve to the smallest (expert, task).
class GreedyState {
 public:
  GreedyState(const Instance& instance, int capacity)
      : assignment_(instance),
        start_capacity_(capacity),
        capacity_(capacity),
        remaining_(static_cast<std::size_t>(instance.num_experts()), capacity),
        version_(static_cast<std::size_t>(instance.num_tasks()), 0),
        parked_(static_cast<std::size_t>(instance.num_experts())) {
    if (capacity < 0) throw InputError("capacity must be non-negative");
    for (int i = 0; i < instance.num_experts(); ++i) {
      for (int j = 0; j < instance.num_tasks(); ++j) {
        const int gain = assignment_.gain_count(i, j);
        if (gain > 0) queue_.push({gain, instance.task_size(j), i, j, 0});
      }
    }
    run();
  }

  const Assignment& assignment() const { return assignment_; }
  int capacity() const { return capacity_; }
  int remaining_uses(int expert) const { return remaining_[static_cast<std::size_t>(expert)]; }

  // Pairs in the order they were added. The assignment after the run at
  // capacity τ is the prefix of length picks_at(τ), for every τ between the
  // starting capacity and capacity().
  const std::vector<Pair>& picks() const { return picks_; }
  std::size_t picks_at(int capacity) const {
    if (capacity < start_capacity_ || capacity > capacity_) {
      throw InputError("capacity was not reached by this run");
    }
    return prefix_[static_cast<std::size_t>(capacity - start_capacity_)];
  }

  // Grants each expert one more use and resumes the greedy.
  void extend_capacity() {
    ++capacity_;
    for (std::size_t i = 0; i < remaining_.size(); ++i) {
      ++remaining_[i];
      for (const Entry& e : parked_[i]) queue_.push(e);
      parked_[i].clear();
    }
    run();
  }

  // Gain evaluations performed so far (lazy re-evaluations included).
  std::uint64_t evaluations() const { return evaluations_; }

 private:
  struct Entry {
    std::int32_t gain;
    std::int32_t size;
    std::int32_t expert;
    std::int32_t task;
    std::uint32_t stamp;
  };

  // Lower priority first: smaller gain, then larger (expert, task).
  struct Lower {
    bool operator()(const Entry& a, const Entry& b) const {
      const std::int64_t lhs = std::int64_t{a.gain} * b.size;
      const std::int64_t rhs = std::int64_t{b.gain} * a.size;
      if (lhs != rhs) return lhs < rhs;
      if (a.expert != b.expert) return a.expert > b.expert;
      return a.task > b.task;
    }
  };

  void run() {
    while (!queue_.empty()) {
      Entry top = queue_.top();
      queue_.pop();
      const auto e = static_cast<std::size_t>(top.expert);
      const auto t = static_cast<std::size_t>(top.task);
      if (remaining_[e] == 0) {
        parked_[e].push_back(top);
        continue;
      }
      if (top.stamp != version_[t]) {
        ++evaluations_;
        top.gain = assignment_.gain_count(top.expert, top.task);
        top.stamp = version_[t];
        if (top.gain > 0) queue_.push(top);
        continue;
      }
      assignment_.add(top.expert, top.task);
      picks_.push_back({top.expert, top.task});
      --remaining_[e];
      ++version_[t];
    }
    prefix_.push_back(picks_.size());
  }

  Assignment assignment_;
  int start_capacity_;
  int capacity_;
  std::vector<int> remaining_;
  std::vector<std::uint32_t> version_;
  std::vector<std::vector<Entry>> parked_;
  std::priority_queue<Entry, std::vector<Entry>, Lower> queue_;
  std::vector<Pair> picks_;
  std::vector<std::size_t> prefix_;
  std::uint64_t evaluations_ = 0;
};

// Greedy assignment with per-expert load at most tau, from scratch.
inline Assignment greedy_cover(const Instance& instance, int tau) {
  if (tau < 1) throw InputError("tau must be at least 1");
  return GreedyState(instance, tau).assignment();
}

// Warm start: continues a completed run at capacity τ as a run at τ+1. The
// result is a superset of the input assignment.
inline GreedyState extend_capacity(GreedyState state) {
  state.extend_capacity();
  return state;
}

}  // namespace teamform

#endif  // TEAMFORM_GREEDY_COVER_HPP_
