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

#ifndef TEAMFORM_ASSIGNMENT_HPP_
#define TEAMFORM_ASSIGNMENT_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "teamform/errors.hpp"
#include "teamform/instance.hpp"
#include "teamform/skill_set.hpp"

namespace teamform {

// Non-negative rational with small integer parts (skill counts over task
// sizes). Compared exactly by cross-multiplication.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num * b.den == b.num * a.den;
  }
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    return a.num * b.den <=> b.num * a.den;
  }
};

struct Pair {
  int expert = 0;
  int task = 0;

  friend bool operator==(const Pair&, const Pair&) = default;
  friend auto operator<=>(const Pair&, const Pair&) = default;
};

// A set of (expert, task) pairs together with per-task covered skills and
// per-expert loads. The caches always equal a from-scratch recomputation from
// the pair set.
class Assignment {
 public:
  explicit Assignment(const Instance& instance)
      : instance_(&instance),
        team_(static_cast<std::size_t>(instance.num_tasks())),
        tasks_of_(static_cast<std::size_t>(instance.num_experts())),
        load_count_(static_cast<std::size_t>(instance.num_tasks()) + 1, 0) {
    covered_.reserve(team_.size());
    for (int j = 0; j < instance.num_tasks(); ++j) {
      covered_.emplace_back(instance.num_skills());
    }
    load_count_[0] = instance.num_experts();
  }

  Assignment(const Instance& instance, const std::vector<Pair>& pairs)
      : Assignment(instance) {
    for (const Pair& p : pairs) add(p.expert, p.task);
  }

  const Instance& instance() const { return *instance_; }

  // Duplicate insertion is a no-op and returns false.
  bool add(int expert, int task) {
    check(expert, task);
    auto& team = team_[idx(task)];
    auto pos = std::lower_bound(team.begin(), team.end(), expert);
    if (pos != team.end() && *pos == expert) return false;
    team.insert(pos, expert);
    auto& tasks = tasks_of_[idx(expert)];
    tasks.insert(std::lower_bound(tasks.begin(), tasks.end(), task), task);
    covered_[idx(task)].insert_common(instance_->expert(expert).skills,
                                      instance_->task(task).skills);
    const std::size_t load = tasks.size();
    --load_count_[load - 1];
    ++load_count_[load];
    max_load_ = std::max(max_load_, static_cast<int>(load));
    ++size_;
    return true;
  }

  // Returns false if the pair was not present.
  bool remove(int expert, int task) {
    check(expert, task);
    auto& team = team_[idx(task)];
    auto pos = std::lower_bound(team.begin(), team.end(), expert);
    if (pos == team.end() || *pos != expert) return false;
    team.erase(pos);
    auto& tasks = tasks_of_[idx(expert)];
    tasks.erase(std::lower_bound(tasks.begin(), tasks.end(), task));
    const std::size_t load = tasks.size();
    --load_count_[load + 1];
    ++load_count_[load];
    while (max_load_ > 0 && load_count_[static_cast<std::size_t>(max_load_)] == 0) --max_load_;
    recompute_cover(task);
    --size_;
    return true;
  }

  bool contains(int expert, int task) const {
    const auto& team = team_[idx(task)];
    return std::binary_search(team.begin(), team.end(), expert);
  }

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  // Members assigned to a task, ascending.
  const std::vector<int>& team(int task) const { return team_[idx(task)]; }
  // Tasks held by an expert, ascending.
  const std::vector<int>& tasks_of(int expert) const { return tasks_of_[idx(expert)]; }
  const SkillSet& covered(int task) const { return covered_[idx(task)]; }

  int load(int expert) const { return static_cast<int>(tasks_of_[idx(expert)].size()); }
  int max_load() const { return max_load_; }

  int covered_count(int task) const { return static_cast<int>(covered_[idx(task)].size()); }

  Fraction coverage_fraction(int task) const {
    return {covered_count(task), instance_->task_size(task)};
  }
  double coverage(int task) const { return coverage_fraction(task).value(); }

  // Sum of per-task coverage, accumulated in task order.
  double total_coverage() const {
    double total = 0.0;
    for (int j = 0; j < instance_->num_tasks(); ++j) total += coverage(j);
    return total;
  }

  double objective(double lambda) const { return lambda * total_coverage() - max_load_; }

  // Skills of the task the expert would newly cover.
  int gain_count(int expert, int task) const {
    const SkillSet& skills = instance_->expert(expert).skills;
    return static_cast<int>(SkillSet::common_count(skills, instance_->task(task).skills) -
                            SkillSet::common_count(skills, covered_[idx(task)]));
  }
  Fraction gain(int expert, int task) const {
    return {gain_count(expert, task), instance_->task_size(task)};
  }

  // Skills of the task that would become uncovered if the expert left it.
  int loss_count(int expert, int task) const {
    SkillSet rest(instance_->num_skills());
    const SkillSet& task_skills = instance_->task(task).skills;
    for (int member : team_[idx(task)]) {
      if (member != expert) rest.insert_common(instance_->expert(member).skills, task_skills);
    }
    return covered_count(task) - static_cast<int>(rest.size());
  }
  Fraction loss(int expert, int task) const {
    return {loss_count(expert, task), instance_->task_size(task)};
  }

  // All pairs ordered by (expert, task).
  std::vector<Pair> pairs() const {
    std::vector<Pair> out;
    out.reserve(size_);
    for (int i = 0; i < instance_->num_experts(); ++i) {
      for (int j : tasks_of_[idx(i)]) out.push_back({i, j});
    }
    return out;
  }

  friend bool operator==(const Assignment& a, const Assignment& b) {
    return a.instance_ == b.instance_ && a.team_ == b.team_;
  }

 private:
  static std::size_t idx(int k) { return static_cast<std::size_t>(k); }

  void check(int expert, int task) const {
    if (expert < 0 || expert >= instance_->num_experts() || task < 0 ||
        task >= instance_->num_tasks()) {
      throw InputError("pair out of range");
    }
  }

  void recompute_cover(int task) {
    SkillSet& cover = covered_[idx(task)];
    cover.clear();
    for (int member : team_[idx(task)]) {
      cover.insert_common(instance_->expert(member).skills, instance_->task(task).skills);
    }
  }

  const Instance* instance_;
  std::vector<std::vector<int>> team_;
  std::vector<std::vector<int>> tasks_of_;
  std::vector<SkillSet> covered_;
  std::vector<int> load_count_;
  int max_load_ = 0;
  std::size_t size_ = 0;
};

inline double coverage_of_task(int task, const Assignment& assignment) {
  return assignment.coverage(task);
}

inline double total_coverage(const Assignment& assignment) {
  return assignment.total_coverage();
}

inline int max_load(const Assignment& assignment) { return assignment.max_load(); }

// λ·C(A) − Lmax(A).
inline double objective(const Assignment& assignment, double lambda) {
  if (!(lambda > 0.0)) throw InputError("lambda must be positive");
  return assignment.objective(lambda);
}

}  // namespace teamform

#endif  // TEAMFORM_ASSIGNMENT_HPP_
