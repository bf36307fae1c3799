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

#ifndef TEAMFORM_INSTANCE_HPP_
#define TEAMFORM_INSTANCE_HPP_

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "teamform/errors.hpp"
#include "teamform/skill_set.hpp"

namespace teamform {

struct Expert {
  int index = 0;
  SkillSet skills;
};

struct Task {
  int index = 0;
  SkillSet skills;  // never empty
};

// Experts, tasks and the skill universe they share. Immutable once built, so a
// single instance can back any number of concurrent solver runs.
class Instance {
 public:
  // Interns skill names in first-occurrence order, experts first.
  static Instance from_names(
      std::vector<std::string> expert_ids,
      const std::vector<std::vector<std::string>>& expert_skills,
      std::vector<std::string> task_ids,
      const std::vector<std::vector<std::string>>& task_skills) {
    if (expert_ids.size() != expert_skills.size() ||
        task_ids.size() != task_skills.size()) {
      throw InputError("id and skill list counts differ");
    }
    std::vector<std::string> names;
    std::unordered_map<std::string, SkillId> lookup;
    auto intern = [&](const std::vector<std::string>& list) {
      std::vector<SkillId> ids;
      ids.reserve(list.size());
      for (const auto& name : list) {
        auto [it, inserted] =
            lookup.try_emplace(name, static_cast<SkillId>(names.size()));
        if (inserted) names.push_back(name);
        ids.push_back(it->second);
      }
      return ids;
    };
    std::vector<std::vector<SkillId>> experts;
    std::vector<std::vector<SkillId>> tasks;
    for (const auto& list : expert_skills) experts.push_back(intern(list));
    for (const auto& list : task_skills) tasks.push_back(intern(list));
    return Instance(std::move(names), std::move(expert_ids), experts,
                    std::move(task_ids), tasks);
  }

  // Skills given as ids in [0, num_skills); names are generated as s<k>,
  // e<i>, t<j>.
  static Instance from_ids(std::size_t num_skills,
                           const std::vector<std::vector<SkillId>>& experts,
                           const std::vector<std::vector<SkillId>>& tasks) {
    std::vector<std::string> names(num_skills);
    for (std::size_t s = 0; s < num_skills; ++s) names[s] = "s" + std::to_string(s);
    std::vector<std::string> expert_ids(experts.size());
    for (std::size_t i = 0; i < experts.size(); ++i) expert_ids[i] = "e" + std::to_string(i);
    std::vector<std::string> task_ids(tasks.size());
    for (std::size_t j = 0; j < tasks.size(); ++j) task_ids[j] = "t" + std::to_string(j);
    return Instance(std::move(names), std::move(expert_ids), experts,
                    std::move(task_ids), tasks);
  }

  int num_experts() const { return static_cast<int>(experts_.size()); }
  int num_tasks() const { return static_cast<int>(tasks_.size()); }
  std::size_t num_skills() const { return skill_names_.size(); }

  const Expert& expert(int i) const { return experts_[static_cast<std::size_t>(i)]; }
  const Task& task(int j) const { return tasks_[static_cast<std::size_t>(j)]; }
  const std::vector<Expert>& experts() const { return experts_; }
  const std::vector<Task>& tasks() const { return tasks_; }

  const std::vector<std::string>& skill_names() const { return skill_names_; }
  const std::string& expert_id(int i) const { return expert_ids_[static_cast<std::size_t>(i)]; }
  const std::string& task_id(int j) const { return task_ids_[static_cast<std::size_t>(j)]; }

  int task_size(int j) const { return static_cast<int>(task(j).skills.size()); }

 private:
  Instance(std::vector<std::string> skill_names,
           std::vector<std::string> expert_ids,
           const std::vector<std::vector<SkillId>>& experts,
           std::vector<std::string> task_ids,
           const std::vector<std::vector<SkillId>>& tasks)
      : skill_names_(std::move(skill_names)),
        expert_ids_(std::move(expert_ids)),
        task_ids_(std::move(task_ids)) {
    if (experts.empty()) throw InputError("instance requires n >= 1");
    if (tasks.empty()) throw InputError("instance requires m >= 1");
    if (expert_ids_.size() != experts.size() || task_ids_.size() != tasks.size()) {
      throw InputError("id and skill list counts differ");
    }
    const std::size_t universe = skill_names_.size();
    auto check = [universe](const std::vector<SkillId>& ids) {
      for (SkillId id : ids) {
        if (id >= universe) throw InputError("skill id out of range");
      }
    };
    experts_.reserve(experts.size());
    for (std::size_t i = 0; i < experts.size(); ++i) {
      check(experts[i]);
      experts_.push_back({static_cast<int>(i), SkillSet(universe, experts[i])});
    }
    tasks_.reserve(tasks.size());
    for (std::size_t j = 0; j < tasks.size(); ++j) {
      check(tasks[j]);
      if (tasks[j].empty()) {
        throw InputError("task " + task_ids_[j] + " has no skills");
      }
      tasks_.push_back({static_cast<int>(j), SkillSet(universe, tasks[j])});
    }
  }

  std::vector<std::string> skill_names_;
  std::vector<std::string> expert_ids_;
  std::vector<std::string> task_ids_;
  std::vector<Expert> experts_;
  std::vector<Task> tasks_;
};

}  // namespace teamform

#endif  // TEAMFORM_INSTANCE_HPP_
