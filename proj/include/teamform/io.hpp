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

#ifndef TEAMFORM_IO_HPP_
#define TEAMFORM_IO_HPP_

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "teamform/assignment.hpp"
#include "teamform/coordination_graph.hpp"
#include "teamform/errors.hpp"
#include "teamform/instance.hpp"
#include "teamform/rng.hpp"

// Text formats, all TAB-separated, one record per line, '#' lines and blank
// lines skipped:
//   experts / tasks:  id<TAB>skill,skill,...
//   graph:            expert_id<TAB>expert_id<TAB>weight
//   pair counts:      expert_id<TAB>expert_id<TAB>count
//   assignment:       expert_id<TAB>task_id

namespace teamform {

namespace detail {

inline std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

// Calls fn(line_number, line) for each record line.
template <typename Fn>
void for_each_record(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    fn(number, std::string_view(line));
  }
}

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return in;
}

inline std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path + ": cannot open for writing");
  return out;
}

inline double parse_double(std::string_view text, const std::string& source, std::size_t line) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw ParseError(source, line, "invalid number '" + std::string(text) + "'");
  }
  return value;
}

inline std::int64_t parse_int(std::string_view text, const std::string& source, std::size_t line) {
  std::int64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(source, line, "invalid integer '" + std::string(text) + "'");
  }
  return value;
}

struct SkillLists {
  std::vector<std::string> ids;
  std::vector<std::vector<std::string>> skills;
};

inline SkillLists read_skill_lists(std::istream& in, const std::string& source, bool allow_empty) {
  SkillLists lists;
  std::unordered_set<std::string> seen;
  for_each_record(in, [&](std::size_t number, std::string_view line) {
    const auto fields = split(line, '\t');
    if (fields.size() > 2) throw ParseError(source, number, "expected id<TAB>skills");
    const std::string id(fields[0]);
    if (id.empty()) throw ParseError(source, number, "empty id");
    if (!seen.insert(id).second) throw ParseError(source, number, "duplicate id '" + id + "'");
    std::vector<std::string> skills;
    if (fields.size() == 2 && !fields[1].empty()) {
      for (std::string_view skill : split(fields[1], ',')) {
        if (skill.empty()) throw ParseError(source, number, "empty skill name");
        skills.emplace_back(skill);
      }
    }
    if (skills.empty() && !allow_empty) {
      throw ParseError(source, number, "task '" + id + "' has no skills");
    }
    lists.ids.push_back(id);
    lists.skills.push_back(std::move(skills));
  });
  return lists;
}

inline std::unordered_map<std::string, int> expert_lookup(const Instance& instance) {
  std::unordered_map<std::string, int> lookup;
  for (int i = 0; i < instance.num_experts(); ++i) lookup.emplace(instance.expert_id(i), i);
  return lookup;
}

}  // namespace detail

// Experts may list no skills; every task needs at least one.
inline Instance parse_instance(std::istream& experts, const std::string& experts_source,
                               std::istream& tasks, const std::string& tasks_source) {
  auto e = detail::read_skill_lists(experts, experts_source, true);
  auto t = detail::read_skill_lists(tasks, tasks_source, false);
  return Instance::from_names(std::move(e.ids), e.skills, std::move(t.ids), t.skills);
}

inline Instance parse_instance(const std::string& experts_path, const std::string& tasks_path) {
  auto experts = detail::open_input(experts_path);
  auto tasks = detail::open_input(tasks_path);
  return parse_instance(experts, experts_path, tasks, tasks_path);
}

// Skills are written in ascending id order, which parses back to the same ids
// whenever every skill of the universe is used by some expert or task.
inline void write_instance(const Instance& instance, std::ostream& experts, std::ostream& tasks) {
  const auto& names = instance.skill_names();
  auto line = [&](std::ostream& out, const std::string& id, const SkillSet& skills) {
    out << id << '\t';
    bool first = true;
    for (SkillId s : skills.ids()) {
      if (!first) out << ',';
      out << names[s];
      first = false;
    }
    out << '\n';
  };
  for (int i = 0; i < instance.num_experts(); ++i) line(experts, instance.expert_id(i), instance.expert(i).skills);
  for (int j = 0; j < instance.num_tasks(); ++j) line(tasks, instance.task_id(j), instance.task(j).skills);
}

inline void write_instance(const Instance& instance, const std::string& experts_path,
                           const std::string& tasks_path) {
  auto experts = detail::open_output(experts_path);
  auto tasks = detail::open_output(tasks_path);
  write_instance(instance, experts, tasks);
}

inline std::vector<Edge> parse_graph(std::istream& in, const std::string& source, const Instance& instance) {
  const auto lookup = detail::expert_lookup(instance);
  std::vector<Edge> edges;
  detail::for_each_record(in, [&](std::size_t number, std::string_view line) {
    const auto fields = detail::split(line, '\t');
    if (fields.size() != 3) throw ParseError(source, number, "expected a<TAB>b<TAB>weight");
    auto index = [&](std::string_view id) {
      auto it = lookup.find(std::string(id));
      if (it == lookup.end()) throw ParseError(source, number, "unknown expert '" + std::string(id) + "'");
      return it->second;
    };
    const double w = detail::parse_double(fields[2], source, number);
    if (w < 0.0) throw ParseError(source, number, "negative weight");
    edges.push_back({index(fields[0]), index(fields[1]), w});
  });
  return edges;
}

inline std::vector<Edge> parse_graph(const std::string& path, const Instance& instance) {
  auto in = detail::open_input(path);
  return parse_graph(in, path, instance);
}

inline void write_graph(const Instance& instance, std::span<const Edge> edges, std::ostream& out) {
  std::ostringstream buffer;
  buffer.precision(17);
  for (const Edge& e : edges) {
    buffer << instance.expert_id(e.from) << '\t' << instance.expert_id(e.to) << '\t' << e.weight << '\n';
  }
  out << buffer.str();
}

inline void write_graph(const Instance& instance, std::span<const Edge> edges, const std::string& path) {
  auto out = detail::open_output(path);
  write_graph(instance, edges, out);
}

// Assignment sidecar: expert_id<TAB>task_id, pairs in (expert, task) order.
inline void write_assignment(const Assignment& assignment, std::ostream& out) {
  const Instance& instance = assignment.instance();
  std::string buffer;
  for (const Pair& p : assignment.pairs()) {
    buffer += instance.expert_id(p.expert);
    buffer += '\t';
    buffer += instance.task_id(p.task);
    buffer += '\n';
  }
  out << buffer;
}

inline void write_assignment(const Assignment& assignment, const std::string& path) {
  auto out = detail::open_output(path);
  write_assignment(assignment, out);
}

inline Assignment parse_assignment(std::istream& in, const std::string& source, const Instance& instance) {
  const auto experts = detail::expert_lookup(instance);
  std::unordered_map<std::string, int> tasks;
  for (int j = 0; j < instance.num_tasks(); ++j) tasks.emplace(instance.task_id(j), j);
  Assignment out(instance);
  detail::for_each_record(in, [&](std::size_t number, std::string_view line) {
    const auto fields = detail::split(line, '\t');
    if (fields.size() != 2) throw ParseError(source, number, "expected expert_id<TAB>task_id");
    const auto e = experts.find(std::string(fields[0]));
    if (e == experts.end()) throw ParseError(source, number, "unknown expert '" + std::string(fields[0]) + "'");
    const auto t = tasks.find(std::string(fields[1]));
    if (t == tasks.end()) throw ParseError(source, number, "unknown task '" + std::string(fields[1]) + "'");
    out.add(e->second, t->second);
  });
  return out;
}

inline Assignment parse_assignment(const std::string& path, const Instance& instance) {
  auto in = detail::open_input(path);
  return parse_assignment(in, path, instance);
}

struct PairCount {
  int a = 0;
  int b = 0;
  std::int64_t count = 0;
};

inline std::vector<PairCount> parse_pair_counts(std::istream& in, const std::string& source,
                                                const Instance& instance) {
  const auto lookup = detail::expert_lookup(instance);
  std::vector<PairCount> pairs;
  detail::for_each_record(in, [&](std::size_t number, std::string_view line) {
    const auto fields = detail::split(line, '\t');
    if (fields.size() != 3) throw ParseError(source, number, "expected a<TAB>b<TAB>count");
    auto index = [&](std::string_view id) {
      auto it = lookup.find(std::string(id));
      if (it == lookup.end()) throw ParseError(source, number, "unknown expert '" + std::string(id) + "'");
      return it->second;
    };
    pairs.push_back({index(fields[0]), index(fields[1]), detail::parse_int(fields[2], source, number)});
  });
  return pairs;
}

inline std::vector<PairCount> parse_pair_counts(const std::string& path, const Instance& instance) {
  auto in = detail::open_input(path);
  return parse_pair_counts(in, path, instance);
}

// weight = exp(-f * D) for D joint occurrences.
inline std::vector<Edge> build_cooccurrence_graph(std::span<const PairCount> pairs, double f = 0.1) {
  if (!(f >= 0.0) || !std::isfinite(f)) throw InputError("f must be a non-negative number");
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const PairCount& p : pairs) {
    if (p.count <= 0) throw InputError("co-occurrence count must be positive");
    edges.push_back({p.a, p.b, std::exp(-f * static_cast<double>(p.count))});
  }
  return edges;
}

// Jaccard distance between skill sets; two empty sets are at distance 1.
inline double jaccard_distance(const SkillSet& a, const SkillSet& b) {
  const std::size_t common = SkillSet::common_count(a, b);
  const std::size_t united = a.size() + b.size() - common;
  if (united == 0) return 1.0;
  return 1.0 - static_cast<double>(common) / static_cast<double>(united);
}

// Complete graph over all experts, i < j.
inline std::vector<Edge> build_jaccard_graph(const Instance& instance) {
  std::vector<Edge> edges;
  const int n = instance.num_experts();
  edges.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      edges.push_back({i, j, jaccard_distance(instance.expert(i).skills, instance.expert(j).skills)});
    }
  }
  return edges;
}

namespace detail {

// floor(avg) plus one more with probability frac(avg), at least 1, at most
// the universe.
inline std::size_t draw_size(Rng64& rng, double avg, std::size_t universe) {
  const double base = std::floor(avg);
  std::size_t size = static_cast<std::size_t>(base);
  if (rng.bernoulli(avg - base)) ++size;
  return std::clamp<std::size_t>(size, 1, universe);
}

// Partial Fisher-Yates over a persistent pool.
inline std::vector<SkillId> draw_skills(Rng64& rng, std::vector<SkillId>& pool, std::size_t size) {
  std::vector<SkillId> out;
  out.reserve(size);
  for (std::size_t k = 0; k < size; ++k) {
    const std::size_t j = k + static_cast<std::size_t>(rng.below(pool.size() - k));
    std::swap(pool[k], pool[j]);
    out.push_back(pool[k]);
  }
  return out;
}

}  // namespace detail

// Experts are drawn first, then tasks, from one Rng64 stream.
inline Instance generate_instance(int n, int m, int num_skills, double skills_per_expert,
                                  double skills_per_task, std::uint64_t seed) {
  if (n < 1 || m < 1 || num_skills < 1) throw InputError("n, m and num_skills must be positive");
  if (!(skills_per_expert > 0.0) || !(skills_per_task > 0.0)) {
    throw InputError("skills per expert and per task must be positive");
  }
  if (skills_per_task > num_skills) throw InputError("skills per task exceeds the skill universe");
  if (skills_per_expert > num_skills) throw InputError("skills per expert exceeds the skill universe");
  const auto universe = static_cast<std::size_t>(num_skills);
  Rng64 rng(seed);
  std::vector<SkillId> pool(universe);
  for (std::size_t s = 0; s < universe; ++s) pool[s] = static_cast<SkillId>(s);
  std::vector<std::vector<SkillId>> experts;
  std::vector<std::vector<SkillId>> tasks;
  experts.reserve(static_cast<std::size_t>(n));
  tasks.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < n; ++i) {
    experts.push_back(detail::draw_skills(rng, pool, detail::draw_size(rng, skills_per_expert, universe)));
  }
  for (int j = 0; j < m; ++j) {
    tasks.push_back(detail::draw_skills(rng, pool, detail::draw_size(rng, skills_per_task, universe)));
  }
  return Instance::from_ids(universe, experts, tasks);
}

}  // namespace teamform

#endif  // TEAMFORM_IO_HPP_
