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

#ifndef TEAMFORM_SKILL_SET_HPP_
#define TEAMFORM_SKILL_SET_HPP_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace teamform {

// Dense index into the skill universe of one instance.
using SkillId = std::uint32_t;

// Set of skills over a fixed universe [0, universe).
//
// Sorted ids are always kept for iteration. For universes of at most
// kDenseLimit skills a bit vector is kept alongside and every set algebra
// operation runs on words; larger universes fall back to sorted-merge.
// Two sets may only be combined when they share a universe.
class SkillSet {
 public:
  static constexpr std::size_t kDenseLimit = 4096;

  SkillSet() = default;

  explicit SkillSet(std::size_t universe)
      : universe_(universe),
        words_(universe <= kDenseLimit ? (universe + 63) / 64 : 0) {}

  SkillSet(std::size_t universe, std::span<const SkillId> ids)
      : SkillSet(universe) {
    ids_.assign(ids.begin(), ids.end());
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    if (dense()) {
      for (SkillId id : ids_) words_[id >> 6] |= bit(id);
    }
  }

  std::size_t universe() const { return universe_; }
  bool dense() const { return universe_ <= kDenseLimit; }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  const std::vector<SkillId>& ids() const { return ids_; }

  bool contains(SkillId id) const {
    if (id >= universe_) return false;
    if (dense()) return (words_[id >> 6] & bit(id)) != 0;
    return std::binary_search(ids_.begin(), ids_.end(), id);
  }

  // Returns false if already present.
  bool insert(SkillId id) {
    if (contains(id)) return false;
    ids_.insert(std::lower_bound(ids_.begin(), ids_.end(), id), id);
    if (dense()) words_[id >> 6] |= bit(id);
    return true;
  }

  void clear() {
    ids_.clear();
    std::fill(words_.begin(), words_.end(), 0);
  }

  // |a ∩ b|
  static std::size_t common_count(const SkillSet& a, const SkillSet& b) {
    if (a.dense()) {
      std::size_t count = 0;
      for (std::size_t w = 0; w < a.words_.size(); ++w) {
        count += static_cast<std::size_t>(
            std::popcount(a.words_[w] & b.words_[w]));
      }
      return count;
    }
    const SkillSet& small = a.size() <= b.size() ? a : b;
    const SkillSet& large = a.size() <= b.size() ? b : a;
    std::size_t count = 0;
    for (SkillId id : small.ids_) count += large.contains(id) ? 1 : 0;
    return count;
  }

  // this ∪= (a ∩ b). Returns the number of newly inserted skills.
  std::size_t insert_common(const SkillSet& a, const SkillSet& b) {
    const SkillSet& small = a.size() <= b.size() ? a : b;
    const SkillSet& large = a.size() <= b.size() ? b : a;
    std::size_t added = 0;
    for (SkillId id : small.ids_) {
      if (large.contains(id) && insert(id)) ++added;
    }
    return added;
  }

  // this ∪= other.
  void insert_all(const SkillSet& other) {
    for (SkillId id : other.ids_) insert(id);
  }

  friend bool operator==(const SkillSet& a, const SkillSet& b) {
    return a.universe_ == b.universe_ && a.ids_ == b.ids_;
  }

 private:
  static std::uint64_t bit(SkillId id) { return std::uint64_t{1} << (id & 63); }

  std::size_t universe_ = 0;
  std::vector<SkillId> ids_;
  std::vector<std::uint64_t> words_;
};

}  // namespace teamform

#endif  // TEAMFORM_SKILL_SET_HPP_
