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

#ifndef TEAMFORM_RNG_HPP_
#define TEAMFORM_RNG_HPP_

#include <cstdint>
#include <span>
#include <utility>

namespace teamform {

// 64-bit linear congruential generator. All randomness in the library flows
// through this type so that shuffles and generated instances are reproducible
// bit-for-bit in any implementation:
//
//   state <- state * 6364136223846793005 + 1442695040888963407  (mod 2^64)
//
// next() advances once and returns the new state. Bounded draws use the high
// 32 bits of one step (multiply-shift), real draws use the high 53 bits.
class Rng64 {
 public:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

  explicit Rng64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * kMultiplier + kIncrement;
    return state_;
  }

  // Uniform integer in [0, bound). bound must be in [1, 2^32].
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t hi = next() >> 32;
    return (hi * bound) >> 32;
  }

  // Uniform real in [0, 1).
  double uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return uniform() < p; }

  // Fisher-Yates from the back: for i = n-1 .. 1 swap(i, below(i + 1)).
  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(below(i));
      using std::swap;
      swap(items[i - 1], items[j]);
    }
  }

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

}  // namespace teamform

#endif  // TEAMFORM_RNG_HPP_
