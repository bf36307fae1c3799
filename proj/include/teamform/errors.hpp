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

#ifndef TEAMFORM_ERRORS_HPP_
#define TEAMFORM_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace teamform {

// Invalid arguments or inconsistent instance data.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed input file. Carries the 1-based line number (0 if not tied to a
// line).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line,
             const std::string& what)
      : std::runtime_error(source + (line > 0 ? ":" + std::to_string(line)
                                              : std::string()) +
                           ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Brute-force enumeration requested above the configured limits.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace teamform

#endif  // TEAMFORM_ERRORS_HPP_
