// Copyright 2026 The Matroid Census Authors.
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

#ifndef MCENSUS_ERRORS_HPP_
#define MCENSUS_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mcensus {

// Input is well-formed but is not a basis family satisfying the exchange
// axiom where one is required.
class NotAMatroidError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed census text. line() is 1-based; 0 when the error is not tied to
// a particular line (e.g. a short file).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A requested computation exceeds the configured feasibility budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mcensus

#endif  // MCENSUS_ERRORS_HPP_
