// Copyright 2026 The ptrack Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ptrack {

/// Malformed circuit, record, or state text. Line numbers are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A measurement record that does not fit the circuit it is tracked against.
class TrackingError : public std::runtime_error {
 public:
  TrackingError(std::size_t gate_index, const std::string& message)
      : std::runtime_error("gate " + std::to_string(gate_index) + ": " +
                           message),
        gate_index_(gate_index) {}

  std::size_t gate_index() const { return gate_index_; }

 private:
  std::size_t gate_index_;
};

/// The dense simulator refuses states beyond its qubit budget.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The oracle could not certify a unique propagation rule.
class OracleDefect : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ptrack
