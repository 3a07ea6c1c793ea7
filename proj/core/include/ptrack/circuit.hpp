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
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ptrack {

using Qubit = std::uint32_t;

/**
 * Gate kinds.
 *
 * The first four form the teleportation gate set that the tracker and the
 * executor accept. H, P and T only appear in Clifford+T input and are
 * removed by lower_clifford_t().
 */
enum class GateKind : std::uint8_t {
  CNOT,
  RX4,  // R_x(pi/4) = (1/sqrt2) [[1, -i], [-i, 1]]
  RZ4,  // R_z(pi/4) = P = diag(1, i)
  RZ8,  // R_z(pi/8) = T = diag(1, e^{i pi/4})
  H,
  P,
  T,
};

std::string_view mnemonic(GateKind kind);
std::optional<GateKind> parse_mnemonic(std::string_view text);

constexpr bool is_rotation(GateKind kind) {
  return kind == GateKind::RX4 || kind == GateKind::RZ4 ||
         kind == GateKind::RZ8;
}

constexpr bool in_teleportation_set(GateKind kind) {
  return kind == GateKind::CNOT || is_rotation(kind);
}

struct Gate {
  GateKind kind = GateKind::CNOT;
  Qubit target = 0;
  Qubit control = 0;  // CNOT only

  static constexpr Gate cnot(Qubit c, Qubit t) {
    return Gate{GateKind::CNOT, t, c};
  }
  static constexpr Gate single(GateKind kind, Qubit q) {
    return Gate{kind, q, 0};
  }

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Which mnemonics a circuit may contain.
enum class GateSet {
  Teleportation,  // CNOT RX4 RZ4 RZ8
  CliffordT,      // additionally H P T
};

/**
 * An n-qubit circuit as an ordered gate list.
 *
 * Every appended gate is checked against the qubit count and the gate set,
 * so a constructed Circuit is always well formed.
 */
class Circuit {
 public:
  explicit Circuit(std::size_t num_qubits,
                   GateSet gate_set = GateSet::Teleportation);

  /// Throws std::invalid_argument for out-of-range operands, a CNOT with
  /// control equal to target, or a kind outside the gate set.
  void append(const Gate& gate);

  std::size_t num_qubits() const { return num_qubits_; }
  GateSet gate_set() const { return gate_set_; }
  std::span<const Gate> gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  std::size_t count(GateKind kind) const;
  std::size_t rotation_count() const;

  void reserve(std::size_t n) { gates_.reserve(n); }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::size_t num_qubits_;
  GateSet gate_set_;
  std::vector<Gate> gates_;
};

/// Checks a gate against a qubit count; returns an error message or nothing.
std::optional<std::string> validate_gate(const Gate& gate,
                                         std::size_t num_qubits,
                                         GateSet gate_set);

/**
 * Parses the line-oriented circuit format:
 *
 *     # comment
 *     qubits 2
 *     RX4 0
 *     CNOT 0 1
 *
 * Blank lines and '#' comments are ignored. The header must be the first
 * non-comment line. Throws ParseError with the offending line number.
 */
Circuit parse_circuit(std::string_view text,
                      GateSet gate_set = GateSet::Teleportation);
Circuit read_circuit(std::istream& in,
                     GateSet gate_set = GateSet::Teleportation);

/// Canonical form: header, then one gate per line, single spaces, no
/// comments, trailing newline.
std::string serialize_circuit(const Circuit& circuit);
void write_circuit(std::ostream& out, const Circuit& circuit);

}  // namespace ptrack
