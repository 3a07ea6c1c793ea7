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

#include "ptrack/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ptrack/errors.hpp"
#include "text_util.hpp"

namespace ptrack {

std::string_view mnemonic(GateKind kind) {
  switch (kind) {
    case GateKind::CNOT:
      return "CNOT";
    case GateKind::RX4:
      return "RX4";
    case GateKind::RZ4:
      return "RZ4";
    case GateKind::RZ8:
      return "RZ8";
    case GateKind::H:
      return "H";
    case GateKind::P:
      return "P";
    case GateKind::T:
      return "T";
  }
  return "?";
}

std::optional<GateKind> parse_mnemonic(std::string_view text) {
  for (GateKind k : {GateKind::CNOT, GateKind::RX4, GateKind::RZ4,
                     GateKind::RZ8, GateKind::H, GateKind::P, GateKind::T})
    if (mnemonic(k) == text) return k;
  return std::nullopt;
}

std::optional<std::string> validate_gate(const Gate& gate,
                                         std::size_t num_qubits,
                                         GateSet gate_set) {
  if (gate_set == GateSet::Teleportation && !in_teleportation_set(gate.kind))
    return std::string(mnemonic(gate.kind)) +
           " is not in the teleportation gate set (lower it first)";
  if (gate.target >= num_qubits)
    return "qubit index " + std::to_string(gate.target) +
           " out of range for " + std::to_string(num_qubits) + " qubits";
  if (gate.kind == GateKind::CNOT) {
    if (gate.control >= num_qubits)
      return "qubit index " + std::to_string(gate.control) +
             " out of range for " + std::to_string(num_qubits) + " qubits";
    if (gate.control == gate.target)
      return "CNOT control equals target (" + std::to_string(gate.target) +
             ")";
  }
  return std::nullopt;
}

Circuit::Circuit(std::size_t num_qubits, GateSet gate_set)
    : num_qubits_(num_qubits), gate_set_(gate_set) {
  if (num_qubits == 0)
    throw std::invalid_argument("a circuit needs at least one qubit");
}

void Circuit::append(const Gate& gate) {
  if (auto err = validate_gate(gate, num_qubits_, gate_set_))
    throw std::invalid_argument(*err);
  gates_.push_back(gate);
}

std::size_t Circuit::count(GateKind kind) const {
  return static_cast<std::size_t>(std::count_if(
      gates_.begin(), gates_.end(),
      [kind](const Gate& g) { return g.kind == kind; }));
}

std::size_t Circuit::rotation_count() const {
  return static_cast<std::size_t>(
      std::count_if(gates_.begin(), gates_.end(),
                    [](const Gate& g) { return is_rotation(g.kind); }));
}

namespace {

Qubit parse_index(std::string_view token, std::size_t line) {
  auto value = detail::parse_uint(token);
  if (!value || *value > 0xffffffffull)
    throw ParseError(line, "bad qubit index '" + std::string(token) + "'");
  return static_cast<Qubit>(*value);
}

}  // namespace

Circuit parse_circuit(std::string_view text, GateSet gate_set) {
  std::optional<Circuit> circuit;
  std::size_t line_no = 0;
  for (std::string_view line : detail::split_lines(text)) {
    ++line_no;
    const auto tokens = detail::tokenize(detail::strip_comment(line));
    if (tokens.empty()) continue;

    if (!circuit) {
      if (tokens[0] != "qubits" || tokens.size() != 2)
        throw ParseError(line_no, "expected header 'qubits <n>'");
      auto n = detail::parse_uint(tokens[1]);
      if (!n || *n == 0)
        throw ParseError(line_no, "qubit count must be a positive integer");
      circuit.emplace(static_cast<std::size_t>(*n), gate_set);
      continue;
    }

    auto kind = parse_mnemonic(tokens[0]);
    if (!kind || (gate_set == GateSet::Teleportation &&
                  !in_teleportation_set(*kind)))
      throw ParseError(line_no,
                       "unknown gate '" + std::string(tokens[0]) + "'");
    const std::size_t arity = *kind == GateKind::CNOT ? 2 : 1;
    if (tokens.size() != arity + 1)
      throw ParseError(line_no, std::string(tokens[0]) + " takes " +
                                    std::to_string(arity) + " operand(s)");
    Gate gate = *kind == GateKind::CNOT
                    ? Gate::cnot(parse_index(tokens[1], line_no),
                                 parse_index(tokens[2], line_no))
                    : Gate::single(*kind, parse_index(tokens[1], line_no));
    if (auto err = validate_gate(gate, circuit->num_qubits(), gate_set))
      throw ParseError(line_no, *err);
    circuit->append(gate);
  }
  if (!circuit) throw ParseError(line_no + 1, "missing 'qubits <n>' header");
  return std::move(*circuit);
}

Circuit read_circuit(std::istream& in, GateSet gate_set) {
  std::string text(std::istreambuf_iterator<char>(in), {});
  return parse_circuit(text, gate_set);
}

void write_circuit(std::ostream& out, const Circuit& circuit) {
  out << "qubits " << circuit.num_qubits() << '\n';
  for (const Gate& g : circuit.gates()) {
    out << mnemonic(g.kind);
    if (g.kind == GateKind::CNOT) out << ' ' << g.control;
    out << ' ' << g.target << '\n';
  }
}

std::string serialize_circuit(const Circuit& circuit) {
  std::ostringstream out;
  write_circuit(out, circuit);
  return out.str();
}

}  // namespace ptrack
