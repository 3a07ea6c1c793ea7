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

#include "ptrack/executor.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ptrack/errors.hpp"
#include "ptrack/gadgets.hpp"

namespace ptrack {

namespace {

void check_slots(const Circuit& circuit, const StateVector& input) {
  const auto labels = input.labels();
  bool ok = labels.size() == circuit.num_qubits();
  for (std::size_t k = 0; ok && k < labels.size(); ++k)
    ok = labels[k] == static_cast<Label>(k);
  if (!ok)
    throw std::invalid_argument(
        "input state must have exactly the circuit's " +
        std::to_string(circuit.num_qubits()) + " slots labeled 0..n-1");
}

}  // namespace

Matrix2 gate_matrix(GateKind kind) {
  constexpr double r = 0.70710678118654752440;
  const Amplitude i{0.0, 1.0};
  switch (kind) {
    case GateKind::RX4:
      return Matrix2{{r, -i * r, -i * r, r}};
    case GateKind::RZ4:
    case GateKind::P:
      return Matrix2{{1.0, 0.0, 0.0, i}};
    case GateKind::RZ8:
    case GateKind::T:
      return Matrix2{{1.0, 0.0, 0.0, std::polar(1.0, std::numbers::pi / 4)}};
    case GateKind::H:
      return Matrix2{{r, r, r, -r}};
    case GateKind::CNOT:
      break;
  }
  throw std::invalid_argument("gate_matrix: not a single-qubit gate");
}

StateVector ideal_apply(const Circuit& circuit, const StateVector& input) {
  check_slots(circuit, input);
  StateVector state = input;
  for (const Gate& g : circuit.gates()) {
    if (g.kind == GateKind::CNOT)
      state.apply_cnot(g.control, g.target);
    else
      state.apply_unitary(g.target, gate_matrix(g.kind));
  }
  return state;
}

void apply_frame(StateVector& state, const CorrectionFrame& frame) {
  for (std::size_t k = 0; k < frame.size(); ++k)
    if (frame[k] != PauliStatus::I)
      state.apply_unitary(static_cast<Label>(k), matrix_of(frame[k]));
}

RunResult execute(const Circuit& circuit, RunMode mode,
                  const StateVector& input, std::uint64_t seed) {
  if (circuit.num_qubits() > kMaxSimulatedQubits)
    throw CapacityError("simulator supports at most " +
                        std::to_string(kMaxSimulatedQubits) +
                        " logical qubits, circuit has " +
                        std::to_string(circuit.num_qubits()));
  check_slots(circuit, input);

  const bool deferred = mode == RunMode::Deferred;
  Rng rng(seed);
  auto sample = [&rng](StateVector& s, Label q, Basis b) {
    return s.measure(q, b, rng);
  };

  StateVector state = input;
  std::vector<Label> slot(circuit.num_qubits());
  for (std::size_t k = 0; k < slot.size(); ++k) slot[k] = static_cast<Label>(k);
  Label next_label = static_cast<Label>(slot.size());

  std::optional<TrackingSession> session;
  if (deferred) session.emplace(circuit);
  RunResult result;
  const Matrix2 xz = matrix_of(PauliStatus::XZ);

  const auto gates = circuit.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    if (g.kind == GateKind::CNOT) {
      state.apply_cnot(slot[g.control], slot[g.target]);
      continue;
    }
    if (session) session->advance();

    const Label out = next_label++;
    const bool b1 = teleport_stage(state, g.kind, slot[g.target], out, sample);
    slot[g.target] = out;

    if (g.kind != GateKind::RZ8) {
      if (deferred) {
        session->submit(b1);
      } else {
        if (b1) {
          state.apply_unitary(out, xz);
          ++result.applied_corrections;
        }
        result.record.entries.push_back(g.kind == GateKind::RX4
                                            ? Outcome::x(b1)
                                            : Outcome::z(b1));
      }
      continue;
    }

    const bool second = deferred ? session->needs_second_stage(b1) : b1;
    if (deferred) session->submit(b1);
    if (!second) {
      if (!deferred) result.record.entries.push_back(Outcome::z(b1));
      continue;
    }
    const Label out2 = next_label++;
    const bool b2 = teleport_stage(state, GateKind::RZ4, out, out2, sample);
    slot[g.target] = out2;
    if (deferred) {
      session->submit(b2);
    } else {
      ++result.applied_corrections;  // the second stage itself
      if (!b2) {
        state.apply_unitary(out2, xz);
        ++result.applied_corrections;
      }
      result.record.entries.push_back(Outcome::z(b1, b2));
    }
  }

  if (session) {
    session->finish();
    result.record = session->record();
  }

  StateVector final_state = state.reordered(slot);
  for (std::size_t k = 0; k < slot.size(); ++k)
    final_state.relabel(slot[k], static_cast<Label>(k));
  result.final_state = std::move(final_state);
  return result;
}

}  // namespace ptrack
