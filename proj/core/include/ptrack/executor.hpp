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

#include "ptrack/circuit.hpp"
#include "ptrack/state_vector.hpp"
#include "ptrack/tracker.hpp"

namespace ptrack {

enum class RunMode {
  Immediate,  // correct after every measurement
  Deferred,   // never correct; return the record for tracking
};

struct RunResult {
  StateVector final_state;  // labels 0..n-1, one per logical slot
  MeasurementRecord record;
  std::size_t applied_corrections = 0;  // always 0 when deferred
};

/// Largest logical register execute() accepts (n + 1 live qubits at peak).
inline constexpr std::size_t kMaxSimulatedQubits = 14;

/**
 * Teleportation-based execution of a circuit over the gadgets in
 * gadgets.hpp, with Born-sampled outcomes from Rng(seed).
 *
 * Immediate mode applies XZ after a nontrivial RX4/RZ4 outcome, runs the
 * RZ8 second stage on a first outcome of |1>, and counts each of those as
 * one correction. Deferred mode applies nothing and decides the RZ8 second
 * stage from a live TrackingSession.
 *
 * `input` must carry labels 0..n-1 in order. Throws CapacityError if
 * n > kMaxSimulatedQubits and std::invalid_argument on a slot mismatch.
 */
RunResult execute(const Circuit& circuit, RunMode mode,
                  const StateVector& input, std::uint64_t seed);

/// Exact unitary evolution by the gate matrices, in gate order. Accepts
/// the Clifford+T kinds as well.
StateVector ideal_apply(const Circuit& circuit, const StateVector& input);

/// Matrix of a single-qubit gate kind.
Matrix2 gate_matrix(GateKind kind);

/// Applies matrix_of(frame[k]) to label k for every k.
void apply_frame(StateVector& state, const CorrectionFrame& frame);

}  // namespace ptrack
