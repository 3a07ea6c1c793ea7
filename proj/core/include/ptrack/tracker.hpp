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
#include <optional>
#include <utility>
#include <vector>

#include "ptrack/circuit.hpp"
#include "ptrack/pauli.hpp"

namespace ptrack {

enum class Basis : std::uint8_t { X, Z };

/**
 * Raw measurement outcome of one rotational gate, as the detector reported
 * it. Frame adjustment never happens here.
 *
 * X basis: false = |+>, true = |->. Z basis: false = |0>, true = |1>.
 * `second` is set iff an RZ8 gate ran its second teleportation stage.
 */
struct Outcome {
  Basis basis = Basis::Z;
  bool first = false;
  std::optional<bool> second;

  static constexpr Outcome x(bool minus) { return {Basis::X, minus, {}}; }
  static constexpr Outcome z(bool one) { return {Basis::Z, one, {}}; }
  static constexpr Outcome z(bool one, bool second_one) {
    return {Basis::Z, one, second_one};
  }

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

/// One entry per rotational gate, in circuit order.
struct MeasurementRecord {
  std::vector<Outcome> entries;

  std::size_t size() const { return entries.size(); }
  friend bool operator==(const MeasurementRecord&,
                         const MeasurementRecord&) = default;
};

/// Per-qubit pending corrections. Starts all-I.
class CorrectionFrame {
 public:
  explicit CorrectionFrame(std::size_t n) : statuses_(n, PauliStatus::I) {}
  CorrectionFrame(std::initializer_list<PauliStatus> init) : statuses_(init) {}

  std::size_t size() const { return statuses_.size(); }
  PauliStatus operator[](std::size_t k) const { return statuses_[k]; }
  PauliStatus& operator[](std::size_t k) { return statuses_[k]; }
  const std::vector<PauliStatus>& statuses() const { return statuses_; }

  /// Outputs that need a physical correction (s_k != I).
  std::size_t nontrivial_count() const;

  friend bool operator==(const CorrectionFrame&,
                         const CorrectionFrame&) = default;

 private:
  std::vector<PauliStatus> statuses_;
};

/**
 * CNOT propagation. An X on the control spreads to the target; a Z on the
 * target spreads to the control.
 */
constexpr std::pair<PauliStatus, PauliStatus> tau_cnot(PauliStatus control,
                                                       PauliStatus target) {
  return {has_z(target) ? flip_z(control) : control,
          has_x(control) ? flip_x(target) : target};
}

/**
 * Whether an RZ8 gate needs its second (R_z(pi/4)) teleportation stage.
 *
 * The first stage enacts T on a |0> outcome and X T^dagger on |1>. A
 * pending X on the input swaps the two, so the decision uses the first
 * outcome XOR the X component of the incoming status.
 */
constexpr bool needs_second_stage(PauliStatus s_in, bool first_bit) {
  return first_bit != has_x(s_in);
}

/**
 * Rotational propagation from the shipped table.
 *
 * Throws std::invalid_argument if `kind` is not rotational or the outcome
 * shape does not fit the gate (basis, or an RZ8 second bit present/absent
 * contrary to needs_second_stage()).
 */
PauliStatus tau_rotation(GateKind kind, PauliStatus s_in, const Outcome& b);

/// A certified row of a rotational propagation table.
struct TauRow {
  GateKind kind = GateKind::RX4;
  PauliStatus s_in = PauliStatus::I;
  Outcome outcome;
  PauliStatus s_out = PauliStatus::I;

  friend bool operator==(const TauRow&, const TauRow&) = default;
};

/// Every reachable (kind, s_in, outcome) row of the shipped table, ordered
/// by kind, then s_in (I, X, Z, XZ), then outcome bits.
std::vector<TauRow> shipped_rotation_table();

/**
 * Post-hoc tracking: starts from all-I and folds every gate into the
 * frame. Throws TrackingError (carrying the gate index) if the record has
 * the wrong length, a wrong basis, or an RZ8 entry whose second-stage flag
 * disagrees with the frame-adjusted decision.
 */
CorrectionFrame track(const Circuit& circuit, const MeasurementRecord& record);

/// Same as track(), returning the frame after every gate (size() frames).
std::vector<CorrectionFrame> track_trace(const Circuit& circuit,
                                         const MeasurementRecord& record);

/// 0.5 per RX4/RZ4 gate plus 0.75 per RZ8 gate.
double expected_correction_count(const Circuit& circuit);

/// Seeded uniform outcome bits for every rotational gate, with RZ8
/// second-stage bits present exactly where the evolving frame requires
/// them. Stands in for hardware outcomes where simulation is infeasible.
MeasurementRecord random_record(const Circuit& circuit, std::uint64_t seed);

/**
 * Incremental tracker for interleaved execution. The RZ8 branch decision
 * depends on the live frame, so an executor running without corrections
 * has to consult the session between the two stages.
 *
 *     TrackingSession s(circuit);
 *     while (auto gate = s.advance()) {
 *       bool b = measure(...);
 *       s.submit(b);
 *       if (s.awaiting_second_stage()) s.submit(measure(...));
 *     }
 *     CorrectionFrame frame = s.finish();
 *
 * The circuit must outlive the session. Single owner, not thread safe.
 */
class TrackingSession {
 public:
  explicit TrackingSession(const Circuit& circuit);

  /// Applies CNOTs up to the next rotational gate and returns its index,
  /// or nullopt when the circuit is exhausted. Throws TrackingError if the
  /// current rotational gate has not received all its outcomes.
  std::optional<std::size_t> advance();

  /// Index of the rotational gate awaiting outcomes, if any.
  std::optional<std::size_t> current_gate() const;

  /// Decision for the current gate, which must be RZ8.
  bool needs_second_stage(bool first_bit) const;

  /// True after an RZ8 first outcome that requires the second stage.
  bool awaiting_second_stage() const { return pending_first_.has_value(); }

  /// Feeds one raw outcome bit to the current gate. Throws TrackingError
  /// if no rotational gate is current.
  void submit(bool bit);

  const CorrectionFrame& frame() const { return frame_; }
  const MeasurementRecord& record() const { return record_; }

  /// Consumes trailing CNOTs and returns the final frame. Throws
  /// TrackingError if a rotational gate has not been resolved.
  CorrectionFrame finish();

 private:
  void complete(const Outcome& outcome);

  const Circuit* circuit_;
  CorrectionFrame frame_;
  MeasurementRecord record_;
  std::size_t next_ = 0;
  std::optional<std::size_t> current_;
  std::optional<bool> pending_first_;
};

}  // namespace ptrack
