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

#include "ptrack/tracker.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "ptrack/errors.hpp"
#include "ptrack/random.hpp"

namespace ptrack {

namespace {

using S = PauliStatus;
using Row2 = std::array<S, 2>;

// Rotational propagation, indexed by the raw status value (I, X, Z, XZ).
// Derived by the post-selection oracle in oracle.cpp; the unit and
// acceptance tests require these to equal the oracle output exactly.

// RX4, indexed [s_in][outcome], outcome 0 = |+>.
constexpr std::array<Row2, 4> kRx4 = {{
    {S::I, S::XZ},   // I
    {S::X, S::Z},    // X
    {S::XZ, S::I},   // Z
    {S::Z, S::X},    // XZ
}};

// RZ4, indexed [s_in][outcome], outcome 0 = |0>.
constexpr std::array<Row2, 4> kRz4 = {{
    {S::I, S::XZ},   // I
    {S::XZ, S::I},   // X
    {S::Z, S::X},    // Z
    {S::X, S::Z},    // XZ
}};

// RZ8 when the first stage already enacted T up to a Pauli.
constexpr std::array<S, 4> kRz8OneStage = {S::I, S::I, S::Z, S::Z};

// RZ8 after the second stage, indexed [s_in][second outcome].
constexpr std::array<Row2, 4> kRz8TwoStage = {{
    {S::XZ, S::I},  // I
    {S::XZ, S::I},  // X
    {S::X, S::Z},   // Z
    {S::X, S::Z},   // XZ
}};

constexpr std::size_t idx(S s) { return static_cast<std::size_t>(s); }

enum class Fault { None, NotRotation, WrongBasis, MissingSecond, ExtraSecond };

inline Fault classify(GateKind kind, S s_in, const Outcome& b) {
  switch (kind) {
    case GateKind::RX4:
      if (b.basis != Basis::X) return Fault::WrongBasis;
      return b.second ? Fault::ExtraSecond : Fault::None;
    case GateKind::RZ4:
      if (b.basis != Basis::Z) return Fault::WrongBasis;
      return b.second ? Fault::ExtraSecond : Fault::None;
    case GateKind::RZ8:
      if (b.basis != Basis::Z) return Fault::WrongBasis;
      if (needs_second_stage(s_in, b.first))
        return b.second ? Fault::None : Fault::MissingSecond;
      return b.second ? Fault::ExtraSecond : Fault::None;
    default:
      return Fault::NotRotation;
  }
}

std::string describe(Fault f, GateKind kind) {
  const std::string name(mnemonic(kind));
  switch (f) {
    case Fault::NotRotation:
      return name + " is not a rotational gate";
    case Fault::WrongBasis:
      return name + " outcome has the wrong measurement basis";
    case Fault::MissingSecond:
      return name +
             " outcome lacks the second-stage bit required by the frame";
    case Fault::ExtraSecond:
      return name + " outcome has a second-stage bit the frame rules out";
    case Fault::None:
      break;
  }
  return name + " outcome accepted";
}

// Precondition: classify() returned Fault::None.
inline S lookup(GateKind kind, S s_in, const Outcome& b) {
  switch (kind) {
    case GateKind::RX4:
      return kRx4[idx(s_in)][b.first];
    case GateKind::RZ4:
      return kRz4[idx(s_in)][b.first];
    default:
      return b.second ? kRz8TwoStage[idx(s_in)][*b.second]
                      : kRz8OneStage[idx(s_in)];
  }
}

template <class Visit>
CorrectionFrame run_track(const Circuit& circuit,
                          const MeasurementRecord& record, Visit&& visit) {
  CorrectionFrame frame(circuit.num_qubits());
  const auto gates = circuit.gates();
  const auto& entries = record.entries;
  std::size_t r = 0;
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    if (g.kind == GateKind::CNOT) {
      auto [c, t] = tau_cnot(frame[g.control], frame[g.target]);
      frame[g.control] = c;
      frame[g.target] = t;
    } else {
      if (r >= entries.size())
        throw TrackingError(
            i, "record has " + std::to_string(entries.size()) +
                   " entries but the circuit has " +
                   std::to_string(circuit.rotation_count()) +
                   " rotational gates");
      const Outcome& b = entries[r++];
      const S s_in = frame[g.target];
      if (Fault f = classify(g.kind, s_in, b); f != Fault::None)
        throw TrackingError(i, describe(f, g.kind));
      frame[g.target] = lookup(g.kind, s_in, b);
    }
    visit(i, frame);
  }
  if (r != entries.size())
    throw TrackingError(gates.size(),
                        "record has " + std::to_string(entries.size()) +
                            " entries but the circuit has " +
                            std::to_string(r) + " rotational gates");
  return frame;
}

}  // namespace

std::size_t CorrectionFrame::nontrivial_count() const {
  return static_cast<std::size_t>(
      std::count_if(statuses_.begin(), statuses_.end(),
                     [](PauliStatus s) { return s != PauliStatus::I; }));
}

PauliStatus tau_rotation(GateKind kind, PauliStatus s_in, const Outcome& b) {
  if (Fault f = classify(kind, s_in, b); f != Fault::None)
    throw std::invalid_argument(describe(f, kind));
  return lookup(kind, s_in, b);
}

std::vector<TauRow> shipped_rotation_table() {
  std::vector<TauRow> rows;
  for (GateKind kind : {GateKind::RX4, GateKind::RZ4, GateKind::RZ8}) {
    const Basis basis = kind == GateKind::RX4 ? Basis::X : Basis::Z;
    for (S s : kAllStatuses) {
      for (bool b1 : {false, true}) {
        if (kind == GateKind::RZ8 && needs_second_stage(s, b1)) {
          for (bool b2 : {false, true}) {
            Outcome o{basis, b1, b2};
            rows.push_back({kind, s, o, lookup(kind, s, o)});
          }
        } else {
          Outcome o{basis, b1, {}};
          rows.push_back({kind, s, o, lookup(kind, s, o)});
        }
      }
    }
  }
  return rows;
}

CorrectionFrame track(const Circuit& circuit,
                      const MeasurementRecord& record) {
  return run_track(circuit, record, [](std::size_t, const CorrectionFrame&) {});
}

std::vector<CorrectionFrame> track_trace(const Circuit& circuit,
                                         const MeasurementRecord& record) {
  std::vector<CorrectionFrame> frames;
  frames.reserve(circuit.size());
  run_track(circuit, record, [&](std::size_t, const CorrectionFrame& f) {
    frames.push_back(f);
  });
  return frames;
}

double expected_correction_count(const Circuit& circuit) {
  std::size_t m4 = 0;
  std::size_t m8 = 0;
  for (const Gate& g : circuit.gates()) {
    if (g.kind == GateKind::RX4 || g.kind == GateKind::RZ4) ++m4;
    if (g.kind == GateKind::RZ8) ++m8;
  }
  return 0.5 * static_cast<double>(m4) + 0.75 * static_cast<double>(m8);
}

MeasurementRecord random_record(const Circuit& circuit, std::uint64_t seed) {
  Rng rng(seed);
  TrackingSession session(circuit);
  while (session.advance()) {
    session.submit(rng.bit());
    if (session.awaiting_second_stage()) session.submit(rng.bit());
  }
  session.finish();
  return session.record();
}

// --- TrackingSession -------------------------------------------------------

TrackingSession::TrackingSession(const Circuit& circuit)
    : circuit_(&circuit), frame_(circuit.num_qubits()) {
  if (circuit.gate_set() != GateSet::Teleportation)
    for (const Gate& g : circuit.gates())
      if (!in_teleportation_set(g.kind))
        throw std::invalid_argument(
            "TrackingSession: circuit contains gates outside the "
            "teleportation set");
}

std::optional<std::size_t> TrackingSession::advance() {
  if (current_)
    throw TrackingError(*current_,
                        "advance() before all outcomes were submitted");
  const auto gates = circuit_->gates();
  while (next_ < gates.size()) {
    const Gate& g = gates[next_];
    if (g.kind != GateKind::CNOT) {
      current_ = next_++;
      return current_;
    }
    auto [c, t] = tau_cnot(frame_[g.control], frame_[g.target]);
    frame_[g.control] = c;
    frame_[g.target] = t;
    ++next_;
  }
  return std::nullopt;
}

std::optional<std::size_t> TrackingSession::current_gate() const {
  return current_;
}

bool TrackingSession::needs_second_stage(bool first_bit) const {
  if (!current_ || circuit_->gates()[*current_].kind != GateKind::RZ8)
    throw TrackingError(current_.value_or(next_),
                        "second-stage query outside an RZ8 gate");
  return ptrack::needs_second_stage(
      frame_[circuit_->gates()[*current_].target], first_bit);
}

void TrackingSession::submit(bool bit) {
  if (!current_)
    throw TrackingError(next_, "outcome submitted with no rotational gate "
                               "pending (call advance() first)");
  const Gate& g = circuit_->gates()[*current_];
  switch (g.kind) {
    case GateKind::RX4:
      complete(Outcome::x(bit));
      break;
    case GateKind::RZ4:
      complete(Outcome::z(bit));
      break;
    default:
      if (pending_first_) {
        complete(Outcome::z(*pending_first_, bit));
      } else if (ptrack::needs_second_stage(frame_[g.target], bit)) {
        pending_first_ = bit;
      } else {
        complete(Outcome::z(bit));
      }
      break;
  }
}

void TrackingSession::complete(const Outcome& outcome) {
  const Gate& g = circuit_->gates()[*current_];
  frame_[g.target] = tau_rotation(g.kind, frame_[g.target], outcome);
  record_.entries.push_back(outcome);
  pending_first_.reset();
  current_.reset();
}

CorrectionFrame TrackingSession::finish() {
  if (current_)
    throw TrackingError(*current_, "finish() with outcomes still pending");
  if (advance())
    throw TrackingError(*current_,
                        "finish() before all rotational gates were consumed");
  return frame_;
}

}  // namespace ptrack
