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

// Brute-force derivation of every propagation rule the tracker ships.
//
// CNOT rules come from exhaustive 4x4 matrix search. Rotation rules come
// from running each gadget in the simulator with every measurement branch
// forced by post-selection, then searching the four statuses for the one
// that explains the result. Nothing here reads the tracker's tables.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ptrack/circuit.hpp"
#include "ptrack/pauli.hpp"
#include "ptrack/tracker.hpp"

namespace ptrack {

struct CnotTauEntry {
  PauliStatus control_in = PauliStatus::I;
  PauliStatus target_in = PauliStatus::I;
  PauliStatus control_out = PauliStatus::I;
  PauliStatus target_out = PauliStatus::I;
};

/// All 16 entries, row-major over (control_in, target_in). Each is the
/// unique (c', t') with CNOT (M(c) x M(t)) = (M(c') x M(t')) CNOT up to
/// global phase. Throws OracleDefect if any entry has zero or several
/// solutions.
std::vector<CnotTauEntry> derive_tau_cnot_table();

/// CNOT * X1 == X1 * X2 * CNOT over integer 4x4 matrices, no tolerance.
bool cnot_x_spread_identity_holds();

/**
 * Certifies a single rotational row: prepares the probe states, applies
 * M(s_in), runs the gadget with the branches in `outcome` forced and
 * returns the unique s_out with result = M(s_out) R |probe> up to phase.
 *
 * Throws OracleDefect if the outcome shape is unreachable (e.g. an RZ8
 * second bit where the first stage already succeeded), or if zero or
 * several statuses match.
 */
PauliStatus derive_tau_rotation(GateKind kind, PauliStatus s_in,
                                const Outcome& outcome,
                                std::uint64_t seed = 2026);

/// One row where the certified table and the published table disagree.
/// An absent value means the row does not exist in that table.
struct TauDiffRow {
  GateKind kind = GateKind::RX4;
  PauliStatus s_in = PauliStatus::I;
  Outcome outcome;
  std::optional<PauliStatus> published;
  std::optional<PauliStatus> certified;
};

struct RotationTauDerivation {
  std::vector<TauRow> rows;  // same order as shipped_rotation_table()
  std::vector<TauDiffRow> diff;
};

/**
 * Derives every reachable row. For RZ8 the oracle decides reachability
 * itself: if the first stage already leaves a Pauli times T, the row is
 * single-bit; otherwise both second-stage outcomes are certified. Rows are
 * certified in parallel, each with its own generator.
 */
RotationTauDerivation derive_tau_rotation_table(std::uint64_t seed = 2026);

/// The rotational propagation table as originally published for this
/// tracking scheme, wildcard rows ("|0*>") expanded to single-bit rows.
std::vector<TauRow> published_rotation_table();

/// tau_table.diff text: a '#' header, then one line per row
/// "<kind> <s_in> <outcome> <published> <certified>" with '-' for absent
/// and the outcome tokens joined by ','.
std::string format_tau_diff(const std::vector<TauDiffRow>& diff);

}  // namespace ptrack
