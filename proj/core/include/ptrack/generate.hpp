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
#include <string_view>

#include "ptrack/circuit.hpp"

namespace ptrack {

/// Relative frequency of each teleportation gate kind.
struct GateWeights {
  double cnot = 1.0;
  double rx4 = 1.0;
  double rz4 = 1.0;
  double rz8 = 1.0;

  static GateWeights uniform() { return {}; }
  static GateWeights rotations_only() { return {0.0, 1.0, 1.0, 1.0}; }

  /// Parses "cnot,rx4,rz4,rz8", e.g. "1,1,1,1". Throws std::invalid_argument.
  static GateWeights parse(std::string_view text);
};

/**
 * Seeded random circuit over {CNOT, RX4, RZ4, RZ8}.
 *
 * Per gate, one Rng::uniform() draw selects the kind by cumulative weight
 * (order CNOT, RX4, RZ4, RZ8), then operands are drawn with Rng::below(n);
 * a CNOT target is drawn from the n - 1 qubits other than the control.
 * Same seed and parameters give the same circuit on every platform.
 *
 * Throws std::invalid_argument if n == 0, weights are negative or sum to
 * zero, or n == 1 with a positive CNOT weight.
 */
Circuit random_circuit(std::size_t n, std::size_t m, std::uint64_t seed,
                       const GateWeights& weights = GateWeights::uniform());

/// Weights for random Clifford+T input: CNOT, H, P, T.
struct CliffordTWeights {
  double cnot = 1.0;
  double h = 1.0;
  double p = 1.0;
  double t = 1.0;
};

Circuit random_clifford_t_circuit(std::size_t n, std::size_t m,
                                  std::uint64_t seed,
                                  const CliffordTWeights& weights = {});

}  // namespace ptrack
