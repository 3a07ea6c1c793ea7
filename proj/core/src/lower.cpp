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

#include "ptrack/lower.hpp"

#include <stdexcept>

namespace ptrack {

Circuit lower_clifford_t(const Circuit& circuit) {
  Circuit out(circuit.num_qubits(), GateSet::Teleportation);
  out.reserve(circuit.size() + 2 * circuit.count(GateKind::H));
  for (const Gate& g : circuit.gates()) {
    switch (g.kind) {
      case GateKind::CNOT:
      case GateKind::RX4:
      case GateKind::RZ4:
      case GateKind::RZ8:
        out.append(g);
        break;
      case GateKind::P:
        out.append(Gate::single(GateKind::RZ4, g.target));
        break;
      case GateKind::T:
        out.append(Gate::single(GateKind::RZ8, g.target));
        break;
      case GateKind::H:
        out.append(Gate::single(GateKind::RZ4, g.target));
        out.append(Gate::single(GateKind::RX4, g.target));
        out.append(Gate::single(GateKind::RZ4, g.target));
        break;
      default:
        throw std::invalid_argument("lower_clifford_t: unknown gate kind");
    }
  }
  return out;
}

}  // namespace ptrack
