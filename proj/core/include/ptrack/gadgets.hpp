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

// Single teleportation stages. Each consumes the data qubit and leaves the
// rotated state on a freshly injected qubit.
//
//   RX4:  |Y*> on fresh; CNOT(data -> fresh); X-measure data.
//         |+> enacts R_x(pi/4), |-> enacts XZ R_x(pi/4).
//   RZ4:  |Y>  on fresh; CNOT(fresh -> data); Z-measure data.
//         |0> enacts P, |1> enacts XZ P.
//   RZ8:  |A>  on fresh; CNOT(fresh -> data); Z-measure data.
//         |0> enacts T, |1> enacts X T^dagger; the latter is repaired
//         by a further RZ4 stage.
//
// |Y*> = (|0> - i|1>)/sqrt2 rather than |Y>: with |Y> the same circuit
// enacts R_x(-pi/4) on |+>, which would make the trivial outcome need a
// correction.

#pragma once

#include <concepts>

#include "ptrack/circuit.hpp"
#include "ptrack/state_vector.hpp"

namespace ptrack {

/// Decides a measurement: sample it, or force a branch.
template <class F>
concept Measurer = requires(F f, StateVector& s, Label q, Basis b) {
  { f(s, q, b) } -> std::convertible_to<bool>;
};

constexpr InjectedState resource_state(GateKind stage) {
  switch (stage) {
    case GateKind::RX4:
      return InjectedState::YConj;
    case GateKind::RZ8:
      return InjectedState::A;
    default:
      return InjectedState::Y;
  }
}

/// Runs one teleportation stage of `stage` (RX4, RZ4 or RZ8 first stage)
/// from `data` onto the new label `fresh`. Returns the raw outcome.
template <Measurer M>
bool teleport_stage(StateVector& state, GateKind stage, Label data,
                    Label fresh, M&& measure) {
  state.inject(fresh, resource_state(stage));
  if (stage == GateKind::RX4) {
    state.apply_cnot(data, fresh);
    return measure(state, data, Basis::X);
  }
  state.apply_cnot(fresh, data);
  return measure(state, data, Basis::Z);
}

}  // namespace ptrack
