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

#include "ptrack/circuit.hpp"

namespace ptrack {

/**
 * Rewrites a Clifford+T circuit into the teleportation gate set.
 *
 * P becomes RZ4, T becomes RZ8, CNOT and existing rotations pass through,
 * and H becomes RZ4 RX4 RZ4 on the same qubit. The H sequence is a
 * palindrome, so operator order and circuit order agree. The result has
 * size() + 2 * count(H) gates.
 */
Circuit lower_clifford_t(const Circuit& circuit);

}  // namespace ptrack
