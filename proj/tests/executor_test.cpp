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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "ptrack/errors.hpp"
#include "ptrack/executor.hpp"
#include "ptrack/gadgets.hpp"
#include "ptrack/generate.hpp"
#include "test_support.hpp"

namespace ptrack {
namespace {

using C = Amplitude;

Circuit one_gate(GateKind k) {
  Circuit c(1);
  c.append(Gate::single(k, 0));
  return c;
}

TEST(GateMatrix, Values) {
  const double r = 1.0 / std::numbers::sqrt2;
  const Matrix2 rx = gate_matrix(GateKind::RX4);
  EXPECT_LT(std::abs(rx(0, 0) - C(r, 0)), 1e-15);
  EXPECT_LT(std::abs(rx(0, 1) - C(0, -r)), 1e-15);
  EXPECT_LT(std::abs(gate_matrix(GateKind::RZ4)(1, 1) - C(0, 1)), 1e-15);
  const Matrix2 t = gate_matrix(GateKind::RZ8);
  EXPECT_TRUE(equal_up_to_phase(t * t, gate_matrix(GateKind::RZ4), 1e-15));
  EXPECT_EQ(gate_matrix(GateKind::T), t);
  EXPECT_EQ(gate_matrix(GateKind::P), gate_matrix(GateKind::RZ4));
  for (GateKind k : {GateKind::RX4, GateKind::RZ4, GateKind::RZ8, GateKind::H})
    EXPECT_TRUE(gate_matrix(k).is_unitary(1e-15));
  EXPECT_THROW(gate_matrix(GateKind::CNOT), std::invalid_argument);
}

TEST(IdealApply, PhaseGate) {
  const StateVector in = StateVector::from_amplitudes({0}, {0.6, 0.8});
  const StateVector p = ideal_apply(one_gate(GateKind::RZ4), in);
  EXPECT_LT(std::abs(p.amplitudes()[1] - C(0, 0.8)), 1e-15);
  Circuit pp(1);
  pp.append(Gate::single(GateKind::RZ4, 0));
  pp.append(Gate::single(GateKind::RZ4, 0));
  const StateVector z = ideal_apply(pp, in);
  EXPECT_LT(std::abs(z.amplitudes()[0] - C(0.6)), 1e-15);
  EXPECT_LT(std::abs(z.amplitudes()[1] - C(-0.8)), 1e-15);
  EXPECT_EQ(format_state(ideal_apply(Circuit(1), in)), format_state(in));
  EXPECT_THROW(ideal_apply(Circuit(2), in), std::invalid_argument);
}

TEST(Gadgets, SingleStageByproducts) {
  Rng rng(40);
  struct Case {
    GateKind stage;
    bool outcome;
    PauliStatus byproduct;
    GateKind enacted;
  };
  for (const Case& k :
       {Case{GateKind::RX4, false, PauliStatus::I, GateKind::RX4},
        Case{GateKind::RX4, true, PauliStatus::XZ, GateKind::RX4},
        Case{GateKind::RZ4, false, PauliStatus::I, GateKind::RZ4},
        Case{GateKind::RZ4, true, PauliStatus::XZ, GateKind::RZ4},
        Case{GateKind::RZ8, false, PauliStatus::I, GateKind::RZ8}}) {
    for (int i = 0; i < 10; ++i) {
      const StateVector psi = StateVector::random(1, rng);
      StateVector s = psi;
      teleport_stage(s, k.stage, 0, 1, [&](StateVector& st, Label q, Basis b) {
        st.project(q, b, k.outcome);
        return k.outcome;
      });
      StateVector expected = ideal_apply(one_gate(k.enacted), psi);
      expected.apply_unitary(0, matrix_of(k.byproduct));
      expected.relabel(0, 1);
      EXPECT_TRUE(equal_up_to_phase(s, expected, 1e-12))
          << mnemonic(k.stage) << " outcome " << k.outcome;
    }
  }
}

TEST(Execute, ImmediateEigenstate) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const RunResult r = execute(one_gate(GateKind::RZ4), RunMode::Immediate,
                                StateVector::zeros(1), seed);
    EXPECT_TRUE(equal_up_to_phase(r.final_state, StateVector::zeros(1), 1e-12));
  }
}

TEST(Execute, ImmediateMatchesIdealOnExample) {
  const Circuit c = parse_circuit(testing::kTwoQubitExample);
  Rng rng(41);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const StateVector in = StateVector::random(2, rng);
    const RunResult r = execute(c, RunMode::Immediate, in, seed);
    EXPECT_TRUE(equal_up_to_phase(r.final_state, ideal_apply(c, in), 1e-9));
    EXPECT_EQ(r.record.size(), 4u);
  }
}

TEST(Execute, DeferredContract) {
  Rng rng(42);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Circuit c = random_circuit(3, 20, seed);
    const RunResult r =
        execute(c, RunMode::Deferred, StateVector::random(3, rng), seed);
    EXPECT_EQ(r.applied_corrections, 0u);
    EXPECT_EQ(r.record.size(), c.rotation_count());
    EXPECT_NO_THROW(track(c, r.record));
    EXPECT_EQ(r.final_state.num_qubits(), 3u);
  }
}

TEST(Execute, DeferredPlusTrackingMatchesIdeal) {
  Rng rng(43);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng.below(6);
    const GateWeights w =
        n == 1 ? GateWeights::rotations_only() : GateWeights::uniform();
    const Circuit c = random_circuit(n, 1 + rng.below(30), rng(), w);
    const StateVector in = StateVector::random(n, rng);
    RunResult r = execute(c, RunMode::Deferred, in, rng());
    apply_frame(r.final_state, track(c, r.record));
    ASSERT_TRUE(equal_up_to_phase(r.final_state, ideal_apply(c, in), 1e-9))
        << serialize_circuit(c);
  }
}

TEST(Execute, DeterministicPerSeed) {
  const Circuit c = random_circuit(4, 30, 5);
  Rng rng(44);
  const StateVector in = StateVector::random(4, rng);
  const RunResult a = execute(c, RunMode::Deferred, in, 77);
  const RunResult b = execute(c, RunMode::Deferred, in, 77);
  EXPECT_EQ(a.record, b.record);
  EXPECT_EQ(format_state(a.final_state), format_state(b.final_state));
}

TEST(Execute, EmptyCircuitReturnsInput) {
  Rng rng(45);
  const StateVector in = StateVector::random(2, rng);
  const RunResult r = execute(Circuit(2), RunMode::Deferred, in, 1);
  EXPECT_EQ(r.record.size(), 0u);
  EXPECT_EQ(format_state(r.final_state), format_state(in));
}

TEST(Execute, Errors) {
  EXPECT_THROW(execute(Circuit(15), RunMode::Deferred, StateVector::zeros(1), 1),
               CapacityError);
  EXPECT_THROW(execute(Circuit(2), RunMode::Deferred, StateVector::zeros(3), 1),
               std::invalid_argument);
  StateVector shifted = StateVector::zeros(1);
  shifted.relabel(0, 4);
  EXPECT_THROW(execute(Circuit(1), RunMode::Immediate, shifted, 1),
               std::invalid_argument);
}

TEST(ApplyFrame, AppliesStatusMatrices) {
  StateVector s = StateVector::zeros(2);
  apply_frame(s, CorrectionFrame{PauliStatus::X, PauliStatus::XZ});
  EXPECT_LT(std::abs(s.amplitudes()[3] - C(1)), 1e-15);
}

}  // namespace
}  // namespace ptrack
