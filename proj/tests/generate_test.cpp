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

#include <array>
#include <set>

#include "ptrack/generate.hpp"
#include "ptrack/random.hpp"

namespace ptrack {
namespace {

// Published SplitMix64 outputs for seed 0.
TEST(Random, SplitMixReference) {
  SplitMix64 sm(0);
  EXPECT_EQ(sm.next(), 0xe220a8397b1dcdafull);
  EXPECT_EQ(sm.next(), 0x6e789e6aa1b965f4ull);
  EXPECT_EQ(sm.next(), 0x06c45d188009454full);
}

// Cross-checked against an independent xoshiro256** implementation.
TEST(Random, XoshiroFrozen) {
  Rng rng(42);
  EXPECT_EQ(rng(), 0x15780b2e0c2ec716ull);
  EXPECT_EQ(rng(), 0x6104d9866d113a7eull);
  EXPECT_EQ(rng(), 0xae17533239e499a1ull);
}

TEST(Random, BelowFrozenAndInRange) {
  Rng rng(7);
  for (std::uint64_t expected : {7u, 2u, 8u, 9u, 9u})
    EXPECT_EQ(rng.below(10), expected);
  Rng r2(3);
  std::array<int, 7> hist{};
  for (int i = 0; i < 70000; ++i) ++hist[r2.below(7)];
  for (int h : hist) EXPECT_NEAR(h, 10000, 400);
  EXPECT_EQ(r2.below(1), 0u);
  EXPECT_THROW(r2.below(0), std::invalid_argument);
}

TEST(Random, UniformAndBit) {
  Rng rng(11);
  double sum = 0.0;
  int ones = 0;
  for (int i = 0; i < 20000; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
    ones += rng.bit();
  }
  EXPECT_NEAR(sum / 20000, 0.5, 0.01);
  EXPECT_NEAR(ones / 20000.0, 0.5, 0.02);
}

TEST(Random, NormalMoments) {
  Rng rng(5);
  double s1 = 0.0, s2 = 0.0;
  const int n = 50000;
  for (int i = 0; i < n; ++i) {
    const double v = rng.normal();
    s1 += v;
    s2 += v * v;
  }
  EXPECT_NEAR(s1 / n, 0.0, 0.02);
  EXPECT_NEAR(s2 / n, 1.0, 0.03);
}

TEST(Random, DerivedStreamsDiffer) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t s = 0; s < 4; ++s)
    for (std::uint64_t i = 0; i < 256; ++i) seen.insert(derive_seed(s, i));
  EXPECT_EQ(seen.size(), 4u * 256u);
  static_assert(derive_seed(1, 0) == 0xbeeb8da1658eec67ull);
}

TEST(Generate, FrozenCircuit) {
  EXPECT_EQ(serialize_circuit(random_circuit(3, 8, 42)),
            "qubits 3\nCNOT 1 2\nRZ8 2\nRZ8 2\nRZ8 2\nRZ4 2\nRX4 2\nRX4 2\n"
            "RZ8 1\n");
  EXPECT_EQ(serialize_circuit(random_clifford_t_circuit(2, 6, 42)),
            "qubits 2\nCNOT 0 1\nT 1\nT 1\nT 1\nP 1\nH 1\n");
}

TEST(Generate, DeterministicPerSeed) {
  EXPECT_EQ(random_circuit(7, 300, 9), random_circuit(7, 300, 9));
  EXPECT_NE(random_circuit(7, 300, 9), random_circuit(7, 300, 10));
}

TEST(Generate, ShapeAndOperands) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Circuit c = random_circuit(2 + seed % 5, 200, seed);
    EXPECT_EQ(c.size(), 200u);
    for (const Gate& g : c.gates()) {
      EXPECT_LT(g.target, c.num_qubits());
      if (g.kind == GateKind::CNOT) {
        EXPECT_LT(g.control, c.num_qubits());
        EXPECT_NE(g.control, g.target);
      }
    }
  }
}

TEST(Generate, KindFrequenciesFollowWeights) {
  const Circuit c = random_circuit(10, 40000, 1);
  for (GateKind k :
       {GateKind::CNOT, GateKind::RX4, GateKind::RZ4, GateKind::RZ8})
    EXPECT_NEAR(static_cast<double>(c.count(k)) / 40000.0, 0.25, 0.01);

  const Circuit skew = random_circuit(4, 40000, 2, GateWeights{0, 0, 1, 3});
  EXPECT_EQ(skew.count(GateKind::CNOT) + skew.count(GateKind::RX4), 0u);
  EXPECT_NEAR(skew.count(GateKind::RZ8) / 40000.0, 0.75, 0.01);
}

TEST(Generate, EdgeCases) {
  EXPECT_TRUE(random_circuit(2, 0, 1).empty());
  EXPECT_THROW(random_circuit(1, 5, 1), std::invalid_argument);
  EXPECT_EQ(random_circuit(1, 5, 1, GateWeights::rotations_only()).size(), 5u);
  EXPECT_THROW(random_circuit(0, 5, 1), std::invalid_argument);
  EXPECT_THROW(random_circuit(3, 5, 1, GateWeights{0, 0, 0, 0}),
               std::invalid_argument);
  EXPECT_THROW(random_circuit(3, 5, 1, GateWeights{-1, 1, 1, 1}),
               std::invalid_argument);
}

TEST(Generate, WeightParsing) {
  const GateWeights w = GateWeights::parse("0,1,2.5,3");
  EXPECT_EQ(w.cnot, 0.0);
  EXPECT_EQ(w.rz4, 2.5);
  EXPECT_EQ(w.rz8, 3.0);
  EXPECT_THROW(GateWeights::parse("1,1,1"), std::invalid_argument);
  EXPECT_THROW(GateWeights::parse("1,1,1,x"), std::invalid_argument);
  EXPECT_THROW(GateWeights::parse(""), std::invalid_argument);
}

}  // namespace
}  // namespace ptrack
