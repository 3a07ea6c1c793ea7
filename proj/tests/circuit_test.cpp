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

#include <sstream>

#include "ptrack/circuit.hpp"
#include "ptrack/errors.hpp"
#include "test_support.hpp"

namespace ptrack {
namespace {

std::size_t parse_error_line(std::string_view text,
                             GateSet set = GateSet::Teleportation) {
  try {
    parse_circuit(text, set);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no ParseError for:\n" << text;
  return 0;
}

TEST(Circuit, ParsesTwoQubitExample) {
  const Circuit c = parse_circuit(testing::kTwoQubitExample);
  EXPECT_EQ(c.num_qubits(), 2u);
  ASSERT_EQ(c.size(), 6u);
  EXPECT_EQ(c.gates()[0], Gate::single(GateKind::RX4, 0));
  EXPECT_EQ(c.gates()[1], Gate::cnot(0, 1));
  EXPECT_EQ(c.gates()[2], Gate::single(GateKind::RZ8, 1));
  EXPECT_EQ(c.gates()[5], Gate::single(GateKind::RZ4, 0));
  EXPECT_EQ(c.count(GateKind::CNOT), 2u);
  EXPECT_EQ(c.count(GateKind::RZ4), 2u);
  EXPECT_EQ(c.rotation_count(), 4u);
}

TEST(Circuit, CanonicalRoundTrip) {
  const Circuit c = parse_circuit(testing::kTwoQubitExample);
  EXPECT_EQ(serialize_circuit(c), testing::kTwoQubitExample);
  EXPECT_EQ(parse_circuit(serialize_circuit(c)), c);
}

TEST(Circuit, CommentsBlankLinesAndCrlf) {
  const Circuit c = parse_circuit(
      "# header comment\r\n\r\nqubits 3   # three\r\n  RZ8 2\r\n\r\n"
      "CNOT 2 0 # trailing\r\n");
  EXPECT_EQ(serialize_circuit(c), "qubits 3\nRZ8 2\nCNOT 2 0\n");
}

TEST(Circuit, EmptyBody) {
  const Circuit c = parse_circuit("qubits 4\n");
  EXPECT_TRUE(c.empty());
  EXPECT_EQ(c.num_qubits(), 4u);
  EXPECT_EQ(serialize_circuit(c), "qubits 4\n");
}

TEST(Circuit, ParseErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line(""), 1u);
  EXPECT_EQ(parse_error_line("RX4 0\n"), 1u);
  EXPECT_EQ(parse_error_line("qubits 0\n"), 1u);
  EXPECT_EQ(parse_error_line("qubits two\n"), 1u);
  EXPECT_EQ(parse_error_line("qubits 2\nRX4 0\nRY4 1\n"), 3u);
  EXPECT_EQ(parse_error_line("qubits 2\n# c\nRX4 2\n"), 3u);
  EXPECT_EQ(parse_error_line("qubits 2\nCNOT 1 1\n"), 2u);
  EXPECT_EQ(parse_error_line("qubits 2\nCNOT 1\n"), 2u);
  EXPECT_EQ(parse_error_line("qubits 2\nRZ4 0 1\n"), 2u);
  EXPECT_EQ(parse_error_line("qubits 2\nRZ4 -1\n"), 2u);
  EXPECT_EQ(parse_error_line("qubits 2\nqubits 2\n"), 2u);
  EXPECT_EQ(parse_error_line("qubits 2\nH 0\n"), 2u);
}

TEST(Circuit, CliffordTSetAcceptsHPT) {
  const Circuit c =
      parse_circuit("qubits 2\nH 0\nP 1\nT 0\nCNOT 1 0\nRX4 1\n",
                    GateSet::CliffordT);
  EXPECT_EQ(c.size(), 5u);
  EXPECT_EQ(c.count(GateKind::H), 1u);
  EXPECT_EQ(serialize_circuit(c), "qubits 2\nH 0\nP 1\nT 0\nCNOT 1 0\nRX4 1\n");
}

TEST(Circuit, AppendValidates) {
  Circuit c(2);
  EXPECT_THROW(c.append(Gate::single(GateKind::RX4, 2)), std::invalid_argument);
  EXPECT_THROW(c.append(Gate::cnot(1, 1)), std::invalid_argument);
  EXPECT_THROW(c.append(Gate::single(GateKind::T, 0)), std::invalid_argument);
  EXPECT_TRUE(c.empty());
  EXPECT_THROW(Circuit(0), std::invalid_argument);
  EXPECT_TRUE(validate_gate(Gate::single(GateKind::H, 0), 1, GateSet::CliffordT)
                  == std::nullopt);
  EXPECT_TRUE(validate_gate(Gate::cnot(0, 1), 1, GateSet::Teleportation));
}

TEST(Circuit, StreamIo) {
  std::istringstream in(testing::kTwoQubitExample);
  const Circuit c = read_circuit(in);
  std::ostringstream out;
  write_circuit(out, c);
  EXPECT_EQ(out.str(), testing::kTwoQubitExample);
}

TEST(Circuit, Mnemonics) {
  for (GateKind k : {GateKind::CNOT, GateKind::RX4, GateKind::RZ4,
                     GateKind::RZ8, GateKind::H, GateKind::P, GateKind::T})
    EXPECT_EQ(parse_mnemonic(mnemonic(k)), k);
  EXPECT_FALSE(parse_mnemonic("rx4"));
  EXPECT_TRUE(is_rotation(GateKind::RZ8));
  EXPECT_FALSE(is_rotation(GateKind::CNOT));
  EXPECT_FALSE(in_teleportation_set(GateKind::H));
}

}  // namespace
}  // namespace ptrack
