// Copyright 2026 The qperm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qperm/circuit.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "qperm/errors.hpp"

namespace qperm {
namespace {

TEST(Gate, ControlledXPicksKind) {
  EXPECT_EQ(Gate::controlled_x({}, 2).kind, GateKind::kX);
  EXPECT_EQ(Gate::controlled_x({1}, 2).kind, GateKind::kCnot);
  EXPECT_EQ(Gate::controlled_x({1, 3}, 2).kind, GateKind::kToffoli);
  EXPECT_EQ(Gate::controlled_x({1, 3, 4}, 2).kind, GateKind::kMcx);
  EXPECT_FALSE(Gate::cnot(1, 2).is_nonclifford());
  EXPECT_TRUE(Gate::toffoli(1, 2, 3).is_nonclifford());
}

TEST(Gate, ApplyFlipsTargetWhenControlsSet) {
  const auto t = Gate::toffoli(1, 2, 3);
  EXPECT_EQ(t.apply(0b110, 3), 0b111u);
  EXPECT_EQ(t.apply(0b100, 3), 0b100u);
  EXPECT_EQ(Gate::x(1).apply(0b00, 2), 0b10u);
}

TEST(GateCircuit, FromProductReversesOrder) {
  const auto c = GateCircuit::from_product(2, {Gate::x(1), Gate::cnot(1, 2)});
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.gates()[0], Gate::cnot(1, 2));
  // CNOT first: |00> -> |00>, then X_1: |10>.
  EXPECT_EQ(c.apply(0b00), 0b10u);
  EXPECT_EQ(c.apply(0b10), 0b01u);
}

TEST(GateCircuit, InverseUndoes) {
  GateCircuit c(3);
  c.append(Gate::x(2));
  c.append(Gate::toffoli(1, 2, 3));
  c.append(Gate::cnot(3, 1));
  const auto inv = c.inverse();
  for (std::uint64_t v = 0; v < 8; ++v) EXPECT_EQ(inv.apply(c.apply(v)), v);
}

TEST(GateCircuit, CountsNonClifford) {
  GateCircuit c(4);
  c.append(Gate::x(1));
  c.append(Gate::cnot(1, 2));
  c.append(Gate::toffoli(1, 2, 3));
  c.append(Gate::mcx({1, 2, 3}, 4));
  EXPECT_EQ(c.nonclifford_count(), 2u);
  EXPECT_EQ(c.count(GateKind::kCnot), 1u);
}

TEST(GateCircuit, RejectsMalformedGates) {
  GateCircuit c(3);
  EXPECT_THROW(c.append(Gate::cnot(2, 2)), InvalidEncodingError);
  EXPECT_THROW(c.append(Gate::x(4)), InvalidEncodingError);
  EXPECT_THROW(c.append(Gate::cnot(0, 1)), InvalidEncodingError);
  EXPECT_THROW(c.append(Gate::toffoli(1, 1, 3)), InvalidEncodingError);
  Gate bad = Gate::cnot(1, 2);
  bad.controls.push_back(3);
  EXPECT_THROW(c.append(bad), InvalidEncodingError);
}

TEST(ParseCircuit, RoundTripsTextForm) {
  std::istringstream in(
      "# demo\n"
      "X 1\n"
      "CNOT 1 4\n"
      "TOFFOLI 1 2 3\n"
      "MCX 1 2 3 4\n");
  const auto c = parse_circuit(in);
  EXPECT_EQ(c.n_qubits(), 4u);
  ASSERT_EQ(c.size(), 4u);
  EXPECT_EQ(c.gates()[3], Gate::mcx({1, 2, 3}, 4));
  EXPECT_EQ(format_circuit(c), "X 1\nCNOT 1 4\nTOFFOLI 1 2 3\nMCX 1 2 3 4\n");
  std::istringstream again(format_circuit(c));
  EXPECT_EQ(parse_circuit(again).gates(), c.gates());
}

TEST(ParseCircuit, ErrorsCarryLineNumbers) {
  std::istringstream unknown("X 1\nSWAP 1 2\n");
  try {
    parse_circuit(unknown);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  std::istringstream arity("CNOT 1\n");
  EXPECT_THROW(parse_circuit(arity), ParseError);
  std::istringstream self("CNOT 2 2\n");
  EXPECT_THROW(parse_circuit(self), ParseError);
  std::istringstream wide("X 5\n");
  EXPECT_THROW(parse_circuit(wide, 4), ParseError);
}

}  // namespace
}  // namespace qperm
