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

#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <string>
#include <vector>

namespace qperm {

enum class GateKind { kX, kCnot, kToffoli, kMcx };

/// Reversible classical gate on 1-based wires: flips target when every
/// control is 1.
struct Gate {
  GateKind kind = GateKind::kX;
  std::vector<std::size_t> controls;
  std::size_t target = 1;

  static Gate x(std::size_t target);
  static Gate cnot(std::size_t control, std::size_t target);
  static Gate toffoli(std::size_t c1, std::size_t c2, std::size_t target);
  static Gate mcx(std::vector<std::size_t> controls, std::size_t target);
  /// X / CNOT / TOFFOLI / MCX according to the number of controls.
  static Gate controlled_x(std::vector<std::size_t> controls, std::size_t target);

  bool is_nonclifford() const noexcept { return controls.size() >= 2; }
  std::uint64_t apply(std::uint64_t basis, std::size_t n_qubits) const noexcept;
  std::string str() const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Gate list in application order: gates()[0] acts first. A printed operator
/// product G_k ... G_1 is therefore stored as {G_1, ..., G_k}.
class GateCircuit {
 public:
  GateCircuit() = default;
  explicit GateCircuit(std::size_t n_qubits);

  /// Builds from gates in printed-product order (rightmost acts first).
  static GateCircuit from_product(std::size_t n_qubits, const std::vector<Gate>& product);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }

  void append(const Gate& gate);
  void append(const GateCircuit& other);

  std::size_t count(GateKind kind) const noexcept;
  std::size_t nonclifford_count() const noexcept;

  std::uint64_t apply(std::uint64_t basis) const noexcept;
  /// Every gate is self-inverse, so the inverse is the reversed list.
  GateCircuit inverse() const;

 private:
  std::size_t n_qubits_ = 0;
  std::vector<Gate> gates_;
};

/// Text form, one gate per line in application order:
///   X t | CNOT c t | TOFFOLI c1 c2 t | MCX c1 c2 ... t
/// '#' starts a comment. With n_qubits == 0 the width is the largest wire used.
GateCircuit parse_circuit(std::istream& in, std::size_t n_qubits = 0);
std::string format_circuit(const GateCircuit& circuit);

}  // namespace qperm
