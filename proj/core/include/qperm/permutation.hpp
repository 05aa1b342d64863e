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
#include <string>
#include <string_view>
#include <vector>

#include "qperm/circuit.hpp"

namespace qperm {

// 2^16 stored images.
inline constexpr std::size_t kPermutationQubitCap = 16;

using Cycle = std::vector<std::uint64_t>;

/// A bijection on the 2^n computational basis states {0, ..., 2^n - 1}.
class BasisPermutation {
 public:
  BasisPermutation() = default;

  static BasisPermutation identity(std::size_t n_qubits);
  /// Throws InvalidEncodingError unless images is a bijection of size 2^n.
  static BasisPermutation from_images(std::size_t n_qubits, std::vector<std::uint32_t> images);
  /// Cycle (a1, ..., ak) sends a_i to a_{i+1} and a_k to a_1; unlisted states are fixed.
  static BasisPermutation from_cycles(std::size_t n_qubits, const std::vector<Cycle>& cycles);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::uint64_t dimension() const noexcept { return images_.size(); }
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }

  std::uint64_t apply(std::uint64_t basis) const;
  std::uint64_t operator()(std::uint64_t basis) const { return apply(basis); }

  BasisPermutation inverse() const;
  bool is_identity() const noexcept;

  /// Non-trivial cycles, each starting at its smallest element, ordered by that element.
  std::vector<Cycle> to_cycles() const;

  friend bool operator==(const BasisPermutation&, const BasisPermutation&) = default;

 private:
  std::size_t n_qubits_ = 0;
  std::vector<std::uint32_t> images_;
};

/// (outer o inner)(x) = outer(inner(x)).
BasisPermutation compose(const BasisPermutation& outer, const BasisPermutation& inner);

BasisPermutation permutation_from_circuit(const GateCircuit& circuit);

/// Parses "(a,b,c)(d,e)" over 0-based integers; whitespace is ignored.
std::vector<Cycle> parse_cycles(std::string_view text);
std::string format_cycles(const std::vector<Cycle>& cycles);

}  // namespace qperm
