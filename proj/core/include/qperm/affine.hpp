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

#include <cstdint>
#include <optional>

#include "qperm/bit_matrix.hpp"
#include "qperm/circuit.hpp"
#include "qperm/pauli_string.hpp"
#include "qperm/pauli_sum.hpp"
#include "qperm/permutation.hpp"

namespace qperm {

/// x -> M x xor b over F2 with M invertible: the basis permutations that are
/// also Clifford, i.e. the group generated by X and CNOT.
class AffineMapF2 {
 public:
  AffineMapF2(BitMatrix matrix, std::uint64_t offset);

  const BitMatrix& matrix() const noexcept { return matrix_; }
  std::uint64_t offset() const noexcept { return offset_; }
  std::size_t n_qubits() const noexcept { return matrix_.size(); }

  std::uint64_t apply(std::uint64_t x) const noexcept { return matrix_.apply(x) ^ offset_; }
  BasisPermutation to_permutation() const;
  /// CNOT network for M followed by an X layer for b.
  GateCircuit to_circuit() const;

  friend bool operator==(const AffineMapF2& a, const AffineMapF2& b) {
    return a.matrix_ == b.matrix_ && a.offset_ == b.offset_;
  }

 private:
  friend PauliString conjugate_pauli_affine(const AffineMapF2& map, const PauliString& p);

  BitMatrix matrix_;
  BitMatrix inverse_transpose_;
  std::uint64_t offset_;
  std::uint64_t sign_mask_;  // M^-1 b
};

/// b = p(0), column i of M = p(e_i) xor b, then checked on every basis state.
std::optional<AffineMapF2> classify_affine(const BasisPermutation& p);

/// P s P^dagger for P: |x> -> |Mx xor b>. X-part maps by M, Z-part by
/// (M^-1)^T, with sign (-1)^(z . M^-1 b).
PauliString conjugate_pauli_affine(const AffineMapF2& map, const PauliString& p);
PauliSum conjugate_pauli_affine(const AffineMapF2& map, const PauliSum& s);

/// CNOT circuit realising |x> -> |Mx>; throws InvalidEncodingError when M is singular.
GateCircuit gl_to_cnot_circuit(const BitMatrix& m);

}  // namespace qperm
