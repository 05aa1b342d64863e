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
#include <vector>

#include "qperm/bit_matrix.hpp"
#include "qperm/circuit.hpp"
#include "qperm/fermion.hpp"
#include "qperm/pauli_string.hpp"
#include "qperm/pauli_sum.hpp"
#include "qperm/permutation.hpp"

namespace qperm {

/// Images of gamma_j = a_j^dag + a_j and gamma'_j = i(a_j^dag - a_j).
struct MajoranaPair {
  PauliSum gamma;
  PauliSum gamma_prime;
};

/// Per-mode Majorana images; entry j-1 belongs to mode j.
class MajoranaSet {
 public:
  MajoranaSet() = default;
  MajoranaSet(std::size_t n_qubits, std::vector<MajoranaPair> pairs);

  std::size_t n_modes() const noexcept { return pairs_.size(); }
  std::size_t n_qubits() const noexcept { return n_qubits_; }
  const MajoranaPair& mode(std::size_t j) const;
  const PauliSum& get(std::size_t j, bool primed) const;
  const std::vector<MajoranaPair>& pairs() const noexcept { return pairs_; }

 private:
  std::size_t n_qubits_ = 0;
  std::vector<MajoranaPair> pairs_;
};

/// gamma_j -> Z_1 ... Z_{j-1} X_j, gamma'_j -> Z_1 ... Z_{j-1} Y_j.
PauliString jw_majorana(std::size_t j, bool primed, std::size_t n_modes);
/// gamma_j -> Z_{j-1} X_j X_{j+1} ... X_N, gamma'_j -> Y_j X_{j+1} ... X_N.
PauliString parity_majorana(std::size_t j, bool primed, std::size_t n_modes);

MajoranaSet jw_majoranas(std::size_t n_modes);
MajoranaSet parity_majoranas(std::size_t n_modes);

/// P gamma P^dagger for every JW Majorana.
MajoranaSet permuted_majoranas(const BasisPermutation& p);

/// Occupancy-to-qubit map |n> -> |M n> for invertible M over F2.
class LinearEncodingF2 {
 public:
  explicit LinearEncodingF2(BitMatrix matrix);

  static LinearEncodingF2 jordan_wigner(std::size_t n_modes);
  static LinearEncodingF2 parity(std::size_t n_modes);

  const BitMatrix& matrix() const noexcept { return matrix_; }
  std::size_t n_modes() const noexcept { return matrix_.size(); }

  /// CNOT circuit whose basis action is |x> -> |Mx>.
  GateCircuit circuit() const;
  /// JW Majoranas conjugated by circuit().
  MajoranaSet majoranas() const;

 private:
  BitMatrix matrix_;
};

/// M * occupancy over F2, as a bit mask.
std::uint64_t encode_state(const LinearEncodingF2& encoding, const FockState& state);

GateCircuit gl_to_cnot_circuit(const LinearEncodingF2& encoding);

/// a_j^dag = (gamma_j - i gamma'_j) / 2, a_j = (gamma_j + i gamma'_j) / 2.
PauliSum encode_ladder(std::size_t j, bool dagger, const MajoranaSet& majoranas);

/// Sum over terms of coefficient * (product of encoded ladders in the given order).
PauliSum encode_fermion_operator(const FermionOperator& h, const MajoranaSet& majoranas,
                                 double tolerance = kPruneTolerance);

}  // namespace qperm
