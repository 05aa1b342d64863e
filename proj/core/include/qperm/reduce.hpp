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
#include <optional>
#include <vector>

#include "qperm/combinatorics.hpp"
#include "qperm/dense.hpp"
#include "qperm/fermion.hpp"
#include "qperm/minimal_basis.hpp"
#include "qperm/pauli_sum.hpp"
#include "qperm/permutation.hpp"

namespace qperm {

// Oracle comparisons accumulate floating error; eigenvalues are looser still.
inline constexpr double kOracleTolerance = 1e-9;
inline constexpr double kSpectrumTolerance = 1e-8;
// The sector oracle builds a dense C(N,K) x C(N,K) matrix.
inline constexpr std::uint64_t kSectorDenseCap = 4096;

/// <value| s |value> on one tensor factor: I terms are kept, Z terms pick up
/// (-1)^value, X and Y terms vanish. The result acts on n - 1 qubits.
PauliSum project_fixed_qubit(const PauliSum& s, std::size_t qubit, int value);

struct ReducedHamiltonian {
  PauliSum hamiltonian;  // on the surviving qubits
  RedundancyReport redundancy;
  SectorSpec spec;
  /// state_map[r]: surviving bits of p(unrank(r)).
  std::vector<std::uint64_t> state_map;
  bool affine = false;
  /// For affine permutations: every encoded term was I/Z-only on the fixed
  /// qubits before projection. Not evaluated otherwise.
  std::optional<bool> fixed_qubits_diagonal;

  std::size_t n_qubits() const noexcept { return hamiltonian.n_qubits(); }
};

/// JW-encode h, conjugate by p (affine fast path when possible), find the
/// fixed qubits of the sector and project them out.
ReducedHamiltonian encode_and_reduce(const FermionOperator& h, const BasisPermutation& p,
                                     const SectorSpec& spec);

/// <unrank(r')| h |unrank(r)>, built from ladder actions on occupancy strings.
DenseMatrix sector_oracle(const FermionOperator& h, const SectorSpec& spec);

/// Applies one product of ladder operators (rightmost first) to an occupancy
/// mask. Returns the resulting mask and sign, or nothing when annihilated.
std::optional<std::pair<std::uint64_t, int>> apply_ladder_product(const FermionTerm& term,
                                                                 std::uint64_t occupancy,
                                                                 std::size_t n_modes);

struct VerificationReport {
  std::size_t dimension = 0;
  double max_deviation = 0.0;
  /// Largest eigenvalue gap between the reduced block and the oracle; NaN
  /// when either side is not Hermitian.
  double spectrum_deviation = 0.0;
  double tolerance = kOracleTolerance;
  bool passed = false;
};

/// Compares <map(r')| H_red |map(r)> against oracle[r'][r] for every pair.
VerificationReport verify_reduction(const ReducedHamiltonian& rh, const DenseMatrix& oracle,
                                    double tolerance = kOracleTolerance);

}  // namespace qperm
