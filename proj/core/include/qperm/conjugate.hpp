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

#include "qperm/pauli_sum.hpp"
#include "qperm/permutation.hpp"

namespace qperm {

/// Exact Pauli expansion of P s P^dagger for any basis permutation P.
///
/// A Pauli term conjugated by a permutation is a generalised permutation
/// matrix. Entries are grouped by row xor column displacement, summed over
/// all input terms, and each group's Z-coefficients are recovered with one
/// Walsh-Hadamard transform. Requires n <= kDenseQubitCap.
PauliSum conjugate_pauli_dense(const BasisPermutation& p, const PauliSum& s,
                               double tolerance = kPruneTolerance);

/// Affine fast path when classify_affine(p) succeeds, dense path otherwise.
PauliSum conjugate(const BasisPermutation& p, const PauliSum& s,
                   double tolerance = kPruneTolerance);

}  // namespace qperm
