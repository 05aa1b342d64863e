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

#include <complex>
#include <cstddef>
#include <span>

#include <Eigen/Dense>

#include "qperm/pauli_sum.hpp"

namespace qperm {

using DenseMatrix = Eigen::MatrixXcd;

// 4096 x 4096 complex entries is the largest dense object we build.
inline constexpr std::size_t kDenseQubitCap = 12;

/// Dense 2^n x 2^n matrix; row/column index is the basis integer with qubit 1
/// as the most significant bit.
DenseMatrix to_dense(const PauliSum& s);
DenseMatrix to_dense(const PauliString& p);

/// Expansion m = sum_Q c_Q Q with c_Q = tr(Q^dagger m) / 2^n. Computed per
/// X-displacement with a Walsh-Hadamard transform, O(n 4^n) overall.
PauliSum pauli_decompose(const DenseMatrix& m, double tolerance = kPruneTolerance);

/// Unnormalised in-place Walsh-Hadamard transform; size must be a power of two.
void walsh_hadamard(std::span<std::complex<double>> values);

/// Number of qubits for a 2^n dimension, or throws DimensionError.
std::size_t qubits_for_dimension(std::size_t dimension);

}  // namespace qperm
