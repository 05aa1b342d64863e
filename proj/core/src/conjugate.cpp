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

#include "qperm/conjugate.hpp"

#include <bit>
#include <map>
#include <vector>

#include "qperm/affine.hpp"
#include "qperm/dense.hpp"
#include "qperm/errors.hpp"

namespace qperm {

PauliSum conjugate_pauli_dense(const BasisPermutation& p, const PauliSum& s, double tolerance) {
  const std::size_t n = p.n_qubits();
  if (s.n_qubits() != n) {
    throw DimensionError("permutation and Pauli sum act on different qubit counts");
  }
  if (n > kDenseQubitCap) {
    throw ResourceError("dense conjugation capped at " + std::to_string(kDenseQubitCap) + " qubits");
  }
  const std::uint64_t dim = p.dimension();
  const auto& image = p.images();

  // P Q P^dag |P(i)> = Q_i |P(i ^ x)>, so column P(i) holds one entry in row
  // P(i ^ x) per term. groups[d][col] accumulates entries with row = col ^ d.
  std::map<std::uint64_t, std::vector<Complex>> groups;
  for (const auto& [key, c] : s.terms()) {
    const int base = std::popcount(key.x & key.z);
    for (std::uint64_t i = 0; i < dim; ++i) {
      const std::uint64_t col = image[i];
      const std::uint64_t row = image[i ^ key.x];
      auto& column = groups[row ^ col];
      if (column.empty()) column.assign(dim, Complex{});
      column[col] += c * i_pow(base + 2 * std::popcount(key.z & i));
    }
  }

  PauliSum out(n);
  const double scale = 1.0 / static_cast<double>(dim);
  for (auto& [shift, column] : groups) {
    walsh_hadamard(column);
    for (std::uint64_t z = 0; z < dim; ++z) {
      const Complex c = column[z] * scale * i_pow(-std::popcount(shift & z));
      if (std::abs(c) >= tolerance) out.add_term(PauliKey{shift, z}, c);
    }
  }
  return out;
}

PauliSum conjugate(const BasisPermutation& p, const PauliSum& s, double tolerance) {
  if (auto affine = classify_affine(p)) {
    return simplify(conjugate_pauli_affine(*affine, s), tolerance);
  }
  return conjugate_pauli_dense(p, s, tolerance);
}

}  // namespace qperm
