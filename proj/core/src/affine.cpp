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

#include "qperm/affine.hpp"

#include <bit>

#include "qperm/errors.hpp"

namespace qperm {

AffineMapF2::AffineMapF2(BitMatrix matrix, std::uint64_t offset)
    : matrix_(std::move(matrix)), offset_(offset) {
  auto inv = matrix_.inverse();
  if (!inv) throw InvalidEncodingError("affine map matrix is singular over F2");
  if ((offset & ~low_mask(matrix_.size())) != 0) {
    throw DimensionError("affine offset exceeds the qubit count");
  }
  inverse_transpose_ = inv->transpose();
  sign_mask_ = inv->apply(offset);
}

BasisPermutation AffineMapF2::to_permutation() const {
  const std::size_t n = n_qubits();
  if (n > kPermutationQubitCap) throw ResourceError("affine map too wide for a permutation table");
  std::vector<std::uint32_t> images(std::size_t{1} << n);
  for (std::size_t x = 0; x < images.size(); ++x) images[x] = static_cast<std::uint32_t>(apply(x));
  return BasisPermutation::from_images(n, std::move(images));
}

GateCircuit AffineMapF2::to_circuit() const {
  GateCircuit c = gl_to_cnot_circuit(matrix_);
  const std::size_t n = n_qubits();
  for (std::size_t q = 1; q <= n; ++q) {
    if (offset_ & qubit_bit(n, q)) c.append(Gate::x(q));
  }
  return c;
}

std::optional<AffineMapF2> classify_affine(const BasisPermutation& p) {
  const std::size_t n = p.n_qubits();
  const std::uint64_t b = p.apply(0);
  std::vector<std::uint64_t> columns(n);
  for (std::size_t c = 0; c < n; ++c) columns[c] = p.apply(qubit_bit(n, c + 1)) ^ b;
  const BitMatrix m = BitMatrix::from_columns(n, columns);
  // Full verification; the images of a bijection force M invertible when it passes.
  for (std::uint64_t x = 0; x < p.dimension(); ++x) {
    if ((m.apply(x) ^ b) != p.apply(x)) return std::nullopt;
  }
  return AffineMapF2(m, b);
}

PauliString conjugate_pauli_affine(const AffineMapF2& map, const PauliString& p) {
  if (p.n_qubits() != map.n_qubits()) {
    throw DimensionError("affine map and Pauli string act on different qubit counts");
  }
  // p = i^(phase + |x&z|) X^x Z^z, and P X^x P^dag = X^(Mx),
  // P Z^z P^dag = (-1)^(z . M^-1 b) Z^((M^-1)^T z).
  const std::uint64_t x = map.matrix().apply(p.x_bits());
  const std::uint64_t z = map.inverse_transpose_.apply(p.z_bits());
  int phase = p.phase() + std::popcount(p.x_bits() & p.z_bits()) - std::popcount(x & z);
  if (parity(p.z_bits() & map.sign_mask_)) phase += 2;
  return PauliString(p.n_qubits(), x, z, ((phase % 4) + 4) & 3);
}

PauliSum conjugate_pauli_affine(const AffineMapF2& map, const PauliSum& s) {
  PauliSum out(s.n_qubits());
  for (const auto& [key, c] : s.terms()) {
    out.add_term(conjugate_pauli_affine(map, PauliString(s.n_qubits(), key.x, key.z, 0)), c);
  }
  return out;
}

GateCircuit gl_to_cnot_circuit(const BitMatrix& m) {
  const std::size_t n = m.size();
  BitMatrix work = m;
  // Row operations E_k ... E_1 M = I give M = E_1 ... E_k, so E_k acts first.
  std::vector<Gate> ops;
  const auto row_add = [&](std::size_t source, std::size_t target) {
    work.add_row(source, target);
    ops.push_back(Gate::cnot(source + 1, target + 1));
  };
  for (std::size_t col = 0; col < n; ++col) {
    if (!work.get(col, col)) {
      std::size_t r = col + 1;
      while (r < n && !work.get(r, col)) ++r;
      if (r == n) throw InvalidEncodingError("matrix is singular over F2");
      row_add(r, col);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      if (work.get(r, col)) row_add(col, r);
    }
  }
  for (std::size_t col = n; col-- > 0;) {
    for (std::size_t r = 0; r < col; ++r) {
      if (work.get(r, col)) row_add(col, r);
    }
  }
  return GateCircuit::from_product(n, ops);
}

}  // namespace qperm
