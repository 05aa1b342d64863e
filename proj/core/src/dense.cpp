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

#include "qperm/dense.hpp"

#include <bit>
#include <vector>

#include "qperm/errors.hpp"

namespace qperm {
namespace {

void check_cap(std::size_t n) {
  if (n > kDenseQubitCap) {
    throw ResourceError("dense representation capped at " + std::to_string(kDenseQubitCap) +
                        " qubits, requested " + std::to_string(n));
  }
}

}  // namespace

std::size_t qubits_for_dimension(std::size_t dimension) {
  if (dimension == 0 || !std::has_single_bit(dimension)) {
    throw DimensionError("matrix dimension " + std::to_string(dimension) +
                         " is not a power of two");
  }
  return static_cast<std::size_t>(std::countr_zero(dimension));
}

DenseMatrix to_dense(const PauliSum& s) {
  check_cap(s.n_qubits());
  const std::uint64_t dim = std::uint64_t{1} << s.n_qubits();
  DenseMatrix m = DenseMatrix::Zero(static_cast<Eigen::Index>(dim),
                                    static_cast<Eigen::Index>(dim));
  for (const auto& [key, c] : s.terms()) {
    const int base = std::popcount(key.x & key.z);
    for (std::uint64_t col = 0; col < dim; ++col) {
      const int e = base + 2 * std::popcount(key.z & col);
      m(static_cast<Eigen::Index>(col ^ key.x), static_cast<Eigen::Index>(col)) += c * i_pow(e);
    }
  }
  return m;
}

DenseMatrix to_dense(const PauliString& p) { return to_dense(PauliSum(p)); }

void walsh_hadamard(std::span<std::complex<double>> values) {
  const std::size_t size = values.size();
  if (size == 0 || !std::has_single_bit(size)) {
    throw DimensionError("Walsh-Hadamard length must be a power of two");
  }
  for (std::size_t half = 1; half < size; half <<= 1) {
    for (std::size_t block = 0; block < size; block += 2 * half) {
      for (std::size_t i = block; i < block + half; ++i) {
        const auto a = values[i];
        const auto b = values[i + half];
        values[i] = a + b;
        values[i + half] = a - b;
      }
    }
  }
}

PauliSum pauli_decompose(const DenseMatrix& m, double tolerance) {
  if (m.rows() != m.cols()) {
    throw DimensionError("pauli_decompose needs a square matrix");
  }
  const std::size_t n = qubits_for_dimension(static_cast<std::size_t>(m.rows()));
  check_cap(n);
  const std::uint64_t dim = std::uint64_t{1} << n;
  const double scale = 1.0 / static_cast<double>(dim);

  PauliSum out(n);
  std::vector<std::complex<double>> column(dim);
  for (std::uint64_t x = 0; x < dim; ++x) {
    bool any = false;
    for (std::uint64_t col = 0; col < dim; ++col) {
      column[col] = m(static_cast<Eigen::Index>(col ^ x), static_cast<Eigen::Index>(col));
      any = any || column[col] != std::complex<double>{};
    }
    if (!any) continue;
    walsh_hadamard(column);
    for (std::uint64_t z = 0; z < dim; ++z) {
      const Complex c = column[z] * scale * i_pow(-std::popcount(x & z));
      if (std::abs(c) >= tolerance) out.add_term(PauliKey{x, z}, c);
    }
  }
  return out;
}

}  // namespace qperm
