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

#include "qperm/pauli_string.hpp"

#include "qperm/errors.hpp"

namespace qperm {

std::complex<double> i_pow(int exponent) {
  switch (exponent & 3) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

PauliString::PauliString(std::size_t n_qubits) : PauliString(n_qubits, 0, 0, 0) {}

PauliString::PauliString(std::size_t n_qubits, std::uint64_t x_bits,
                         std::uint64_t z_bits, int phase)
    : n_qubits_(n_qubits), x_(x_bits), z_(z_bits), phase_(phase & 3) {
  if (n_qubits > kMaxPauliQubits) {
    throw ResourceError("PauliString supports at most 64 qubits");
  }
  if (((x_ | z_) & ~low_mask(n_qubits)) != 0) {
    throw DimensionError("Pauli bit masks exceed the qubit count");
  }
}

PauliString PauliString::from_letters(std::string_view text) {
  int phase = 0;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    if (text.front() == '-') phase = 2;
    text.remove_prefix(1);
  }
  if (!text.empty() && text.front() == 'i') {
    phase = (phase + 1) & 3;
    text.remove_prefix(1);
  }
  const std::size_t n = text.size();
  if (n > kMaxPauliQubits) {
    throw ResourceError("PauliString supports at most 64 qubits");
  }
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  for (std::size_t q = 1; q <= n; ++q) {
    const std::uint64_t bit = qubit_bit(n, q);
    switch (text[q - 1]) {
      case 'I':
      case '_':
        break;
      case 'X':
        x |= bit;
        break;
      case 'Y':
        x |= bit;
        z |= bit;
        break;
      case 'Z':
        z |= bit;
        break;
      default:
        throw ParseError(0, "invalid Pauli letter '" + std::string(1, text[q - 1]) + "'");
    }
  }
  return PauliString(n, x, z, phase);
}

PauliString PauliString::single(std::size_t n_qubits, std::size_t qubit, char letter) {
  if (qubit < 1 || qubit > n_qubits) {
    throw RangeError("qubit " + std::to_string(qubit) + " outside 1.." +
                     std::to_string(n_qubits));
  }
  std::string letters(n_qubits, 'I');
  letters[qubit - 1] = letter;
  return from_letters(letters);
}

char PauliString::letter(std::size_t qubit) const {
  if (qubit < 1 || qubit > n_qubits_) {
    throw RangeError("qubit " + std::to_string(qubit) + " outside 1.." +
                     std::to_string(n_qubits_));
  }
  const std::uint64_t bit = qubit_bit(n_qubits_, qubit);
  const bool x = (x_ & bit) != 0;
  const bool z = (z_ & bit) != 0;
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

std::string PauliString::letters() const {
  std::string out;
  out.reserve(n_qubits_);
  for (std::size_t q = 1; q <= n_qubits_; ++q) out.push_back(letter(q));
  return out;
}

PauliString PauliString::with_phase(int phase) const {
  return PauliString(n_qubits_, x_, z_, phase);
}

std::string PauliString::str() const {
  static constexpr const char* kPrefix[4] = {"+", "+i", "-", "-i"};
  return kPrefix[phase_] + letters();
}

PauliString multiply(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw DimensionError("Pauli product of " + std::to_string(a.n_qubits()) +
                         "- and " + std::to_string(b.n_qubits()) + "-qubit strings");
  }
  // Write each factor as i^(p + |x&z|) X^x Z^z, move Z^za past X^xb, then
  // renormalise the product back onto standard letters.
  const std::uint64_t x = a.x_bits() ^ b.x_bits();
  const std::uint64_t z = a.z_bits() ^ b.z_bits();
  const int phase = a.phase() + b.phase() + std::popcount(a.x_bits() & a.z_bits()) +
                    std::popcount(b.x_bits() & b.z_bits()) +
                    2 * std::popcount(a.z_bits() & b.x_bits()) - std::popcount(x & z);
  return PauliString(a.n_qubits(), x, z, ((phase % 4) + 4) & 3);
}

Commutation commutator_type(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw DimensionError("commutator of strings on different qubit counts");
  }
  const int form = parity(a.x_bits() & b.z_bits()) ^ parity(a.z_bits() & b.x_bits());
  return form == 0 ? Commutation::kCommute : Commutation::kAnticommute;
}

}  // namespace qperm
