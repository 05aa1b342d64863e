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

#include <bit>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

namespace qperm {

// Bit masks in this library follow the ket convention: qubit 1 is the most
// significant bit of an n-bit basis-state integer, so qubit q (1-based) lives
// at bit position n - q. A mask is therefore directly comparable with the
// basis index of |q1 q2 ... qn>.
inline constexpr std::size_t kMaxPauliQubits = 64;

constexpr std::uint64_t qubit_bit(std::size_t n_qubits, std::size_t qubit) {
  return std::uint64_t{1} << (n_qubits - qubit);
}

constexpr std::uint64_t low_mask(std::size_t n_bits) {
  return n_bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_bits) - 1;
}

constexpr int parity(std::uint64_t v) { return std::popcount(v) & 1; }

// Exact power of i, reduced mod 4.
std::complex<double> i_pow(int exponent);

enum class Commutation { kCommute, kAnticommute };

/// A signed Pauli operator i^phase * (P_1 ⊗ ... ⊗ P_n).
///
/// Letters are encoded symplectically per qubit: (x,z) = (0,0) I, (1,0) X,
/// (0,1) Z, (1,1) Y, with Y the standard Hermitian Y. The phase exponent is
/// always relative to the standard letters, so "+Y" is stored with phase 0.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t n_qubits);
  PauliString(std::size_t n_qubits, std::uint64_t x_bits, std::uint64_t z_bits,
              int phase = 0);

  /// Parses an optional sign prefix ("+", "-", "i", "+i", "-i") followed by
  /// one letter per qubit from {I, X, Y, Z} (also '_' for I).
  static PauliString from_letters(std::string_view text);

  /// Single letter on a 1-based qubit, identity elsewhere.
  static PauliString single(std::size_t n_qubits, std::size_t qubit, char letter);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::uint64_t x_bits() const noexcept { return x_; }
  std::uint64_t z_bits() const noexcept { return z_; }
  int phase() const noexcept { return phase_; }
  std::complex<double> phase_factor() const { return i_pow(phase_); }

  char letter(std::size_t qubit) const;
  std::string letters() const;
  std::size_t weight() const noexcept { return std::popcount(x_ | z_); }
  bool is_identity_letters() const noexcept { return (x_ | z_) == 0; }

  PauliString with_phase(int phase) const;

  // P|basis> = i^exponent |basis ^ x_bits>.
  int basis_phase_exponent(std::uint64_t basis) const noexcept {
    return (phase_ + std::popcount(x_ & z_) + 2 * std::popcount(z_ & basis)) & 3;
  }
  std::pair<std::uint64_t, std::complex<double>> apply(std::uint64_t basis) const {
    return {basis ^ x_, i_pow(basis_phase_exponent(basis))};
  }

  /// "+XIZY", "-iZZ" style rendering.
  std::string str() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  std::size_t n_qubits_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  int phase_ = 0;
};

PauliString multiply(const PauliString& a, const PauliString& b);
inline PauliString operator*(const PauliString& a, const PauliString& b) {
  return multiply(a, b);
}

Commutation commutator_type(const PauliString& a, const PauliString& b);
inline std::size_t weight(const PauliString& p) { return p.weight(); }

}  // namespace qperm
