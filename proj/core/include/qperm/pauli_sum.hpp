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
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qperm/pauli_string.hpp"

namespace qperm {

using Complex = std::complex<double>;

// Coefficients with magnitude below this are dropped by simplify(). All exact
// coefficients produced by the encodings are dyadic rationals.
inline constexpr double kPruneTolerance = 1e-12;

struct PauliKey {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  friend bool operator==(const PauliKey&, const PauliKey&) = default;
};

// Orders keys by their letter strings (I < X < Y < Z, qubit 1 first).
struct LetterOrder {
  bool operator()(const PauliKey& a, const PauliKey& b) const noexcept;
};

/// Complex-weighted sum of Pauli strings on a fixed number of qubits.
///
/// Each stored term is coefficient * (standard letters), so a PauliString's
/// phase is folded into its coefficient on insertion. Iteration order is the
/// lexicographic letter order used by every serialisation.
class PauliSum {
 public:
  using TermMap = std::map<PauliKey, Complex, LetterOrder>;

  PauliSum() = default;
  explicit PauliSum(std::size_t n_qubits);
  PauliSum(const PauliString& p, Complex coefficient = 1.0);  // NOLINT

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  const TermMap& terms() const noexcept { return terms_; }

  void add_term(const PauliString& p, Complex coefficient = 1.0);
  void add_term(PauliKey key, Complex coefficient);

  Complex coefficient(const PauliString& letters) const;

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator-=(const PauliSum& other);
  PauliSum& operator*=(Complex scale);

  /// Drops coefficients with |c| < tolerance.
  PauliSum& simplify(double tolerance = kPruneTolerance);

  PauliSum adjoint() const;
  bool is_hermitian(double tolerance = kPruneTolerance) const;

  /// Sum of |c|^2, i.e. the normalised Frobenius norm squared.
  double norm_squared() const;

  /// <row| S |col> without building a dense matrix.
  Complex matrix_element(std::uint64_t row, std::uint64_t col) const;

  std::size_t max_weight() const;
  double mean_weight() const;

  /// Each term as (letters, coefficient) in canonical order.
  std::vector<std::pair<PauliString, Complex>> sorted_terms() const;

  /// One "(re+imi) LETTERS" line per term.
  std::string str() const;

  bool approx_equal(const PauliSum& other, double tolerance = kPruneTolerance) const;

 private:
  std::size_t n_qubits_ = 0;
  TermMap terms_;
};

PauliSum operator+(PauliSum a, const PauliSum& b);
PauliSum operator-(PauliSum a, const PauliSum& b);
PauliSum operator*(PauliSum a, Complex scale);
PauliSum operator*(Complex scale, PauliSum a);
PauliSum operator*(const PauliSum& a, const PauliSum& b);

inline PauliSum sum_add(const PauliSum& a, const PauliSum& b) { return a + b; }
inline PauliSum sum_scale(const PauliSum& a, Complex scale) { return a * scale; }
inline PauliSum simplify(PauliSum s, double tolerance = kPruneTolerance) {
  s.simplify(tolerance);
  return s;
}

std::string format_coefficient(Complex c);

}  // namespace qperm
