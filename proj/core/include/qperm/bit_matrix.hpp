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
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qperm {

/// Square matrix over F2 acting on qubit bit masks.
///
/// Rows and columns are 0-based and correspond to qubits 1..n. Row r is
/// stored as a mask in the ket convention (column c at bit n-1-c), so
/// apply(v) computes M v for a basis-state integer v.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n);

  static BitMatrix identity(std::size_t n);
  /// Lower-triangular all-ones: (M v)_j = v_1 xor ... xor v_j.
  static BitMatrix prefix_sum(std::size_t n);
  /// Rows given as strings of '0'/'1', first character is column 0.
  static BitMatrix from_rows(const std::vector<std::string>& rows);
  /// Row masks in the ket convention.
  static BitMatrix from_row_masks(std::size_t n, std::vector<std::uint64_t> rows);
  /// M e_c = columns[c] (masks in the ket convention).
  static BitMatrix from_columns(std::size_t n, const std::vector<std::uint64_t>& columns);

  std::size_t size() const noexcept { return n_; }
  bool get(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, bool value);
  std::uint64_t row_mask(std::size_t row) const { return rows_.at(row); }
  std::uint64_t column_mask(std::size_t col) const;
  const std::vector<std::uint64_t>& row_masks() const noexcept { return rows_; }

  /// row[target] ^= row[source]
  void add_row(std::size_t source, std::size_t target);

  std::uint64_t apply(std::uint64_t v) const noexcept;
  BitMatrix transpose() const;
  std::size_t rank() const;
  bool is_invertible() const { return rank() == n_; }
  std::optional<BitMatrix> inverse() const;

  std::vector<std::string> to_rows() const;

  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::uint64_t col_bit(std::size_t col) const noexcept {
    return std::uint64_t{1} << (n_ - 1 - col);
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// Rank of a set of vectors over F2.
std::size_t rank_of(std::vector<std::uint64_t> vectors);

/// Decodes one of the 2^(n^2) candidate matrices: row r is bits
/// [r*n, (r+1)*n) of index.
BitMatrix matrix_from_index(std::size_t n, std::uint64_t index);

/// Calls fn on every invertible n x n matrix, in increasing candidate-index order.
void for_each_invertible(std::size_t n, const std::function<void(const BitMatrix&)>& fn);

/// Some invertible M with M from[i] = to[i] for every i, if one exists.
std::optional<BitMatrix> solve_linear_map(const std::vector<std::uint64_t>& from,
                                          const std::vector<std::uint64_t>& to,
                                          std::size_t n);

}  // namespace qperm
