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

#include "qperm/bit_matrix.hpp"

#include <bit>
#include <utility>

#include "qperm/errors.hpp"
#include "qperm/pauli_string.hpp"

namespace qperm {

BitMatrix::BitMatrix(std::size_t n) : n_(n), rows_(n, 0) {
  if (n > 64) throw ResourceError("BitMatrix supports at most 64 columns");
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i] = m.col_bit(i);
  return m;
}

BitMatrix BitMatrix::prefix_sum(std::size_t n) {
  BitMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) m.rows_[i] |= m.col_bit(j);
  }
  return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::string>& rows) {
  BitMatrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) {
      throw DimensionError("bit matrix row " + std::to_string(r + 1) + " has " +
                           std::to_string(rows[r].size()) + " entries, expected " +
                           std::to_string(rows.size()));
    }
    for (std::size_t c = 0; c < rows.size(); ++c) {
      const char ch = rows[r][c];
      if (ch != '0' && ch != '1') throw ParseError(r + 1, "bit matrix entries must be 0 or 1");
      m.set(r, c, ch == '1');
    }
  }
  return m;
}

BitMatrix BitMatrix::from_row_masks(std::size_t n, std::vector<std::uint64_t> rows) {
  if (rows.size() != n) throw DimensionError("row count does not match matrix size");
  BitMatrix m(n);
  for (auto r : rows) {
    if ((r & ~low_mask(n)) != 0) throw DimensionError("row mask exceeds matrix size");
  }
  m.rows_ = std::move(rows);
  return m;
}

BitMatrix BitMatrix::from_columns(std::size_t n, const std::vector<std::uint64_t>& columns) {
  if (columns.size() != n) throw DimensionError("column count does not match matrix size");
  BitMatrix m(n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) {
      if ((columns[c] >> (n - 1 - r)) & 1) m.rows_[r] |= m.col_bit(c);
    }
  }
  return m;
}

bool BitMatrix::get(std::size_t row, std::size_t col) const {
  if (row >= n_ || col >= n_) throw RangeError("bit matrix index out of range");
  return (rows_[row] & col_bit(col)) != 0;
}

void BitMatrix::set(std::size_t row, std::size_t col, bool value) {
  if (row >= n_ || col >= n_) throw RangeError("bit matrix index out of range");
  if (value) {
    rows_[row] |= col_bit(col);
  } else {
    rows_[row] &= ~col_bit(col);
  }
}

std::uint64_t BitMatrix::column_mask(std::size_t col) const {
  std::uint64_t out = 0;
  for (std::size_t r = 0; r < n_; ++r) {
    if (rows_[r] & col_bit(col)) out |= col_bit(r);
  }
  return out;
}

void BitMatrix::add_row(std::size_t source, std::size_t target) {
  rows_.at(target) ^= rows_.at(source);
}

std::uint64_t BitMatrix::apply(std::uint64_t v) const noexcept {
  std::uint64_t out = 0;
  for (std::size_t r = 0; r < n_; ++r) {
    if (parity(rows_[r] & v)) out |= col_bit(r);
  }
  return out;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(n_);
  for (std::size_t c = 0; c < n_; ++c) t.rows_[c] = column_mask(c);
  return t;
}

std::size_t rank_of(std::vector<std::uint64_t> vectors) {
  std::size_t rank = 0;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i] == 0) continue;
    ++rank;
    const std::uint64_t pivot = std::bit_floor(vectors[i]);
    for (std::size_t j = i + 1; j < vectors.size(); ++j) {
      if (vectors[j] & pivot) vectors[j] ^= vectors[i];
    }
  }
  return rank;
}

std::size_t BitMatrix::rank() const { return rank_of(rows_); }

std::optional<BitMatrix> BitMatrix::inverse() const {
  std::vector<std::uint64_t> work = rows_;
  BitMatrix inv = identity(n_);
  for (std::size_t col = 0; col < n_; ++col) {
    const std::uint64_t bit = col_bit(col);
    std::size_t pivot = col;
    while (pivot < n_ && !(work[pivot] & bit)) ++pivot;
    if (pivot == n_) return std::nullopt;
    std::swap(work[pivot], work[col]);
    std::swap(inv.rows_[pivot], inv.rows_[col]);
    for (std::size_t r = 0; r < n_; ++r) {
      if (r != col && (work[r] & bit)) {
        work[r] ^= work[col];
        inv.rows_[r] ^= inv.rows_[col];
      }
    }
  }
  return inv;
}

std::vector<std::string> BitMatrix::to_rows() const {
  std::vector<std::string> out(n_, std::string(n_, '0'));
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      if (rows_[r] & col_bit(c)) out[r][c] = '1';
    }
  }
  return out;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
  if (a.n_ != b.n_) throw DimensionError("bit matrix product size mismatch");
  // Row r of AB is the xor of the rows of B selected by row r of A.
  BitMatrix out(a.n_);
  for (std::size_t r = 0; r < a.n_; ++r) {
    for (std::size_t k = 0; k < a.n_; ++k) {
      if (a.rows_[r] & a.col_bit(k)) out.rows_[r] ^= b.rows_[k];
    }
  }
  return out;
}

BitMatrix matrix_from_index(std::size_t n, std::uint64_t index) {
  if (n * n > 63) throw ResourceError("candidate index needs n*n <= 63");
  std::vector<std::uint64_t> rows(n);
  for (std::size_t r = 0; r < n; ++r) rows[r] = (index >> (r * n)) & low_mask(n);
  return BitMatrix::from_row_masks(n, std::move(rows));
}

void for_each_invertible(std::size_t n, const std::function<void(const BitMatrix&)>& fn) {
  if (n > 5) throw ResourceError("invertible-matrix enumeration capped at n = 5");
  const std::uint64_t candidates = std::uint64_t{1} << (n * n);
  for (std::uint64_t idx = 0; idx < candidates; ++idx) {
    const BitMatrix m = matrix_from_index(n, idx);
    if (m.is_invertible()) fn(m);
  }
}

std::optional<BitMatrix> solve_linear_map(const std::vector<std::uint64_t>& from,
                                          const std::vector<std::uint64_t>& to,
                                          std::size_t n) {
  if (from.size() != to.size()) throw DimensionError("linear map needs paired vectors");
  // Reduced pivots (d, e) with M d = e; pivot bit of d is its top bit.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> basis;
  for (std::size_t i = 0; i < from.size(); ++i) {
    std::uint64_t d = from[i];
    std::uint64_t e = to[i];
    for (const auto& [bd, be] : basis) {
      if (d & std::bit_floor(bd)) {
        d ^= bd;
        e ^= be;
      }
    }
    if (d == 0) {
      if (e != 0) return std::nullopt;
      continue;
    }
    // keep pivots fully reduced against the new one
    const std::uint64_t pivot = std::bit_floor(d);
    for (auto& [bd, be] : basis) {
      if (bd & pivot) {
        bd ^= d;
        be ^= e;
      }
    }
    basis.emplace_back(d, e);
  }
  std::vector<std::uint64_t> images;
  for (const auto& b : basis) images.push_back(b.second);
  if (rank_of(images) != basis.size()) return std::nullopt;

  // Extend both sides to full bases with unit vectors.
  std::vector<std::uint64_t> domain;
  std::vector<std::uint64_t> codomain = images;
  for (const auto& b : basis) domain.push_back(b.first);
  for (std::size_t c = 0; c < n && domain.size() < n; ++c) {
    auto trial = domain;
    trial.push_back(std::uint64_t{1} << (n - 1 - c));
    if (rank_of(trial) == trial.size()) domain = std::move(trial);
  }
  for (std::size_t c = 0; c < n && codomain.size() < n; ++c) {
    auto trial = codomain;
    trial.push_back(std::uint64_t{1} << (n - 1 - c));
    if (rank_of(trial) == trial.size()) codomain = std::move(trial);
  }
  const BitMatrix d_mat = BitMatrix::from_columns(n, domain);
  const BitMatrix e_mat = BitMatrix::from_columns(n, codomain);
  return e_mat * *d_mat.inverse();
}

}  // namespace qperm
