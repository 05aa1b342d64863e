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
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qperm/fermion.hpp"

namespace qperm {

using BigInt = boost::multiprecision::cpp_int;

// (2^N - C(N,K))! is evaluated exactly; 2^14! is already ~70k digits.
inline constexpr std::size_t kMaxFactorialModes = 14;

/// Exact C(n, k) for n <= 64.
std::uint64_t binomial(std::size_t n, std::size_t k);

/// Smallest q with 2^q >= value (0 for value <= 1).
std::size_t ceil_log2(std::uint64_t value);

/// The K-fermion sector of an N-mode system.
class SectorSpec {
 public:
  SectorSpec(std::size_t n_modes, std::size_t n_fermions);

  std::size_t n_modes() const noexcept { return n_modes_; }
  std::size_t n_fermions() const noexcept { return n_fermions_; }
  /// C(N, K)
  std::uint64_t dimension() const noexcept { return dimension_; }
  /// ceil(log2 C(N, K))
  std::size_t q_min() const noexcept { return q_min_; }

  friend bool operator==(const SectorSpec&, const SectorSpec&) = default;

 private:
  std::size_t n_modes_;
  std::size_t n_fermions_;
  std::uint64_t dimension_;
  std::size_t q_min_;
};

/// Lexicographic rank of an n-bit weight-k string (mode 1 most significant)
/// among all n-bit strings of the same weight.
std::uint64_t rank_weightk(std::uint64_t bits, std::size_t n);
std::uint64_t rank_weightk(const FockState& state);
std::uint64_t unrank_weightk(std::uint64_t rank, std::size_t n, std::size_t k);

/// Sector basis states as occupancy masks in rank order (increasing integer value).
std::vector<std::uint64_t> sector_states(const SectorSpec& spec);

/// (2^N - C(N, K))!: the number of permutations sending the sector onto a
/// fixed minimal-basis image, counting all completions of the other states.
BigInt count_valid_permutations(const SectorSpec& spec);

struct QubitCostRow {
  std::size_t n_fermions;
  std::size_t parity;           // N - 1
  std::size_t minimal;          // ceil(log2 C(N, K))
  std::size_t first_quantized;  // K * ceil(log2 N)
};

std::vector<QubitCostRow> qubit_costs(std::size_t n_modes);

}  // namespace qperm
