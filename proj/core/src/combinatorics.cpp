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

#include "qperm/combinatorics.hpp"

#include <bit>
#include <array>

#include "qperm/errors.hpp"
#include "qperm/pauli_string.hpp"

namespace qperm {

namespace {

// Pascal's triangle up to n = 64; every entry fits in 64 bits.
constexpr std::size_t kPascalRows = 65;

const std::array<std::array<std::uint64_t, kPascalRows>, kPascalRows>& pascal() {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, kPascalRows>, kPascalRows> t{};
    for (std::size_t n = 0; n < kPascalRows; ++n) {
      t[n][0] = 1;
      for (std::size_t k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
    }
    return t;
  }();
  return table;
}

}  // namespace

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  if (n >= kPascalRows) throw ResourceError("binomial coefficients are tabulated for n <= 64");
  return pascal()[n][k];
}

std::size_t ceil_log2(std::uint64_t value) {
  return value <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(value - 1));
}

SectorSpec::SectorSpec(std::size_t n_modes, std::size_t n_fermions)
    : n_modes_(n_modes), n_fermions_(n_fermions) {
  if (n_modes == 0 || n_modes > 64) throw RangeError("mode count must lie in 1..64");
  if (n_fermions > n_modes) {
    throw RangeError("fermion count " + std::to_string(n_fermions) + " exceeds mode count " +
                     std::to_string(n_modes));
  }
  dimension_ = binomial(n_modes, n_fermions);
  q_min_ = ceil_log2(dimension_);
}

std::uint64_t rank_weightk(std::uint64_t bits, std::size_t n) {
  if (n > 64 || (bits & ~low_mask(n)) != 0) throw DimensionError("bit string wider than n");
  std::size_t remaining = static_cast<std::size_t>(std::popcount(bits));
  std::uint64_t rank = 0;
  for (std::size_t q = 1; q <= n && remaining > 0; ++q) {
    if (bits & qubit_bit(n, q)) {
      // every same-prefix string with a 0 here (and all ones later) precedes us
      rank += binomial(n - q, remaining);
      --remaining;
    }
  }
  return rank;
}

std::uint64_t rank_weightk(const FockState& state) {
  return rank_weightk(state.occupancy(), state.n_modes());
}

std::uint64_t unrank_weightk(std::uint64_t rank, std::size_t n, std::size_t k) {
  if (k > n) throw RangeError("weight exceeds length");
  if (rank >= binomial(n, k)) {
    throw RangeError("rank " + std::to_string(rank) + " outside 0.." +
                     std::to_string(binomial(n, k) - 1));
  }
  std::uint64_t bits = 0;
  std::size_t remaining = k;
  for (std::size_t q = 1; q <= n && remaining > 0; ++q) {
    const std::uint64_t below = binomial(n - q, remaining);
    if (rank >= below) {
      bits |= qubit_bit(n, q);
      rank -= below;
      --remaining;
    }
  }
  return bits;
}

std::vector<std::uint64_t> sector_states(const SectorSpec& spec) {
  std::vector<std::uint64_t> out;
  out.reserve(spec.dimension());
  for (std::uint64_t r = 0; r < spec.dimension(); ++r) {
    out.push_back(unrank_weightk(r, spec.n_modes(), spec.n_fermions()));
  }
  return out;
}

BigInt count_valid_permutations(const SectorSpec& spec) {
  if (spec.n_modes() > kMaxFactorialModes) {
    throw ResourceError("factorial count capped at " + std::to_string(kMaxFactorialModes) +
                        " modes");
  }
  const std::uint64_t free_states = (std::uint64_t{1} << spec.n_modes()) - spec.dimension();
  BigInt out = 1;
  for (std::uint64_t i = 2; i <= free_states; ++i) out *= i;
  return out;
}

std::vector<QubitCostRow> qubit_costs(std::size_t n_modes) {
  if (n_modes == 0) throw RangeError("cost table needs at least one mode");
  const std::size_t log_n = ceil_log2(n_modes);
  std::vector<QubitCostRow> rows;
  for (std::size_t k = 0; k <= n_modes; ++k) {
    const SectorSpec spec(n_modes, k);
    rows.push_back({k, n_modes - 1, spec.q_min(), k * log_n});
  }
  return rows;
}

}  // namespace qperm
