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
#include <random>
#include <vector>

#include "qperm/combinatorics.hpp"
#include "qperm/permutation.hpp"

namespace qperm {

/// How states outside the prescribed sector map are completed to a bijection.
enum class CompletionRule {
  /// Remaining sources in increasing order onto unused targets in increasing order.
  kIncreasing,
  /// Targets that are not sources go to sources that are not targets; all
  /// other states stay fixed. Moves at most 2 C(N,K) states.
  kMinimalSupport,
};

/// Extends sources[i] -> targets[i] to a permutation of all 2^n states.
BasisPermutation complete_sector_map(std::size_t n_qubits,
                                     const std::vector<std::uint64_t>& sources,
                                     const std::vector<std::uint64_t>& targets,
                                     CompletionRule rule = CompletionRule::kIncreasing);

/// Sector state of rank r goes to the state whose first q_min qubits spell r
/// and whose remaining qubits are 0.
BasisPermutation minimal_permutation_index_embed(
    const SectorSpec& spec, CompletionRule rule = CompletionRule::kIncreasing);

/// Random injective assignment of sector states to q_min-bit prefixes (rest
/// zero) with a random completion of the other states.
BasisPermutation random_minimal_permutation(const SectorSpec& spec, std::mt19937_64& rng);

struct FixedQubit {
  std::size_t qubit;  // 1-based
  int value;
  friend bool operator==(const FixedQubit&, const FixedQubit&) = default;
};

struct RedundancyReport {
  std::vector<FixedQubit> fixed;
  std::vector<std::size_t> surviving;
  /// Sector images stay pairwise distinct after dropping the fixed qubits.
  bool injective_on_surviving = true;
};

/// Every qubit whose image bit is constant across all sector states.
RedundancyReport redundant_qubits(const BasisPermutation& p, const SectorSpec& spec);

/// Packs the surviving bits of an n-bit value, preserving qubit order.
/// `fixed` must be sorted by qubit, as redundant_qubits() returns it.
std::uint64_t compress_bits(std::uint64_t value, std::size_t n_qubits,
                            const std::vector<FixedQubit>& fixed);

}  // namespace qperm
