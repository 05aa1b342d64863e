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

#include "qperm/bit_matrix.hpp"

namespace qperm {

// n = 5 enumerates 2^25 candidates (|GL_5(F2)| = 9999360); opt-in only.
inline constexpr std::size_t kAppendixDefaultMax = 4;
inline constexpr std::size_t kAppendixExtendedMax = 5;

/// Output coordinates that take the same value on every weight-k input string.
std::size_t constant_output_digits(const BitMatrix& m, std::size_t k);

struct AppendixReport {
  std::size_t n = 0;
  std::uint64_t candidates = 0;          // 2^(n^2)
  std::uint64_t invertible_count = 0;    // |GL_n(F2)|
  /// Maximum constant digits over all invertible M and 0 < k < n.
  std::size_t max_constant_digits = 0;
  /// Per-k maximum, index k - 1.
  std::vector<std::size_t> max_by_weight;
  /// Number of (M, k) pairs attaining the maximum.
  std::uint64_t attaining_pairs = 0;
  /// Prefix-sum (parity) matrix and its constant-digit count for k = 1.
  BitMatrix witness;
  std::size_t witness_constant_digits = 0;
  bool bound_holds = false;  // max_constant_digits <= 1
};

/// Brute-force check that no invertible n x n matrix over F2 makes two or
/// more output digits constant on a fixed-weight layer. The candidate range
/// is split into `shards` contiguous blocks evaluated on separate threads;
/// the aggregate does not depend on the shard count.
AppendixReport appendix_verify(std::size_t n, bool allow_extended = false,
                               std::size_t shards = 0);

}  // namespace qperm
