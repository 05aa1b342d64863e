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

#include "qperm/appendix.hpp"

#include <algorithm>
#include <thread>

#include "qperm/combinatorics.hpp"
#include "qperm/errors.hpp"
#include "qperm/pauli_string.hpp"

namespace qperm {
namespace {

struct ShardResult {
  std::uint64_t invertible = 0;
  std::vector<std::size_t> max_by_weight;
  std::vector<std::uint64_t> attaining_by_weight;
};

// Weight-k strings grouped by k, computed once per n.
std::vector<std::vector<std::uint64_t>> layers(std::size_t n) {
  std::vector<std::vector<std::uint64_t>> out(n + 1);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    out[static_cast<std::size_t>(std::popcount(v))].push_back(v);
  }
  return out;
}

std::size_t constant_digits_on(const BitMatrix& m, const std::vector<std::uint64_t>& layer) {
  const std::size_t n = m.size();
  std::uint64_t all_and = low_mask(n);
  std::uint64_t all_or = 0;
  for (auto v : layer) {
    const std::uint64_t img = m.apply(v);
    all_and &= img;
    all_or |= img;
  }
  // constant bits: always 1 (in all_and) or never 1 (not in all_or)
  return static_cast<std::size_t>(std::popcount(all_and | (~all_or & low_mask(n))));
}

ShardResult run_shard(std::size_t n, std::uint64_t begin, std::uint64_t end,
                      const std::vector<std::vector<std::uint64_t>>& by_weight) {
  ShardResult r;
  const std::size_t weights = n >= 2 ? n - 1 : 0;
  r.max_by_weight.assign(weights, 0);
  r.attaining_by_weight.assign(weights, 0);
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    const BitMatrix m = matrix_from_index(n, idx);
    if (!m.is_invertible()) continue;
    ++r.invertible;
    for (std::size_t k = 1; k < n; ++k) {
      const std::size_t c = constant_digits_on(m, by_weight[k]);
      auto& best = r.max_by_weight[k - 1];
      if (c > best) {
        best = c;
        r.attaining_by_weight[k - 1] = 1;
      } else if (c == best) {
        ++r.attaining_by_weight[k - 1];
      }
    }
  }
  return r;
}

}  // namespace

std::size_t constant_output_digits(const BitMatrix& m, std::size_t k) {
  if (k > m.size()) throw RangeError("weight exceeds string length");
  const std::size_t n = m.size();
  std::vector<std::uint64_t> layer;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    if (static_cast<std::size_t>(std::popcount(v)) == k) layer.push_back(v);
  }
  return constant_digits_on(m, layer);
}

AppendixReport appendix_verify(std::size_t n, bool allow_extended, std::size_t shards) {
  const std::size_t cap = allow_extended ? kAppendixExtendedMax : kAppendixDefaultMax;
  if (n < 2) throw RangeError("appendix verification needs n >= 2");
  if (n > cap) {
    throw ResourceError("appendix verification capped at n = " + std::to_string(cap) +
                        (allow_extended ? "" : " without the extended flag"));
  }
  const std::uint64_t candidates = std::uint64_t{1} << (n * n);
  if (shards == 0) shards = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  shards = static_cast<std::size_t>(std::min<std::uint64_t>(shards, candidates));

  const auto by_weight = layers(n);
  std::vector<ShardResult> results(shards);
  std::vector<std::thread> workers;
  const std::uint64_t block = (candidates + shards - 1) / shards;
  for (std::size_t s = 0; s < shards; ++s) {
    const std::uint64_t begin = std::min(candidates, s * block);
    const std::uint64_t end = std::min(candidates, begin + block);
    workers.emplace_back([&, s, begin, end] { results[s] = run_shard(n, begin, end, by_weight); });
  }
  for (auto& w : workers) w.join();

  AppendixReport report;
  report.n = n;
  report.candidates = candidates;
  report.max_by_weight.assign(n - 1, 0);
  std::vector<std::uint64_t> attaining(n - 1, 0);
  for (const auto& r : results) {
    report.invertible_count += r.invertible;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (r.max_by_weight[k] > report.max_by_weight[k]) {
        report.max_by_weight[k] = r.max_by_weight[k];
        attaining[k] = r.attaining_by_weight[k];
      } else if (r.max_by_weight[k] == report.max_by_weight[k]) {
        attaining[k] += r.attaining_by_weight[k];
      }
    }
  }
  report.max_constant_digits =
      *std::max_element(report.max_by_weight.begin(), report.max_by_weight.end());
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (report.max_by_weight[k] == report.max_constant_digits) report.attaining_pairs += attaining[k];
  }
  report.witness = BitMatrix::prefix_sum(n);
  report.witness_constant_digits = constant_output_digits(report.witness, 1);
  report.bound_holds = report.max_constant_digits <= 1;
  return report;
}

}  // namespace qperm
