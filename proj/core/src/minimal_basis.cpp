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

#include "qperm/minimal_basis.hpp"

#include <algorithm>
#include <numeric>

#include "qperm/errors.hpp"
#include "qperm/pauli_string.hpp"

namespace qperm {
namespace {

void check_spec_width(const SectorSpec& spec) {
  if (spec.n_modes() > kPermutationQubitCap) {
    throw ResourceError("minimal-basis permutations are capped at " +
                        std::to_string(kPermutationQubitCap) + " modes");
  }
}

std::vector<std::uint64_t> index_targets(const SectorSpec& spec) {
  const std::size_t shift = spec.n_modes() - spec.q_min();
  std::vector<std::uint64_t> targets(spec.dimension());
  for (std::uint64_t r = 0; r < spec.dimension(); ++r) targets[r] = r << shift;
  return targets;
}

}  // namespace

BasisPermutation complete_sector_map(std::size_t n_qubits,
                                     const std::vector<std::uint64_t>& sources,
                                     const std::vector<std::uint64_t>& targets,
                                     CompletionRule rule) {
  if (n_qubits > kPermutationQubitCap) throw ResourceError("permutation width exceeds cap");
  if (sources.size() != targets.size()) {
    throw DimensionError("sector map needs as many targets as sources");
  }
  const std::size_t dim = std::size_t{1} << n_qubits;
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> images(dim, kUnset);
  std::vector<bool> is_source(dim, false);
  std::vector<bool> is_target(dim, false);
  for (std::size_t i = 0; i < sources.size(); ++i) {
    const auto s = sources[i];
    const auto t = targets[i];
    if (s >= dim || t >= dim) throw RangeError("sector map entry outside the basis");
    if (is_source[s] || is_target[t]) throw InvalidEncodingError("sector map is not injective");
    is_source[s] = true;
    is_target[t] = true;
    images[s] = static_cast<std::uint32_t>(t);
  }

  if (rule == CompletionRule::kIncreasing) {
    std::size_t next_target = 0;
    for (std::size_t s = 0; s < dim; ++s) {
      if (is_source[s]) continue;
      while (is_target[next_target]) ++next_target;
      images[s] = static_cast<std::uint32_t>(next_target++);
    }
  } else {
    std::vector<std::uint32_t> free_targets;  // sources that nothing maps onto
    for (std::size_t s = 0; s < dim; ++s) {
      if (is_source[s] && !is_target[s]) free_targets.push_back(static_cast<std::uint32_t>(s));
    }
    std::size_t next = 0;
    for (std::size_t s = 0; s < dim; ++s) {
      if (is_source[s]) continue;
      images[s] = is_target[s] ? free_targets[next++] : static_cast<std::uint32_t>(s);
    }
  }
  return BasisPermutation::from_images(n_qubits, std::move(images));
}

BasisPermutation minimal_permutation_index_embed(const SectorSpec& spec, CompletionRule rule) {
  check_spec_width(spec);
  return complete_sector_map(spec.n_modes(), sector_states(spec), index_targets(spec), rule);
}

BasisPermutation random_minimal_permutation(const SectorSpec& spec, std::mt19937_64& rng) {
  check_spec_width(spec);
  const std::size_t n = spec.n_modes();
  const std::size_t shift = n - spec.q_min();
  std::vector<std::uint64_t> prefixes(std::uint64_t{1} << spec.q_min());
  std::iota(prefixes.begin(), prefixes.end(), std::uint64_t{0});
  std::shuffle(prefixes.begin(), prefixes.end(), rng);

  const auto sources = sector_states(spec);
  const std::size_t dim = std::size_t{1} << n;
  std::vector<std::uint32_t> images(dim);
  std::vector<bool> used(dim, false);
  std::vector<bool> is_source(dim, false);
  for (std::size_t i = 0; i < sources.size(); ++i) {
    const std::uint64_t t = prefixes[i] << shift;
    images[sources[i]] = static_cast<std::uint32_t>(t);
    used[t] = true;
    is_source[sources[i]] = true;
  }
  std::vector<std::uint32_t> rest;
  for (std::size_t t = 0; t < dim; ++t) {
    if (!used[t]) rest.push_back(static_cast<std::uint32_t>(t));
  }
  std::shuffle(rest.begin(), rest.end(), rng);
  std::size_t next = 0;
  for (std::size_t s = 0; s < dim; ++s) {
    if (!is_source[s]) images[s] = rest[next++];
  }
  return BasisPermutation::from_images(n, std::move(images));
}

RedundancyReport redundant_qubits(const BasisPermutation& p, const SectorSpec& spec) {
  const std::size_t n = spec.n_modes();
  if (p.n_qubits() != n) {
    throw DimensionError("permutation acts on " + std::to_string(p.n_qubits()) +
                         " qubits, sector has " + std::to_string(n) + " modes");
  }
  const auto states = sector_states(spec);
  std::uint64_t all_and = low_mask(n);
  std::uint64_t all_or = 0;
  std::vector<std::uint64_t> images;
  images.reserve(states.size());
  for (auto s : states) {
    const std::uint64_t img = p.apply(s);
    images.push_back(img);
    all_and &= img;
    all_or |= img;
  }
  RedundancyReport report;
  for (std::size_t q = 1; q <= n; ++q) {
    const std::uint64_t bit = qubit_bit(n, q);
    if ((all_and & bit) || !(all_or & bit)) {
      report.fixed.push_back({q, (all_and & bit) ? 1 : 0});
    } else {
      report.surviving.push_back(q);
    }
  }
  std::vector<std::uint64_t> packed;
  packed.reserve(images.size());
  for (auto img : images) packed.push_back(compress_bits(img, n, report.fixed));
  std::sort(packed.begin(), packed.end());
  report.injective_on_surviving = std::adjacent_find(packed.begin(), packed.end()) == packed.end();
  return report;
}

std::uint64_t compress_bits(std::uint64_t value, std::size_t n_qubits,
                            const std::vector<FixedQubit>& fixed) {
  std::uint64_t out = 0;
  std::size_t f = 0;
  for (std::size_t q = 1; q <= n_qubits; ++q) {
    if (f < fixed.size() && fixed[f].qubit == q) {
      ++f;
      continue;
    }
    out = (out << 1) | ((value >> (n_qubits - q)) & 1);
  }
  return out;
}

}  // namespace qperm
