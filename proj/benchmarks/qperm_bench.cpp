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

#include <random>

#include <benchmark/benchmark.h>

#include "qperm/qperm.hpp"

namespace {

using namespace qperm;

BitMatrix random_invertible(std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    std::vector<std::uint64_t> rows(n);
    for (auto& r : rows) r = rng() & low_mask(n);
    BitMatrix m = BitMatrix::from_row_masks(n, rows);
    if (m.is_invertible()) return m;
  }
}

PauliSum random_sum(std::size_t n, std::size_t terms, std::mt19937_64& rng) {
  PauliSum s(n);
  for (std::size_t t = 0; t < terms; ++t) {
    s.add_term(PauliKey{rng() & low_mask(n), rng() & low_mask(n)}, 1.0);
  }
  return s;
}

void BM_ConjugateAffine(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  const AffineMapF2 map(random_invertible(n, rng), rng() & low_mask(n));
  const PauliSum s = random_sum(n, 64, rng);
  for (auto _ : state) benchmark::DoNotOptimize(conjugate_pauli_affine(map, s));
}
BENCHMARK(BM_ConjugateAffine)->DenseRange(4, 12, 4);

void BM_ConjugateDense(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  const BasisPermutation p =
      AffineMapF2(random_invertible(n, rng), rng() & low_mask(n)).to_permutation();
  const PauliSum s = random_sum(n, 64, rng);
  for (auto _ : state) benchmark::DoNotOptimize(conjugate_pauli_dense(p, s));
}
BENCHMARK(BM_ConjugateDense)->DenseRange(4, 8, 2);

void BM_EncodeAndReduce(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const SectorSpec spec(n, n / 2);
  FermionOperator h(n);
  for (std::size_t p = 1; p < n; ++p) {
    h.add_one_body(p, p + 1, 1.0);
    h.add_one_body(p + 1, p, 1.0);
  }
  const BasisPermutation perm = minimal_permutation_index_embed(spec);
  for (auto _ : state) benchmark::DoNotOptimize(encode_and_reduce(h, perm, spec));
}
BENCHMARK(BM_EncodeAndReduce)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_SynthesizeSectorMap(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const SectorSpec spec(n, n / 2);
  const BasisPermutation perm = minimal_permutation_index_embed(spec);
  for (auto _ : state) benchmark::DoNotOptimize(synthesize_permutation(perm, spec));
}
BENCHMARK(BM_SynthesizeSectorMap)->DenseRange(4, 10, 2);

void BM_AppendixVerify(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(appendix_verify(n));
}
BENCHMARK(BM_AppendixVerify)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_RankUnrank(benchmark::State& state) {
  const std::size_t n = 32;
  const std::size_t k = 16;
  const std::uint64_t total = binomial(n, k);
  std::uint64_t r = 0;
  for (auto _ : state) {
    r = (r * 6364136223846793005ULL + 1442695040888963407ULL) % total;
    benchmark::DoNotOptimize(rank_weightk(unrank_weightk(r, n, k), n));
  }
}
BENCHMARK(BM_RankUnrank);

}  // namespace
BENCHMARK_MAIN();
