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

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "qperm/qperm.hpp"
#include "support/oracles.hpp"

namespace qperm {
namespace {

TEST(Pipeline, ParsedHamiltonianThroughIndexEmbed) {
  std::istringstream in(
      "1 1 0.5 0\n"
      "2 2 -0.25 0\n"
      "1 2 0.1 0.2\n"
      "2 1 0.1 -0.2\n"
      "3 4 1.0 0\n"
      "4 3 1.0 0\n"
      "1 3 3 1 0.75 0\n");
  const auto h = parse_fermion_operator(in);
  const SectorSpec spec(4, 2);
  const auto rh = encode_and_reduce(h, minimal_permutation_index_embed(spec), spec);
  EXPECT_EQ(rh.n_qubits(), 3u);
  EXPECT_TRUE(rh.hamiltonian.is_hermitian());
  const auto report = verify_reduction(rh, sector_oracle(h, spec));
  EXPECT_TRUE(report.passed);
}

TEST(Pipeline, SynthesizedCircuitDrivesReduction) {
  std::mt19937_64 rng(101);
  const SectorSpec spec(5, 2);
  const auto p = minimal_permutation_index_embed(spec, CompletionRule::kMinimalSupport);
  const auto synth = synthesize_permutation(p, spec);
  const auto from_circuit = permutation_from_circuit(synth.circuit);
  ASSERT_EQ(from_circuit, p);
  const auto h = testing::random_one_body(5, rng);
  const auto rh = encode_and_reduce(h, from_circuit, spec);
  EXPECT_EQ(rh.n_qubits(), 4u);
  EXPECT_TRUE(verify_reduction(rh, sector_oracle(h, spec)).passed);
}

TEST(Pipeline, LinearEncodingsAgreeOnSectorSpectrum) {
  std::mt19937_64 rng(102);
  const std::size_t n = 5;
  const auto h = testing::random_one_body(n, rng);
  const auto jw = testing::kron_dense(encode_fermion_operator(h, jw_majoranas(n)));
  const auto enc = LinearEncodingF2(testing::random_invertible(n, rng));
  const auto other = testing::kron_dense(encode_fermion_operator(h, enc.majoranas()));
  Eigen::SelfAdjointEigenSolver<testing::Matrix> a(jw), b(other);
  EXPECT_LT((a.eigenvalues() - b.eigenvalues()).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(Pipeline, CircuitTextRoundTripPreservesPermutation) {
  const auto p = minimal_permutation_index_embed(SectorSpec(4, 1), CompletionRule::kMinimalSupport);
  const auto synth = synthesize_permutation(p);
  std::istringstream text(format_circuit(synth.circuit));
  EXPECT_EQ(permutation_from_circuit(parse_circuit(text, 4)), p);
}

}  // namespace
}  // namespace qperm
