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

#include "qperm/reduce.hpp"

#include <gtest/gtest.h>

#include <random>

#include "qperm/errors.hpp"
#include "support/oracles.hpp"

namespace qperm {
namespace {

using testing::kron_dense;
using testing::max_abs;

BasisPermutation three_cnot_permutation() {
  return permutation_from_circuit(
      GateCircuit::from_product(4, {Gate::cnot(1, 4), Gate::cnot(2, 4), Gate::cnot(3, 4)}));
}

TEST(ProjectFixedQubit, SingleQubitCases) {
  const auto z = project_fixed_qubit(PauliSum(PauliString::from_letters("Z")), 1, 0);
  EXPECT_EQ(z.n_qubits(), 0u);
  EXPECT_EQ(z.coefficient(PauliString(0)), Complex(1.0));
  const auto z1 = project_fixed_qubit(PauliSum(PauliString::from_letters("Z")), 1, 1);
  EXPECT_EQ(z1.coefficient(PauliString(0)), Complex(-1.0));
  EXPECT_TRUE(project_fixed_qubit(PauliSum(PauliString::from_letters("X")), 1, 0).empty());
  EXPECT_TRUE(project_fixed_qubit(PauliSum(PauliString::from_letters("IY")), 2, 1).empty());
  EXPECT_THROW(project_fixed_qubit(PauliSum(2), 3, 0), RangeError);
}

TEST(ProjectFixedQubit, MatchesDenseBlock) {
  std::mt19937_64 rng(91);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const auto s = testing::random_pauli_sum(n, 10, rng);
    const std::size_t q = 1 + rng() % n;
    const int value = static_cast<int>(rng() & 1);
    const auto full = kron_dense(s);
    const auto half = Eigen::Index{1} << (n - 1);
    testing::Matrix block(half, half);
    const auto expand = [&](Eigen::Index v) {
      const std::size_t pos = n - q;
      const Eigen::Index low = v & ((Eigen::Index{1} << pos) - 1);
      return ((v >> pos) << (pos + 1)) | (Eigen::Index{value} << pos) | low;
    };
    for (Eigen::Index r = 0; r < half; ++r) {
      for (Eigen::Index c = 0; c < half; ++c) block(r, c) = full(expand(r), expand(c));
    }
    EXPECT_LT(max_abs(kron_dense(project_fixed_qubit(s, q, value)) - block), 1e-12);
  }
}

TEST(SectorOracle, NumberOperatorIsScalar) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      const SectorSpec spec(n, k);
      const auto m = sector_oracle(FermionOperator::number_operator(n), spec);
      const auto d = static_cast<Eigen::Index>(spec.dimension());
      EXPECT_LT(max_abs(m - static_cast<double>(k) * testing::Matrix::Identity(d, d)), 1e-15);
    }
  }
}

TEST(SectorOracle, TwoModeHopping) {
  FermionOperator h(2);
  h.add_one_body(1, 2, 1.0);
  h.add_one_body(2, 1, 1.0);
  const auto m = sector_oracle(h, SectorSpec(2, 1));
  testing::Matrix expected(2, 2);
  expected << 0, 1, 1, 0;
  EXPECT_LT(max_abs(m - expected), 1e-15);
}

TEST(SectorOracle, MatchesJordanWignerBlock) {
  std::mt19937_64 rng(92);
  for (std::size_t n = 2; n <= 5; ++n) {
    FermionOperator h = testing::random_one_body(n, rng);
    h.add_two_body(1, 2, 2, 1, 0.4);
    h.add_two_body(2, n, n, 2, 0.4);
    const auto full = testing::jw_dense_operator(h);
    for (std::size_t k = 0; k <= n; ++k) {
      const SectorSpec spec(n, k);
      const auto states = sector_states(spec);
      const auto d = static_cast<Eigen::Index>(states.size());
      testing::Matrix block(d, d);
      for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index c = 0; c < d; ++c) {
          block(r, c) = full(static_cast<Eigen::Index>(states[r]), static_cast<Eigen::Index>(states[c]));
        }
      }
      EXPECT_LT(max_abs(sector_oracle(h, spec) - block), 1e-12);
      Eigen::SelfAdjointEigenSolver<testing::Matrix> a(block), b(sector_oracle(h, spec));
      EXPECT_LT((a.eigenvalues() - b.eigenvalues()).cwiseAbs().maxCoeff(), 1e-8);
    }
  }
}

TEST(ApplyLadderProduct, SignsAndAnnihilation) {
  // a_2^dag a_1 on |10>: remove mode 1 (no modes to its left), add mode 2 (mode 1 now empty).
  const FermionTerm hop{1.0, {{2, true}, {1, false}}};
  const auto r = apply_ladder_product(hop, 0b10, 2);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->first, 0b01u);
  EXPECT_EQ(r->second, 1);
  EXPECT_FALSE(apply_ladder_product(hop, 0b01, 2).has_value());
  // a_3^dag a_1 on |110>: passing the occupied mode 2 costs a sign.
  const FermionTerm skip{1.0, {{3, true}, {1, false}}};
  EXPECT_EQ(apply_ladder_product(skip, 0b110, 3)->second, -1);
}

TEST(EncodeAndReduce, NumberOperatorUnderIndexEmbed) {
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{4, 2}, {4, 1}, {5, 2}, {6, 3}}) {
    const SectorSpec spec(n, k);
    const auto rh = encode_and_reduce(FermionOperator::number_operator(n),
                                      minimal_permutation_index_embed(spec), spec);
    EXPECT_EQ(rh.n_qubits(), spec.q_min());
    for (auto img : rh.state_map) {
      for (auto other : rh.state_map) {
        const Complex expected = img == other ? Complex(static_cast<double>(k)) : Complex();
        EXPECT_LT(std::abs(rh.hamiltonian.matrix_element(img, other) - expected), 1e-12);
      }
    }
    const auto report = verify_reduction(rh, sector_oracle(FermionOperator::number_operator(n), spec));
    EXPECT_TRUE(report.passed);
    EXPECT_LT(report.max_deviation, 1e-12);
  }
}

TEST(EncodeAndReduce, ThreeCnotCircuitFixesLastQubit) {
  const SectorSpec spec(4, 2);
  const auto rh = encode_and_reduce(FermionOperator::number_operator(4), three_cnot_permutation(), spec);
  EXPECT_EQ(rh.n_qubits(), 3u);
  EXPECT_EQ(rh.redundancy.fixed, (std::vector<FixedQubit>{{4, 0}}));
  EXPECT_TRUE(rh.affine);
  EXPECT_EQ(rh.fixed_qubits_diagonal, std::optional<bool>(true));
  const auto dense = kron_dense(rh.hamiltonian);
  for (auto img : rh.state_map) {
    EXPECT_LT(std::abs(dense(static_cast<Eigen::Index>(img), static_cast<Eigen::Index>(img)) - 2.0),
              1e-12);
  }
}

TEST(EncodeAndReduce, AffineTermsAreDiagonalOnFixedQubits) {
  std::mt19937_64 rng(93);
  for (int trial = 0; trial < 10; ++trial) {
    FermionOperator h = testing::random_one_body(4, rng);
    h.add_two_body(1, 3, 3, 1, 0.5);
    const auto rh = encode_and_reduce(h, three_cnot_permutation(), SectorSpec(4, 2));
    EXPECT_EQ(rh.fixed_qubits_diagonal, std::optional<bool>(true));
    EXPECT_TRUE(verify_reduction(rh, sector_oracle(h, SectorSpec(4, 2))).passed);
  }
}

TEST(EncodeAndReduce, RandomOneBodyMatchesOracle) {
  std::mt19937_64 rng(94);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    const SectorSpec spec(n, rng() % (std::min<std::size_t>(n, 3) + 1));
    const auto h = testing::random_one_body(n, rng);
    const auto p = trial % 2 ? random_minimal_permutation(spec, rng)
                             : minimal_permutation_index_embed(spec);
    const auto rh = encode_and_reduce(h, p, spec);
    EXPECT_EQ(rh.n_qubits(), spec.q_min());
    EXPECT_TRUE(rh.hamiltonian.is_hermitian());
    const auto report = verify_reduction(rh, sector_oracle(h, spec));
    EXPECT_TRUE(report.passed) << report.max_deviation;
    EXPECT_LT(report.max_deviation, 1e-9);
  }
}

TEST(EncodeAndReduce, TwoBodyTermsMatchOracle) {
  std::mt19937_64 rng(95);
  const SectorSpec spec(5, 2);
  FermionOperator h = testing::random_one_body(5, rng);
  h.add_two_body(1, 2, 3, 4, 0.3);
  h.add_two_body(4, 3, 2, 1, 0.3);
  h.add_two_body(2, 5, 5, 2, -0.7);
  const auto rh = encode_and_reduce(h, minimal_permutation_index_embed(spec), spec);
  EXPECT_TRUE(verify_reduction(rh, sector_oracle(h, spec)).passed);
}

TEST(EncodeAndReduce, ReducedSpectrumContainsSectorSpectrum) {
  std::mt19937_64 rng(96);
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{4, 1}, {5, 2}, {6, 2}}) {
    const SectorSpec spec(n, k);
    const auto h = testing::random_one_body(n, rng);
    const auto rh = encode_and_reduce(h, random_minimal_permutation(spec, rng), spec);
    Eigen::SelfAdjointEigenSolver<testing::Matrix> full(kron_dense(rh.hamiltonian));
    Eigen::SelfAdjointEigenSolver<testing::Matrix> sector(sector_oracle(h, spec));
    std::vector<double> pool(full.eigenvalues().data(),
                             full.eigenvalues().data() + full.eigenvalues().size());
    for (Eigen::Index i = 0; i < sector.eigenvalues().size(); ++i) {
      const double e = sector.eigenvalues()(i);
      auto best = std::min_element(pool.begin(), pool.end(), [e](double a, double b) {
        return std::abs(a - e) < std::abs(b - e);
      });
      ASSERT_NE(best, pool.end());
      EXPECT_LT(std::abs(*best - e), 1e-8);
      pool.erase(best);
    }
  }
}

TEST(EncodeAndReduce, SectorSwapPermutation) {
  const SectorSpec spec(4, 1);
  const auto p1 = BasisPermutation::from_cycles(4, {{2, 0}, {1, 12}});
  std::mt19937_64 rng(97);
  const auto h = testing::random_one_body(4, rng);
  const auto rh = encode_and_reduce(h, p1, spec);
  EXPECT_FALSE(rh.affine);
  EXPECT_FALSE(rh.fixed_qubits_diagonal.has_value());
  EXPECT_EQ(rh.n_qubits(), 2u);
  EXPECT_TRUE(verify_reduction(rh, sector_oracle(h, spec)).passed);
}

TEST(VerifyReduction, CorruptedStateMapIsDetected) {
  std::mt19937_64 rng(98);
  const SectorSpec spec(4, 2);
  const auto h = testing::random_one_body(4, rng);
  auto rh = encode_and_reduce(h, minimal_permutation_index_embed(spec), spec);
  std::swap(rh.state_map[0], rh.state_map[3]);
  const auto report = verify_reduction(rh, sector_oracle(h, spec));
  EXPECT_FALSE(report.passed);
  EXPECT_GT(report.max_deviation, 1e-6);
}

TEST(EncodeAndReduce, RejectsNonConservingTerm) {
  FermionOperator h(3);
  h.add_one_body(1, 1, 1.0);
  h.add_term({1.0, {{2, true}, {3, true}}});
  try {
    encode_and_reduce(h, BasisPermutation::identity(3), SectorSpec(3, 1));
    FAIL();
  } catch (const NonConservingTermError& e) {
    EXPECT_EQ(e.term_index(), 1u);
  }
  EXPECT_THROW(encode_and_reduce(FermionOperator::number_operator(3), BasisPermutation::identity(4),
                                 SectorSpec(3, 1)),
               DimensionError);
}

TEST(SectorOracle, Cap) {
  EXPECT_THROW(sector_oracle(FermionOperator(16), SectorSpec(16, 8)), ResourceError);
}

}  // namespace
}  // namespace qperm
