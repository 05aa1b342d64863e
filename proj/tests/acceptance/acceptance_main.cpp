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

// Acceptance suite: one PASS/FAIL line per criterion, each timed against its
// limit. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qperm/qperm.hpp"
#include "support/oracles.hpp"

namespace {

using namespace qperm;
using qperm::testing::parse_bits;

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

BasisPermutation three_cnot_permutation() {
  return permutation_from_circuit(
      GateCircuit::from_product(4, {Gate::cnot(1, 4), Gate::cnot(2, 4), Gate::cnot(3, 4)}));
}

BasisPermutation sector_swap_permutation() {
  return BasisPermutation::from_cycles(4, {{2, 0}, {1, 12}});
}

std::string fixed_str(const std::vector<FixedQubit>& fixed) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < fixed.size(); ++i) {
    os << (i ? ", " : "") << "qubit " << fixed[i].qubit << " = " << fixed[i].value;
  }
  os << '}';
  return os.str();
}

bool exact_single(const PauliSum& s, const std::string& letters) {
  return s.size() == 1 && s.coefficient(PauliString::from_letters(letters)) == Complex(1.0);
}

Outcome majorana_table() {
  const char* expected[4][2] = {{"XIIX", "YIIX"}, {"ZXIX", "ZYIX"}, {"ZZXX", "ZZYX"}, {"ZZZX", "IIIY"}};
  const auto p = three_cnot_permutation();
  int matched = 0;
  int dense_matched = 0;
  for (std::size_t j = 1; j <= 4; ++j) {
    for (int primed = 0; primed < 2; ++primed) {
      const PauliSum gamma(jw_majorana(j, primed != 0, 4));
      matched += exact_single(conjugate(p, gamma), expected[j - 1][primed]);
      dense_matched += exact_single(conjugate_pauli_dense(p, gamma), expected[j - 1][primed]);
    }
  }
  return {matched == 8 && dense_matched == 8,
          std::to_string(matched) + "/8 exact via affine path, " + std::to_string(dense_matched) +
              "/8 via dense path"};
}

Outcome ket_tables() {
  const std::pair<const char*, const char*> circuit_table[] = {
      {"0011", "0010"}, {"0101", "0100"}, {"0110", "0110"},
      {"1001", "1000"}, {"1010", "1010"}, {"1100", "1100"}};
  const std::pair<const char*, const char*> embed_table[] = {
      {"0011", "0000"}, {"0101", "0010"}, {"0110", "0100"},
      {"1001", "0110"}, {"1010", "1000"}, {"1100", "1010"}};
  const SectorSpec spec(4, 2);
  const auto circuit = three_cnot_permutation();
  const auto embed = minimal_permutation_index_embed(spec);
  int rows = 0;
  for (const auto& [in, out] : circuit_table) rows += circuit(parse_bits(in)) == parse_bits(out);
  for (const auto& [in, out] : embed_table) rows += embed(parse_bits(in)) == parse_bits(out);
  const auto r1 = redundant_qubits(circuit, spec).fixed;
  const auto r2 = redundant_qubits(embed, spec).fixed;
  const std::vector<FixedQubit> want{{4, 0}};
  return {rows == 12 && r1 == want && r2 == want,
          std::to_string(rows) + "/12 rows; redundancy " + fixed_str(r1) + " and " + fixed_str(r2)};
}

Outcome sector_swap_terms() {
  const SectorSpec spec(4, 1);
  const auto p1 = sector_swap_permutation();
  const auto states = sector_states(spec);
  std::vector<std::uint64_t> images;
  for (auto s : states) images.push_back(p1(s));
  const auto circuit = find_low_toffoli_circuit(4, states, images, 1);
  if (!circuit) return {false, "no single-Toffoli circuit found"};
  const auto p2 = permutation_from_circuit(*circuit);
  std::size_t max_p1 = 0;
  std::size_t max_p2 = 0;
  for (std::size_t j = 1; j <= 4; ++j) {
    for (bool primed : {false, true}) {
      const PauliSum gamma(jw_majorana(j, primed, 4));
      max_p1 = std::max(max_p1, conjugate_pauli_dense(p1, gamma).size());
      max_p2 = std::max(max_p2, conjugate_pauli_dense(p2, gamma).size());
    }
  }
  bool same_sector_map = true;
  for (auto s : states) same_sector_map = same_sector_map && p2(s) == p1(s);
  const auto fixed1 = redundant_qubits(p1, spec).fixed;
  const auto fixed2 = redundant_qubits(p2, spec).fixed;
  const std::vector<FixedQubit> want{{3, 0}, {4, 0}};
  const bool ok = max_p1 <= 32 && max_p2 <= 4 && circuit->nonclifford_count() == 1 &&
                  same_sector_map && fixed1 == want && fixed2 == want;
  return {ok, "P1 max terms " + std::to_string(max_p1) + ", one-Toffoli circuit (" +
                  std::to_string(circuit->size()) + " gates, t=" +
                  std::to_string(circuit->nonclifford_count()) + ") max terms " +
                  std::to_string(max_p2) + ", redundancy " + fixed_str(fixed1)};
}

bool strings_anticommute(const std::vector<PauliString>& m) {
  const PauliString id(m.front().n_qubits());
  for (std::size_t a = 0; a < m.size(); ++a) {
    if (m[a] * m[a] != id) return false;
    for (std::size_t b = a + 1; b < m.size(); ++b) {
      if (commutator_type(m[a], m[b]) != Commutation::kAnticommute) return false;
    }
  }
  return true;
}

double dense_majorana_deviation(const MajoranaSet& set) {
  std::vector<DenseMatrix> mats;
  for (std::size_t j = 1; j <= set.n_modes(); ++j) {
    mats.push_back(to_dense(set.get(j, false)));
    mats.push_back(to_dense(set.get(j, true)));
  }
  const auto dim = mats.front().rows();
  const DenseMatrix two_id = 2.0 * DenseMatrix::Identity(dim, dim);
  double dev = 0.0;
  for (std::size_t a = 0; a < mats.size(); ++a) {
    for (std::size_t b = a; b < mats.size(); ++b) {
      DenseMatrix anti = mats[a] * mats[b] + mats[b] * mats[a];
      if (a == b) anti -= two_id;
      dev = std::max(dev, anti.cwiseAbs().maxCoeff());
    }
  }
  return dev;
}

Outcome anticommutation() {
  std::size_t pairs = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<PauliString> jw;
    std::vector<PauliString> parity;
    for (std::size_t j = 1; j <= n; ++j) {
      for (bool primed : {false, true}) {
        jw.push_back(jw_majorana(j, primed, n));
        parity.push_back(parity_majorana(j, primed, n));
      }
    }
    if (!strings_anticommute(jw)) return {false, "JW fails at N=" + std::to_string(n)};
    if (!strings_anticommute(parity)) return {false, "parity fails at N=" + std::to_string(n)};
    pairs += 2 * (2 * n * (2 * n + 1) / 2);
  }
  std::mt19937_64 rng(2024);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial) % 5;
    const SectorSpec spec(n, 1 + static_cast<std::size_t>(trial / 5) % (n - 1));
    const auto set = permuted_majoranas(random_minimal_permutation(spec, rng));
    const double dev = dense_majorana_deviation(set);
    worst = std::max(worst, dev);
    pairs += 2 * n * (2 * n + 1) / 2;
    if (dev > 1e-12) {
      return {false, "random encoding N=" + std::to_string(n) + " deviation " + std::to_string(dev)};
    }
  }
  std::ostringstream os;
  os << pairs << " pair/square checks; random encodings max deviation " << worst;
  return {true, os.str()};
}

Outcome appendix(bool extended) {
  const std::uint64_t orders[] = {0, 0, 6, 168, 20160, 9999360};
  std::ostringstream os;
  bool ok = true;
  const std::size_t top = extended ? 5 : 4;
  for (std::size_t n = 2; n <= top; ++n) {
    const auto r = appendix_verify(n, n == 5);
    bool all_one = true;
    for (auto m : r.max_by_weight) all_one = all_one && m == 1;
    ok = ok && r.invertible_count == orders[n] && all_one && r.witness_constant_digits == 1;
    os << (n > 2 ? "; " : "") << "n=" << n << ": " << r.invertible_count << " matrices, max "
       << r.max_constant_digits;
  }
  return {ok, os.str()};
}

Outcome conjugation_equivalence() {
  std::mt19937_64 rng(77);
  double affine_dev = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial) % 6;
    const auto map = qperm::testing::random_affine(n, rng);
    const auto s = qperm::testing::random_pauli(n, rng);
    const PauliSum fast(conjugate_pauli_affine(map, s));
    const auto dense = conjugate_pauli_dense(map.to_permutation(), PauliSum(s));
    const auto diff = fast - dense;
    for (const auto& [key, c] : diff.terms()) affine_dev = std::max(affine_dev, std::abs(c));
    if (dense.size() != 1) affine_dev = std::max(affine_dev, 1.0);
  }
  double generic_dev = 0.0;
  int generic = 0;
  while (generic < 50) {
    const std::size_t n = 3 + static_cast<std::size_t>(generic) % 3;
    const auto p = qperm::testing::random_permutation(n, rng);
    if (classify_affine(p)) continue;
    const auto s = qperm::testing::random_pauli_sum(n, 1 + rng() % 6, rng);
    const auto pm = qperm::testing::permutation_matrix(p);
    const DenseMatrix expected = pm * to_dense(s) * pm.adjoint();
    generic_dev = std::max(generic_dev, (to_dense(conjugate_pauli_dense(p, s)) - expected)
                                            .cwiseAbs()
                                            .maxCoeff());
    ++generic;
  }
  std::ostringstream os;
  os << "affine vs dense max deviation " << affine_dev << "; generic vs matrix " << generic_dev;
  return {affine_dev == 0.0 && generic_dev <= 1e-12, os.str()};
}

Outcome reduction() {
  std::mt19937_64 rng(555);
  std::ostringstream os;
  bool ok = true;
  const std::pair<std::size_t, std::size_t> cases[] = {{4, 1}, {4, 2}, {5, 2}, {6, 3}};
  const std::size_t expected_qubits[] = {2, 3, 4, 5};
  for (std::size_t c = 0; c < 4; ++c) {
    const auto [n, k] = cases[c];
    const SectorSpec spec(n, k);
    double worst = 0.0;
    std::size_t width = 0;
    for (int trial = 0; trial < 20; ++trial) {
      const auto h = qperm::testing::random_one_body(n, rng);
      const auto p = trial % 2 ? random_minimal_permutation(spec, rng)
                               : minimal_permutation_index_embed(spec);
      const auto rh = encode_and_reduce(h, p, spec);
      const auto report = verify_reduction(rh, sector_oracle(h, spec));
      worst = std::max(worst, report.max_deviation);
      width = rh.n_qubits();
      ok = ok && report.passed && report.max_deviation < 1e-9 && rh.n_qubits() == spec.q_min() &&
           rh.n_qubits() == expected_qubits[c];
    }
    os << (c ? "; " : "") << "(" << n << "," << k << ") " << width << " qubits, max dev " << worst;
  }
  return {ok, os.str()};
}

Outcome costs() {
  const auto rows = qubit_costs(32);
  bool ok = rows.size() == 33;
  for (const auto& r : rows) {
    ok = ok && r.minimal == ceil_log2(binomial(32, r.n_fermions)) && r.parity == 31 &&
         r.first_quantized == 5 * r.n_fermions && r.minimal <= r.parity;
  }
  ok = ok && rows[16].minimal == 30 && rows[4].minimal == 16;
  return {ok, "K=16 -> " + std::to_string(rows[16].minimal) + ", K=4 -> " +
                  std::to_string(rows[4].minimal)};
}

BasisPermutation random_sector_supported(const SectorSpec& spec, std::mt19937_64& rng) {
  const auto sources = sector_states(spec);
  std::vector<std::uint64_t> prefixes(std::uint64_t{1} << spec.q_min());
  for (std::size_t i = 0; i < prefixes.size(); ++i) prefixes[i] = i;
  std::shuffle(prefixes.begin(), prefixes.end(), rng);
  std::vector<std::uint64_t> targets;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    targets.push_back(prefixes[i] << (spec.n_modes() - spec.q_min()));
  }
  return complete_sector_map(spec.n_modes(), sources, targets, CompletionRule::kMinimalSupport);
}

Outcome synthesis_scaling() {
  std::mt19937_64 rng(31337);
  double c1 = 0.0;
  double c2 = 0.0;
  std::size_t circuits = 0;
  std::size_t max_t = 0;
  for (std::size_t n = 2; n <= 8; ++n) {
    for (std::size_t k = 0; k <= std::min<std::size_t>(3, n); ++k) {
      const SectorSpec spec(n, k);
      std::vector<BasisPermutation> perms{
          minimal_permutation_index_embed(spec, CompletionRule::kMinimalSupport)};
      for (int extra = 0; extra < 3; ++extra) perms.push_back(random_sector_supported(spec, rng));
      for (const auto& p : perms) {
        const auto report = synthesize_permutation(p, spec);
        if (permutation_from_circuit(report.circuit) != p) {
          return {false, "circuit mismatch at N=" + std::to_string(n)};
        }
        ++circuits;
        max_t = std::max(max_t, report.counts.nonclifford);
        c1 = std::max(c1, static_cast<double>(report.transpositions) /
                              static_cast<double>(spec.dimension()));
        c2 = std::max(c2, static_cast<double>(report.max_gates_per_transposition) /
                              static_cast<double>(n * n));
      }
    }
  }
  std::ostringstream os;
  os << circuits << " circuits verified; c1 = " << c1 << " (bound 2), c2 = " << c2
     << " (bound 4), max t " << max_t;
  return {c1 <= 2.0 && c2 <= 4.0, os.str()};
}

Outcome count_freedom() {
  const BigInt v = count_valid_permutations(SectorSpec(4, 2));
  BigInt ten = 1;
  for (int i = 2; i <= 10; ++i) ten *= i;
  return {v == BigInt(3628800) && v == ten, v.str()};
}

}  // namespace

int main(int argc, char** argv) {
  bool extended = false;
  for (int i = 1; i < argc; ++i) {
    if (std::string_view(argv[i]) == "--extended") extended = true;
  }
  const std::vector<Criterion> criteria = {
      {1, "three-CNOT Majorana table", 1.0, majorana_table},
      {2, "ket tables and redundancy", 1.0, ket_tables},
      {3, "one-fermion sector term counts", 5.0, sector_swap_terms},
      {4, "Majorana anticommutation", 30.0, anticommutation},
      {5, "constant-digit bound over GL(n,2)", 120.0, [extended] { return appendix(extended); }},
      {6, "affine and dense conjugation agree", 60.0, conjugation_equivalence},
      {7, "reduction against sector oracle", 120.0, reduction},
      {8, "qubit-cost table N=32", 1.0, costs},
      {9, "synthesis scaling", 120.0, synthesis_scaling},
      {10, "count of valid permutations", 1.0, count_freedom},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.limit_seconds;
    const bool passed = out.passed && in_time;
    failures += !passed;
    std::printf("[%s] criterion %d: %s (%.3f s / %.0f s limit) %s%s\n", passed ? "PASS" : "FAIL",
                c.id, c.name.c_str(), secs, c.limit_seconds, out.detail.c_str(),
                in_time ? "" : " [time limit exceeded]");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
