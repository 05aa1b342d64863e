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

#include "qperm/synthesis.hpp"

#include <algorithm>
#include <stdexcept>

#include "qperm/affine.hpp"
#include "qperm/bit_matrix.hpp"
#include "qperm/errors.hpp"
#include "qperm/pauli_string.hpp"

namespace qperm {
namespace {

// Single-bit swap |u> <-> |u ^ bit(target)>, controlled on the other wires
// taking their values in u.
void append_neighbour_swap(GateCircuit& c, std::uint64_t u, std::size_t target) {
  const std::size_t n = c.n_qubits();
  std::vector<std::size_t> controls;
  std::vector<std::size_t> negated;
  for (std::size_t q = 1; q <= n; ++q) {
    if (q == target) continue;
    controls.push_back(q);
    if (!(u & qubit_bit(n, q))) negated.push_back(q);
  }
  for (auto q : negated) c.append(Gate::x(q));
  c.append(Gate::controlled_x(controls, target));
  for (auto q : negated) c.append(Gate::x(q));
}

std::optional<AffineMapF2> solve_affine(const std::vector<std::uint64_t>& from,
                                        const std::vector<std::uint64_t>& to, std::size_t n) {
  if (from.empty()) return AffineMapF2(BitMatrix::identity(n), 0);
  std::vector<std::uint64_t> d;
  std::vector<std::uint64_t> e;
  for (std::size_t i = 1; i < from.size(); ++i) {
    d.push_back(from[i] ^ from[0]);
    e.push_back(to[i] ^ to[0]);
  }
  auto m = solve_linear_map(d, e, n);
  if (!m) return std::nullopt;
  const std::uint64_t b = m->apply(from[0]) ^ to[0];
  return AffineMapF2(*m, b);
}

}  // namespace

GateCounts count_gates(const GateCircuit& circuit) {
  GateCounts out;
  out.total = circuit.size();
  out.x = circuit.count(GateKind::kX);
  out.cnot = circuit.count(GateKind::kCnot);
  out.toffoli = circuit.count(GateKind::kToffoli);
  out.mcx = circuit.count(GateKind::kMcx);
  out.nonclifford = circuit.nonclifford_count();
  return out;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> transposition_decomposition(
    const BasisPermutation& p, const std::optional<SectorSpec>& sector) {
  auto cycles = p.to_cycles();
  if (sector) {
    if (sector->n_modes() != p.n_qubits()) throw DimensionError("sector width mismatch");
    const auto touches_sector = [&](const Cycle& c) {
      return std::any_of(c.begin(), c.end(), [&](std::uint64_t v) {
        return static_cast<std::size_t>(std::popcount(v)) == sector->n_fermions();
      });
    };
    std::stable_partition(cycles.begin(), cycles.end(), touches_sector);
  }
  // (a1 a2 ... ak) = (a1 ak) ... (a1 a3)(a1 a2): (a1 a2) acts first.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (const auto& c : cycles) {
    for (std::size_t i = 1; i < c.size(); ++i) out.emplace_back(c[0], c[i]);
  }
  return out;
}

GateCircuit two_level_swap_circuit(std::size_t n_qubits, std::uint64_t a, std::uint64_t b) {
  if (n_qubits > kPermutationQubitCap) throw ResourceError("synthesis width exceeds cap");
  if (a >> n_qubits || b >> n_qubits) throw RangeError("basis state outside the register");
  GateCircuit c(n_qubits);
  if (a == b) return c;

  // Gray path a = g0, g1, ..., gm = b flipping differing bits from qubit 1 down.
  std::vector<std::size_t> flips;
  for (std::size_t q = 1; q <= n_qubits; ++q) {
    if ((a ^ b) & qubit_bit(n_qubits, q)) flips.push_back(q);
  }
  std::vector<std::uint64_t> path{a};
  for (auto q : flips) path.push_back(path.back() ^ qubit_bit(n_qubits, q));

  const std::size_t m = flips.size();
  for (std::size_t i = 0; i + 1 < m; ++i) append_neighbour_swap(c, path[i], flips[i]);
  append_neighbour_swap(c, path[m - 1], flips[m - 1]);
  for (std::size_t i = m - 1; i-- > 0;) append_neighbour_swap(c, path[i], flips[i]);
  return c;
}

SynthesisReport synthesize_permutation(const BasisPermutation& p,
                                       const std::optional<SectorSpec>& sector) {
  SynthesisReport report;
  if (auto affine = classify_affine(p)) {
    report.circuit = affine->to_circuit();
    report.affine_fast_path = true;
  } else {
    report.circuit = GateCircuit(p.n_qubits());
    for (const auto& [a, b] : transposition_decomposition(p, sector)) {
      const GateCircuit swap = two_level_swap_circuit(p.n_qubits(), a, b);
      report.max_gates_per_transposition = std::max(report.max_gates_per_transposition, swap.size());
      report.circuit.append(swap);
      ++report.transpositions;
    }
  }
  if (permutation_from_circuit(report.circuit) != p) {
    throw std::logic_error("synthesised circuit does not reproduce the permutation");
  }
  report.counts = count_gates(report.circuit);
  return report;
}

LoweredCircuit lower_mcx(const GateCircuit& circuit) {
  const std::size_t n = circuit.n_qubits();
  std::size_t ancillas = 0;
  for (const auto& g : circuit.gates()) {
    if (g.controls.size() >= 3) ancillas = std::max(ancillas, g.controls.size() - 1);
  }
  LoweredCircuit out{GateCircuit(n + ancillas), n, ancillas};
  for (const auto& g : circuit.gates()) {
    const std::size_t k = g.controls.size();
    if (k < 3) {
      out.circuit.append(Gate::controlled_x(g.controls, g.target));
      continue;
    }
    std::vector<Gate> ladder;
    ladder.push_back(Gate::toffoli(g.controls[0], g.controls[1], n + 1));
    for (std::size_t i = 2; i < k; ++i) {
      ladder.push_back(Gate::toffoli(n + i - 1, g.controls[i], n + i));
    }
    for (const auto& step : ladder) out.circuit.append(step);
    out.circuit.append(Gate::cnot(n + k - 1, g.target));
    for (auto it = ladder.rbegin(); it != ladder.rend(); ++it) out.circuit.append(*it);
  }
  return out;
}

std::optional<GateCircuit> find_low_toffoli_circuit(std::size_t n_qubits,
                                                    const std::vector<std::uint64_t>& sources,
                                                    const std::vector<std::uint64_t>& targets,
                                                    std::size_t max_toffoli) {
  if (sources.size() != targets.size()) throw DimensionError("sources and targets differ in size");
  if (n_qubits > 4) throw ResourceError("low-Toffoli search is exhaustive and capped at 4 qubits");
  if (auto direct = solve_affine(sources, targets, n_qubits)) return direct->to_circuit();
  if (max_toffoli == 0 || n_qubits < 3) return std::nullopt;

  // Any single-Toffoli circuit is A2 . TOFFOLI(1,2 -> 3) . A1 once wire
  // relabelling and X conjugation are absorbed into the affine layers.
  const Gate pivot = Gate::toffoli(1, 2, 3);
  const std::uint64_t offsets = std::uint64_t{1} << n_qubits;
  std::optional<GateCircuit> found;
  std::vector<std::uint64_t> middle(sources.size());
  const auto try_matrix = [&](const BitMatrix& m) {
    if (found) return;
    for (std::uint64_t b = 0; b < offsets && !found; ++b) {
      const AffineMapF2 first(m, b);
      for (std::size_t i = 0; i < sources.size(); ++i) {
        middle[i] = pivot.apply(first.apply(sources[i]), n_qubits);
      }
      if (auto second = solve_affine(middle, targets, n_qubits)) {
        GateCircuit c = first.to_circuit();
        c.append(pivot);
        c.append(second->to_circuit());
        found = std::move(c);
      }
    }
  };
  for_each_invertible(n_qubits, try_matrix);
  return found;
}

}  // namespace qperm
