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
#include <optional>
#include <utility>
#include <vector>

#include "qperm/circuit.hpp"
#include "qperm/combinatorics.hpp"
#include "qperm/permutation.hpp"

namespace qperm {

struct GateCounts {
  std::size_t total = 0;
  std::size_t x = 0;
  std::size_t cnot = 0;
  std::size_t toffoli = 0;
  std::size_t mcx = 0;
  /// TOFFOLI plus MCX with two or more controls.
  std::size_t nonclifford = 0;
};

GateCounts count_gates(const GateCircuit& circuit);

struct SynthesisReport {
  GateCircuit circuit;
  GateCounts counts;
  /// Two-level permutations used; 0 on the affine fast path.
  std::size_t transpositions = 0;
  std::size_t max_gates_per_transposition = 0;
  bool affine_fast_path = false;
};

/// Transpositions (a, b) in application order whose product is p. Cycles
/// that touch the sector (when given) come first.
std::vector<std::pair<std::uint64_t, std::uint64_t>> transposition_decomposition(
    const BasisPermutation& p, const std::optional<SectorSpec>& sector = std::nullopt);

/// Swaps basis states a and b, fixing everything else: walk a along a Gray
/// path to a neighbour of b with single-bit controlled flips, flip the last
/// bit, then unwind. Each flip is an X/CNOT/TOFFOLI/MCX controlled on all
/// other wires, with X conjugation for 0-valued controls.
GateCircuit two_level_swap_circuit(std::size_t n_qubits, std::uint64_t a, std::uint64_t b);

/// Affine permutations become a CNOT/X netlist; all others are decomposed
/// into Gray-code two-level swaps. The circuit is checked to reproduce p.
SynthesisReport synthesize_permutation(const BasisPermutation& p,
                                       const std::optional<SectorSpec>& sector = std::nullopt);

struct LoweredCircuit {
  GateCircuit circuit;  // data wires 1..n_data, then ancillas
  std::size_t n_data = 0;
  std::size_t n_ancilla = 0;
};

/// Rewrites every MCX with k >= 3 controls as a Toffoli ladder over k - 1
/// clean ancillas (computed, copied to the target, uncomputed).
LoweredCircuit lower_mcx(const GateCircuit& circuit);

/// Searches for a circuit A2 . TOFFOLI . A1 (A1, A2 affine) or a purely
/// affine circuit (max_toffoli = 0) sending sources[i] to targets[i].
/// Exhaustive over AGL(n, F2) for 3 <= n <= 4; returns the first hit in a
/// fixed enumeration order.
std::optional<GateCircuit> find_low_toffoli_circuit(std::size_t n_qubits,
                                                    const std::vector<std::uint64_t>& sources,
                                                    const std::vector<std::uint64_t>& targets,
                                                    std::size_t max_toffoli = 1);

}  // namespace qperm
