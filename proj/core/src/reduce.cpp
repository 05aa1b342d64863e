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

#include <bit>
#include <cmath>
#include <limits>

#include "qperm/affine.hpp"
#include "qperm/conjugate.hpp"
#include "qperm/encodings.hpp"
#include "qperm/errors.hpp"

namespace qperm {
namespace {

// Removes bit position `pos` (from the least significant end).
std::uint64_t drop_bit(std::uint64_t v, std::size_t pos) {
  const std::uint64_t low = v & low_mask(pos);
  return ((v >> (pos + 1)) << pos) | low;
}

Eigen::VectorXd sorted_eigenvalues(const DenseMatrix& m) {
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

bool hermitian(const DenseMatrix& m, double tolerance) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tolerance;
}

}  // namespace

PauliSum project_fixed_qubit(const PauliSum& s, std::size_t qubit, int value) {
  const std::size_t n = s.n_qubits();
  if (qubit < 1 || qubit > n) {
    throw RangeError("qubit " + std::to_string(qubit) + " outside 1.." + std::to_string(n));
  }
  const std::size_t pos = n - qubit;
  const std::uint64_t bit = std::uint64_t{1} << pos;
  PauliSum out(n - 1);
  for (const auto& [key, c] : s.terms()) {
    if (key.x & bit) continue;
    const Complex scaled = (key.z & bit) && value != 0 ? -c : c;
    out.add_term(PauliKey{drop_bit(key.x, pos), drop_bit(key.z, pos)}, scaled);
  }
  return out;
}

std::optional<std::pair<std::uint64_t, int>> apply_ladder_product(const FermionTerm& term,
                                                                 std::uint64_t occupancy,
                                                                 std::size_t n_modes) {
  int sign = 1;
  for (auto it = term.ops.rbegin(); it != term.ops.rend(); ++it) {
    if (it->mode < 1 || it->mode > n_modes) throw RangeError("mode out of range");
    const std::uint64_t bit = qubit_bit(n_modes, it->mode);
    const bool occupied = (occupancy & bit) != 0;
    if (occupied == it->dagger) return std::nullopt;
    // modes 1..j-1 sit in the bits above `bit`
    const std::uint64_t left = occupancy & ~((bit << 1) - 1);
    if (std::popcount(left) & 1) sign = -sign;
    occupancy ^= bit;
  }
  return std::make_pair(occupancy, sign);
}

DenseMatrix sector_oracle(const FermionOperator& h, const SectorSpec& spec) {
  if (spec.dimension() > kSectorDenseCap) {
    throw ResourceError("sector dimension " + std::to_string(spec.dimension()) +
                        " exceeds the dense cap");
  }
  if (h.n_modes() > spec.n_modes()) throw DimensionError("operator has more modes than the sector");
  const auto dim = static_cast<Eigen::Index>(spec.dimension());
  DenseMatrix m = DenseMatrix::Zero(dim, dim);
  const auto states = sector_states(spec);
  for (std::size_t col = 0; col < states.size(); ++col) {
    for (const auto& term : h.terms()) {
      const auto result = apply_ladder_product(term, states[col], spec.n_modes());
      if (!result) continue;
      const auto [out, sign] = *result;
      if (static_cast<std::size_t>(std::popcount(out)) != spec.n_fermions()) continue;
      const auto row = static_cast<Eigen::Index>(rank_weightk(out, spec.n_modes()));
      m(row, static_cast<Eigen::Index>(col)) += term.coefficient * static_cast<double>(sign);
    }
  }
  return m;
}

ReducedHamiltonian encode_and_reduce(const FermionOperator& h, const BasisPermutation& p,
                                     const SectorSpec& spec) {
  if (auto bad = h.first_non_conserving_term()) {
    throw NonConservingTermError(*bad, h.terms()[*bad].str());
  }
  const std::size_t n = spec.n_modes();
  if (p.n_qubits() != n) {
    throw DimensionError("permutation acts on " + std::to_string(p.n_qubits()) +
                         " qubits, sector has " + std::to_string(n) + " modes");
  }
  if (h.n_modes() > n) throw DimensionError("operator has more modes than the sector");

  const PauliSum jw = encode_fermion_operator(h, jw_majoranas(n));
  const auto affine = classify_affine(p);
  PauliSum encoded = affine ? simplify(conjugate_pauli_affine(*affine, jw))
                            : conjugate_pauli_dense(p, jw);

  RedundancyReport redundancy = redundant_qubits(p, spec);
  std::optional<bool> diagonal;
  if (affine) {
    std::uint64_t fixed_mask = 0;
    for (const auto& f : redundancy.fixed) fixed_mask |= qubit_bit(n, f.qubit);
    bool ok = true;
    for (const auto& [key, c] : encoded.terms()) ok = ok && (key.x & fixed_mask) == 0;
    diagonal = ok;
  }

  // Highest qubit first so the remaining indices stay valid.
  for (auto it = redundancy.fixed.rbegin(); it != redundancy.fixed.rend(); ++it) {
    encoded = project_fixed_qubit(encoded, it->qubit, it->value);
  }
  encoded.simplify();

  std::vector<std::uint64_t> state_map;
  state_map.reserve(spec.dimension());
  for (auto s : sector_states(spec)) {
    state_map.push_back(compress_bits(p.apply(s), n, redundancy.fixed));
  }
  return ReducedHamiltonian{std::move(encoded), std::move(redundancy), spec,
                            std::move(state_map), affine.has_value(), diagonal};
}

VerificationReport verify_reduction(const ReducedHamiltonian& rh, const DenseMatrix& oracle,
                                    double tolerance) {
  const auto dim = static_cast<Eigen::Index>(rh.state_map.size());
  if (oracle.rows() != dim || oracle.cols() != dim) {
    throw DimensionError("oracle is " + std::to_string(oracle.rows()) + "x" +
                         std::to_string(oracle.cols()) + ", reduction has " +
                         std::to_string(dim) + " sector states");
  }
  VerificationReport report;
  report.dimension = static_cast<std::size_t>(dim);
  report.tolerance = tolerance;
  DenseMatrix block(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      block(r, c) = rh.hamiltonian.matrix_element(rh.state_map[static_cast<std::size_t>(r)],
                                                  rh.state_map[static_cast<std::size_t>(c)]);
      report.max_deviation = std::max(report.max_deviation, std::abs(block(r, c) - oracle(r, c)));
    }
  }
  if (dim > 0 && hermitian(block, kSpectrumTolerance) && hermitian(oracle, kSpectrumTolerance)) {
    const Eigen::VectorXd a = sorted_eigenvalues(block);
    const Eigen::VectorXd b = sorted_eigenvalues(oracle);
    report.spectrum_deviation = (a - b).cwiseAbs().maxCoeff();
  } else if (dim > 0) {
    report.spectrum_deviation = std::numeric_limits<double>::quiet_NaN();
  }
  report.passed = report.max_deviation < tolerance &&
                  (std::isnan(report.spectrum_deviation) ||
                   report.spectrum_deviation < kSpectrumTolerance);
  return report;
}

}  // namespace qperm
