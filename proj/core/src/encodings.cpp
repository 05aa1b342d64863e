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

#include "qperm/encodings.hpp"

#include "qperm/affine.hpp"
#include "qperm/conjugate.hpp"
#include "qperm/errors.hpp"

namespace qperm {
namespace {

void check_mode(std::size_t j, std::size_t n_modes) {
  if (j < 1 || j > n_modes) {
    throw RangeError("mode " + std::to_string(j) + " outside 1.." + std::to_string(n_modes));
  }
}

}  // namespace

MajoranaSet::MajoranaSet(std::size_t n_qubits, std::vector<MajoranaPair> pairs)
    : n_qubits_(n_qubits), pairs_(std::move(pairs)) {
  for (const auto& pair : pairs_) {
    if (pair.gamma.n_qubits() != n_qubits || pair.gamma_prime.n_qubits() != n_qubits) {
      throw DimensionError("Majorana images must share the qubit count");
    }
  }
}

const MajoranaPair& MajoranaSet::mode(std::size_t j) const {
  if (j < 1 || j > pairs_.size()) {
    throw RangeError("no Majorana pair for mode " + std::to_string(j));
  }
  return pairs_[j - 1];
}

const PauliSum& MajoranaSet::get(std::size_t j, bool primed) const {
  const auto& pair = mode(j);
  return primed ? pair.gamma_prime : pair.gamma;
}

PauliString jw_majorana(std::size_t j, bool primed, std::size_t n_modes) {
  check_mode(j, n_modes);
  std::string letters(n_modes, 'I');
  for (std::size_t k = 1; k < j; ++k) letters[k - 1] = 'Z';
  letters[j - 1] = primed ? 'Y' : 'X';
  return PauliString::from_letters(letters);
}

PauliString parity_majorana(std::size_t j, bool primed, std::size_t n_modes) {
  check_mode(j, n_modes);
  std::string letters(n_modes, 'I');
  if (primed) {
    letters[j - 1] = 'Y';
  } else {
    if (j > 1) letters[j - 2] = 'Z';
    letters[j - 1] = 'X';
  }
  for (std::size_t k = j + 1; k <= n_modes; ++k) letters[k - 1] = 'X';
  return PauliString::from_letters(letters);
}

MajoranaSet jw_majoranas(std::size_t n_modes) {
  std::vector<MajoranaPair> pairs;
  for (std::size_t j = 1; j <= n_modes; ++j) {
    pairs.push_back({PauliSum(jw_majorana(j, false, n_modes)),
                     PauliSum(jw_majorana(j, true, n_modes))});
  }
  return MajoranaSet(n_modes, std::move(pairs));
}

MajoranaSet parity_majoranas(std::size_t n_modes) {
  std::vector<MajoranaPair> pairs;
  for (std::size_t j = 1; j <= n_modes; ++j) {
    pairs.push_back({PauliSum(parity_majorana(j, false, n_modes)),
                     PauliSum(parity_majorana(j, true, n_modes))});
  }
  return MajoranaSet(n_modes, std::move(pairs));
}

MajoranaSet permuted_majoranas(const BasisPermutation& p) {
  const std::size_t n = p.n_qubits();
  const auto affine = classify_affine(p);
  const auto transport = [&](const PauliString& q) {
    return affine ? conjugate_pauli_affine(*affine, PauliSum(q))
                  : conjugate_pauli_dense(p, PauliSum(q));
  };
  std::vector<MajoranaPair> pairs;
  for (std::size_t j = 1; j <= n; ++j) {
    pairs.push_back({transport(jw_majorana(j, false, n)), transport(jw_majorana(j, true, n))});
  }
  return MajoranaSet(n, std::move(pairs));
}

LinearEncodingF2::LinearEncodingF2(BitMatrix matrix) : matrix_(std::move(matrix)) {
  if (!matrix_.is_invertible()) {
    throw InvalidEncodingError("encoding matrix is not invertible over F2");
  }
}

LinearEncodingF2 LinearEncodingF2::jordan_wigner(std::size_t n_modes) {
  return LinearEncodingF2(BitMatrix::identity(n_modes));
}

LinearEncodingF2 LinearEncodingF2::parity(std::size_t n_modes) {
  return LinearEncodingF2(BitMatrix::prefix_sum(n_modes));
}

GateCircuit LinearEncodingF2::circuit() const { return gl_to_cnot_circuit(matrix_); }

MajoranaSet LinearEncodingF2::majoranas() const {
  const std::size_t n = n_modes();
  // Route through the synthesised circuit rather than the matrix directly.
  const auto affine = classify_affine(permutation_from_circuit(circuit()));
  if (!affine) throw InvalidEncodingError("CNOT synthesis produced a non-affine map");
  std::vector<MajoranaPair> pairs;
  for (std::size_t j = 1; j <= n; ++j) {
    pairs.push_back({PauliSum(conjugate_pauli_affine(*affine, jw_majorana(j, false, n))),
                     PauliSum(conjugate_pauli_affine(*affine, jw_majorana(j, true, n)))});
  }
  return MajoranaSet(n, std::move(pairs));
}

std::uint64_t encode_state(const LinearEncodingF2& encoding, const FockState& state) {
  if (state.n_modes() != encoding.n_modes()) {
    throw DimensionError("Fock state has " + std::to_string(state.n_modes()) +
                         " modes, encoding expects " + std::to_string(encoding.n_modes()));
  }
  return encoding.matrix().apply(state.occupancy());
}

GateCircuit gl_to_cnot_circuit(const LinearEncodingF2& encoding) { return encoding.circuit(); }

PauliSum encode_ladder(std::size_t j, bool dagger, const MajoranaSet& majoranas) {
  const auto& pair = majoranas.mode(j);
  const Complex imag_half = dagger ? Complex{0.0, -0.5} : Complex{0.0, 0.5};
  PauliSum out = pair.gamma * Complex{0.5, 0.0};
  out += pair.gamma_prime * imag_half;
  return out;
}

PauliSum encode_fermion_operator(const FermionOperator& h, const MajoranaSet& majoranas,
                                 double tolerance) {
  if (h.n_modes() > majoranas.n_modes()) {
    throw RangeError("operator uses " + std::to_string(h.n_modes()) +
                     " modes but only " + std::to_string(majoranas.n_modes()) +
                     " are encoded");
  }
  const std::size_t n = majoranas.n_qubits();
  std::vector<std::pair<PauliSum, PauliSum>> ladders;  // (a_j^dag, a_j)
  ladders.reserve(majoranas.n_modes());
  for (std::size_t j = 1; j <= majoranas.n_modes(); ++j) {
    ladders.emplace_back(encode_ladder(j, true, majoranas), encode_ladder(j, false, majoranas));
  }
  PauliSum total(n);
  for (const auto& term : h.terms()) {
    PauliSum product(PauliString(n), term.coefficient);
    for (const auto& op : term.ops) {
      if (op.mode < 1 || op.mode > majoranas.n_modes()) {
        throw RangeError("mode " + std::to_string(op.mode) + " is not encoded");
      }
      const auto& ladder = ladders[op.mode - 1];
      product = product * (op.dagger ? ladder.first : ladder.second);
      product.simplify(tolerance);
    }
    total += product;
  }
  return total.simplify(tolerance);
}

}  // namespace qperm
