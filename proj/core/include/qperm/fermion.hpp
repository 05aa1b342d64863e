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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qperm {

/// Occupation-number basis state |n_1 ... n_N>, mode 1 the most significant bit.
class FockState {
 public:
  FockState() = default;
  FockState(std::size_t n_modes, std::uint64_t occupancy);
  static FockState from_string(std::string_view bits);

  std::size_t n_modes() const noexcept { return n_modes_; }
  std::uint64_t occupancy() const noexcept { return occupancy_; }
  bool occupied(std::size_t mode) const;
  std::size_t particle_number() const noexcept;
  std::string str() const;

  friend bool operator==(const FockState&, const FockState&) = default;

 private:
  std::size_t n_modes_ = 0;
  std::uint64_t occupancy_ = 0;
};

/// n-character '0'/'1' rendering of a mask, qubit 1 first.
std::string bits_to_string(std::uint64_t bits, std::size_t n);

struct LadderOp {
  std::size_t mode = 1;  // 1-based
  bool dagger = false;
  friend bool operator==(const LadderOp&, const LadderOp&) = default;
};

/// coefficient * op_1 op_2 ... op_m, with op_m acting first on a ket.
struct FermionTerm {
  std::complex<double> coefficient{1.0, 0.0};
  std::vector<LadderOp> ops;

  bool is_number_conserving() const noexcept;
  FermionTerm adjoint() const;
  std::string str() const;
};

class FermionOperator {
 public:
  FermionOperator() = default;
  explicit FermionOperator(std::size_t n_modes) : n_modes_(n_modes) {}

  std::size_t n_modes() const noexcept { return n_modes_; }
  const std::vector<FermionTerm>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  void add_term(FermionTerm term);
  void add_one_body(std::size_t p, std::size_t q, std::complex<double> c);
  void add_two_body(std::size_t p, std::size_t q, std::size_t r, std::size_t s,
                    std::complex<double> c);

  FermionOperator adjoint() const;
  /// h + h^dagger.
  FermionOperator hermitized() const;

  /// Index of the first term whose dagger count differs from its non-dagger count.
  std::optional<std::size_t> first_non_conserving_term() const;

  /// sum_j a_j^dagger a_j.
  static FermionOperator number_operator(std::size_t n_modes);

 private:
  std::size_t n_modes_ = 0;
  std::vector<FermionTerm> terms_;
};

/// Reads the line-oriented Hamiltonian format:
///   p q re im          (re + i im) a_p^dagger a_q
///   p q r s re im      (re + i im) a_p^dagger a_q^dagger a_r a_s
/// Modes are 1-based; '#' starts a comment. When n_modes is 0 the mode count
/// is the largest index seen (at least 1).
FermionOperator parse_fermion_operator(std::istream& in, std::size_t n_modes = 0);

}  // namespace qperm
