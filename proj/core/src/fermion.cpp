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

#include "qperm/fermion.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "qperm/errors.hpp"
#include "qperm/pauli_string.hpp"

namespace qperm {

FockState::FockState(std::size_t n_modes, std::uint64_t occupancy)
    : n_modes_(n_modes), occupancy_(occupancy) {
  if (n_modes > 64) throw ResourceError("FockState supports at most 64 modes");
  if ((occupancy & ~low_mask(n_modes)) != 0) {
    throw DimensionError("occupancy has bits beyond mode " + std::to_string(n_modes));
  }
}

FockState FockState::from_string(std::string_view bits) {
  std::uint64_t occ = 0;
  for (char ch : bits) {
    if (ch != '0' && ch != '1') throw ParseError(0, "occupancy strings use only 0 and 1");
    occ = (occ << 1) | static_cast<std::uint64_t>(ch == '1');
  }
  return FockState(bits.size(), occ);
}

bool FockState::occupied(std::size_t mode) const {
  if (mode < 1 || mode > n_modes_) throw RangeError("mode out of range");
  return (occupancy_ & qubit_bit(n_modes_, mode)) != 0;
}

std::size_t FockState::particle_number() const noexcept {
  return static_cast<std::size_t>(std::popcount(occupancy_));
}

std::string FockState::str() const { return bits_to_string(occupancy_, n_modes_); }

std::string bits_to_string(std::uint64_t bits, std::size_t n) {
  std::string out(n, '0');
  for (std::size_t q = 1; q <= n; ++q) {
    if (bits & qubit_bit(n, q)) out[q - 1] = '1';
  }
  return out;
}

bool FermionTerm::is_number_conserving() const noexcept {
  const auto creators = std::count_if(ops.begin(), ops.end(), [](const LadderOp& op) { return op.dagger; });
  return 2 * static_cast<std::size_t>(creators) == ops.size();
}

FermionTerm FermionTerm::adjoint() const {
  FermionTerm out;
  out.coefficient = std::conj(coefficient);
  out.ops.reserve(ops.size());
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    out.ops.push_back(LadderOp{it->mode, !it->dagger});
  }
  return out;
}

std::string FermionTerm::str() const {
  std::ostringstream os;
  os << '(' << coefficient.real() << (coefficient.imag() < 0 ? '-' : '+')
     << std::abs(coefficient.imag()) << "i)";
  for (const auto& op : ops) os << " a" << op.mode << (op.dagger ? "^" : "");
  return os.str();
}

void FermionOperator::add_term(FermionTerm term) {
  for (const auto& op : term.ops) {
    if (op.mode < 1 || op.mode > n_modes_) {
      throw RangeError("mode " + std::to_string(op.mode) + " outside 1.." +
                       std::to_string(n_modes_));
    }
  }
  terms_.push_back(std::move(term));
}

void FermionOperator::add_one_body(std::size_t p, std::size_t q, std::complex<double> c) {
  add_term(FermionTerm{c, {{p, true}, {q, false}}});
}

void FermionOperator::add_two_body(std::size_t p, std::size_t q, std::size_t r,
                                   std::size_t s, std::complex<double> c) {
  add_term(FermionTerm{c, {{p, true}, {q, true}, {r, false}, {s, false}}});
}

FermionOperator FermionOperator::adjoint() const {
  FermionOperator out(n_modes_);
  for (const auto& t : terms_) out.terms_.push_back(t.adjoint());
  return out;
}

FermionOperator FermionOperator::hermitized() const {
  FermionOperator out = *this;
  for (const auto& t : terms_) out.terms_.push_back(t.adjoint());
  return out;
}

std::optional<std::size_t> FermionOperator::first_non_conserving_term() const {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!terms_[i].is_number_conserving()) return i;
  }
  return std::nullopt;
}

FermionOperator FermionOperator::number_operator(std::size_t n_modes) {
  FermionOperator out(n_modes);
  for (std::size_t j = 1; j <= n_modes; ++j) out.add_one_body(j, j, 1.0);
  return out;
}

FermionOperator parse_fermion_operator(std::istream& in, std::size_t n_modes) {
  struct Parsed {
    std::size_t line;
    std::vector<std::size_t> modes;
    std::complex<double> coefficient;
  };
  std::vector<Parsed> parsed;
  std::size_t max_mode = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() != 4 && tokens.size() != 6) {
      throw ParseError(line_no, "expected 4 (one-body) or 6 (two-body) fields, got " +
                                    std::to_string(tokens.size()));
    }
    Parsed p{line_no, {}, {}};
    const std::size_t n_idx = tokens.size() - 2;
    for (std::size_t i = 0; i < n_idx; ++i) {
      std::size_t pos = 0;
      long long v = 0;
      try {
        v = std::stoll(tokens[i], &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != tokens[i].size() || v < 1) {
        throw ParseError(line_no, "mode index '" + tokens[i] + "' is not a positive integer");
      }
      p.modes.push_back(static_cast<std::size_t>(v));
      max_mode = std::max(max_mode, static_cast<std::size_t>(v));
    }
    double parts[2] = {};
    for (std::size_t i = 0; i < 2; ++i) {
      const std::string& tok = tokens[n_idx + i];
      std::size_t pos = 0;
      try {
        parts[i] = std::stod(tok, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != tok.size()) throw ParseError(line_no, "coefficient '" + tok + "' is not a number");
    }
    p.coefficient = {parts[0], parts[1]};
    parsed.push_back(std::move(p));
  }

  const std::size_t modes = n_modes == 0 ? std::max<std::size_t>(max_mode, 1) : n_modes;
  FermionOperator op(modes);
  for (const auto& p : parsed) {
    for (auto m : p.modes) {
      if (m > modes) {
        throw ParseError(p.line, "mode " + std::to_string(m) + " exceeds mode count " +
                                     std::to_string(modes));
      }
    }
    if (p.modes.size() == 2) {
      op.add_one_body(p.modes[0], p.modes[1], p.coefficient);
    } else {
      op.add_two_body(p.modes[0], p.modes[1], p.modes[2], p.modes[3], p.coefficient);
    }
  }
  return op;
}

}  // namespace qperm
