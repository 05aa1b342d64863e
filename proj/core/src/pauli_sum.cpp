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

#include "qperm/pauli_sum.hpp"

#include <bit>
#include <cmath>
#include <sstream>

#include "qperm/errors.hpp"

namespace qperm {
namespace {

int letter_code(const PauliKey& k, std::uint64_t bit) {
  const bool x = (k.x & bit) != 0;
  const bool z = (k.z & bit) != 0;
  if (!x && !z) return 0;
  if (x && !z) return 1;
  if (x && z) return 2;
  return 3;
}

void require_same_size(const PauliSum& a, const PauliSum& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw DimensionError("PauliSum operands on " + std::to_string(a.n_qubits()) +
                         " and " + std::to_string(b.n_qubits()) + " qubits");
  }
}

}  // namespace

bool LetterOrder::operator()(const PauliKey& a, const PauliKey& b) const noexcept {
  const std::uint64_t diff = (a.x ^ b.x) | (a.z ^ b.z);
  if (diff == 0) return false;
  const std::uint64_t top = std::bit_floor(diff);
  return letter_code(a, top) < letter_code(b, top);
}

PauliSum::PauliSum(std::size_t n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits > kMaxPauliQubits) throw ResourceError("PauliSum supports at most 64 qubits");
}

PauliSum::PauliSum(const PauliString& p, Complex coefficient) : n_qubits_(p.n_qubits()) {
  add_term(p, coefficient);
}

void PauliSum::add_term(const PauliString& p, Complex coefficient) {
  if (p.n_qubits() != n_qubits_) {
    throw DimensionError("term on " + std::to_string(p.n_qubits()) +
                         " qubits added to a " + std::to_string(n_qubits_) + "-qubit sum");
  }
  add_term(PauliKey{p.x_bits(), p.z_bits()}, coefficient * p.phase_factor());
}

void PauliSum::add_term(PauliKey key, Complex coefficient) {
  if (((key.x | key.z) & ~low_mask(n_qubits_)) != 0) {
    throw DimensionError("Pauli key exceeds the qubit count");
  }
  auto [it, inserted] = terms_.try_emplace(key, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == Complex{0.0, 0.0}) terms_.erase(it);
  }
}

Complex PauliSum::coefficient(const PauliString& letters) const {
  const auto it = terms_.find(PauliKey{letters.x_bits(), letters.z_bits()});
  return it == terms_.end() ? Complex{} : it->second;
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  require_same_size(*this, other);
  for (const auto& [key, c] : other.terms_) add_term(key, c);
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
  require_same_size(*this, other);
  for (const auto& [key, c] : other.terms_) add_term(key, -c);
  return *this;
}

PauliSum& PauliSum::operator*=(Complex scale) {
  if (scale == Complex{}) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= scale;
  return *this;
}

PauliSum& PauliSum::simplify(double tolerance) {
  std::erase_if(terms_, [tolerance](const auto& kv) { return std::abs(kv.second) < tolerance; });
  return *this;
}

PauliSum PauliSum::adjoint() const {
  PauliSum out(n_qubits_);
  for (const auto& [key, c] : terms_) out.terms_.emplace(key, std::conj(c));
  return out;
}

bool PauliSum::is_hermitian(double tolerance) const {
  for (const auto& [key, c] : terms_) {
    if (std::abs(c.imag()) >= tolerance) return false;
  }
  return true;
}

double PauliSum::norm_squared() const {
  double total = 0.0;
  for (const auto& [key, c] : terms_) total += std::norm(c);
  return total;
}

Complex PauliSum::matrix_element(std::uint64_t row, std::uint64_t col) const {
  const std::uint64_t shift = row ^ col;
  Complex total{};
  for (const auto& [key, c] : terms_) {
    if (key.x != shift) continue;
    const int e = std::popcount(key.x & key.z) + 2 * std::popcount(key.z & col);
    total += c * i_pow(e);
  }
  return total;
}

std::size_t PauliSum::max_weight() const {
  std::size_t w = 0;
  for (const auto& [key, c] : terms_) {
    w = std::max<std::size_t>(w, std::popcount(key.x | key.z));
  }
  return w;
}

double PauliSum::mean_weight() const {
  if (terms_.empty()) return 0.0;
  double total = 0.0;
  for (const auto& [key, c] : terms_) total += std::popcount(key.x | key.z);
  return total / static_cast<double>(terms_.size());
}

std::vector<std::pair<PauliString, Complex>> PauliSum::sorted_terms() const {
  std::vector<std::pair<PauliString, Complex>> out;
  out.reserve(terms_.size());
  for (const auto& [key, c] : terms_) {
    out.emplace_back(PauliString(n_qubits_, key.x, key.z, 0), c);
  }
  return out;
}

std::string format_coefficient(Complex c) {
  std::ostringstream os;
  os << '(' << (c.real() + 0.0) << (c.imag() < 0 ? '-' : '+')
     << std::abs(c.imag()) << "i)";
  return os.str();
}

std::string PauliSum::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : sorted_terms()) {
    if (!first) os << '\n';
    first = false;
    os << format_coefficient(c) << ' ' << p.letters();
  }
  return os.str();
}

bool PauliSum::approx_equal(const PauliSum& other, double tolerance) const {
  if (n_qubits_ != other.n_qubits_) return false;
  PauliSum diff = *this;
  diff -= other;
  diff.simplify(tolerance);
  return diff.empty();
}

PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
PauliSum operator*(PauliSum a, Complex scale) { return a *= scale; }
PauliSum operator*(Complex scale, PauliSum a) { return a *= scale; }

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  require_same_size(a, b);
  const std::size_t n = a.n_qubits();
  PauliSum out(n);
  for (const auto& [ka, ca] : a.terms()) {
    const PauliString pa(n, ka.x, ka.z, 0);
    for (const auto& [kb, cb] : b.terms()) {
      const PauliString prod = multiply(pa, PauliString(n, kb.x, kb.z, 0));
      out.add_term(prod, ca * cb);
    }
  }
  return out;
}

}  // namespace qperm
