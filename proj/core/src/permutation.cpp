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

#include "qperm/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "qperm/errors.hpp"

namespace qperm {
namespace {

void check_width(std::size_t n) {
  if (n > kPermutationQubitCap) {
    throw ResourceError("basis permutations are capped at " +
                        std::to_string(kPermutationQubitCap) + " qubits");
  }
}

}  // namespace

BasisPermutation BasisPermutation::identity(std::size_t n_qubits) {
  check_width(n_qubits);
  BasisPermutation p;
  p.n_qubits_ = n_qubits;
  p.images_.resize(std::size_t{1} << n_qubits);
  std::iota(p.images_.begin(), p.images_.end(), 0u);
  return p;
}

BasisPermutation BasisPermutation::from_images(std::size_t n_qubits,
                                               std::vector<std::uint32_t> images) {
  check_width(n_qubits);
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (images.size() != dim) {
    throw DimensionError("expected " + std::to_string(dim) + " images, got " +
                         std::to_string(images.size()));
  }
  std::vector<bool> hit(dim, false);
  for (auto v : images) {
    if (v >= dim || hit[v]) throw InvalidEncodingError("image list is not a bijection");
    hit[v] = true;
  }
  BasisPermutation p;
  p.n_qubits_ = n_qubits;
  p.images_ = std::move(images);
  return p;
}

BasisPermutation BasisPermutation::from_cycles(std::size_t n_qubits,
                                               const std::vector<Cycle>& cycles) {
  BasisPermutation p = identity(n_qubits);
  std::vector<bool> seen(p.images_.size(), false);
  for (const auto& cycle : cycles) {
    for (auto v : cycle) {
      if (v >= p.images_.size()) {
        throw RangeError("cycle entry " + std::to_string(v) + " outside 0.." +
                         std::to_string(p.images_.size() - 1));
      }
      if (seen[v]) throw InvalidEncodingError("cycle entry " + std::to_string(v) + " repeated");
      seen[v] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      p.images_[cycle[i]] = static_cast<std::uint32_t>(cycle[(i + 1) % cycle.size()]);
    }
  }
  return p;
}

std::uint64_t BasisPermutation::apply(std::uint64_t basis) const {
  if (basis >= images_.size()) throw RangeError("basis index out of range");
  return images_[basis];
}

BasisPermutation BasisPermutation::inverse() const {
  BasisPermutation inv;
  inv.n_qubits_ = n_qubits_;
  inv.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv.images_[images_[i]] = static_cast<std::uint32_t>(i);
  }
  return inv;
}

bool BasisPermutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::vector<Cycle> BasisPermutation::to_cycles() const {
  std::vector<Cycle> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    Cycle c;
    for (std::uint64_t v = start; !seen[v]; v = images_[v]) {
      seen[v] = true;
      c.push_back(v);
    }
    out.push_back(std::move(c));
  }
  return out;
}

BasisPermutation compose(const BasisPermutation& outer, const BasisPermutation& inner) {
  if (outer.n_qubits() != inner.n_qubits()) {
    throw DimensionError("composing permutations on different qubit counts");
  }
  std::vector<std::uint32_t> images(inner.images().size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    images[i] = outer.images()[inner.images()[i]];
  }
  return BasisPermutation::from_images(outer.n_qubits(), std::move(images));
}

BasisPermutation permutation_from_circuit(const GateCircuit& circuit) {
  check_width(circuit.n_qubits());
  std::vector<std::uint32_t> images(std::size_t{1} << circuit.n_qubits());
  for (std::size_t i = 0; i < images.size(); ++i) {
    images[i] = static_cast<std::uint32_t>(circuit.apply(i));
  }
  return BasisPermutation::from_images(circuit.n_qubits(), std::move(images));
}

std::vector<Cycle> parse_cycles(std::string_view text) {
  std::vector<Cycle> out;
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError(0, "expected '(' at offset " + std::to_string(i));
    ++i;
    Cycle c;
    for (;;) {
      skip_ws();
      const std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw ParseError(0, "expected a state index at offset " + std::to_string(i));
      c.push_back(std::stoull(std::string(text.substr(start, i - start))));
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      throw ParseError(0, "expected ',' or ')' at offset " + std::to_string(i));
    }
    out.push_back(std::move(c));
    skip_ws();
  }
  return out;
}

std::string format_cycles(const std::vector<Cycle>& cycles) {
  std::string out;
  for (const auto& c : cycles) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

}  // namespace qperm
