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
#include <stdexcept>
#include <string>

namespace qperm {

// Operand sizes disagree (qubit counts, matrix shapes, mode counts).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A desk-scale cap (dense qubits, permutation qubits, enumeration size) was exceeded.
class ResourceError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// An index (qubit, mode, basis state, rank) lies outside its valid range.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Singular matrices, non-bijective maps, malformed gates and cycles.
class InvalidEncodingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised for fermion terms whose creation and annihilation counts differ.
class NonConservingTermError : public std::invalid_argument {
 public:
  NonConservingTermError(std::size_t term_index, const std::string& term)
      : std::invalid_argument("term " + std::to_string(term_index) +
                              " is not number-conserving: " + term),
        term_index_(term_index) {}
  std::size_t term_index() const noexcept { return term_index_; }

 private:
  std::size_t term_index_;
};

// Text input errors; line is 1-based, 0 when not attributable to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace qperm
