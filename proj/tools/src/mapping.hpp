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

#include <optional>
#include <string>

#include "qperm/qperm.hpp"

namespace qperm::cli {

inline const std::vector<std::string> kMappingKinds = {
    "jw", "parity", "matrix-file", "perm-cycles", "perm-circuit", "minimal-index-embed"};

struct MappingOptions {
  std::string kind = "jw";
  std::string file;
  std::string cycles;
  std::string completion = "increasing";
  std::size_t modes = 0;
  std::optional<std::size_t> fermions;
};

/// A selected encoding, either F2-linear (closed-form Majoranas) or a basis
/// permutation applied on top of Jordan-Wigner.
class Mapping {
 public:
  const std::string& kind() const noexcept { return kind_; }
  std::size_t n_modes() const noexcept { return n_modes_; }
  BasisPermutation permutation() const;
  MajoranaSet majoranas() const;

  friend Mapping resolve_mapping(const MappingOptions& opts, std::size_t n_modes);

 private:
  std::string kind_;
  std::size_t n_modes_ = 0;
  std::optional<BitMatrix> matrix_;
  std::optional<BasisPermutation> permutation_;
};

/// Mode count fixed by a file-backed mapping (matrix or circuit), else 0.
std::size_t mapping_width(const MappingOptions& opts);

Mapping resolve_mapping(const MappingOptions& opts, std::size_t n_modes);

std::string read_file(const std::string& path);

}  // namespace qperm::cli
