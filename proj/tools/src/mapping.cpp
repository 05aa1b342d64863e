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

#include "mapping.hpp"

#include <fstream>
#include <sstream>

namespace qperm::cli {
namespace {

BitMatrix parse_matrix_text(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string row;
    for (char ch : line) {
      if (ch != ' ' && ch != '\t' && ch != ',' && ch != '\r') row.push_back(ch);
    }
    if (!row.empty()) rows.push_back(row);
  }
  if (rows.empty()) throw ParseError(0, "matrix file has no rows");
  return BitMatrix::from_rows(rows);
}

GateCircuit load_circuit(const std::string& path, std::size_t n_modes) {
  std::istringstream in(read_file(path));
  return parse_circuit(in, n_modes);
}

CompletionRule completion_rule(const std::string& name) {
  if (name == "increasing") return CompletionRule::kIncreasing;
  if (name == "minimal-support") return CompletionRule::kMinimalSupport;
  throw ParseError(0, "unknown completion rule '" + name + "'");
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::size_t mapping_width(const MappingOptions& opts) {
  if (opts.kind == "matrix-file") return parse_matrix_text(read_file(opts.file)).size();
  if (opts.kind == "perm-circuit" && opts.modes == 0) return load_circuit(opts.file, 0).n_qubits();
  return 0;
}

Mapping resolve_mapping(const MappingOptions& opts, std::size_t n_modes) {
  Mapping m;
  m.kind_ = opts.kind;
  m.n_modes_ = n_modes;
  if (opts.kind == "jw") {
    m.matrix_ = BitMatrix::identity(n_modes);
  } else if (opts.kind == "parity") {
    m.matrix_ = BitMatrix::prefix_sum(n_modes);
  } else if (opts.kind == "matrix-file") {
    if (opts.file.empty()) throw ParseError(0, "matrix-file mapping needs --mapping-file");
    BitMatrix matrix = parse_matrix_text(read_file(opts.file));
    if (matrix.size() != n_modes) {
      throw DimensionError("matrix is " + std::to_string(matrix.size()) + "x" +
                           std::to_string(matrix.size()) + " but the system has " +
                           std::to_string(n_modes) + " modes");
    }
    if (!matrix.is_invertible()) throw InvalidEncodingError("encoding matrix is singular over F2");
    m.matrix_ = std::move(matrix);
  } else if (opts.kind == "perm-cycles") {
    const std::string text = opts.cycles.empty() && !opts.file.empty() ? read_file(opts.file)
                                                                       : opts.cycles;
    std::string trimmed;
    for (char ch : text) {
      if (ch != '\n' && ch != '\r') trimmed.push_back(ch);
    }
    m.permutation_ = BasisPermutation::from_cycles(n_modes, parse_cycles(trimmed));
  } else if (opts.kind == "perm-circuit") {
    if (opts.file.empty()) throw ParseError(0, "perm-circuit mapping needs --mapping-file");
    m.permutation_ = permutation_from_circuit(load_circuit(opts.file, n_modes));
  } else if (opts.kind == "minimal-index-embed") {
    if (!opts.fermions) throw ParseError(0, "minimal-index-embed mapping needs --fermions");
    m.permutation_ =
        minimal_permutation_index_embed(SectorSpec(n_modes, *opts.fermions), completion_rule(opts.completion));
  } else {
    throw ParseError(0, "unknown mapping '" + opts.kind + "'");
  }
  return m;
}

BasisPermutation Mapping::permutation() const {
  if (permutation_) return *permutation_;
  return AffineMapF2(*matrix_, 0).to_permutation();
}

MajoranaSet Mapping::majoranas() const {
  if (permutation_) return permuted_majoranas(*permutation_);
  if (kind_ == "jw") return jw_majoranas(n_modes_);
  if (kind_ == "parity") return parity_majoranas(n_modes_);
  return LinearEncodingF2(*matrix_).majoranas();
}

}  // namespace qperm::cli
