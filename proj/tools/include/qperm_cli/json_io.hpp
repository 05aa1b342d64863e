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

#include <nlohmann/json.hpp>

#include "qperm/pauli_sum.hpp"
#include "qperm/reduce.hpp"

namespace qperm::cli {

using Json = nlohmann::ordered_json;

/// {"n_qubits": n, "terms": [{"pauli": "XIZX", "re": ..., "im": ...}, ...]}
/// with terms in lexicographic letter order.
Json pauli_sum_to_json(const PauliSum& s);

/// Inverse of pauli_sum_to_json; also accepts the "hamiltonian" member of a
/// reduce document. Throws ParseError on malformed input.
PauliSum pauli_sum_from_json(const Json& doc);

Json reduce_to_json(const ReducedHamiltonian& rh, const VerificationReport& report);

}  // namespace qperm::cli
