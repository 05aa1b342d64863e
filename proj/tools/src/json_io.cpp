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

#include "qperm_cli/json_io.hpp"

#include <cmath>

#include "qperm/errors.hpp"
#include "qperm/fermion.hpp"

namespace qperm::cli {

Json pauli_sum_to_json(const PauliSum& s) {
  Json terms = Json::array();
  for (const auto& [p, c] : s.sorted_terms()) {
    terms.push_back({{"pauli", p.letters()}, {"re", c.real() + 0.0}, {"im", c.imag() + 0.0}});
  }
  return Json{{"n_qubits", s.n_qubits()}, {"terms", std::move(terms)}};
}

PauliSum pauli_sum_from_json(const Json& doc) {
  const Json& body = doc.contains("hamiltonian") ? doc.at("hamiltonian") : doc;
  try {
    const auto n = body.at("n_qubits").get<std::size_t>();
    PauliSum out(n);
    for (const auto& t : body.at("terms")) {
      const auto letters = t.at("pauli").get<std::string>();
      if (letters.size() != n) {
        throw ParseError(0, "term '" + letters + "' does not have " + std::to_string(n) + " letters");
      }
      out.add_term(PauliString::from_letters(letters),
                   Complex(t.at("re").get<double>(), t.value("im", 0.0)));
    }
    return out;
  } catch (const Json::exception& e) {
    throw ParseError(0, std::string("malformed Pauli sum JSON: ") + e.what());
  }
}

Json reduce_to_json(const ReducedHamiltonian& rh, const VerificationReport& report) {
  Json fixed = Json::array();
  for (const auto& f : rh.redundancy.fixed) fixed.push_back(Json::array({f.qubit, f.value}));
  Json state_map = Json::array();
  for (std::size_t r = 0; r < rh.state_map.size(); ++r) {
    state_map.push_back({{"rank", r}, {"bits", bits_to_string(rh.state_map[r], rh.n_qubits())}});
  }
  Json verify{{"max_deviation", report.max_deviation}, {"passed", report.passed}};
  if (std::isnan(report.spectrum_deviation)) {
    verify["spectrum_deviation"] = nullptr;
  } else {
    verify["spectrum_deviation"] = report.spectrum_deviation;
  }
  verify["tolerance"] = report.tolerance;
  Json doc{{"spec",
            {{"N", rh.spec.n_modes()}, {"K", rh.spec.n_fermions()}, {"q_min", rh.spec.q_min()}}},
           {"fixed_qubits", std::move(fixed)},
           {"hamiltonian", pauli_sum_to_json(rh.hamiltonian)},
           {"state_map", std::move(state_map)},
           {"verify", std::move(verify)},
           {"affine", rh.affine}};
  if (rh.fixed_qubits_diagonal) doc["fixed_qubits_diagonal"] = *rh.fixed_qubits_diagonal;
  return doc;
}

}  // namespace qperm::cli
