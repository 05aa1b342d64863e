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

#include "qperm/circuit.hpp"

#include <algorithm>
#include <sstream>

#include "qperm/errors.hpp"
#include "qperm/pauli_string.hpp"

namespace qperm {

Gate Gate::x(std::size_t target) { return Gate{GateKind::kX, {}, target}; }

Gate Gate::cnot(std::size_t control, std::size_t target) {
  return Gate{GateKind::kCnot, {control}, target};
}

Gate Gate::toffoli(std::size_t c1, std::size_t c2, std::size_t target) {
  return Gate{GateKind::kToffoli, {c1, c2}, target};
}

Gate Gate::mcx(std::vector<std::size_t> controls, std::size_t target) {
  return Gate{GateKind::kMcx, std::move(controls), target};
}

Gate Gate::controlled_x(std::vector<std::size_t> controls, std::size_t target) {
  switch (controls.size()) {
    case 0:
      return x(target);
    case 1:
      return cnot(controls[0], target);
    case 2:
      return toffoli(controls[0], controls[1], target);
    default:
      return mcx(std::move(controls), target);
  }
}

std::uint64_t Gate::apply(std::uint64_t basis, std::size_t n_qubits) const noexcept {
  for (auto c : controls) {
    if (!(basis & qubit_bit(n_qubits, c))) return basis;
  }
  return basis ^ qubit_bit(n_qubits, target);
}

std::string Gate::str() const {
  std::ostringstream os;
  switch (kind) {
    case GateKind::kX:
      os << "X";
      break;
    case GateKind::kCnot:
      os << "CNOT";
      break;
    case GateKind::kToffoli:
      os << "TOFFOLI";
      break;
    case GateKind::kMcx:
      os << "MCX";
      break;
  }
  for (auto c : controls) os << ' ' << c;
  os << ' ' << target;
  return os.str();
}

GateCircuit::GateCircuit(std::size_t n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits > 64) throw ResourceError("circuits support at most 64 wires");
}

GateCircuit GateCircuit::from_product(std::size_t n_qubits, const std::vector<Gate>& product) {
  GateCircuit c(n_qubits);
  for (auto it = product.rbegin(); it != product.rend(); ++it) c.append(*it);
  return c;
}

void GateCircuit::append(const Gate& gate) {
  const auto expected = [&]() -> std::ptrdiff_t {
    switch (gate.kind) {
      case GateKind::kX:
        return 0;
      case GateKind::kCnot:
        return 1;
      case GateKind::kToffoli:
        return 2;
      case GateKind::kMcx:
        return -1;
    }
    return -1;
  }();
  if (expected >= 0 && gate.controls.size() != static_cast<std::size_t>(expected)) {
    throw InvalidEncodingError("gate '" + gate.str() + "' has the wrong number of controls");
  }
  const auto in_range = [&](std::size_t w) { return w >= 1 && w <= n_qubits_; };
  if (!in_range(gate.target)) {
    throw InvalidEncodingError("gate '" + gate.str() + "' targets a wire outside 1.." +
                               std::to_string(n_qubits_));
  }
  for (std::size_t i = 0; i < gate.controls.size(); ++i) {
    const auto c = gate.controls[i];
    if (!in_range(c)) {
      throw InvalidEncodingError("gate '" + gate.str() + "' has a control outside 1.." +
                                 std::to_string(n_qubits_));
    }
    if (c == gate.target) {
      throw InvalidEncodingError("gate '" + gate.str() + "' controls on its own target");
    }
    if (std::find(gate.controls.begin(), gate.controls.begin() + static_cast<std::ptrdiff_t>(i), c) !=
        gate.controls.begin() + static_cast<std::ptrdiff_t>(i)) {
      throw InvalidEncodingError("gate '" + gate.str() + "' repeats a control");
    }
  }
  gates_.push_back(gate);
}

void GateCircuit::append(const GateCircuit& other) {
  if (other.n_qubits_ != n_qubits_) throw DimensionError("circuit width mismatch");
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

std::size_t GateCircuit::count(GateKind kind) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(gates_.begin(), gates_.end(), [kind](const Gate& g) { return g.kind == kind; }));
}

std::size_t GateCircuit::nonclifford_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(gates_.begin(), gates_.end(), [](const Gate& g) { return g.is_nonclifford(); }));
}

std::uint64_t GateCircuit::apply(std::uint64_t basis) const noexcept {
  for (const auto& g : gates_) basis = g.apply(basis, n_qubits_);
  return basis;
}

GateCircuit GateCircuit::inverse() const {
  GateCircuit out(n_qubits_);
  out.gates_.assign(gates_.rbegin(), gates_.rend());
  return out;
}

GateCircuit parse_circuit(std::istream& in, std::size_t n_qubits) {
  struct Parsed {
    std::size_t line;
    Gate gate;
  };
  std::vector<Parsed> parsed;
  std::size_t max_wire = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string name;
    if (!(fields >> name)) continue;
    std::transform(name.begin(), name.end(), name.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
    std::vector<std::size_t> wires;
    for (std::string tok; fields >> tok;) {
      std::size_t pos = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != tok.size() || v < 1) {
        throw ParseError(line_no, "wire '" + tok + "' is not a positive integer");
      }
      wires.push_back(static_cast<std::size_t>(v));
      max_wire = std::max(max_wire, wires.back());
    }
    if (wires.empty()) throw ParseError(line_no, "gate '" + name + "' has no target");
    const std::size_t target = wires.back();
    wires.pop_back();
    Gate gate;
    if (name == "X" && wires.empty()) {
      gate = Gate::x(target);
    } else if ((name == "CNOT" || name == "CX") && wires.size() == 1) {
      gate = Gate::cnot(wires[0], target);
    } else if ((name == "TOFFOLI" || name == "CCX") && wires.size() == 2) {
      gate = Gate::toffoli(wires[0], wires[1], target);
    } else if (name == "MCX") {
      gate = Gate::mcx(wires, target);
    } else {
      throw ParseError(line_no, "unknown gate or wrong arity: '" + line + "'");
    }
    parsed.push_back({line_no, gate});
  }
  GateCircuit circuit(n_qubits == 0 ? max_wire : n_qubits);
  for (const auto& p : parsed) {
    try {
      circuit.append(p.gate);
    } catch (const InvalidEncodingError& e) {
      throw ParseError(p.line, e.what());
    }
  }
  return circuit;
}

std::string format_circuit(const GateCircuit& circuit) {
  std::string out;
  for (const auto& g : circuit.gates()) {
    out += g.str();
    out += '\n';
  }
  return out;
}

}  // namespace qperm
