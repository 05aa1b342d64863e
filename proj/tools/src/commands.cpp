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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "mapping.hpp"
#include "qperm_cli/cli.hpp"
#include "qperm_cli/json_io.hpp"

namespace qperm::cli {
namespace {

// Raised when a verification suite finds a counterexample.
class VerifyFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  MappingOptions mapping;
  std::string hamiltonian;
  std::string input;
  std::string output;
  bool hermitize = false;
  std::optional<double> tolerance;
  std::optional<double> prune_tolerance;
  bool synthesize = false;
  bool lower = false;
  std::string circuit_out;
  std::vector<std::size_t> appendix_n;
  bool extended = false;
  std::size_t trials = 20;
  std::uint64_t seed = 1;
};

double oracle_tolerance(const Config& cfg) { return cfg.tolerance.value_or(kOracleTolerance); }
double prune_tolerance(const Config& cfg) { return cfg.prune_tolerance.value_or(kPruneTolerance); }

Json overrides(const Config& cfg) {
  Json o = Json::object();
  if (cfg.tolerance) o["tolerance"] = *cfg.tolerance;
  if (cfg.prune_tolerance) o["prune_tolerance"] = *cfg.prune_tolerance;
  return o;
}

void emit(const Config& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output);
  if (!file) throw ParseError(0, "cannot write '" + cfg.output + "'");
  file << text;
}

FermionOperator load_hamiltonian(const Config& cfg, std::size_t n_modes) {
  if (cfg.hamiltonian.empty()) throw ParseError(0, "--hamiltonian is required");
  std::istringstream in(read_file(cfg.hamiltonian));
  FermionOperator h = parse_fermion_operator(in, n_modes);
  return cfg.hermitize ? h.hermitized() : h;
}

// Hamiltonian plus the mapping resolved on its mode count.
std::pair<FermionOperator, Mapping> load_problem(const Config& cfg) {
  std::size_t n = cfg.mapping.modes;
  if (const std::size_t w = mapping_width(cfg.mapping); w != 0) {
    if (n != 0 && n != w) {
      throw DimensionError("--modes " + std::to_string(n) + " disagrees with the " +
                           std::to_string(w) + "-mode mapping file");
    }
    n = w;
  }
  FermionOperator h = load_hamiltonian(cfg, n);
  if (n == 0 && cfg.mapping.fermions) n = std::max(h.n_modes(), *cfg.mapping.fermions);
  if (n > h.n_modes()) {
    FermionOperator widened(n);
    for (const auto& t : h.terms()) widened.add_term(t);
    h = std::move(widened);
  }
  return {h, resolve_mapping(cfg.mapping, h.n_modes())};
}

Json stats_json(const PauliSum& s) {
  return Json{{"terms", s.size()}, {"max_weight", s.max_weight()}, {"mean_weight", s.mean_weight()}};
}

std::string fixed_list(const std::vector<FixedQubit>& fixed) {
  if (fixed.empty()) return "none";
  std::ostringstream os;
  for (std::size_t i = 0; i < fixed.size(); ++i) {
    os << (i ? ", " : "") << "qubit " << fixed[i].qubit << " = " << fixed[i].value;
  }
  return os.str();
}

FermionOperator random_hermitian_one_body(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  FermionOperator h(n);
  for (std::size_t p = 1; p <= n; ++p) {
    h.add_one_body(p, p, gauss(rng));
    for (std::size_t q = p + 1; q <= n; ++q) {
      const Complex c(gauss(rng), gauss(rng));
      h.add_one_body(p, q, c);
      h.add_one_body(q, p, std::conj(c));
    }
  }
  return h;
}

int cmd_encode(const Config& cfg, std::ostream& out) {
  const auto [h, mapping] = load_problem(cfg);
  const PauliSum encoded = encode_fermion_operator(h, mapping.majoranas(), prune_tolerance(cfg));
  Json doc = pauli_sum_to_json(encoded);
  doc["stats"] = stats_json(encoded);
  doc["mapping"] = mapping.kind();
  if (auto o = overrides(cfg); !o.empty()) doc["overrides"] = o;
  emit(cfg, out, doc.dump(2) + "\n");
  return kExitOk;
}

int cmd_reduce(const Config& cfg, std::ostream& out) {
  const auto [h, mapping] = load_problem(cfg);
  const SectorSpec spec(h.n_modes(), *cfg.mapping.fermions);
  const ReducedHamiltonian rh = encode_and_reduce(h, mapping.permutation(), spec);
  const VerificationReport report = verify_reduction(rh, sector_oracle(h, spec), oracle_tolerance(cfg));
  Json doc = reduce_to_json(rh, report);
  if (auto o = overrides(cfg); !o.empty()) doc["overrides"] = o;
  emit(cfg, out, doc.dump(2) + "\n");
  return report.passed ? kExitOk : kExitVerifyFailed;
}

int cmd_stats(const Config& cfg, std::ostream& out) {
  PauliSum s;
  if (!cfg.input.empty()) {
    Json doc;
    try {
      doc = Json::parse(read_file(cfg.input));
    } catch (const Json::parse_error& e) {
      throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
    s = pauli_sum_from_json(doc);
  } else {
    const auto [h, mapping] = load_problem(cfg);
    s = encode_fermion_operator(h, mapping.majoranas(), prune_tolerance(cfg));
  }
  std::ostringstream os;
  os << "n_qubits: " << s.n_qubits() << "\n"
     << "terms: " << s.size() << "\n"
     << "max_weight: " << s.max_weight() << "\n"
     << "mean_weight: " << s.mean_weight() << "\n"
     << "hermitian: " << (s.is_hermitian() ? "yes" : "no") << "\n";
  emit(cfg, out, os.str());
  return kExitOk;
}

int cmd_costs(const Config& cfg, std::ostream& out) {
  if (cfg.mapping.modes == 0) throw ParseError(0, "--modes must be at least 1");
  std::ostringstream os;
  os << "K,parity,minimal,first_quantized\n";
  for (const auto& row : qubit_costs(cfg.mapping.modes)) {
    os << row.n_fermions << ',' << row.parity << ',' << row.minimal << ',' << row.first_quantized
       << '\n';
  }
  emit(cfg, out, os.str());
  return kExitOk;
}

int cmd_perm(const Config& cfg, std::ostream& out) {
  std::size_t n = cfg.mapping.modes;
  if (const std::size_t w = mapping_width(cfg.mapping); w != 0) {
    if (n != 0 && n != w) throw DimensionError("--modes disagrees with the mapping file");
    n = w;
  }
  if (n == 0) throw ParseError(0, "--modes is required for this mapping");
  const Mapping mapping = resolve_mapping(cfg.mapping, n);
  const BasisPermutation p = mapping.permutation();
  std::ostringstream os;
  os << "n_qubits: " << n << "\n";
  const auto cycles = p.to_cycles();
  os << "cycles: " << (cycles.empty() ? "identity" : format_cycles(cycles)) << "\n";
  const auto affine = classify_affine(p);
  os << "affine: " << (affine ? "yes" : "no") << "\n";
  std::optional<SectorSpec> spec;
  if (cfg.mapping.fermions) {
    spec.emplace(n, *cfg.mapping.fermions);
    os << "sector: N=" << n << " K=" << spec->n_fermions() << " dimension=" << spec->dimension()
       << " q_min=" << spec->q_min() << "\n";
    for (auto s : sector_states(*spec)) {
      os << "  " << bits_to_string(s, n) << " -> " << bits_to_string(p(s), n) << "\n";
    }
    const auto report = redundant_qubits(p, *spec);
    os << "redundant: " << fixed_list(report.fixed) << "\n";
    os << "injective on surviving qubits: " << (report.injective_on_surviving ? "yes" : "no")
       << "\n";
  }
  if (cfg.synthesize) {
    const SynthesisReport synth = synthesize_permutation(p, spec);
    const auto& c = synth.counts;
    os << "synthesis: " << c.total << " gates (x " << c.x << ", cnot " << c.cnot << ", toffoli "
       << c.toffoli << ", mcx " << c.mcx << "), t = " << c.nonclifford << ", transpositions "
       << synth.transpositions << (synth.affine_fast_path ? ", affine fast path" : "") << "\n";
    GateCircuit circuit = synth.circuit;
    if (cfg.lower) {
      const LoweredCircuit lowered = lower_mcx(synth.circuit);
      os << "lowered: " << lowered.circuit.size() << " gates on " << lowered.n_data << " data + "
         << lowered.n_ancilla << " ancilla qubits, toffoli "
         << lowered.circuit.count(GateKind::kToffoli) << "\n";
      circuit = lowered.circuit;
    }
    if (!cfg.circuit_out.empty()) {
      std::ofstream file(cfg.circuit_out);
      if (!file) throw ParseError(0, "cannot write '" + cfg.circuit_out + "'");
      file << format_circuit(circuit);
    } else {
      os << "circuit:\n" << format_circuit(circuit);
    }
  }
  emit(cfg, out, os.str());
  return kExitOk;
}

// Every Majorana squares to the identity and distinct ones anticommute.
std::size_t check_majoranas(const std::string& label, const MajoranaSet& set) {
  std::vector<std::string> names;
  std::vector<const PauliSum*> ops;
  for (std::size_t j = 1; j <= set.n_modes(); ++j) {
    names.push_back("gamma_" + std::to_string(j));
    ops.push_back(&set.get(j, false));
    names.push_back("gamma'_" + std::to_string(j));
    ops.push_back(&set.get(j, true));
  }
  const bool strings = std::all_of(ops.begin(), ops.end(), [](const PauliSum* s) { return s->size() == 1; });
  std::size_t checks = 0;
  if (strings) {
    const PauliSum id(PauliString(set.n_qubits()));
    for (std::size_t a = 0; a < ops.size(); ++a) {
      for (std::size_t b = a; b < ops.size(); ++b) {
        const PauliSum anti = simplify(*ops[a] * *ops[b] + *ops[b] * *ops[a]);
        const bool ok = a == b ? anti.approx_equal(id * Complex(2.0)) : anti.empty();
        if (!ok) throw VerifyFailure(label + ": " + names[a] + " and " + names[b] + " violate the algebra");
        ++checks;
      }
    }
    return checks;
  }
  std::vector<DenseMatrix> dense;
  for (const auto* s : ops) dense.push_back(to_dense(*s));
  const auto dim = dense.front().rows();
  for (std::size_t a = 0; a < dense.size(); ++a) {
    for (std::size_t b = a; b < dense.size(); ++b) {
      DenseMatrix anti = dense[a] * dense[b] + dense[b] * dense[a];
      if (a == b) anti -= 2.0 * DenseMatrix::Identity(dim, dim);
      const double dev = anti.cwiseAbs().maxCoeff();
      if (dev > kPruneTolerance) {
        std::ostringstream os;
        os << label << ": " << names[a] << " and " << names[b] << " deviate by " << dev;
        throw VerifyFailure(os.str());
      }
      ++checks;
    }
  }
  return checks;
}

int cmd_verify_anticommutation(const Config& cfg, std::ostream& out, bool mapping_given) {
  std::ostringstream os;
  std::size_t total = 0;
  const auto line = [&](const std::string& label, const MajoranaSet& set) {
    const std::size_t checks = check_majoranas(label, set);
    total += checks;
    os << label << ": " << checks << " checks passed\n";
  };
  const std::size_t top = cfg.mapping.modes == 0 ? 6 : cfg.mapping.modes;
  if (mapping_given) {
    std::size_t lo = cfg.mapping.modes == 0 ? 1 : top;
    if (const std::size_t w = mapping_width(cfg.mapping); w != 0) lo = w;
    const std::size_t hi = std::max(lo, mapping_width(cfg.mapping) != 0 ? lo : top);
    for (std::size_t n = lo; n <= hi; ++n) {
      line(cfg.mapping.kind + " N=" + std::to_string(n), resolve_mapping(cfg.mapping, n).majoranas());
    }
  } else {
    for (std::size_t n = 1; n <= top; ++n) {
      line("jw N=" + std::to_string(n), jw_majoranas(n));
      line("parity N=" + std::to_string(n), parity_majoranas(n));
      for (std::size_t k = 0; k <= n; ++k) {
        MappingOptions embed;
        embed.kind = "minimal-index-embed";
        embed.fermions = k;
        line("minimal-index-embed N=" + std::to_string(n) + " K=" + std::to_string(k),
             resolve_mapping(embed, n).majoranas());
      }
    }
  }
  os << "all " << total << " checks passed\n";
  emit(cfg, out, os.str());
  return kExitOk;
}

int cmd_verify_appendix(const Config& cfg, std::ostream& out) {
  std::vector<std::size_t> sizes = cfg.appendix_n;
  if (sizes.empty()) sizes = {2, 3, 4};
  std::ostringstream os;
  bool ok = true;
  for (auto n : sizes) {
    const AppendixReport r = appendix_verify(n, cfg.extended);
    os << "n=" << n << ": " << r.invertible_count << " matrices, max constant digits "
       << r.max_constant_digits << "\n";
    if (!r.bound_holds) ok = false;
  }
  emit(cfg, out, os.str());
  if (!ok) throw VerifyFailure("constant-digit bound exceeded");
  return kExitOk;
}

int cmd_verify_oracle(const Config& cfg, std::ostream& out) {
  if (cfg.mapping.modes == 0) throw ParseError(0, "--modes is required");
  if (!cfg.mapping.fermions) throw ParseError(0, "--fermions is required");
  const SectorSpec spec(cfg.mapping.modes, *cfg.mapping.fermions);
  std::mt19937_64 rng(cfg.seed);
  double worst = 0.0;
  std::size_t passed = 0;
  std::optional<std::string> first_failure;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const FermionOperator h = random_hermitian_one_body(spec.n_modes(), rng);
    const BasisPermutation p = t % 2 == 0 ? minimal_permutation_index_embed(spec)
                                          : random_minimal_permutation(spec, rng);
    const auto rh = encode_and_reduce(h, p, spec);
    const auto report = verify_reduction(rh, sector_oracle(h, spec), oracle_tolerance(cfg));
    worst = std::max(worst, report.max_deviation);
    if (report.passed && rh.n_qubits() == spec.q_min()) {
      ++passed;
    } else if (!first_failure) {
      std::ostringstream os;
      os << "trial " << t << ": deviation " << report.max_deviation << ", " << rh.n_qubits()
         << " qubits";
      first_failure = os.str();
    }
  }
  std::ostringstream os;
  os << "oracle N=" << spec.n_modes() << " K=" << spec.n_fermions() << " q_min=" << spec.q_min()
     << ": " << passed << "/" << cfg.trials << " trials passed, max deviation " << worst << "\n";
  emit(cfg, out, os.str());
  if (first_failure) throw VerifyFailure(*first_failure);
  return kExitOk;
}

void add_mapping_options(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--mapping", cfg.mapping.kind, "Encoding selector")
      ->check(CLI::IsMember(kMappingKinds));
  cmd->add_option("--mapping-file", cfg.mapping.file, "Matrix, cycle or circuit file for the mapping");
  cmd->add_option("--cycles", cfg.mapping.cycles, "Cycle notation for perm-cycles, e.g. (0,2)(1,12)");
  cmd->add_option("--completion", cfg.mapping.completion,
                  "Completion of non-sector states for minimal-index-embed")
      ->check(CLI::IsMember({"increasing", "minimal-support"}));
  cmd->add_option("--modes,-N", cfg.mapping.modes, "Number of fermionic modes");
}

void add_output(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--output,-o", cfg.output, "Write to a file instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Permutation-based fermion-to-qubit encodings", "qperm"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "qperm 0.1.0");

  auto* encode = app.add_subcommand("encode", "Encode a fermionic Hamiltonian as a Pauli sum");
  add_mapping_options(encode, cfg);
  add_output(encode, cfg);
  encode->add_option("--hamiltonian,-H", cfg.hamiltonian, "Hamiltonian text file")->required();
  encode->add_option("--fermions,-K", cfg.mapping.fermions, "Particle number (minimal-index-embed)");
  encode->add_flag("--hermitize", cfg.hermitize, "Add the conjugate transpose of every term");
  encode->add_option("--prune-tolerance", cfg.prune_tolerance, "Coefficient pruning tolerance");

  auto* reduce = app.add_subcommand("reduce", "Encode, drop redundant qubits, verify against the sector oracle");
  add_mapping_options(reduce, cfg);
  add_output(reduce, cfg);
  reduce->add_option("--hamiltonian,-H", cfg.hamiltonian, "Hamiltonian text file")->required();
  reduce->add_option("--fermions,-K", cfg.mapping.fermions, "Particle number")->required();
  reduce->add_flag("--hermitize", cfg.hermitize, "Add the conjugate transpose of every term");
  reduce->add_option("--tolerance", cfg.tolerance, "Oracle comparison tolerance");

  auto* perm = app.add_subcommand("perm", "Inspect, classify and synthesize a basis permutation");
  add_mapping_options(perm, cfg);
  add_output(perm, cfg);
  perm->add_option("--fermions,-K", cfg.mapping.fermions, "Particle number for the redundancy report");
  perm->add_flag("--synthesize", cfg.synthesize, "Print a reversible circuit with gate counts");
  perm->add_flag("--lower-mcx", cfg.lower, "Expand MCX gates into Toffolis with clean ancillas");
  perm->add_option("--circuit-out", cfg.circuit_out, "Write the circuit to a file");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->require_subcommand(1);
  auto* anti = verify->add_subcommand("anticommutation", "Majorana algebra for the encodings");
  add_mapping_options(anti, cfg);
  add_output(anti, cfg);
  anti->add_option("--fermions,-K", cfg.mapping.fermions, "Particle number (minimal-index-embed)");
  auto* appendix = verify->add_subcommand("appendix", "Constant-digit bound over all invertible matrices");
  add_output(appendix, cfg);
  appendix->add_option("--n", cfg.appendix_n, "Matrix sizes (default 2 3 4)")
      ->check(CLI::Range(2, 5));
  appendix->add_flag("--extended", cfg.extended, "Allow n = 5");
  auto* oracle = verify->add_subcommand("oracle", "Random Hamiltonian reductions against the sector oracle");
  add_output(oracle, cfg);
  oracle->add_option("--modes,-N", cfg.mapping.modes, "Number of modes")->required();
  oracle->add_option("--fermions,-K", cfg.mapping.fermions, "Particle number")->required();
  oracle->add_option("--trials", cfg.trials, "Number of random Hamiltonians");
  oracle->add_option("--seed", cfg.seed, "Random seed");
  oracle->add_option("--tolerance", cfg.tolerance, "Oracle comparison tolerance");

  auto* costs = app.add_subcommand("costs", "Qubit-cost table as CSV");
  add_output(costs, cfg);
  costs->add_option("--modes,-N", cfg.mapping.modes, "Number of modes")->required();

  auto* stats = app.add_subcommand("stats", "Term count and Pauli weights");
  add_mapping_options(stats, cfg);
  add_output(stats, cfg);
  stats->add_option("--input,-i", cfg.input, "Pauli sum JSON (encode or reduce output)");
  stats->add_option("--hamiltonian,-H", cfg.hamiltonian, "Hamiltonian text file to encode first");
  stats->add_option("--fermions,-K", cfg.mapping.fermions, "Particle number (minimal-index-embed)");
  stats->add_flag("--hermitize", cfg.hermitize, "Add the conjugate transpose of every term");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*encode) return cmd_encode(cfg, out);
    if (*reduce) return cmd_reduce(cfg, out);
    if (*perm) return cmd_perm(cfg, out);
    if (*costs) return cmd_costs(cfg, out);
    if (*stats) return cmd_stats(cfg, out);
    if (*anti) return cmd_verify_anticommutation(cfg, out, anti->count("--mapping") > 0);
    if (*appendix) return cmd_verify_appendix(cfg, out);
    if (*oracle) return cmd_verify_oracle(cfg, out);
  } catch (const VerifyFailure& e) {
    err << "verification failed: " << e.what() << "\n";
    return kExitVerifyFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qperm::cli
