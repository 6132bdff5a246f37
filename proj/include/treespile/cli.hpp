#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <ctime>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "treespile/anneal.hpp"
#include "treespile/circuit.hpp"
#include "treespile/cost.hpp"
#include "treespile/dense.hpp"
#include "treespile/enumerate.hpp"
#include "treespile/io.hpp"
#include "treespile/mapping.hpp"

namespace treespile {

inline constexpr const char* kToolVersion = "treespile 0.1.0";

/// Reproducibility stamp embedded in every output artifact. Timestamps are
/// excluded when comparing reports for byte-identical determinism.
inline json run_manifest(const std::string& command,
                         const std::vector<std::string>& inputs,
                         const json& config, std::uint64_t seed) {
  const auto now = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(now);
  char buf[64];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&tt));
  return json{{"command", command}, {"inputs", inputs},   {"config", config},
              {"seed", seed},       {"version", kToolVersion},
              {"timestamp", buf}};
}

// ---------------------------------------------------------------------------
// treespile

struct TreespileOptions {
  std::string ansatz_path;
  std::string graph_spec;
  AnnealConfig config;
  bool braiding_flag_set = false;  // when false, braiding defaults by pool
  std::string out_mapping = "mapping.json";
  std::string out_report = "report.json";
  std::string out_trace;  // optional CSV
};

inline json cmd_treespile(const TreespileOptions& opt) {
  const AnsatzFile file = ansatz_from_json(load_json_file(opt.ansatz_path));
  const FermionicAnsatz ansatz = file.fermionic();
  const HardwareGraph g = parse_graph_spec(opt.graph_spec);

  AnnealConfig cfg = opt.config;
  if (!opt.braiding_flag_set) {
    // Braid flips leave Fermionic-pool costs unchanged, so skip them there.
    bool any_majorana = false;
    for (const auto& gen : ansatz.generators) {
      if (gen.kind == GeneratorKind::Maj2 || gen.kind == GeneratorKind::Maj4) {
        any_majorana = true;
      }
    }
    cfg.enable_braiding = any_majorana;
  }

  const AnnealResult result = treespile_anneal(ansatz, g, cfg);
  const auto mapped = map_ansatz(result.best_mapping, ansatz, g.n_vertices());
  const Connectivity conn = cfg.search_mode == SearchMode::Free
                                ? Connectivity::Full
                                : Connectivity::Limited;
  const CostBreakdown best_cost =
      cfg.cost_kind == CostKind::Compiled
          ? compiled_cost(ansatz, result.best_mapping, g)
          : pauli_cost(mapped, g, result.best_mapping, conn);

  json cfg_json{{"iterations", cfg.iterations},
                {"initial_temp", cfg.initial_temp},
                {"cooling_factor", cfg.cooling_factor},
                {"seed", cfg.seed},
                {"restarts", cfg.restarts},
                {"mode", to_string(cfg.search_mode)},
                {"cost", cfg.cost_kind == CostKind::Compiled ? "compiled" : "pauli"},
                {"braiding", cfg.enable_braiding}};
  json report{{"manifest", run_manifest("treespile", {opt.ansatz_path},
                                        cfg_json, cfg.seed)},
              {"initial_cost", result.initial_cost},
              {"best_cost", result.best_cost},
              {"best_restart", result.best_restart},
              {"accepted_moves", result.accepted_moves},
              {"cost", cost_to_json(best_cost)}};
  json mapping_json = mapping_to_json(result.best_mapping);
  mapping_json["manifest"] = report.at("manifest");
  write_json_file(opt.out_mapping, mapping_json);
  write_json_file(opt.out_report, report);
  if (!opt.out_trace.empty()) {
    std::ostringstream csv;
    csv << "iteration,cost\n";
    for (auto [it, cost] : result.cost_trace) csv << it << "," << cost << "\n";
    write_text_file(opt.out_trace, csv.str());
  }
  return report;
}

// ---------------------------------------------------------------------------
// compile

struct CompileOptions {
  std::string ansatz_path;
  std::string mapping_path;
  std::string graph_spec;
  std::string out_qasm = "circuit.qasm";
  std::string out_report = "compile_report.json";
  bool skip_reference = false;
};

inline json cmd_compile(const CompileOptions& opt) {
  const AnsatzFile file = ansatz_from_json(load_json_file(opt.ansatz_path));
  const MappingTree t = mapping_from_json(load_json_file(opt.mapping_path));
  const HardwareGraph g = parse_graph_spec(opt.graph_spec);
  if (t.n_modes() != static_cast<std::size_t>(file.n_modes)) {
    throw std::invalid_argument("compile: ansatz and mapping mode counts differ");
  }
  if (t.min_width() > g.n_vertices()) {
    throw std::invalid_argument("compile: mapping qubits exceed device size");
  }

  // Fermionic entries map through the tree; fixed qubit-space entries are
  // taken as-is on qubits [0, n_modes).
  const MajoranaAssignment assignment = pair_strings(t, g.n_vertices());
  std::vector<MappedGenerator> mapped;
  for (const auto& entry : file.entries) {
    MappedGenerator mg;
    mg.theta = entry.theta;
    if (std::holds_alternative<FermionicGenerator>(entry.op)) {
      mg.sum = map_monomials(
          assignment, expand_generator(std::get<FermionicGenerator>(entry.op),
                                       file.n_modes));
    } else {
      const PauliSum& raw = std::get<PauliSum>(entry.op);
      PauliSum padded(g.n_vertices());
      for (const auto& term : raw.terms()) {
        padded.add_term(term.coeff, pad_string(term.string, g.n_vertices()));
      }
      padded.simplify();
      mg.sum = std::move(padded);
    }
    mapped.push_back(std::move(mg));
  }

  const CompileMode mode = (file.all_fermionic() && t.is_subgraph_of(g))
                               ? CompileMode::Cp
                               : CompileMode::General;
  std::vector<std::string> warnings;
  Circuit circuit = compile_ansatz(
      mapped, t, g, mode,
      opt.skip_reference ? nullptr : &file.reference_occupations, &warnings);
  circuit = peephole_cancel(circuit);
  if (!circuit.all_cnots_on_edges(g)) {
    throw std::logic_error("compile: off-edge CNOT after cancellation");
  }

  std::vector<std::int64_t> per_generator(mapped.size(), 0);
  std::int64_t cnots = 0;
  for (const auto& gate : circuit.gates) {
    if (gate.kind != GateKind::Cnot) continue;
    ++cnots;
    if (gate.tag >= 0) ++per_generator[static_cast<std::size_t>(gate.tag)];
  }
  json report{{"manifest",
               run_manifest("compile", {opt.ansatz_path, opt.mapping_path},
                            json{{"graph", opt.graph_spec}}, 0)},
              {"cnots", cnots},
              {"total_gates", circuit.gates.size()},
              {"per_generator", per_generator},
              {"warnings", warnings}};
  write_text_file(opt.out_qasm, emit_qasm(circuit));
  write_json_file(opt.out_report, report);
  return report;
}

// ---------------------------------------------------------------------------
// cost

struct CostOptions {
  std::string ansatz_path;
  std::string mapping_path;
  std::string graph_spec;
  std::string kind = "pauli";             // pauli | compiled
  std::string connectivity = "limited";   // full | limited
  std::string out_report = "cost.json";
};

inline json cmd_cost(const CostOptions& opt) {
  const AnsatzFile file = ansatz_from_json(load_json_file(opt.ansatz_path));
  const FermionicAnsatz ansatz = file.fermionic();
  const MappingTree t = mapping_from_json(load_json_file(opt.mapping_path));
  const HardwareGraph g = parse_graph_spec(opt.graph_spec);
  CostBreakdown breakdown;
  if (opt.kind == "compiled") {
    breakdown = compiled_cost(ansatz, t, g);
  } else if (opt.kind == "pauli") {
    const auto mapped = map_ansatz(t, ansatz, g.n_vertices());
    const Connectivity conn = opt.connectivity == "full" ? Connectivity::Full
                                                         : Connectivity::Limited;
    breakdown = pauli_cost(mapped, g, t, conn);
  } else {
    throw std::invalid_argument("cost: kind must be pauli or compiled");
  }
  json report{{"manifest",
               run_manifest("cost", {opt.ansatz_path, opt.mapping_path},
                            json{{"graph", opt.graph_spec},
                                 {"kind", opt.kind},
                                 {"connectivity", opt.connectivity}},
                            0)},
              {"cost", cost_to_json(breakdown)}};
  write_json_file(opt.out_report, report);
  return report;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
  std::string ansatz_path;
  std::vector<std::string> mapping_paths;
  std::string hamiltonian_path;  // optional; default: chain Hamiltonian
  std::string out_report = "verify.json";
};

namespace detail {

/// Number-operator chain plus nearest-neighbour Majorana hopping; Hermitian
/// and deterministic, used when no Hamiltonian file is given.
inline HamiltonianSpec default_hamiltonian(int n_modes) {
  HamiltonianSpec h;
  h.n_modes = n_modes;
  for (int j = 0; j < n_modes; ++j) {
    h.terms.push_back(MajoranaMonomial({2 * j, 2 * j + 1}, {0.0, 1.0}));
  }
  for (int j = 0; j + 1 < n_modes; ++j) {
    h.terms.push_back(MajoranaMonomial({2 * j + 1, 2 * j + 2}, {0.0, 0.5}));
  }
  return h;
}

inline DenseState evolve_reference(const MappingTree& compact,
                                   const FermionicAnsatz& ansatz) {
  const std::size_t width = compact.min_width();
  const auto bits =
      occupation_to_bitstring(compact, ansatz.reference_occupations, width);
  std::size_t index = 0;
  for (std::size_t q = 0; q < bits.size(); ++q) {
    if (bits[q]) index |= std::size_t{1} << q;
  }
  DenseState state = DenseState::basis(width, index);
  for (const auto& mg : map_ansatz(compact, ansatz, width)) {
    state = apply_generator_exp(state, mg.sum, mg.theta);
  }
  return state;
}

}  // namespace detail

inline json cmd_verify(const VerifyOptions& opt) {
  const AnsatzFile file = ansatz_from_json(load_json_file(opt.ansatz_path));
  const FermionicAnsatz ansatz = file.fermionic();
  if (ansatz.n_modes > 14) {
    throw std::invalid_argument("verify: dense oracle capped at 14 modes");
  }
  std::vector<MappingTree> mappings;
  for (const auto& path : opt.mapping_paths) {
    mappings.push_back(mapping_from_json(load_json_file(path)));
  }
  if (mappings.empty()) {
    throw std::invalid_argument("verify: need at least one mapping");
  }
  HamiltonianSpec hamiltonian =
      opt.hamiltonian_path.empty()
          ? detail::default_hamiltonian(ansatz.n_modes)
          : hamiltonian_from_json(load_json_file(opt.hamiltonian_path));
  if (hamiltonian.n_modes != ansatz.n_modes) {
    throw std::invalid_argument("verify: hamiltonian mode count mismatch");
  }

  json checks = json::array();
  bool all_passed = true;
  auto record = [&](const std::string& name, bool pass, const std::string& detail) {
    checks.push_back({{"name", name}, {"status", pass ? "pass" : "fail"},
                      {"detail", detail}});
    all_passed = all_passed && pass;
  };

  std::vector<MappingTree> compacted;
  for (std::size_t mi = 0; mi < mappings.size(); ++mi) {
    const std::string label = "mapping " + std::to_string(mi);
    if (mappings[mi].n_modes() != static_cast<std::size_t>(ansatz.n_modes)) {
      throw std::invalid_argument("verify: mapping mode count mismatch");
    }
    const MappingTree compact = compact_tree(mappings[mi]);
    compacted.push_back(compact);
    const std::size_t width = compact.min_width();

    // Vacuum annihilation: every mapped annihilator kills |0...0>.
    const auto assignment = pair_strings(compact, width);
    double worst = 0.0;
    DenseState vac(width);
    for (std::size_t j = 0; j < compact.n_modes(); ++j) {
      const DenseState out = apply_sum(vac, mapped_annihilator(assignment, j));
      worst = std::max(worst, out.norm());
    }
    record("vacuum_annihilation/" + label, worst <= 1e-12,
           "max residual norm " + std::to_string(worst));

    // Occupation encoding consistent with applying mapped creators.
    const auto bits =
        occupation_to_bitstring(compact, ansatz.reference_occupations, width);
    DenseState built(width);
    for (int j = 0; j < ansatz.n_modes; ++j) {
      if (ansatz.reference_occupations[static_cast<std::size_t>(j)]) {
        built = apply_sum(built, mapped_creator(assignment,
                                                static_cast<std::size_t>(j)));
      }
    }
    std::size_t index = 0;
    for (std::size_t q = 0; q < bits.size(); ++q) {
      if (bits[q]) index |= std::size_t{1} << q;
    }
    const double amp = std::abs(built.amp[index]);
    record("occupation_consistency/" + label, std::abs(amp - 1.0) <= 1e-9,
           "basis amplitude magnitude " + std::to_string(amp));
  }

  // Energy invariance across mappings (against the JW baseline when only one
  // mapping is given).
  std::vector<MappingTree> pool = compacted;
  if (pool.size() == 1) {
    pool.push_back(jw_tree(static_cast<std::size_t>(ansatz.n_modes)));
  }
  std::vector<double> energies;
  for (const auto& m : pool) {
    const DenseState s = detail::evolve_reference(m, ansatz);
    const auto e = expectation(s, map_hamiltonian(m, hamiltonian, m.min_width()));
    energies.push_back(e.real());
  }
  double spread = 0.0;
  for (double e : energies) spread = std::max(spread, std::abs(e - energies[0]));
  record("energy_invariance", spread <= 1e-9,
         "max energy spread " + std::to_string(spread));

  // Compiled circuits match the exact exponentials (widths up to 8).
  for (std::size_t mi = 0; mi < compacted.size(); ++mi) {
    const auto& compact = compacted[mi];
    const std::size_t width = compact.min_width();
    if (width > 8) {
      record("circuit_unitary/mapping " + std::to_string(mi), true,
             "skipped: width over the 8-qubit unitary cap");
      continue;
    }
    const HardwareGraph full = complete_graph(width);
    double worst = 0.0;
    for (const auto& mg : map_ansatz(compact, ansatz, width)) {
      const double theta = std::abs(mg.theta) > 1e-12 ? mg.theta : 0.3741;
      Circuit circuit(width);
      for (const auto& term : mg.sum.terms()) {
        if (term.string.is_identity_letters()) continue;
        std::vector<std::uint32_t> terminals;
        for (std::size_t q : term.string.support()) {
          terminals.push_back(static_cast<std::uint32_t>(q));
        }
        const auto st = steiner_pptt(full, terminals);
        circuit.append(compile_pauli_exp(term.string, theta * term.coeff.imag(),
                                         full, st));
      }
      MappedGenerator probe{theta, mg.sum};
      const double d = phase_insensitive_distance(
          circuit_unitary(circuit), generator_exponential(probe.sum, theta));
      worst = std::max(worst, d);
    }
    record("circuit_unitary/mapping " + std::to_string(mi), worst <= 1e-9,
           "max unitary distance " + std::to_string(worst));
  }

  json report{{"manifest",
               run_manifest("verify", opt.mapping_paths, json::object(), 0)},
              {"checks", checks},
              {"all_passed", all_passed}};
  report["manifest"]["inputs"].push_back(opt.ansatz_path);
  write_json_file(opt.out_report, report);
  return report;
}

// ---------------------------------------------------------------------------
// enumerate

struct EnumerateOptions {
  int n_modes = 2;
  std::string graph_spec;
  std::string task = "count";  // count | reachability
  std::string start = "bonsai";  // reachability start: bonsai | jw
  std::string out_report = "enumerate.json";
};

inline json cmd_enumerate(const EnumerateOptions& opt) {
  const HardwareGraph g = parse_graph_spec(opt.graph_spec);
  if (opt.n_modes < 1 || opt.n_modes > 4 || g.n_vertices() > 8) {
    throw std::invalid_argument("enumerate: limits are n_modes <= 4, |V| <= 8");
  }
  json payload;
  if (opt.task == "count") {
    const auto counts = count_mappings(g, static_cast<std::size_t>(opt.n_modes));
    payload = json{{"structures", counts.structures},
                   {"count", counts.mappings},
                   {"bound_complete", counts.bound_complete},
                   {"bound_bounded_degree", counts.bound_bounded_degree},
                   {"within_bound", counts.mappings <= counts.bound_complete}};
  } else if (opt.task == "reachability") {
    const MappingTree start =
        opt.start == "jw" ? jw_tree(static_cast<std::size_t>(opt.n_modes))
                          : bonsai_tree(g, static_cast<std::size_t>(opt.n_modes));
    const auto report =
        reachability(g, static_cast<std::size_t>(opt.n_modes), start);
    payload = json{{"enumerated", report.enumerated},
                   {"reached", report.reached},
                   {"fraction", report.fraction},
                   {"start", opt.start}};
  } else {
    throw std::invalid_argument("enumerate: task must be count or reachability");
  }
  json report{{"manifest", run_manifest("enumerate", {},
                                        json{{"graph", opt.graph_spec},
                                             {"n_modes", opt.n_modes},
                                             {"task", opt.task}},
                                        0)},
              {"result", payload}};
  write_json_file(opt.out_report, report);
  return report;
}

// ---------------------------------------------------------------------------
// hardware

struct HardwareOptions {
  std::string graph_spec;
  std::string out_path = "graph.json";
};

inline json cmd_hardware(const HardwareOptions& opt) {
  const HardwareGraph g = parse_graph_spec(opt.graph_spec);
  json j = graph_to_json(g);
  j["manifest"] = run_manifest("hardware", {}, json{{"graph", opt.graph_spec}}, 0);
  write_json_file(opt.out_path, j);
  return j;
}

}  // namespace treespile
