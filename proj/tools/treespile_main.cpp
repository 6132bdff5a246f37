#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "treespile/cli.hpp"
#include "treespile/io.hpp"

namespace {

using treespile::json;

// Values from --config files fill in flags the user did not pass explicitly;
// explicit flags win on conflict. Both the flag spelling and the config-field
// spelling of a key are accepted.
template <typename T>
void merge_config(const CLI::Option* opt, const json& config,
                  const std::string& key, T& value,
                  const std::string& alias = "") {
  if (opt != nullptr && opt->count() > 0) return;
  if (config.contains(key)) {
    value = config.at(key).get<T>();
  } else if (!alias.empty() && config.contains(alias)) {
    value = config.at(alias).get<T>();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"PPTT fermion-to-qubit mapping optimizer and circuit compiler"};
  app.require_subcommand(1);

  // treespile
  treespile::TreespileOptions ts;
  std::string ts_mode = "cp", ts_cost = "pauli", ts_config_path;
  int ts_braiding = -1;
  auto* ts_cmd = app.add_subcommand("treespile",
                                    "Optimize a mapping for an ansatz by "
                                    "simulated annealing");
  ts_cmd->add_option("--ansatz", ts.ansatz_path, "Ansatz JSON file")->required();
  ts_cmd->add_option("--graph", ts.graph_spec,
                     "Graph spec (complete:Q|line:Q|heavy_hex:Q|grid:RxC|file:path)")
      ->required();
  auto* o_mode = ts_cmd->add_option("--mode", ts_mode, "free|cp|ncp|ms");
  auto* o_cost = ts_cmd->add_option("--cost", ts_cost, "pauli|compiled");
  auto* o_iter = ts_cmd->add_option("--iterations", ts.config.iterations,
                                    "Annealing iterations per restart");
  auto* o_temp = ts_cmd->add_option("--temp", ts.config.initial_temp,
                                    "Initial temperature (<=0: auto)");
  auto* o_cool = ts_cmd->add_option("--cooling", ts.config.cooling_factor,
                                    "Geometric cooling factor in (0,1)");
  auto* o_seed = ts_cmd->add_option("--seed", ts.config.seed, "Random seed");
  auto* o_rest = ts_cmd->add_option("--restarts", ts.config.restarts,
                                    "Independent restart chains");
  auto* o_braid = ts_cmd->add_option("--braiding", ts_braiding,
                                     "1/0 force-enable/disable braid moves");
  ts_cmd->add_option("--config", ts_config_path, "JSON config file");
  ts_cmd->add_option("--out-mapping", ts.out_mapping, "Output mapping JSON");
  ts_cmd->add_option("--out-report", ts.out_report, "Output report JSON");
  ts_cmd->add_option("--out-trace", ts.out_trace, "Output cost-trace CSV");

  // compile
  treespile::CompileOptions co;
  auto* co_cmd =
      app.add_subcommand("compile", "Compile an ansatz under a mapping to QASM");
  co_cmd->add_option("--ansatz", co.ansatz_path, "Ansatz JSON file")->required();
  co_cmd->add_option("--mapping", co.mapping_path, "Mapping JSON file")->required();
  co_cmd->add_option("--graph", co.graph_spec, "Graph spec")->required();
  co_cmd->add_option("--out-qasm", co.out_qasm, "Output QASM file");
  co_cmd->add_option("--out-report", co.out_report, "Output report JSON");
  co_cmd->add_flag("--skip-reference", co.skip_reference,
                   "Do not prepend reference-state X gates");

  // cost
  treespile::CostOptions cs;
  auto* cs_cmd = app.add_subcommand("cost", "Evaluate a mapping's CNOT cost");
  cs_cmd->add_option("--ansatz", cs.ansatz_path, "Ansatz JSON file")->required();
  cs_cmd->add_option("--mapping", cs.mapping_path, "Mapping JSON file")->required();
  cs_cmd->add_option("--graph", cs.graph_spec, "Graph spec")->required();
  cs_cmd->add_option("--kind", cs.kind, "pauli|compiled");
  cs_cmd->add_option("--connectivity", cs.connectivity, "full|limited");
  cs_cmd->add_option("--out", cs.out_report, "Output report JSON");

  // verify
  treespile::VerifyOptions vf;
  auto* vf_cmd = app.add_subcommand(
      "verify", "Run dense-oracle checks on mappings for an ansatz");
  vf_cmd->add_option("--ansatz", vf.ansatz_path, "Ansatz JSON file")->required();
  vf_cmd->add_option("--mapping", vf.mapping_paths,
                     "Mapping JSON file (repeatable)")
      ->required();
  vf_cmd->add_option("--hamiltonian", vf.hamiltonian_path,
                     "Hamiltonian JSON file (default: chain)");
  vf_cmd->add_option("--out", vf.out_report, "Output report JSON");

  // enumerate
  treespile::EnumerateOptions en;
  auto* en_cmd = app.add_subcommand(
      "enumerate", "Exhaustive mapping counts and move-graph reachability");
  en_cmd->add_option("--modes", en.n_modes, "Mode count (<= 4)")->required();
  en_cmd->add_option("--graph", en.graph_spec, "Graph spec (|V| <= 8)")->required();
  en_cmd->add_option("--task", en.task, "count|reachability");
  en_cmd->add_option("--start", en.start, "Reachability start: bonsai|jw");
  en_cmd->add_option("--out", en.out_report, "Output report JSON");

  // hardware
  treespile::HardwareOptions hw;
  auto* hw_cmd =
      app.add_subcommand("hardware", "Emit a preset connectivity graph as JSON");
  hw_cmd->add_option("--graph", hw.graph_spec, "Graph spec")->required();
  hw_cmd->add_option("--out", hw.out_path, "Output graph JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (ts_cmd->parsed()) {
      if (!ts_config_path.empty()) {
        const json config = treespile::load_json_file(ts_config_path);
        merge_config(o_mode, config, "mode", ts_mode, "search_mode");
        merge_config(o_cost, config, "cost", ts_cost, "cost_kind");
        merge_config(o_iter, config, "iterations", ts.config.iterations);
        merge_config(o_temp, config, "initial_temp", ts.config.initial_temp);
        merge_config(o_cool, config, "cooling_factor", ts.config.cooling_factor);
        merge_config(o_seed, config, "seed", ts.config.seed);
        merge_config(o_rest, config, "restarts", ts.config.restarts);
        merge_config(o_braid, config, "braiding", ts_braiding, "enable_braiding");
      }
      ts.config.search_mode = treespile::search_mode_from_string(ts_mode);
      if (ts_cost == "compiled") {
        ts.config.cost_kind = treespile::CostKind::Compiled;
      } else if (ts_cost == "pauli") {
        ts.config.cost_kind = treespile::CostKind::Pauli;
      } else {
        throw std::invalid_argument("cost must be pauli or compiled");
      }
      if (ts_braiding >= 0) {
        ts.braiding_flag_set = true;
        ts.config.enable_braiding = ts_braiding != 0;
      }
      const json report = treespile::cmd_treespile(ts);
      std::cout << "best_cost " << report.at("best_cost") << " (initial "
                << report.at("initial_cost") << ")\n";
    } else if (co_cmd->parsed()) {
      const json report = treespile::cmd_compile(co);
      std::cout << "cnots " << report.at("cnots") << " total_gates "
                << report.at("total_gates") << "\n";
    } else if (cs_cmd->parsed()) {
      const json report = treespile::cmd_cost(cs);
      std::cout << "total_cnots " << report.at("cost").at("total_cnots") << "\n";
    } else if (vf_cmd->parsed()) {
      const json report = treespile::cmd_verify(vf);
      for (const auto& check : report.at("checks")) {
        std::cout << check.at("status").get<std::string>() << " "
                  << check.at("name").get<std::string>() << "\n";
      }
      if (!report.at("all_passed").get<bool>()) return 1;
    } else if (en_cmd->parsed()) {
      const json report = treespile::cmd_enumerate(en);
      std::cout << report.at("result").dump() << "\n";
    } else if (hw_cmd->parsed()) {
      treespile::cmd_hardware(hw);
      std::cout << "wrote " << hw.out_path << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return 1;
  }
  return 0;
}
