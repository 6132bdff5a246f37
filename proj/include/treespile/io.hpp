#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "treespile/anneal.hpp"
#include "treespile/cost.hpp"
#include "treespile/fermion.hpp"
#include "treespile/graph.hpp"
#include "treespile/mapping.hpp"

namespace treespile {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Graphs: {"n": Q, "edges": [[a,b], ...]}

inline json graph_to_json(const HardwareGraph& g) {
  json edges = json::array();
  for (auto [a, b] : g.edges()) edges.push_back({a, b});
  return json{{"n", g.n_vertices()}, {"edges", edges}};
}

inline HardwareGraph graph_from_json(const json& j) {
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    edges.push_back({e.at(0).get<std::uint32_t>(), e.at(1).get<std::uint32_t>()});
  }
  return HardwareGraph(j.at("n").get<std::size_t>(), std::move(edges));
}

/// Grammar: "complete:Q" | "line:Q" | "heavy_hex:Q" | "grid:RxC" | "file:path".
inline HardwareGraph parse_graph_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("graph spec: expected name:args, got " + spec);
  }
  const std::string name = spec.substr(0, colon);
  const std::string args = spec.substr(colon + 1);
  auto parse_size = [&](const std::string& s) {
    const long v = std::stol(s);
    if (v <= 0) throw std::invalid_argument("graph spec: size must be positive");
    return static_cast<std::size_t>(v);
  };
  if (name == "complete") return complete_graph(parse_size(args));
  if (name == "line") return line_graph(parse_size(args));
  if (name == "heavy_hex") return heavy_hex_graph(parse_size(args));
  if (name == "grid") {
    const auto x = args.find('x');
    if (x == std::string::npos) {
      throw std::invalid_argument("graph spec: grid wants RxC");
    }
    return grid_graph(parse_size(args.substr(0, x)),
                      parse_size(args.substr(x + 1)));
  }
  if (name == "file") {
    std::ifstream in(args);
    if (!in) throw std::invalid_argument("graph spec: cannot open " + args);
    json j;
    in >> j;
    return graph_from_json(j);
  }
  throw std::invalid_argument("graph spec: unknown preset " + name);
}

// ---------------------------------------------------------------------------
// Mappings

inline json mapping_to_json(const MappingTree& t) {
  json nodes = json::array();
  for (std::size_t id = 0; id < t.n_modes(); ++id) {
    const auto& n = t.node(static_cast<int>(id));
    json children;
    const char* names[3] = {"X", "Y", "Z"};
    for (int s = 0; s < 3; ++s) {
      const int c = n.child[static_cast<std::size_t>(s)];
      children[names[s]] = c == kNoChild ? json(nullptr) : json(c);
    }
    nodes.push_back({{"id", id},
                     {"qubit", n.qubit},
                     {"mode", n.mode},
                     {"braid", n.braid_minus ? "-" : "+"},
                     {"children", children}});
  }
  return json{{"n_modes", t.n_modes()}, {"root", t.root()}, {"nodes", nodes}};
}

inline MappingTree mapping_from_json(const json& j) {
  const std::size_t n = j.at("n_modes").get<std::size_t>();
  if (j.at("nodes").size() != n) {
    throw std::invalid_argument("mapping file: node count mismatch");
  }
  std::vector<MappingNode> nodes(n);
  for (const auto& nj : j.at("nodes")) {
    const std::size_t id = nj.at("id").get<std::size_t>();
    if (id >= n) throw std::invalid_argument("mapping file: bad node id");
    MappingNode& node = nodes[id];
    node.qubit = nj.at("qubit").get<std::uint32_t>();
    node.mode = nj.at("mode").get<std::uint32_t>();
    const std::string braid = nj.at("braid").get<std::string>();
    if (braid != "+" && braid != "-") {
      throw std::invalid_argument("mapping file: braid must be + or -");
    }
    node.braid_minus = braid == "-";
    const auto& children = nj.at("children");
    const char* names[3] = {"X", "Y", "Z"};
    for (int s = 0; s < 3; ++s) {
      const auto& c = children.at(names[s]);
      node.child[static_cast<std::size_t>(s)] =
          c.is_null() ? kNoChild : c.get<int>();
    }
  }
  return MappingTree(std::move(nodes), j.at("root").get<int>());
}

// ---------------------------------------------------------------------------
// Ansatz files
//
// Fermionic kinds single/double/maj2/maj4 carry indices; the extended kinds
// qeb_single/qeb_double (indices) and pauli (a string like "-iXIZY") describe
// fixed Jordan-Wigner-frame operators that cannot be treespiled.

struct AnsatzEntry {
  std::variant<FermionicGenerator, PauliSum> op;
  double theta = 0.0;
};

struct AnsatzFile {
  int n_modes = 0;
  std::vector<int> reference_occupations;
  std::vector<AnsatzEntry> entries;

  bool all_fermionic() const {
    for (const auto& e : entries) {
      if (!std::holds_alternative<FermionicGenerator>(e.op)) return false;
    }
    return true;
  }

  /// Fermionic view; throws when any entry has no fermionic representation.
  FermionicAnsatz fermionic() const {
    if (!all_fermionic()) {
      throw std::invalid_argument("pool has no fermionic representation");
    }
    FermionicAnsatz a;
    a.n_modes = n_modes;
    a.reference_occupations = reference_occupations;
    for (const auto& e : entries) {
      auto g = std::get<FermionicGenerator>(e.op);
      g.theta = e.theta;
      a.generators.push_back(std::move(g));
    }
    a.validate();
    return a;
  }
};

inline json ansatz_to_json(const FermionicAnsatz& a) {
  json gens = json::array();
  for (const auto& g : a.generators) {
    gens.push_back({{"kind", to_string(g.kind)},
                    {"indices", g.indices},
                    {"theta", g.theta}});
  }
  return json{{"n_modes", a.n_modes},
              {"reference_occupations", a.reference_occupations},
              {"generators", gens}};
}

inline AnsatzFile ansatz_from_json(const json& j) {
  AnsatzFile file;
  file.n_modes = j.at("n_modes").get<int>();
  file.reference_occupations =
      j.at("reference_occupations").get<std::vector<int>>();
  for (const auto& gj : j.at("generators")) {
    AnsatzEntry entry;
    entry.theta = gj.value("theta", 0.0);
    const std::string kind = gj.at("kind").get<std::string>();
    auto indices = [&]() { return gj.at("indices").get<std::vector<int>>(); };
    if (kind == "single" || kind == "double" || kind == "maj2" ||
        kind == "maj4") {
      FermionicGenerator g;
      g.kind = kind == "single" ? GeneratorKind::Single
               : kind == "double" ? GeneratorKind::Double
               : kind == "maj2" ? GeneratorKind::Maj2
                                : GeneratorKind::Maj4;
      g.indices = indices();
      g.theta = entry.theta;
      FermionicAnsatz::validate_generator(g, file.n_modes);
      entry.op = std::move(g);
    } else if (kind == "qeb_single") {
      const auto idx = indices();
      if (idx.size() != 2) {
        throw std::invalid_argument("ansatz: qeb_single wants 2 indices");
      }
      entry.op = detail::qeb_single_sum(idx[0], idx[1], file.n_modes);
    } else if (kind == "qeb_double") {
      const auto idx = indices();
      if (idx.size() != 4) {
        throw std::invalid_argument("ansatz: qeb_double wants 4 indices");
      }
      entry.op =
          detail::qeb_double_sum(idx[0], idx[1], idx[2], idx[3], file.n_modes);
    } else if (kind == "pauli") {
      PauliString p = PauliString::from_text(gj.at("string").get<std::string>());
      if (p.width() != static_cast<std::size_t>(file.n_modes)) {
        throw std::invalid_argument("ansatz: pauli string width != n_modes");
      }
      if (p.phase_exp() % 2 == 0) {
        throw std::invalid_argument(
            "ansatz: pauli generator must be anti-Hermitian (phase i or -i)");
      }
      PauliSum sum(p.width());
      sum.add_term({1.0, 0.0}, std::move(p));
      sum.simplify();
      entry.op = std::move(sum);
    } else {
      throw std::invalid_argument("ansatz: unknown generator kind " + kind);
    }
    file.entries.push_back(std::move(entry));
  }
  if (static_cast<int>(file.reference_occupations.size()) != file.n_modes) {
    throw std::invalid_argument("ansatz: occupation length mismatch");
  }
  return file;
}

// ---------------------------------------------------------------------------
// Hamiltonians: {"n_modes": N, "terms": [{"majoranas": [...], "coeff":
// [re,im]}, ...]}

inline json hamiltonian_to_json(const HamiltonianSpec& h) {
  json terms = json::array();
  for (const auto& t : h.terms) {
    terms.push_back({{"majoranas", t.indices},
                     {"coeff", {t.coeff.real(), t.coeff.imag()}}});
  }
  return json{{"n_modes", h.n_modes}, {"terms", terms}};
}

inline HamiltonianSpec hamiltonian_from_json(const json& j) {
  HamiltonianSpec h;
  h.n_modes = j.at("n_modes").get<int>();
  for (const auto& tj : j.at("terms")) {
    MajoranaMonomial m;
    m.indices = tj.at("majoranas").get<std::vector<int>>();
    const auto& c = tj.at("coeff");
    m.coeff = {c.at(0).get<double>(), c.at(1).get<double>()};
    h.terms.push_back(std::move(m));
  }
  h.validate();
  return h;
}

// ---------------------------------------------------------------------------
// Reports

inline json cost_to_json(const CostBreakdown& c) {
  return json{{"cost_kind", to_string(c.cost_kind)},
              {"total_cnots", c.total_cnots},
              {"per_generator", c.per_generator}};
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j;
  in >> j;
  return j;
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << text;
}

inline void write_json_file(const std::string& path, const json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

}  // namespace treespile
