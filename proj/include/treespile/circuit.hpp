#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "treespile/graph.hpp"
#include "treespile/mapping.hpp"
#include "treespile/pauli.hpp"

namespace treespile {

enum class GateKind { H, S, Sdg, X, Cnot, Rz };

struct Gate {
  GateKind kind = GateKind::H;
  std::uint32_t q0 = 0;
  std::uint32_t q1 = 0;     // CNOT target
  double angle = 0.0;       // RZ only
  int tag = -1;             // originating generator index, -1 if none

  bool is_two_qubit() const { return kind == GateKind::Cnot; }

  bool same_qubits(const Gate& other) const {
    if (kind == GateKind::Cnot || other.kind == GateKind::Cnot) {
      return q0 == other.q0 && q1 == other.q1 && other.is_two_qubit() == is_two_qubit();
    }
    return q0 == other.q0;
  }

  bool touches(std::uint32_t q) const {
    return q0 == q || (is_two_qubit() && q1 == q);
  }

  bool overlaps(const Gate& other) const {
    if (other.touches(q0)) return true;
    return is_two_qubit() && other.touches(q1);
  }
};

struct Circuit {
  std::size_t n_qubits = 0;
  std::vector<Gate> gates;

  explicit Circuit(std::size_t n = 0) : n_qubits(n) {}

  void h(std::uint32_t q, int tag = -1) { push({GateKind::H, q, 0, 0.0, tag}); }
  void s(std::uint32_t q, int tag = -1) { push({GateKind::S, q, 0, 0.0, tag}); }
  void sdg(std::uint32_t q, int tag = -1) { push({GateKind::Sdg, q, 0, 0.0, tag}); }
  void x(std::uint32_t q, int tag = -1) { push({GateKind::X, q, 0, 0.0, tag}); }
  void cx(std::uint32_t c, std::uint32_t t, int tag = -1) {
    if (c == t) throw std::invalid_argument("circuit: CNOT control equals target");
    push({GateKind::Cnot, c, t, 0.0, tag});
  }
  void rz(double angle, std::uint32_t q, int tag = -1) {
    if (!std::isfinite(angle)) {
      throw std::invalid_argument("circuit: RZ angle must be finite");
    }
    push({GateKind::Rz, q, 0, angle, tag});
  }

  void append(const Circuit& other) {
    if (other.n_qubits != n_qubits) {
      throw std::invalid_argument("circuit append: width mismatch");
    }
    gates.insert(gates.end(), other.gates.begin(), other.gates.end());
  }

  std::size_t cnot_count() const {
    std::size_t c = 0;
    for (const auto& g : gates) c += g.kind == GateKind::Cnot ? 1 : 0;
    return c;
  }

  /// Every CNOT lies on an edge of g.
  bool all_cnots_on_edges(const HardwareGraph& g) const {
    for (const auto& gate : gates) {
      if (gate.kind == GateKind::Cnot && !g.has_edge(gate.q0, gate.q1)) {
        return false;
      }
    }
    return true;
  }

 private:
  void push(Gate g) {
    if (g.q0 >= n_qubits || (g.is_two_qubit() && g.q1 >= n_qubits)) {
      throw std::invalid_argument("circuit: gate qubit out of range");
    }
    gates.push_back(g);
  }
};

/// Compiles exp(i * theta * P) for a Hermitian string P (phase_exp 0 or 2)
/// over the given Steiner tree: single-qubit basis changes (H for X, S-dagger
/// then H for Y), a leaf-elimination CNOT ladder over the tree, an RZ at the
/// last remaining vertex, then the exact uncompute. Uses 2(2n-k-1) CNOTs for
/// n tree vertices and weight k.
inline Circuit compile_pauli_exp(const PauliString& p, double theta,
                                 const HardwareGraph& g,
                                 const SteinerResult& steiner, int tag = -1) {
  if (p.phase_exp() != 0 && p.phase_exp() != 2) {
    throw std::invalid_argument("compile_pauli_exp: string must be Hermitian");
  }
  if (p.width() != g.n_vertices()) {
    throw std::invalid_argument("compile_pauli_exp: width must match graph");
  }
  const auto support = p.support();
  if (support.empty()) {
    throw std::invalid_argument("compile_pauli_exp: identity string");
  }
  std::set<std::uint32_t> tree_verts(steiner.tree_vertices.begin(),
                                     steiner.tree_vertices.end());
  for (std::size_t q : support) {
    if (!tree_verts.count(static_cast<std::uint32_t>(q))) {
      throw std::invalid_argument("compile_pauli_exp: steiner misses support");
    }
  }
  for (auto [a, b] : steiner.tree_edges) {
    if (!g.has_edge(a, b)) {
      throw std::invalid_argument("compile_pauli_exp: steiner edge off-device");
    }
  }
  const double sign = p.phase_exp() == 2 ? -1.0 : 1.0;

  Circuit c(g.n_vertices());
  // Basis change: diagonalize each letter to Z.
  for (std::size_t q : support) {
    const char l = p.letter(q);
    if (l == 'X') {
      c.h(static_cast<std::uint32_t>(q), tag);
    } else if (l == 'Y') {
      c.sdg(static_cast<std::uint32_t>(q), tag);
      c.h(static_cast<std::uint32_t>(q), tag);
    }
  }
  const std::size_t basis_end = c.gates.size();

  // Leaf elimination over a working copy of the tree; lowest-index leaf first.
  std::set<std::uint32_t> in_support;
  for (std::size_t q : support) in_support.insert(static_cast<std::uint32_t>(q));
  std::set<Edge> edges(steiner.tree_edges.begin(), steiner.tree_edges.end());
  std::set<std::uint32_t> verts = tree_verts;
  auto degree = [&](std::uint32_t v) {
    std::size_t d = 0;
    for (const auto& e : edges) d += (e.first == v || e.second == v) ? 1 : 0;
    return d;
  };
  while (verts.size() > 1) {
    std::uint32_t leaf = 0;
    bool found = false;
    for (std::uint32_t v : verts) {
      if (degree(v) == 1) {
        leaf = v;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("compile_pauli_exp: no leaf in tree");
    std::uint32_t nb = 0;
    for (const auto& e : edges) {
      if (e.first == leaf) { nb = e.second; break; }
      if (e.second == leaf) { nb = e.first; break; }
    }
    if (!in_support.count(leaf)) {
      throw std::logic_error("compile_pauli_exp: leaf outside parity set");
    }
    if (!in_support.count(nb)) {
      c.cx(nb, leaf, tag);
      c.cx(leaf, nb, tag);
      in_support.insert(nb);
    } else {
      c.cx(leaf, nb, tag);
    }
    edges.erase(make_edge(leaf, nb));
    verts.erase(leaf);
    in_support.erase(leaf);
  }
  const std::uint32_t last = *verts.begin();
  const std::size_t ladder_end = c.gates.size();

  c.rz(-2.0 * theta * sign, last, tag);

  // Uncompute the ladder and the basis change, in reverse.
  for (std::size_t i = ladder_end; i-- > basis_end;) {
    const Gate& ggate = c.gates[i];
    c.cx(ggate.q0, ggate.q1, tag);
  }
  for (std::size_t i = basis_end; i-- > 0;) {
    const Gate gate = c.gates[i];
    if (gate.kind == GateKind::H) {
      c.h(gate.q0, tag);
    } else {
      c.s(gate.q0, tag);  // inverse of S-dagger
    }
  }

  const std::size_t n = steiner.tree_vertices.size();
  const std::size_t k = support.size();
  if (c.cnot_count() != 2 * (2 * n - k - 1)) {
    throw std::logic_error("compile_pauli_exp: CNOT count mismatch");
  }
  return c;
}

enum class CompileMode { Cp, General };

/// Reference-state X gates followed by each generator's terms in canonical
/// order, each term exponentiated over its Steiner tree. In CP mode (tree a
/// subgraph of the device) the optimal case solver handles every term that
/// matches the 2-/4-Majorana structure; everything else uses the heuristic.
/// Zero-weight terms are pure phases and are dropped with a warning.
inline Circuit compile_ansatz(const std::vector<MappedGenerator>& mapped,
                              const MappingTree& t, const HardwareGraph& g,
                              CompileMode mode,
                              const std::vector<int>* reference_occupations = nullptr,
                              std::vector<std::string>* warnings = nullptr) {
  const bool cp = mode == CompileMode::Cp;
  if (cp && !t.is_subgraph_of(g)) {
    throw std::invalid_argument(
        "compile_ansatz: CP requested but mapping tree is not a subgraph");
  }
  Circuit circuit(g.n_vertices());
  if (reference_occupations != nullptr) {
    const auto bits =
        occupation_to_bitstring(t, *reference_occupations, g.n_vertices());
    for (std::size_t q = 0; q < bits.size(); ++q) {
      if (bits[q]) circuit.x(static_cast<std::uint32_t>(q));
    }
  }
  for (std::size_t gi = 0; gi < mapped.size(); ++gi) {
    const auto& mg = mapped[gi];
    for (const auto& term : mg.sum.terms()) {
      if (term.string.is_identity_letters()) {
        if (warnings) {
          warnings->push_back("generator " + std::to_string(gi) +
                              ": zero-weight term dropped (pure phase)");
        }
        continue;
      }
      // Anti-Hermitian term i*gamma*P compiled as exp(i*(theta*gamma)*P).
      const double gamma = term.coeff.imag();
      std::vector<std::uint32_t> terminals;
      for (std::size_t q : term.string.support()) {
        terminals.push_back(static_cast<std::uint32_t>(q));
      }
      std::optional<SteinerResult> st;
      if (cp) st = try_steiner_pptt(g, terminals);
      if (!st) {
        if (cp && warnings) {
          warnings->push_back("generator " + std::to_string(gi) +
                              ": term outside optimal cases, heuristic used");
        }
        st = steiner_heuristic(g, terminals);
      }
      circuit.append(compile_pauli_exp(term.string, mg.theta * gamma, g, *st,
                                       static_cast<int>(gi)));
    }
  }
  if (!circuit.all_cnots_on_edges(g)) {
    throw std::logic_error("compile_ansatz: off-edge CNOT produced");
  }
  return circuit;
}

/// X gates on the bits of the encoded occupation; no entangling gates.
inline Circuit hf_state_prep(const MappingTree& t, const std::vector<int>& occ,
                             std::size_t width = 0) {
  if (width == 0) width = t.min_width();
  const auto bits = occupation_to_bitstring(t, occ, width);
  Circuit c(width);
  for (std::size_t q = 0; q < bits.size(); ++q) {
    if (bits[q]) c.x(static_cast<std::uint32_t>(q));
  }
  return c;
}

// ---------------------------------------------------------------------------
// Peephole cancellation

namespace detail {

inline bool inverse_pair(const Gate& a, const Gate& b) {
  if (!a.same_qubits(b)) return false;
  switch (a.kind) {
    case GateKind::H: return b.kind == GateKind::H;
    case GateKind::X: return b.kind == GateKind::X;
    case GateKind::Cnot: return b.kind == GateKind::Cnot;
    case GateKind::S: return b.kind == GateKind::Sdg;
    case GateKind::Sdg: return b.kind == GateKind::S;
    case GateKind::Rz: return false;
  }
  return false;
}

}  // namespace detail

/// Cancels adjacent inverse pairs (CNOT/CNOT, H/H, S/S-dagger, X/X) and merges
/// adjacent RZ rotations on the same qubit, treating gates on disjoint qubits
/// as commuting for adjacency. Runs to a fixed point; never adds gates.
inline Circuit peephole_cancel(const Circuit& input) {
  std::vector<Gate> gates = input.gates;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < gates.size(); ++i) {
      for (std::size_t j = i + 1; j < gates.size(); ++j) {
        if (!gates[i].overlaps(gates[j])) continue;
        if (detail::inverse_pair(gates[i], gates[j])) {
          gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(j));
          gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
        } else if (gates[i].kind == GateKind::Rz &&
                   gates[j].kind == GateKind::Rz && gates[i].q0 == gates[j].q0) {
          gates[i].angle += gates[j].angle;
          gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(j));
          if (std::abs(gates[i].angle) < 1e-12) {
            gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(i));
          }
          changed = true;
        }
        break;  // first overlapping gate blocks further lookahead
      }
      if (changed) break;
    }
  }
  Circuit out(input.n_qubits);
  out.gates = std::move(gates);
  return out;
}

// ---------------------------------------------------------------------------
// OpenQASM 2.0

inline std::string emit_qasm(const Circuit& c) {
  std::ostringstream os;
  os << "OPENQASM 2.0;\n";
  os << "include \"qelib1.inc\";\n";
  os << "qreg q[" << c.n_qubits << "];\n";
  char buf[64];
  for (const auto& g : c.gates) {
    switch (g.kind) {
      case GateKind::H: os << "h q[" << g.q0 << "];\n"; break;
      case GateKind::S: os << "s q[" << g.q0 << "];\n"; break;
      case GateKind::Sdg: os << "sdg q[" << g.q0 << "];\n"; break;
      case GateKind::X: os << "x q[" << g.q0 << "];\n"; break;
      case GateKind::Cnot:
        os << "cx q[" << g.q0 << "],q[" << g.q1 << "];\n";
        break;
      case GateKind::Rz:
        std::snprintf(buf, sizeof(buf), "%.17g", g.angle);
        os << "rz(" << buf << ") q[" << g.q0 << "];\n";
        break;
    }
  }
  return os.str();
}

/// Minimal reader for the emitter's own output (round-trip checks and file
/// loading); accepts exactly the gate set emitted above.
inline Circuit parse_qasm(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::optional<Circuit> circuit;
  auto qubit_of = [](const std::string& s, std::size_t& pos) {
    const std::size_t open = s.find("q[", pos);
    const std::size_t close = s.find(']', open);
    if (open == std::string::npos || close == std::string::npos) {
      throw std::invalid_argument("qasm: malformed qubit reference");
    }
    pos = close + 1;
    return static_cast<std::uint32_t>(
        std::stoul(s.substr(open + 2, close - open - 2)));
  };
  while (std::getline(is, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.pop_back();
    }
    if (line.empty() || line.rfind("OPENQASM", 0) == 0 ||
        line.rfind("include", 0) == 0) {
      continue;
    }
    if (line.rfind("qreg", 0) == 0) {
      std::size_t pos = 0;
      circuit = Circuit(qubit_of(line, pos));
      continue;
    }
    if (!circuit) throw std::invalid_argument("qasm: gate before qreg");
    std::size_t pos = 0;
    if (line.rfind("h ", 0) == 0) {
      circuit->h(qubit_of(line, pos));
    } else if (line.rfind("sdg ", 0) == 0) {
      circuit->sdg(qubit_of(line, pos));
    } else if (line.rfind("s ", 0) == 0) {
      circuit->s(qubit_of(line, pos));
    } else if (line.rfind("x ", 0) == 0) {
      circuit->x(qubit_of(line, pos));
    } else if (line.rfind("cx ", 0) == 0) {
      const auto c0 = qubit_of(line, pos);
      const auto t0 = qubit_of(line, pos);
      circuit->cx(c0, t0);
    } else if (line.rfind("rz(", 0) == 0) {
      const std::size_t close = line.find(')');
      if (close == std::string::npos) {
        throw std::invalid_argument("qasm: malformed rz");
      }
      const double angle = std::stod(line.substr(3, close - 3));
      pos = close;
      circuit->rz(angle, qubit_of(line, pos));
    } else {
      throw std::invalid_argument("qasm: unsupported statement: " + line);
    }
  }
  if (!circuit) throw std::invalid_argument("qasm: missing qreg");
  return *circuit;
}

}  // namespace treespile
