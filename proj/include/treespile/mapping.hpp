#pragma once

#include <algorithm>
#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "treespile/fermion.hpp"
#include "treespile/graph.hpp"
#include "treespile/pauli.hpp"
#include "treespile/rng.hpp"

namespace treespile {

inline constexpr int kNoChild = -1;
inline constexpr std::array<char, 3> kSlotLetters = {'X', 'Y', 'Z'};

struct MappingNode {
  std::uint32_t qubit = 0;
  std::uint32_t mode = 0;
  bool braid_minus = false;
  std::array<int, 3> child = {kNoChild, kNoChild, kNoChild};  // X, Y, Z slots

  int out_degree() const {
    int d = 0;
    for (int c : child) d += (c != kNoChild) ? 1 : 0;
    return d;
  }
  int free_slot_count() const { return 3 - out_degree(); }
};

/// Labelled ordered ternary tree defining a product-preserving fermion-to-
/// qubit mapping. Node ids are indices into nodes(); every qubit and mode
/// label appears exactly once; each node has three slots labelled X/Y/Z that
/// hold either a child or a leg.
class MappingTree {
 public:
  MappingTree() = default;
  MappingTree(std::vector<MappingNode> nodes, int root)
      : nodes_(std::move(nodes)), root_(root) {
    validate();
  }

  std::size_t n_modes() const { return nodes_.size(); }
  int root() const { return root_; }
  const std::vector<MappingNode>& nodes() const { return nodes_; }
  const MappingNode& node(int id) const { return nodes_.at(static_cast<std::size_t>(id)); }

  /// Parent node id per node, -1 for the root.
  std::vector<int> parents() const {
    std::vector<int> parent(nodes_.size(), -1);
    for (std::size_t u = 0; u < nodes_.size(); ++u) {
      for (int c : nodes_[u].child) {
        if (c != kNoChild) parent[static_cast<std::size_t>(c)] = static_cast<int>(u);
      }
    }
    return parent;
  }

  /// Smallest width able to hold every qubit label.
  std::size_t min_width() const {
    std::uint32_t m = 0;
    for (const auto& n : nodes_) m = std::max(m, n.qubit);
    return static_cast<std::size_t>(m) + 1;
  }

  int node_of_mode(std::uint32_t mode) const {
    for (std::size_t u = 0; u < nodes_.size(); ++u) {
      if (nodes_[u].mode == mode) return static_cast<int>(u);
    }
    throw std::invalid_argument("mapping: mode not present");
  }

  void validate() const {
    const std::size_t n = nodes_.size();
    if (n == 0) throw std::invalid_argument("mapping: no nodes");
    if (root_ < 0 || static_cast<std::size_t>(root_) >= n) {
      throw std::invalid_argument("mapping: invalid root id");
    }
    std::set<std::uint32_t> qubits, modes;
    for (const auto& node : nodes_) {
      if (!qubits.insert(node.qubit).second) {
        throw std::invalid_argument("mapping: duplicate qubit label");
      }
      if (node.mode >= n || !modes.insert(node.mode).second) {
        throw std::invalid_argument("mapping: mode labels must be a permutation");
      }
    }
    // Single tree rooted at root_: every node visited exactly once.
    std::vector<int> seen_parent(n, -2);
    seen_parent[static_cast<std::size_t>(root_)] = -1;
    std::vector<int> stack{root_};
    std::size_t visited = 0;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      ++visited;
      for (int c : nodes_[static_cast<std::size_t>(u)].child) {
        if (c == kNoChild) continue;
        if (c < 0 || static_cast<std::size_t>(c) >= n) {
          throw std::invalid_argument("mapping: child id out of range");
        }
        if (seen_parent[static_cast<std::size_t>(c)] != -2) {
          throw std::invalid_argument("mapping: node has two parents or a cycle");
        }
        seen_parent[static_cast<std::size_t>(c)] = u;
        stack.push_back(c);
      }
    }
    if (visited != n) {
      throw std::invalid_argument("mapping: not a single tree");
    }
  }

  /// True iff every tree edge is an edge of g and every qubit label < |V(g)|.
  bool is_subgraph_of(const HardwareGraph& g) const {
    for (const auto& node : nodes_) {
      if (node.qubit >= g.n_vertices()) return false;
      for (int c : node.child) {
        if (c != kNoChild &&
            !g.has_edge(node.qubit, nodes_[static_cast<std::size_t>(c)].qubit)) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<MappingNode>& mutable_nodes() { return nodes_; }
  void set_root(int root) { root_ = root; }

 private:
  std::vector<MappingNode> nodes_;
  int root_ = 0;
};

// ---------------------------------------------------------------------------
// String generation and pairing

namespace detail {

/// Letter-path prefixes: prefix[u] acts with the slot letters of every edge
/// on the root-to-u path (identity at u itself).
inline std::vector<PauliString> path_prefixes(const MappingTree& t,
                                              std::size_t width) {
  std::vector<PauliString> prefix(t.n_modes(), PauliString(width));
  std::vector<int> stack{t.root()};
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    const auto& node = t.node(u);
    for (int s = 0; s < 3; ++s) {
      const int c = node.child[static_cast<std::size_t>(s)];
      if (c == kNoChild) continue;
      PauliString p = prefix[static_cast<std::size_t>(u)];
      p.set_letter(node.qubit, kSlotLetters[static_cast<std::size_t>(s)]);
      prefix[static_cast<std::size_t>(c)] = std::move(p);
      stack.push_back(c);
    }
  }
  return prefix;
}

}  // namespace detail

/// One Pauli string per root-to-leg path, in DFS (X,Y,Z) order; 2N+1 strings,
/// exactly one of which is all-Z.
inline std::vector<PauliString> strings_from_tree(const MappingTree& t,
                                                  std::size_t width = 0) {
  if (width == 0) width = t.min_width();
  if (width < t.min_width()) {
    throw std::invalid_argument("strings_from_tree: width too small");
  }
  auto prefix = detail::path_prefixes(t, width);
  std::vector<PauliString> out;
  out.reserve(2 * t.n_modes() + 1);
  // Recursion via explicit stack, children before their own legs is not
  // required; emit legs as encountered in X,Y,Z slot order per node.
  std::vector<int> stack{t.root()};
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    const auto& node = t.node(u);
    for (int s = 2; s >= 0; --s) {
      const int c = node.child[static_cast<std::size_t>(s)];
      if (c != kNoChild) stack.push_back(c);
    }
    for (int s = 0; s < 3; ++s) {
      if (node.child[static_cast<std::size_t>(s)] != kNoChild) continue;
      PauliString leg = prefix[static_cast<std::size_t>(u)];
      leg.set_letter(node.qubit, kSlotLetters[static_cast<std::size_t>(s)]);
      out.push_back(std::move(leg));
    }
  }
  return out;
}

/// Signed Pauli string per Majorana index k in [0, 2N).
struct MajoranaAssignment {
  std::size_t width = 0;
  std::vector<PauliString> string;  // index k
  std::vector<int> sign;            // +1 or -1

  std::size_t n_modes() const { return string.size() / 2; }
};

/// Pairs the tree strings into qubit modes: for the node carrying mode j,
/// the X-slot string extended by the maximal all-Z descent and the Y-slot
/// string likewise form the pair; the all-Z root string is discarded. The
/// braid flag swaps the pair with a sign: b='-' sends m_{2j} to minus the
/// Y-descent string and m_{2j+1} to the X-descent string.
inline MajoranaAssignment pair_strings(const MappingTree& t,
                                       std::size_t width = 0) {
  if (width == 0) width = t.min_width();
  if (width < t.min_width()) {
    throw std::invalid_argument("pair_strings: width too small");
  }
  auto prefix = detail::path_prefixes(t, width);
  const std::size_t n = t.n_modes();
  MajoranaAssignment a;
  a.width = width;
  a.string.assign(2 * n, PauliString(width));
  a.sign.assign(2 * n, +1);

  for (std::size_t u = 0; u < n; ++u) {
    const auto& node = t.node(static_cast<int>(u));
    auto descend = [&](int slot) {
      PauliString s = prefix[u];
      s.set_letter(node.qubit, kSlotLetters[static_cast<std::size_t>(slot)]);
      int c = node.child[static_cast<std::size_t>(slot)];
      while (c != kNoChild) {
        const auto& cn = t.node(c);
        s.set_letter(cn.qubit, 'Z');
        c = cn.child[2];
      }
      return s;
    };
    const PauliString sx = descend(0);
    const PauliString sy = descend(1);
    const std::size_t j = node.mode;
    if (!node.braid_minus) {
      a.string[2 * j] = sx;
      a.string[2 * j + 1] = sy;
      a.sign[2 * j] = +1;
      a.sign[2 * j + 1] = +1;
    } else {
      a.string[2 * j] = sy;
      a.string[2 * j + 1] = sx;
      a.sign[2 * j] = -1;
      a.sign[2 * j + 1] = +1;
    }
  }
  return a;
}

/// Maps a Majorana monomial to a scalar multiple of a phase-free Pauli
/// string: the ordered (ascending-index) product of the assigned signed
/// strings times the monomial coefficient.
inline std::pair<std::complex<double>, PauliString> map_monomial(
    const MajoranaAssignment& a, const MajoranaMonomial& mono) {
  std::complex<double> coeff = mono.coeff;
  PauliString acc(a.width);
  for (int k : mono.indices) {
    if (k < 0 || static_cast<std::size_t>(k) >= a.string.size()) {
      throw std::invalid_argument("map_monomial: Majorana index out of range");
    }
    acc.mul_assign(a.string[static_cast<std::size_t>(k)]);
    coeff *= static_cast<double>(a.sign[static_cast<std::size_t>(k)]);
  }
  coeff *= phase_factor(acc.phase_exp());
  acc.set_phase_exp(0);
  return {coeff, std::move(acc)};
}

inline std::pair<std::complex<double>, PauliString> map_monomial(
    const MappingTree& t, const MajoranaMonomial& mono, std::size_t width = 0) {
  return map_monomial(pair_strings(t, width), mono);
}

struct MappedGenerator {
  double theta = 0.0;
  PauliSum sum;
};

inline PauliSum map_monomials(const MajoranaAssignment& a,
                              const std::vector<MajoranaMonomial>& monomials) {
  PauliSum sum(a.width);
  for (const auto& mono : monomials) {
    auto [c, p] = map_monomial(a, mono);
    sum.add_term(c, std::move(p));
  }
  sum.simplify();
  return sum;
}

/// Expands and maps every generator of the ansatz. Each mapped sum is checked
/// anti-Hermitian (all coefficients purely imaginary).
inline std::vector<MappedGenerator> map_ansatz(const MappingTree& t,
                                               const FermionicAnsatz& ansatz,
                                               std::size_t width = 0) {
  ansatz.validate();
  if (t.n_modes() != static_cast<std::size_t>(ansatz.n_modes)) {
    throw std::invalid_argument("map_ansatz: mode count mismatch");
  }
  const MajoranaAssignment a = pair_strings(t, width);
  std::vector<MappedGenerator> out;
  out.reserve(ansatz.generators.size());
  for (const auto& g : ansatz.generators) {
    MappedGenerator mg;
    mg.theta = g.theta;
    mg.sum = map_monomials(a, expand_generator(g, ansatz.n_modes));
    if (!mg.sum.is_anti_hermitian()) {
      throw std::logic_error("map_ansatz: mapped generator is not i*Hermitian");
    }
    out.push_back(std::move(mg));
  }
  return out;
}

inline PauliSum map_hamiltonian(const MappingTree& t, const HamiltonianSpec& h,
                                std::size_t width = 0) {
  if (t.n_modes() != static_cast<std::size_t>(h.n_modes)) {
    throw std::invalid_argument("map_hamiltonian: mode count mismatch");
  }
  return map_monomials(pair_strings(t, width), h.terms);
}

// ---------------------------------------------------------------------------
// Occupation encoding

/// Per mode j, the signed Z-type string of i*m_{2j}m_{2j+1}: row mask over
/// qubits and sign s_j. Product preservation makes every s_j = -1 and the
/// GF(2) row matrix invertible.
struct OccupationProfile {
  std::vector<int> sign;                       // per mode
  std::vector<std::vector<std::uint64_t>> row;  // per mode, qubit mask words
};

inline OccupationProfile occupation_profile(const MajoranaAssignment& a) {
  OccupationProfile prof;
  const std::size_t n = a.n_modes();
  prof.sign.resize(n);
  prof.row.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    auto [c, p] = map_monomial(
        a, MajoranaMonomial({static_cast<int>(2 * j), static_cast<int>(2 * j + 1)},
                            {0.0, 1.0}));
    if (!p.is_z_type() || std::abs(c.imag()) > 1e-12 ||
        std::abs(std::abs(c.real()) - 1.0) > 1e-12) {
      throw std::logic_error("occupation: i*m2j*m2j+1 is not a signed Z string");
    }
    prof.sign[j] = c.real() < 0 ? -1 : +1;
    prof.row[j] = p.support_mask();
  }
  return prof;
}

/// Solves for the computational-basis bitstring encoding the given mode
/// occupations. The vacuum maps to the all-zero string. Throws
/// std::logic_error if the pairing ever produced s_j = +1 or a singular
/// GF(2) system (an implementation bug, not a user error).
inline std::vector<std::uint8_t> occupation_to_bitstring(
    const MappingTree& t, const std::vector<int>& occ, std::size_t width = 0) {
  if (occ.size() != t.n_modes()) {
    throw std::invalid_argument("occupation: wrong occupation length");
  }
  if (width == 0) width = t.min_width();
  const MajoranaAssignment a = pair_strings(t, width);
  const OccupationProfile prof = occupation_profile(a);
  const std::size_t n = t.n_modes();
  for (int s : prof.sign) {
    if (s != -1) {
      throw std::logic_error("occupation: pairing violates product preservation");
    }
  }
  // Columns are the used qubits only.
  std::vector<std::uint32_t> used;
  for (const auto& node : t.nodes()) used.push_back(node.qubit);
  std::sort(used.begin(), used.end());

  // Dense GF(2) elimination on n x (n+1) bit rows.
  std::vector<std::vector<std::uint8_t>> m(n, std::vector<std::uint8_t>(n + 1, 0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t c = 0; c < n; ++c) {
      const std::uint32_t q = used[c];
      m[j][c] = (prof.row[j][q / 64] >> (q % 64)) & 1ULL;
    }
    m[j][n] = static_cast<std::uint8_t>(occ[j] & 1);
  }
  for (std::size_t col = 0, row = 0; col < n; ++col, ++row) {
    std::size_t pivot = row;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) {
      throw std::logic_error("occupation: singular GF(2) occupation matrix");
    }
    std::swap(m[row], m[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r != row && m[r][col]) {
        for (std::size_t c = col; c <= n; ++c) m[r][c] ^= m[row][c];
      }
    }
  }
  std::vector<std::uint8_t> bits(width, 0);
  for (std::size_t c = 0; c < n; ++c) bits[used[c]] = m[c][n];
  return bits;
}

/// Mapped annihilation operator a_j = (S(m_2j) + i S(m_2j+1)) / 2 with the
/// assignment's signs; the braid flag contributes only a global phase.
inline PauliSum mapped_annihilator(const MajoranaAssignment& a, std::size_t j) {
  PauliSum sum(a.width);
  sum.add_term(0.5 * static_cast<double>(a.sign[2 * j]), a.string[2 * j]);
  sum.add_term(std::complex<double>(0.0, 0.5) *
                   static_cast<double>(a.sign[2 * j + 1]),
               a.string[2 * j + 1]);
  sum.simplify();
  return sum;
}

inline PauliSum mapped_creator(const MajoranaAssignment& a, std::size_t j) {
  PauliSum sum(a.width);
  sum.add_term(0.5 * static_cast<double>(a.sign[2 * j]), a.string[2 * j]);
  sum.add_term(std::complex<double>(0.0, -0.5) *
                   static_cast<double>(a.sign[2 * j + 1]),
               a.string[2 * j + 1]);
  sum.simplify();
  return sum;
}

// ---------------------------------------------------------------------------
// Tree constructors

/// The Z-linked path: node j sits on qubit j, carries mode j, children hang
/// off the Z slot, braids all '+'. Reproduces the Jordan-Wigner strings.
inline MappingTree jw_tree(std::size_t n_modes) {
  if (n_modes == 0) throw std::invalid_argument("jw_tree: need n >= 1");
  std::vector<MappingNode> nodes(n_modes);
  for (std::size_t j = 0; j < n_modes; ++j) {
    nodes[j].qubit = static_cast<std::uint32_t>(j);
    nodes[j].mode = static_cast<std::uint32_t>(j);
    if (j + 1 < n_modes) nodes[j].child[2] = static_cast<int>(j + 1);
  }
  return MappingTree(std::move(nodes), 0);
}

/// BFS spanning subtree of the device, rooted at a maximum-degree vertex
/// (ties to the lowest index). Children fill the X, Y, Z slots in discovery
/// order, capped at three per node; modes follow BFS order; braids '+'.
inline MappingTree bonsai_tree(const HardwareGraph& g, std::size_t n_modes) {
  if (n_modes == 0) throw std::invalid_argument("bonsai: need n >= 1");
  if (g.n_vertices() < n_modes) {
    throw std::invalid_argument("bonsai: graph smaller than mode count");
  }
  std::uint32_t root_vertex = 0;
  for (std::uint32_t v = 1; v < g.n_vertices(); ++v) {
    if (g.neighbors(v).size() > g.neighbors(root_vertex).size()) root_vertex = v;
  }
  std::vector<MappingNode> nodes;
  std::vector<int> node_of_vertex(g.n_vertices(), -1);
  auto add_node = [&](std::uint32_t vertex) {
    MappingNode n;
    n.qubit = vertex;
    n.mode = static_cast<std::uint32_t>(nodes.size());
    node_of_vertex[vertex] = static_cast<int>(nodes.size());
    nodes.push_back(n);
    return static_cast<int>(nodes.size() - 1);
  };
  std::vector<int> queue{add_node(root_vertex)};
  std::size_t head = 0;
  while (head < queue.size() && nodes.size() < n_modes) {
    const int u = queue[head++];
    const std::uint32_t uq = nodes[static_cast<std::size_t>(u)].qubit;
    for (std::uint32_t v : g.neighbors(uq)) {
      if (nodes.size() >= n_modes) break;
      if (node_of_vertex[v] != -1) continue;
      if (nodes[static_cast<std::size_t>(u)].out_degree() >= 3) break;
      const int c = add_node(v);
      auto& un = nodes[static_cast<std::size_t>(u)];
      for (int s = 0; s < 3; ++s) {
        if (un.child[static_cast<std::size_t>(s)] == kNoChild) {
          un.child[static_cast<std::size_t>(s)] = c;
          break;
        }
      }
      queue.push_back(c);
    }
  }
  if (nodes.size() < n_modes) {
    throw std::invalid_argument(
        "bonsai: could not grow a ternary subtree with the requested modes");
  }
  return MappingTree(std::move(nodes), 0);
}

namespace detail {

inline void randomize_labels(std::vector<MappingNode>& nodes, Rng& rng,
                             bool randomize_qubits) {
  const std::size_t n = nodes.size();
  std::vector<std::uint32_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<std::uint32_t>(i);
  for (std::size_t i = n; i > 1; --i) {
    std::swap(perm[i - 1], perm[rng.next_below(i)]);
  }
  for (std::size_t i = 0; i < n; ++i) nodes[i].mode = perm[i];
  if (randomize_qubits) {
    for (std::size_t i = n; i > 1; --i) {
      std::swap(perm[i - 1], perm[rng.next_below(i)]);
    }
    for (std::size_t i = 0; i < n; ++i) nodes[i].qubit = perm[i];
  }
  for (auto& node : nodes) node.braid_minus = rng.next_bool();
}

}  // namespace detail

/// Random mapping over qubits [0, N): the structure grows by attaching each
/// new node to a uniformly chosen free slot among existing nodes; qubit and
/// mode labels are random permutations and braids random.
inline MappingTree random_tree(std::size_t n_modes, Rng& rng) {
  if (n_modes == 0) throw std::invalid_argument("random_tree: need n >= 1");
  std::vector<MappingNode> nodes(1);
  while (nodes.size() < n_modes) {
    std::vector<std::pair<int, int>> slots;
    for (std::size_t u = 0; u < nodes.size(); ++u) {
      for (int s = 0; s < 3; ++s) {
        if (nodes[u].child[static_cast<std::size_t>(s)] == kNoChild) {
          slots.push_back({static_cast<int>(u), s});
        }
      }
    }
    const auto [u, s] = slots[rng.next_below(slots.size())];
    nodes[static_cast<std::size_t>(u)].child[static_cast<std::size_t>(s)] =
        static_cast<int>(nodes.size());
    nodes.emplace_back();
  }
  detail::randomize_labels(nodes, rng, /*randomize_qubits=*/true);
  return MappingTree(std::move(nodes), 0);
}

inline MappingTree random_tree(std::size_t n_modes, std::uint64_t seed) {
  Rng rng(seed);
  return random_tree(n_modes, rng);
}

/// Random device-connected mapping: grows from a random vertex, attaching a
/// uniformly chosen (node with free slot, unused adjacent vertex, slot)
/// triple each step; mode labels and braids randomized.
inline MappingTree random_cp_tree(const HardwareGraph& g, std::size_t n_modes,
                                  Rng& rng) {
  if (n_modes == 0 || g.n_vertices() < n_modes) {
    throw std::invalid_argument("random_cp_tree: bad sizes");
  }
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<MappingNode> nodes(1);
    nodes[0].qubit = static_cast<std::uint32_t>(rng.next_below(g.n_vertices()));
    std::vector<bool> used(g.n_vertices(), false);
    used[nodes[0].qubit] = true;
    bool stuck = false;
    while (nodes.size() < n_modes) {
      std::vector<std::tuple<int, int, std::uint32_t>> options;
      for (std::size_t u = 0; u < nodes.size(); ++u) {
        for (int s = 0; s < 3; ++s) {
          if (nodes[u].child[static_cast<std::size_t>(s)] != kNoChild) continue;
          for (std::uint32_t v : g.neighbors(nodes[u].qubit)) {
            if (!used[v]) options.push_back({static_cast<int>(u), s, v});
          }
        }
      }
      if (options.empty()) {
        stuck = true;
        break;
      }
      const auto [u, s, v] = options[rng.next_below(options.size())];
      nodes[static_cast<std::size_t>(u)].child[static_cast<std::size_t>(s)] =
          static_cast<int>(nodes.size());
      MappingNode child;
      child.qubit = v;
      nodes.push_back(child);
      used[v] = true;
    }
    if (stuck) continue;
    detail::randomize_labels(nodes, rng, /*randomize_qubits=*/false);
    return MappingTree(std::move(nodes), 0);
  }
  throw std::invalid_argument("random_cp_tree: could not grow a subtree");
}

/// Relabels the used qubits to 0..N-1 (order preserving). The mapped
/// operators of the compacted tree are the originals restricted to the used
/// qubits, which keeps dense verification tractable for device mappings.
inline MappingTree compact_tree(const MappingTree& t) {
  std::vector<std::uint32_t> used;
  for (const auto& n : t.nodes()) used.push_back(n.qubit);
  std::sort(used.begin(), used.end());
  std::vector<MappingNode> nodes = t.nodes();
  for (auto& n : nodes) {
    const auto it = std::lower_bound(used.begin(), used.end(), n.qubit);
    n.qubit = static_cast<std::uint32_t>(it - used.begin());
  }
  return MappingTree(std::move(nodes), t.root());
}

/// Embeds a string into a wider register (same letters, same qubit indices).
inline PauliString pad_string(const PauliString& p, std::size_t width) {
  if (width < p.width()) {
    throw std::invalid_argument("pad_string: target width too small");
  }
  PauliString out(width);
  for (std::size_t q = 0; q < p.width(); ++q) {
    const char l = p.letter(q);
    if (l != 'I') out.set_letter(q, l);
  }
  out.set_phase_exp(p.phase_exp());
  return out;
}

/// Steiner solve with the device-connected-tree precondition checked.
inline SteinerResult steiner_pptt(const HardwareGraph& g,
                                  const std::vector<std::uint32_t>& terminals,
                                  const MappingTree& t) {
  if (!t.is_subgraph_of(g)) {
    throw std::invalid_argument("steiner_pptt: mapping tree is not a subgraph");
  }
  return steiner_pptt(g, terminals);
}

}  // namespace treespile
