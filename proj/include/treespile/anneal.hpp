#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "treespile/cost.hpp"
#include "treespile/fermion.hpp"
#include "treespile/graph.hpp"
#include "treespile/mapping.hpp"
#include "treespile/rng.hpp"

namespace treespile {

enum class SearchMode { Free, Cp, Ncp, Ms };
enum class CostKind { Pauli, Compiled };

inline const char* to_string(SearchMode m) {
  switch (m) {
    case SearchMode::Free: return "free";
    case SearchMode::Cp: return "cp";
    case SearchMode::Ncp: return "ncp";
    case SearchMode::Ms: return "ms";
  }
  return "?";
}

inline SearchMode search_mode_from_string(const std::string& s) {
  if (s == "free") return SearchMode::Free;
  if (s == "cp") return SearchMode::Cp;
  if (s == "ncp") return SearchMode::Ncp;
  if (s == "ms") return SearchMode::Ms;
  throw std::invalid_argument("unknown search mode: " + s);
}

enum class MoveKind { LeafMove, RootChange, PauliShuffle, ModeSwap, BraidFlip };
inline constexpr std::array<MoveKind, 5> kAllMoveKinds = {
    MoveKind::LeafMove, MoveKind::RootChange, MoveKind::PauliShuffle,
    MoveKind::ModeSwap, MoveKind::BraidFlip};

inline const char* to_string(MoveKind k) {
  switch (k) {
    case MoveKind::LeafMove: return "leaf_move";
    case MoveKind::RootChange: return "root_change";
    case MoveKind::PauliShuffle: return "pauli_shuffle";
    case MoveKind::ModeSwap: return "mode_swap";
    case MoveKind::BraidFlip: return "braid_flip";
  }
  return "?";
}

struct Move {
  MoveKind kind = MoveKind::BraidFlip;
  int v = -1;                // moved node / new root / shuffled node / first node
  int w = -1;                // target parent / second node
  int slot = -1;             // target slot for leaf moves
  std::uint32_t new_qubit = 0;  // qubit the moved node assumes (CP relocation)
  int perm = -1;             // non-identity slot permutation index (shuffle)
};

// The five non-identity permutations of (X,Y,Z), lexicographic.
inline constexpr std::array<std::array<int, 3>, 5> kSlotPerms = {{
    {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

/// All legal moves of one kind, in deterministic order. CP leaf moves may
/// relocate the moved node to any unused device qubit adjacent to the target
/// parent's qubit; free/NCP leaf moves keep the node's qubit. The target may
/// be neither the node itself nor its current parent. Out-degree can never
/// exceed 3, so no move creates a tree vertex of degree 5.
inline std::vector<Move> enumerate_moves_of_kind(const MappingTree& t,
                                                 const HardwareGraph& g,
                                                 SearchMode mode, MoveKind kind) {
  std::vector<Move> moves;
  const auto& nodes = t.nodes();
  const int n = static_cast<int>(nodes.size());
  if (mode == SearchMode::Ms && kind != MoveKind::ModeSwap) return moves;

  switch (kind) {
    case MoveKind::LeafMove: {
      const auto parent = t.parents();
      std::vector<bool> qubit_used(g.n_vertices(), false);
      if (mode == SearchMode::Cp) {
        for (const auto& node : nodes) qubit_used[node.qubit] = true;
      }
      for (int v = 0; v < n; ++v) {
        if (nodes[static_cast<std::size_t>(v)].out_degree() != 0) continue;
        if (v == t.root()) continue;
        for (int w = 0; w < n; ++w) {
          if (w == v || w == parent[static_cast<std::size_t>(v)]) continue;
          for (int s = 0; s < 3; ++s) {
            if (nodes[static_cast<std::size_t>(w)].child[static_cast<std::size_t>(s)] !=
                kNoChild) {
              continue;
            }
            if (mode == SearchMode::Cp) {
              const std::uint32_t wq = nodes[static_cast<std::size_t>(w)].qubit;
              const std::uint32_t vq = nodes[static_cast<std::size_t>(v)].qubit;
              for (std::uint32_t u : g.neighbors(wq)) {
                if (u != vq && qubit_used[u]) continue;
                moves.push_back({kind, v, w, s, u, -1});
              }
            } else {
              moves.push_back(
                  {kind, v, w, s, nodes[static_cast<std::size_t>(v)].qubit, -1});
            }
          }
        }
      }
      break;
    }
    case MoveKind::RootChange:
      for (int v = 0; v < n; ++v) {
        if (v == t.root()) continue;
        if (nodes[static_cast<std::size_t>(v)].out_degree() <= 2) {
          moves.push_back({kind, v, -1, -1, 0, -1});
        }
      }
      break;
    case MoveKind::PauliShuffle:
      for (int v = 0; v < n; ++v) {
        if (nodes[static_cast<std::size_t>(v)].out_degree() < 1) continue;
        for (int p = 0; p < 5; ++p) {
          moves.push_back({kind, v, -1, -1, 0, p});
        }
      }
      break;
    case MoveKind::ModeSwap:
      for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
          moves.push_back({kind, a, b, -1, 0, -1});
        }
      }
      break;
    case MoveKind::BraidFlip:
      for (int v = 0; v < n; ++v) {
        moves.push_back({kind, v, -1, -1, 0, -1});
      }
      break;
  }
  return moves;
}

inline std::vector<Move> enumerate_moves(const MappingTree& t,
                                         const HardwareGraph& g, SearchMode mode,
                                         bool enable_braiding) {
  std::vector<Move> all;
  for (MoveKind kind : kAllMoveKinds) {
    if (kind == MoveKind::BraidFlip && !enable_braiding) continue;
    auto part = enumerate_moves_of_kind(t, g, mode, kind);
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

inline MappingTree apply_move(const MappingTree& t, const Move& move) {
  std::vector<MappingNode> nodes = t.nodes();
  int root = t.root();
  switch (move.kind) {
    case MoveKind::LeafMove: {
      const auto parent = t.parents();
      const int p = parent[static_cast<std::size_t>(move.v)];
      if (p < 0) throw std::invalid_argument("leaf move: cannot move the root");
      for (int s = 0; s < 3; ++s) {
        if (nodes[static_cast<std::size_t>(p)].child[static_cast<std::size_t>(s)] ==
            move.v) {
          nodes[static_cast<std::size_t>(p)].child[static_cast<std::size_t>(s)] =
              kNoChild;
        }
      }
      auto& target = nodes[static_cast<std::size_t>(move.w)];
      if (target.child[static_cast<std::size_t>(move.slot)] != kNoChild) {
        throw std::invalid_argument("leaf move: target slot occupied");
      }
      target.child[static_cast<std::size_t>(move.slot)] = move.v;
      nodes[static_cast<std::size_t>(move.v)].qubit = move.new_qubit;
      break;
    }
    case MoveKind::RootChange: {
      // Reverse parent/child designations along the root..v path. Each node
      // on the path re-hosts its former parent in the slot it just freed;
      // the new root uses its lowest free slot.
      const auto parent = t.parents();
      std::vector<int> path;
      for (int cur = move.v; cur != -1; cur = parent[static_cast<std::size_t>(cur)]) {
        path.push_back(cur);
      }
      std::reverse(path.begin(), path.end());  // root ... v
      std::vector<int> freed(path.size(), -1);
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        auto& pn = nodes[static_cast<std::size_t>(path[i])];
        for (int s = 0; s < 3; ++s) {
          if (pn.child[static_cast<std::size_t>(s)] == path[i + 1]) {
            pn.child[static_cast<std::size_t>(s)] = kNoChild;
            freed[i] = s;
          }
        }
      }
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        auto& cn = nodes[static_cast<std::size_t>(path[i + 1])];
        int slot = freed[i + 1];
        if (slot < 0) {
          for (int s = 0; s < 3; ++s) {
            if (cn.child[static_cast<std::size_t>(s)] == kNoChild) {
              slot = s;
              break;
            }
          }
        }
        if (slot < 0) throw std::invalid_argument("root change: no free slot");
        cn.child[static_cast<std::size_t>(slot)] = path[i];
      }
      root = move.v;
      break;
    }
    case MoveKind::PauliShuffle: {
      auto& node = nodes[static_cast<std::size_t>(move.v)];
      const auto& perm = kSlotPerms[static_cast<std::size_t>(move.perm)];
      const std::array<int, 3> old = node.child;
      for (int s = 0; s < 3; ++s) {
        node.child[static_cast<std::size_t>(s)] =
            old[static_cast<std::size_t>(perm[static_cast<std::size_t>(s)])];
      }
      break;
    }
    case MoveKind::ModeSwap: {
      std::swap(nodes[static_cast<std::size_t>(move.v)].mode,
                nodes[static_cast<std::size_t>(move.w)].mode);
      break;
    }
    case MoveKind::BraidFlip:
      nodes[static_cast<std::size_t>(move.v)].braid_minus =
          !nodes[static_cast<std::size_t>(move.v)].braid_minus;
      break;
  }
  return MappingTree(std::move(nodes), root);
}

/// Single draw: pick a move kind uniformly among the enabled kinds, then a
/// parameter tuple uniformly within the kind; nullopt when the drawn kind has
/// no legal instantiation (the caller's iteration budget absorbs redraws).
inline std::optional<MappingTree> try_propose_move(const MappingTree& t,
                                                   const HardwareGraph& g,
                                                   SearchMode mode,
                                                   bool enable_braiding, Rng& rng,
                                                   MoveKind* kind_out = nullptr) {
  std::vector<MoveKind> kinds;
  if (mode == SearchMode::Ms) {
    kinds = {MoveKind::ModeSwap};
  } else {
    for (MoveKind k : kAllMoveKinds) {
      if (k == MoveKind::BraidFlip && !enable_braiding) continue;
      kinds.push_back(k);
    }
  }
  const MoveKind kind = kinds[rng.next_below(kinds.size())];
  const auto moves = enumerate_moves_of_kind(t, g, mode, kind);
  if (moves.empty()) return std::nullopt;
  if (kind_out != nullptr) *kind_out = kind;
  return apply_move(t, moves[rng.next_below(moves.size())]);
}

/// Redraws until a legal move is found; throws when the configuration admits
/// no legal move at all.
inline MappingTree propose_move(const MappingTree& t, const HardwareGraph& g,
                                SearchMode mode, bool enable_braiding, Rng& rng) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    if (auto next = try_propose_move(t, g, mode, enable_braiding, rng)) {
      return *next;
    }
  }
  if (enumerate_moves(t, g, mode, enable_braiding).empty()) {
    throw std::invalid_argument("propose_move: no legal move exists");
  }
  // Extremely unlucky kind draws; enumerate once and pick uniformly.
  const auto moves = enumerate_moves(t, g, mode, enable_braiding);
  return apply_move(t, moves[rng.next_below(moves.size())]);
}

/// Metropolis rule: candidates that do not increase the cost are always
/// accepted; otherwise accept with probability exp(-delta / temp).
inline bool accept(double delta, double temp, Rng& rng) {
  if (temp <= 0) throw std::invalid_argument("accept: temperature must be > 0");
  if (delta <= 0) return true;
  return rng.next_double() < std::exp(-delta / temp);
}

struct AnnealConfig {
  std::int64_t iterations = 20000;
  double initial_temp = 0.0;  // <= 0: auto (max(1, initial_cost / 10))
  double cooling_factor = 0.995;
  std::uint64_t seed = 1;
  int restarts = 1;
  SearchMode search_mode = SearchMode::Cp;
  CostKind cost_kind = CostKind::Pauli;
  bool enable_braiding = true;

  void validate() const {
    if (iterations < 0) throw std::invalid_argument("config: iterations < 0");
    if (cooling_factor <= 0.0 || cooling_factor >= 1.0) {
      throw std::invalid_argument("config: cooling_factor must be in (0,1)");
    }
    if (restarts < 1) throw std::invalid_argument("config: restarts must be >= 1");
  }
};

struct AnnealResult {
  MappingTree best_mapping;
  std::int64_t best_cost = 0;
  std::int64_t initial_cost = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> cost_trace;  // (iter, cost)
  std::map<std::string, std::int64_t> accepted_moves;
  int best_restart = 0;
};

namespace detail {

inline std::int64_t mapping_cost(const FermionicAnsatz& ansatz,
                                 const MappingTree& t, const HardwareGraph& g,
                                 SearchMode mode, CostKind kind) {
  if (kind == CostKind::Compiled) {
    return compiled_cost(ansatz, t, g).total_cnots;
  }
  const auto mapped = map_ansatz(t, ansatz, g.n_vertices());
  const Connectivity conn = mode == SearchMode::Free ? Connectivity::Full
                                                     : Connectivity::Limited;
  return pauli_cost(mapped, g, t, conn).total_cnots;
}

}  // namespace detail

/// Simulated annealing over the mapping space: geometric cooling, restart
/// chains seeded with seed + restart index, best result over restarts (ties
/// to the lower restart index). Fully deterministic for a given config.
inline AnnealResult treespile_anneal(const FermionicAnsatz& ansatz,
                                     const HardwareGraph& g,
                                     const AnnealConfig& cfg) {
  ansatz.validate();
  cfg.validate();
  if (g.n_vertices() < static_cast<std::size_t>(ansatz.n_modes)) {
    throw std::invalid_argument("treespile: graph smaller than mode count");
  }
  const std::size_t n = static_cast<std::size_t>(ansatz.n_modes);
  const MappingTree start =
      (cfg.search_mode == SearchMode::Cp || cfg.search_mode == SearchMode::Ncp)
          ? bonsai_tree(g, n)
          : jw_tree(n);
  const std::int64_t initial_cost = detail::mapping_cost(
      ansatz, start, g, cfg.search_mode, cfg.cost_kind);

  std::optional<AnnealResult> best;
  for (int r = 0; r < cfg.restarts; ++r) {
    Rng rng(cfg.seed + static_cast<std::uint64_t>(r));
    AnnealResult res;
    res.best_mapping = start;
    res.best_cost = initial_cost;
    res.initial_cost = initial_cost;
    res.best_restart = r;
    res.cost_trace.push_back({0, initial_cost});
    for (MoveKind k : kAllMoveKinds) res.accepted_moves[to_string(k)] = 0;

    MappingTree current = start;
    std::int64_t current_cost = initial_cost;
    const double t0 = cfg.initial_temp > 0
                          ? cfg.initial_temp
                          : std::max<double>(1.0, static_cast<double>(initial_cost) / 10.0);
    double temp = t0;
    for (std::int64_t it = 0; it < cfg.iterations; ++it, temp *= cfg.cooling_factor) {
      MoveKind kind = MoveKind::BraidFlip;
      auto cand = try_propose_move(current, g, cfg.search_mode,
                                   cfg.enable_braiding, rng, &kind);
      if (!cand) continue;  // rejected redraw, budget consumed
      const std::int64_t cand_cost = detail::mapping_cost(
          ansatz, *cand, g, cfg.search_mode, cfg.cost_kind);
      if (accept(static_cast<double>(cand_cost - current_cost), temp, rng)) {
        current = std::move(*cand);
        current_cost = cand_cost;
        ++res.accepted_moves[to_string(kind)];
        res.cost_trace.push_back({it + 1, current_cost});
        if (current_cost < res.best_cost) {
          res.best_cost = current_cost;
          res.best_mapping = current;
        }
      }
    }
    if (!best || res.best_cost < best->best_cost) {
      best = std::move(res);
    }
  }
  return *best;
}

}  // namespace treespile
