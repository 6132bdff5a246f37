#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "treespile/anneal.hpp"
#include "treespile/graph.hpp"
#include "treespile/mapping.hpp"

namespace treespile {

/// Canonical key of a full mapping: nodes listed in ascending qubit order
/// with (qubit, mode, braid, per-slot child qubit) plus the root qubit. Two
/// mappings with equal keys generate identical Majorana assignments.
inline std::string mapping_key(const MappingTree& t) {
  std::vector<std::size_t> order(t.n_modes());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return t.node(static_cast<int>(a)).qubit < t.node(static_cast<int>(b)).qubit;
  });
  std::ostringstream os;
  os << "r" << t.node(t.root()).qubit;
  for (std::size_t id : order) {
    const auto& n = t.node(static_cast<int>(id));
    os << "|" << n.qubit << "," << n.mode << "," << (n.braid_minus ? '-' : '+');
    for (int s = 0; s < 3; ++s) {
      os << ",";
      const int c = n.child[static_cast<std::size_t>(s)];
      if (c == kNoChild) {
        os << "_";
      } else {
        os << t.node(c).qubit;
      }
    }
  }
  return os.str();
}

/// Structural key ignoring mode and braid labels.
inline std::string structure_key(const MappingTree& t) {
  std::vector<std::size_t> order(t.n_modes());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return t.node(static_cast<int>(a)).qubit < t.node(static_cast<int>(b)).qubit;
  });
  std::ostringstream os;
  os << "r" << t.node(t.root()).qubit;
  for (std::size_t id : order) {
    const auto& n = t.node(static_cast<int>(id));
    os << "|" << n.qubit;
    for (int s = 0; s < 3; ++s) {
      os << ",";
      const int c = n.child[static_cast<std::size_t>(s)];
      if (c == kNoChild) {
        os << "_";
      } else {
        os << t.node(c).qubit;
      }
    }
  }
  return os.str();
}

namespace detail {

inline void enumerate_structures_rec(const HardwareGraph& g, std::size_t n,
                                     std::vector<MappingNode>& nodes,
                                     std::vector<bool>& used,
                                     std::set<std::string>& keys,
                                     std::vector<MappingTree>* out) {
  if (nodes.size() == n) {
    MappingTree t(nodes, 0);
    auto key = structure_key(t);
    if (keys.insert(std::move(key)).second && out != nullptr) {
      out->push_back(std::move(t));
    }
    return;
  }
  for (std::size_t u = 0; u < nodes.size(); ++u) {
    for (int s = 0; s < 3; ++s) {
      if (nodes[u].child[static_cast<std::size_t>(s)] != kNoChild) continue;
      for (std::uint32_t v : g.neighbors(nodes[u].qubit)) {
        if (used[v]) continue;
        MappingNode child;
        child.qubit = v;
        child.mode = static_cast<std::uint32_t>(nodes.size());
        nodes[u].child[static_cast<std::size_t>(s)] =
            static_cast<int>(nodes.size());
        nodes.push_back(child);
        used[v] = true;
        enumerate_structures_rec(g, n, nodes, used, keys, out);
        used[v] = false;
        nodes.pop_back();
        nodes[u].child[static_cast<std::size_t>(s)] = kNoChild;
      }
    }
  }
}

}  // namespace detail

/// All distinct rooted labelled tree structures on the device (slot labels
/// and root matter, mode/braid labels fixed to a default). Device-connected:
/// every tree edge is a graph edge.
inline std::vector<MappingTree> enumerate_structures(const HardwareGraph& g,
                                                     std::size_t n_modes) {
  if (n_modes == 0) throw std::invalid_argument("enumerate: need n >= 1");
  std::vector<MappingTree> out;
  std::set<std::string> keys;
  for (std::uint32_t r = 0; r < g.n_vertices(); ++r) {
    std::vector<MappingNode> nodes(1);
    nodes[0].qubit = r;
    std::vector<bool> used(g.n_vertices(), false);
    used[r] = true;
    detail::enumerate_structures_rec(g, n_modes, nodes, used, keys, &out);
  }
  return out;
}

struct EnumerationCounts {
  std::uint64_t structures = 0;
  std::uint64_t mappings = 0;       // structures * n! * 2^n
  std::uint64_t bound_complete = 0;  // n!(2n)! C(Q,n)
  std::uint64_t bound_bounded_degree = 0;  // Q 3^n d^n (n-1)! 2^n n!
};

inline std::uint64_t factorial_u64(std::uint64_t n) {
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

inline std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

/// Exhaustive mapping count with the closed-form upper bounds. Enforced
/// limits: n_modes <= 4 and |V| <= 8 (the structure count is exponential).
inline EnumerationCounts count_mappings(const HardwareGraph& g,
                                        std::size_t n_modes) {
  if (n_modes > 4 || g.n_vertices() > 8) {
    throw std::invalid_argument("count_mappings: limits are n <= 4, |V| <= 8");
  }
  EnumerationCounts c;
  std::set<std::string> keys;
  for (std::uint32_t r = 0; r < g.n_vertices(); ++r) {
    std::vector<MappingNode> nodes(1);
    nodes[0].qubit = r;
    std::vector<bool> used(g.n_vertices(), false);
    used[r] = true;
    detail::enumerate_structures_rec(g, n_modes, nodes, used, keys, nullptr);
  }
  c.structures = keys.size();
  const std::uint64_t n = n_modes;
  c.mappings = c.structures * factorial_u64(n) * (std::uint64_t{1} << n);
  c.bound_complete = factorial_u64(n) * factorial_u64(2 * n) *
                     binomial_u64(g.n_vertices(), n);
  const std::uint64_t d = g.max_degree();
  std::uint64_t dpow = 1, three = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    dpow *= d;
    three *= 3;
  }
  c.bound_bounded_degree = g.n_vertices() * three * dpow *
                           factorial_u64(n - 1) * (std::uint64_t{1} << n) *
                           factorial_u64(n);
  return c;
}

struct ReachabilityReport {
  std::uint64_t enumerated = 0;
  std::uint64_t reached = 0;
  double fraction = 0.0;
};

/// BFS over the move graph (all five moves, braiding enabled, CP-constrained
/// leaf moves) from the given start, compared against the exhaustively
/// enumerated space of device-connected mappings.
inline ReachabilityReport reachability(const HardwareGraph& g,
                                       std::size_t n_modes,
                                       const MappingTree& start) {
  if (n_modes > 4 || g.n_vertices() > 8) {
    throw std::invalid_argument("reachability: limits are n <= 4, |V| <= 8");
  }
  ReachabilityReport report;
  const auto structures = enumerate_structures(g, n_modes);
  report.enumerated = structures.size() * factorial_u64(n_modes) *
                      (std::uint64_t{1} << n_modes);

  std::set<std::string> seen;
  std::deque<MappingTree> queue;
  seen.insert(mapping_key(start));
  queue.push_back(start);
  while (!queue.empty()) {
    const MappingTree cur = std::move(queue.front());
    queue.pop_front();
    for (const Move& m :
         enumerate_moves(cur, g, SearchMode::Cp, /*enable_braiding=*/true)) {
      MappingTree next = apply_move(cur, m);
      auto key = mapping_key(next);
      if (seen.insert(std::move(key)).second) {
        queue.push_back(std::move(next));
      }
    }
  }
  report.reached = seen.size();
  report.fraction = report.enumerated == 0
                        ? 0.0
                        : static_cast<double>(report.reached) /
                              static_cast<double>(report.enumerated);
  return report;
}

}  // namespace treespile
