#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace treespile {

using Edge = std::pair<std::uint32_t, std::uint32_t>;

inline Edge make_edge(std::uint32_t a, std::uint32_t b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

/// Undirected simple connected qubit-connectivity graph. All-pairs shortest
/// paths are computed once at construction and read-only afterwards; the BFS
/// visits neighbours in ascending index order so extracted paths are
/// deterministic.
class HardwareGraph {
 public:
  HardwareGraph(std::size_t n_vertices, std::vector<Edge> edges)
      : n_(n_vertices), adj_(n_vertices) {
    if (n_ == 0) {
      throw std::invalid_argument("graph: must have at least one vertex");
    }
    std::set<Edge> dedup;
    for (auto [a, b] : edges) {
      if (a >= n_ || b >= n_) {
        throw std::invalid_argument("graph: edge endpoint out of range");
      }
      if (a == b) {
        throw std::invalid_argument("graph: self-loops not allowed");
      }
      dedup.insert(make_edge(a, b));
    }
    edges_.assign(dedup.begin(), dedup.end());
    for (auto [a, b] : edges_) {
      adj_[a].push_back(b);
      adj_[b].push_back(a);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    build_apsp();
    if (!connected_) {
      throw std::invalid_argument("graph: must be connected");
    }
  }

  std::size_t n_vertices() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::uint32_t>& neighbors(std::uint32_t v) const {
    return adj_[v];
  }

  bool has_edge(std::uint32_t a, std::uint32_t b) const {
    if (a >= n_ || b >= n_) return false;
    const auto& nb = adj_[a];
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  std::uint32_t max_degree() const {
    std::size_t d = 0;
    for (const auto& nb : adj_) d = std::max(d, nb.size());
    return static_cast<std::uint32_t>(d);
  }

  std::uint32_t dist(std::uint32_t a, std::uint32_t b) const {
    return dist_[a * n_ + b];
  }

  /// Vertices of the unique BFS shortest path a..b, inclusive.
  std::vector<std::uint32_t> shortest_path(std::uint32_t a,
                                           std::uint32_t b) const {
    std::vector<std::uint32_t> rev{b};
    std::uint32_t cur = b;
    while (cur != a) {
      cur = parent_[a * n_ + cur];
      rev.push_back(cur);
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
  }

 private:
  void build_apsp() {
    const std::uint32_t inf = std::numeric_limits<std::uint32_t>::max();
    dist_.assign(n_ * n_, inf);
    parent_.assign(n_ * n_, inf);
    connected_ = true;
    for (std::uint32_t s = 0; s < n_; ++s) {
      auto* d = &dist_[s * n_];
      auto* p = &parent_[s * n_];
      d[s] = 0;
      std::deque<std::uint32_t> queue{s};
      while (!queue.empty()) {
        const std::uint32_t u = queue.front();
        queue.pop_front();
        for (std::uint32_t v : adj_[u]) {
          if (d[v] == inf) {
            d[v] = d[u] + 1;
            p[v] = u;
            queue.push_back(v);
          }
        }
      }
      for (std::uint32_t v = 0; v < n_; ++v) {
        if (d[v] == inf) connected_ = false;
      }
    }
  }

  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::uint32_t>> adj_;
  std::vector<std::uint32_t> dist_;
  std::vector<std::uint32_t> parent_;
  bool connected_ = false;
};

// ---------------------------------------------------------------------------
// Presets

inline HardwareGraph complete_graph(std::size_t q) {
  if (q == 0) throw std::invalid_argument("complete: size must be positive");
  std::vector<Edge> edges;
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = a + 1; b < q; ++b) edges.push_back({a, b});
  }
  return HardwareGraph(q, std::move(edges));
}

inline HardwareGraph line_graph(std::size_t q) {
  if (q == 0) throw std::invalid_argument("line: size must be positive");
  std::vector<Edge> edges;
  for (std::uint32_t a = 0; a + 1 < q; ++a) edges.push_back({a, a + 1});
  return HardwareGraph(q, std::move(edges));
}

inline HardwareGraph grid_graph(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("grid: sizes must be positive");
  }
  std::vector<Edge> edges;
  auto id = [cols](std::size_t r, std::size_t c) {
    return static_cast<std::uint32_t>(r * cols + c);
  };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c)});
    }
  }
  return HardwareGraph(rows * cols, std::move(edges));
}

/// Heavy-hexagon lattice truncated to q vertices. Rows of length 4W+3 are
/// joined by connector qubits every four columns with alternating offsets
/// (0, 2, 0, ...); W scales with q so that q = 127 matches the 15-column
/// IBM Eagle layout. Vertices are relabelled in BFS order from the top-left
/// corner before truncation, so every prefix is connected.
inline HardwareGraph heavy_hex_graph(std::size_t q) {
  if (q == 0) throw std::invalid_argument("heavy_hex: size must be positive");
  if (q <= 2) return line_graph(q);
  const long w_est = std::lround((std::sqrt(2.0 * static_cast<double>(q)) - 3.0) / 4.0);
  const std::size_t w = static_cast<std::size_t>(std::max<long>(1, w_est));
  const std::size_t row_len = 4 * w + 3;
  const std::size_t per_block = row_len + w + 1;  // one row + connectors below
  const std::size_t rows = (q + per_block - 1) / per_block + 1;

  // Build the full lattice first with row-major ids.
  std::vector<std::uint32_t> row_start(rows);
  std::size_t next = 0;
  std::vector<Edge> edges;
  std::vector<std::uint32_t> prev_connectors;  // ids of connectors above row r
  std::vector<std::size_t> prev_cols;
  for (std::size_t r = 0; r < rows; ++r) {
    row_start[r] = static_cast<std::uint32_t>(next);
    next += row_len;
    for (std::size_t c = 0; c + 1 < row_len; ++c) {
      edges.push_back({static_cast<std::uint32_t>(row_start[r] + c),
                       static_cast<std::uint32_t>(row_start[r] + c + 1)});
    }
    for (std::size_t i = 0; i < prev_connectors.size(); ++i) {
      edges.push_back({prev_connectors[i],
                       static_cast<std::uint32_t>(row_start[r] + prev_cols[i])});
    }
    prev_connectors.clear();
    prev_cols.clear();
    if (r + 1 < rows) {
      const std::size_t offset = (r % 2 == 0) ? 0 : 2;
      for (std::size_t c = offset; c < row_len; c += 4) {
        const auto conn = static_cast<std::uint32_t>(next++);
        edges.push_back({static_cast<std::uint32_t>(row_start[r] + c), conn});
        prev_connectors.push_back(conn);
        prev_cols.push_back(c);
      }
    }
  }
  const std::size_t total = next;
  if (total < q) {
    throw std::logic_error("heavy_hex: lattice smaller than requested");
  }

  // BFS relabel from vertex 0 and keep the first q vertices.
  std::vector<std::vector<std::uint32_t>> adj(total);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());
  const std::uint32_t unset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> label(total, unset);
  std::deque<std::uint32_t> queue{0};
  label[0] = 0;
  std::uint32_t assigned = 1;
  while (!queue.empty()) {
    const std::uint32_t u = queue.front();
    queue.pop_front();
    for (std::uint32_t v : adj[u]) {
      if (label[v] == unset) {
        label[v] = assigned++;
        queue.push_back(v);
      }
    }
  }
  std::vector<Edge> kept;
  for (auto [a, b] : edges) {
    if (label[a] < q && label[b] < q) {
      kept.push_back(make_edge(label[a], label[b]));
    }
  }
  return HardwareGraph(q, std::move(kept));
}

// ---------------------------------------------------------------------------
// Steiner trees

struct SteinerResult {
  std::vector<std::uint32_t> tree_vertices;  // sorted ascending
  std::vector<Edge> tree_edges;
  bool is_certified_optimal = false;

  std::size_t size() const { return tree_vertices.size(); }
};

/// Checks that the result is a tree spanning its vertices and covering the
/// terminals. Throws std::logic_error on violation.
inline void validate_steiner_result(const SteinerResult& r,
                                    const HardwareGraph& g,
                                    const std::vector<std::uint32_t>& terminals) {
  if (r.tree_vertices.empty()) {
    throw std::logic_error("steiner: empty result");
  }
  if (r.tree_edges.size() + 1 != r.tree_vertices.size()) {
    throw std::logic_error("steiner: edge count is not vertex count - 1");
  }
  std::set<std::uint32_t> verts(r.tree_vertices.begin(), r.tree_vertices.end());
  if (verts.size() != r.tree_vertices.size()) {
    throw std::logic_error("steiner: duplicate vertices");
  }
  for (std::uint32_t t : terminals) {
    if (verts.find(t) == verts.end()) {
      throw std::logic_error("steiner: terminal not covered");
    }
  }
  // Connectivity over tree edges (with |E| = |V|-1 this also rules out cycles).
  std::set<std::uint32_t> seen{r.tree_vertices.front()};
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto [a, b] : r.tree_edges) {
      if (!g.has_edge(a, b)) {
        throw std::logic_error("steiner: edge not in graph");
      }
      const bool ia = seen.count(a) > 0, ib = seen.count(b) > 0;
      if (ia != ib) {
        seen.insert(ia ? b : a);
        grew = true;
      }
    }
  }
  if (seen.size() != verts.size()) {
    throw std::logic_error("steiner: tree not connected");
  }
}

namespace detail {

// Deterministic BFS spanning tree of the subgraph induced by `verts`,
// started from the smallest vertex. Returns nullopt if disconnected.
inline std::optional<SteinerResult> induced_spanning_tree(
    const HardwareGraph& g, const std::vector<std::uint32_t>& verts) {
  if (verts.empty()) return std::nullopt;
  std::vector<std::uint32_t> sorted = verts;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::set<std::uint32_t> in_set(sorted.begin(), sorted.end());
  std::set<std::uint32_t> seen{sorted.front()};
  std::deque<std::uint32_t> queue{sorted.front()};
  SteinerResult r;
  while (!queue.empty()) {
    const std::uint32_t u = queue.front();
    queue.pop_front();
    for (std::uint32_t v : g.neighbors(u)) {
      if (in_set.count(v) && !seen.count(v)) {
        seen.insert(v);
        r.tree_edges.push_back(make_edge(u, v));
        queue.push_back(v);
      }
    }
  }
  if (seen.size() != sorted.size()) return std::nullopt;
  r.tree_vertices = sorted;
  return r;
}

// Connected components of the induced subgraph; each component sorted, the
// list sorted by smallest member.
inline std::vector<std::vector<std::uint32_t>> induced_components(
    const HardwareGraph& g, const std::vector<std::uint32_t>& verts) {
  std::set<std::uint32_t> remaining(verts.begin(), verts.end());
  std::vector<std::vector<std::uint32_t>> comps;
  while (!remaining.empty()) {
    const std::uint32_t start = *remaining.begin();
    std::vector<std::uint32_t> comp;
    std::deque<std::uint32_t> queue{start};
    remaining.erase(start);
    while (!queue.empty()) {
      const std::uint32_t u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (std::uint32_t v : g.neighbors(u)) {
        auto it = remaining.find(v);
        if (it != remaining.end()) {
          remaining.erase(it);
          queue.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

}  // namespace detail

/// Steiner tree for terminal sets with the structure guaranteed for products
/// of 2 or 4 Majorana strings of a device-connected mapping: (a) the induced
/// subgraph is connected; (b) it has exactly two components, joined along the
/// shortest inter-component path; (c) a single extra vertex reconnects it.
/// Returns nullopt when no case applies (caller falls back to the heuristic).
/// All returned results are certified optimal.
inline std::optional<SteinerResult> try_steiner_pptt(
    const HardwareGraph& g, const std::vector<std::uint32_t>& terminals) {
  if (terminals.empty()) return std::nullopt;
  for (std::uint32_t t : terminals) {
    if (t >= g.n_vertices()) {
      throw std::invalid_argument("steiner: terminal out of range");
    }
  }
  auto comps = detail::induced_components(g, terminals);
  if (comps.size() == 1) {
    auto r = detail::induced_spanning_tree(g, terminals);
    r->is_certified_optimal = true;
    validate_steiner_result(*r, g, terminals);
    return r;
  }
  if (comps.size() == 2) {
    // Shortest path between the two components; ties broken by the lowest
    // (source, target) vertex pair, then by the deterministic BFS path.
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    std::pair<std::uint32_t, std::uint32_t> pick{0, 0};
    for (std::uint32_t a : comps[0]) {
      for (std::uint32_t b : comps[1]) {
        const std::uint32_t d = g.dist(a, b);
        if (d < best || (d == best && std::make_pair(a, b) < pick)) {
          best = d;
          pick = {a, b};
        }
      }
    }
    std::vector<std::uint32_t> verts(terminals.begin(), terminals.end());
    for (std::uint32_t v : g.shortest_path(pick.first, pick.second)) {
      verts.push_back(v);
    }
    auto r = detail::induced_spanning_tree(g, verts);
    if (!r) return std::nullopt;
    r->is_certified_optimal = true;
    validate_steiner_result(*r, g, terminals);
    return r;
  }
  // Three or more components: look for a single repair vertex adjacent to
  // every component; the lowest-index fix is chosen.
  std::set<std::uint32_t> term_set(terminals.begin(), terminals.end());
  for (std::uint32_t v = 0; v < g.n_vertices(); ++v) {
    if (term_set.count(v)) continue;
    bool hits_all = true;
    for (const auto& comp : comps) {
      bool hit = false;
      for (std::uint32_t u : comp) {
        if (g.has_edge(v, u)) {
          hit = true;
          break;
        }
      }
      if (!hit) {
        hits_all = false;
        break;
      }
    }
    if (hits_all) {
      std::vector<std::uint32_t> verts(terminals.begin(), terminals.end());
      verts.push_back(v);
      auto r = detail::induced_spanning_tree(g, verts);
      if (!r) continue;
      r->is_certified_optimal = true;
      validate_steiner_result(*r, g, terminals);
      return r;
    }
  }
  return std::nullopt;
}

/// Throwing wrapper around try_steiner_pptt.
inline SteinerResult steiner_pptt(const HardwareGraph& g,
                                  const std::vector<std::uint32_t>& terminals) {
  auto r = try_steiner_pptt(g, terminals);
  if (!r) {
    throw std::invalid_argument(
        "steiner_pptt: terminals do not match any supported case");
  }
  return *r;
}

/// Exact minimum Steiner tree by Dreyfus-Wagner dynamic programming.
/// Enforced limits: at most 10 terminals and 20 vertices.
inline SteinerResult steiner_exact_small(
    const HardwareGraph& g, const std::vector<std::uint32_t>& terminals_in) {
  std::vector<std::uint32_t> terminals = terminals_in;
  std::sort(terminals.begin(), terminals.end());
  terminals.erase(std::unique(terminals.begin(), terminals.end()),
                  terminals.end());
  if (terminals.empty()) {
    throw std::invalid_argument("steiner_exact_small: no terminals");
  }
  if (terminals.size() > 10 || g.n_vertices() > 20) {
    throw std::invalid_argument("steiner_exact_small: instance too large");
  }
  const std::size_t n = g.n_vertices();
  const std::size_t k = terminals.size();
  SteinerResult result;
  result.is_certified_optimal = true;
  if (k == 1) {
    result.tree_vertices = {terminals[0]};
    return result;
  }

  const std::uint32_t inf = std::numeric_limits<std::uint32_t>::max() / 4;
  const std::size_t n_masks = std::size_t{1} << k;
  std::vector<std::uint32_t> dp(n_masks * n, inf);
  // choice: 0 = base path to terminal, 1 = split (store submask),
  // 2 = edge relax (store predecessor vertex).
  struct Choice {
    std::uint8_t type = 0;
    std::uint32_t arg = 0;
  };
  std::vector<Choice> choice(n_masks * n);

  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t mask = std::size_t{1} << i;
    for (std::size_t v = 0; v < n; ++v) {
      dp[mask * n + v] = g.dist(terminals[i], static_cast<std::uint32_t>(v));
      choice[mask * n + v] = {0, static_cast<std::uint32_t>(i)};
    }
  }
  for (std::size_t mask = 1; mask < n_masks; ++mask) {
    if ((mask & (mask - 1)) == 0) continue;  // singletons done
    const std::size_t low = mask & (~mask + 1);
    for (std::size_t v = 0; v < n; ++v) {
      // Combine two sub-solutions meeting at v; the submask containing the
      // lowest terminal avoids double enumeration.
      for (std::size_t sub = (mask - 1) & mask; sub != 0;
           sub = (sub - 1) & mask) {
        if ((sub & low) == 0) continue;
        if (sub == mask) continue;
        const std::uint32_t cand = dp[sub * n + v] + dp[(mask ^ sub) * n + v];
        if (cand < dp[mask * n + v]) {
          dp[mask * n + v] = cand;
          choice[mask * n + v] = {1, static_cast<std::uint32_t>(sub)};
        }
      }
    }
    // Bellman-Ford relaxation across graph edges.
    for (std::size_t round = 0; round < n; ++round) {
      bool changed = false;
      for (std::size_t v = 0; v < n; ++v) {
        for (std::uint32_t u : g.neighbors(static_cast<std::uint32_t>(v))) {
          const std::uint32_t cand = dp[mask * n + u] + 1;
          if (cand < dp[mask * n + v]) {
            dp[mask * n + v] = cand;
            choice[mask * n + v] = {2, u};
            changed = true;
          }
        }
      }
      if (!changed) break;
    }
  }

  const std::size_t full = n_masks - 1;
  std::uint32_t best_v = 0, best = inf;
  for (std::size_t v = 0; v < n; ++v) {
    if (dp[full * n + v] < best) {
      best = dp[full * n + v];
      best_v = static_cast<std::uint32_t>(v);
    }
  }

  std::set<Edge> edge_set;
  std::set<std::uint32_t> vert_set;
  // Iterative reconstruction over (mask, vertex) states.
  std::vector<std::pair<std::size_t, std::uint32_t>> stack{{full, best_v}};
  while (!stack.empty()) {
    auto [mask, v] = stack.back();
    stack.pop_back();
    vert_set.insert(v);
    const Choice c = choice[mask * n + v];
    if (c.type == 0) {
      const std::uint32_t t = terminals[c.arg];
      auto path = g.shortest_path(t, v);
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        edge_set.insert(make_edge(path[i], path[i + 1]));
        vert_set.insert(path[i]);
      }
      vert_set.insert(t);
    } else if (c.type == 1) {
      stack.push_back({c.arg, v});
      stack.push_back({mask ^ c.arg, v});
    } else {
      edge_set.insert(make_edge(c.arg, v));
      stack.push_back({mask, c.arg});
    }
  }
  result.tree_vertices.assign(vert_set.begin(), vert_set.end());
  result.tree_edges.assign(edge_set.begin(), edge_set.end());
  validate_steiner_result(result, g, terminals);
  if (result.tree_edges.size() != best) {
    throw std::logic_error("steiner_exact_small: reconstruction mismatch");
  }
  return result;
}

/// Metric-closure MST heuristic (2-approximation): Prim over terminal
/// distances, expand MST edges to shortest paths, take a spanning tree of the
/// union and prune non-terminal leaves. Never certified optimal.
inline SteinerResult steiner_heuristic(
    const HardwareGraph& g, const std::vector<std::uint32_t>& terminals_in) {
  std::vector<std::uint32_t> terminals = terminals_in;
  std::sort(terminals.begin(), terminals.end());
  terminals.erase(std::unique(terminals.begin(), terminals.end()),
                  terminals.end());
  if (terminals.empty()) {
    throw std::invalid_argument("steiner_heuristic: no terminals");
  }
  for (std::uint32_t t : terminals) {
    if (t >= g.n_vertices()) {
      throw std::invalid_argument("steiner_heuristic: terminal out of range");
    }
  }
  std::set<std::uint32_t> union_verts;
  std::set<Edge> union_edges;
  union_verts.insert(terminals[0]);

  const std::uint32_t inf = std::numeric_limits<std::uint32_t>::max();
  std::vector<bool> in_tree(terminals.size(), false);
  std::vector<std::uint32_t> best_d(terminals.size(), inf);
  std::vector<std::uint32_t> attach(terminals.size(), terminals[0]);
  in_tree[0] = true;
  for (std::size_t i = 1; i < terminals.size(); ++i) {
    best_d[i] = g.dist(terminals[0], terminals[i]);
  }
  for (std::size_t added = 1; added < terminals.size(); ++added) {
    std::size_t pick = 0;
    std::uint32_t pick_d = inf;
    for (std::size_t i = 0; i < terminals.size(); ++i) {
      if (!in_tree[i] && best_d[i] < pick_d) {
        pick_d = best_d[i];
        pick = i;
      }
    }
    in_tree[pick] = true;
    auto path = g.shortest_path(attach[pick], terminals[pick]);
    for (std::size_t i = 0; i < path.size(); ++i) {
      union_verts.insert(path[i]);
      if (i + 1 < path.size()) union_edges.insert(make_edge(path[i], path[i + 1]));
    }
    for (std::size_t i = 0; i < terminals.size(); ++i) {
      if (in_tree[i]) continue;
      const std::uint32_t d = g.dist(terminals[pick], terminals[i]);
      if (d < best_d[i]) {
        best_d[i] = d;
        attach[i] = terminals[pick];
      }
    }
  }

  // Spanning tree of the union subgraph, then prune non-terminal leaves.
  std::set<std::uint32_t> term_set(terminals.begin(), terminals.end());
  std::vector<std::uint32_t> verts(union_verts.begin(), union_verts.end());
  std::set<std::uint32_t> seen{verts.front()};
  std::deque<std::uint32_t> queue{verts.front()};
  std::vector<Edge> tree_edges;
  while (!queue.empty()) {
    const std::uint32_t u = queue.front();
    queue.pop_front();
    for (std::uint32_t v : g.neighbors(u)) {
      if (union_verts.count(v) && !seen.count(v) &&
          union_edges.count(make_edge(u, v))) {
        seen.insert(v);
        tree_edges.push_back(make_edge(u, v));
        queue.push_back(v);
      }
    }
  }
  bool pruned = true;
  std::set<std::uint32_t> kept(seen.begin(), seen.end());
  while (pruned) {
    pruned = false;
    std::vector<std::size_t> degree_count;
    for (auto it = kept.begin(); it != kept.end();) {
      const std::uint32_t v = *it;
      std::size_t deg = 0;
      for (const auto& e : tree_edges) {
        if (e.first == v || e.second == v) ++deg;
      }
      if (deg <= 1 && !term_set.count(v)) {
        tree_edges.erase(std::remove_if(tree_edges.begin(), tree_edges.end(),
                                        [v](const Edge& e) {
                                          return e.first == v || e.second == v;
                                        }),
                         tree_edges.end());
        it = kept.erase(it);
        pruned = true;
      } else {
        ++it;
      }
    }
  }

  SteinerResult r;
  r.tree_vertices.assign(kept.begin(), kept.end());
  r.tree_edges = std::move(tree_edges);
  r.is_certified_optimal = false;
  validate_steiner_result(r, g, terminals);
  return r;
}

}  // namespace treespile
