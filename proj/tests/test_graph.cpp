#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "treespile/graph.hpp"
#include "treespile/rng.hpp"

using namespace treespile;

namespace {

// Brute-force Steiner oracle: smallest vertex superset of the terminals whose
// induced subgraph is connected, by exhaustive subset enumeration.
std::size_t brute_force_steiner_size(const HardwareGraph& g,
                                     const std::vector<std::uint32_t>& terminals) {
  std::vector<std::uint32_t> extra;
  for (std::uint32_t v = 0; v < g.n_vertices(); ++v) {
    bool is_term = false;
    for (auto t : terminals) is_term |= t == v;
    if (!is_term) extra.push_back(v);
  }
  auto connected = [&](const std::set<std::uint32_t>& verts) {
    std::set<std::uint32_t> seen{*verts.begin()};
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::uint32_t u : verts) {
        if (!seen.count(u)) continue;
        for (std::uint32_t v : g.neighbors(u)) {
          if (verts.count(v) && !seen.count(v)) {
            seen.insert(v);
            grew = true;
          }
        }
      }
    }
    return seen.size() == verts.size();
  };
  std::size_t best = g.n_vertices() + 1;
  REQUIRE(extra.size() <= 16);
  for (std::size_t mask = 0; mask < (std::size_t{1} << extra.size()); ++mask) {
    std::set<std::uint32_t> verts(terminals.begin(), terminals.end());
    for (std::size_t i = 0; i < extra.size(); ++i) {
      if (mask & (std::size_t{1} << i)) verts.insert(extra[i]);
    }
    if (verts.size() < best && connected(verts)) best = verts.size();
  }
  REQUIRE(best <= g.n_vertices());
  return best;
}

}  // namespace

TEST_CASE("presets") {
  REQUIRE(complete_graph(4).edges().size() == 6);

  const auto line = line_graph(5);
  REQUIRE(line.edges().size() == 4);
  REQUIRE(line.max_degree() == 2);

  const auto grid = grid_graph(3, 4);
  REQUIRE(grid.n_vertices() == 12);
  REQUIRE(grid.edges().size() == 17);  // r(c-1) + c(r-1)
  REQUIRE(grid.max_degree() == 4);

  const auto hh = heavy_hex_graph(127);
  REQUIRE(hh.n_vertices() == 127);
  REQUIRE(hh.max_degree() == 3);

  const auto hh12 = heavy_hex_graph(12);
  REQUIRE(hh12.n_vertices() == 12);
  REQUIRE(hh12.max_degree() <= 3);

  REQUIRE_THROWS_AS(complete_graph(0), std::invalid_argument);
  REQUIRE_THROWS_AS(grid_graph(0, 3), std::invalid_argument);
}

TEST_CASE("graph validation") {
  REQUIRE_THROWS_AS(HardwareGraph(3, {{0, 1}}), std::invalid_argument);  // disconnected
  REQUIRE_THROWS_AS(HardwareGraph(2, {{0, 0}}), std::invalid_argument);  // loop
  REQUIRE_THROWS_AS(HardwareGraph(2, {{0, 5}}), std::invalid_argument);  // range
}

TEST_CASE("shortest paths are deterministic") {
  const auto grid = grid_graph(3, 3);
  const auto p1 = grid.shortest_path(0, 8);
  const auto p2 = grid.shortest_path(0, 8);
  REQUIRE(p1 == p2);
  REQUIRE(p1.size() == grid.dist(0, 8) + 1);
  REQUIRE(p1.front() == 0);
  REQUIRE(p1.back() == 8);
}

TEST_CASE("case solver: connected terminals") {
  const auto grid = grid_graph(3, 3);
  const std::vector<std::uint32_t> terminals{0, 1, 2, 5};
  const auto r = steiner_pptt(grid, terminals);
  REQUIRE(r.is_certified_optimal);
  REQUIRE(r.tree_vertices == terminals);
  REQUIRE(r.tree_edges.size() == 3);
}

TEST_CASE("case solver: two components joined by the shortest path") {
  const auto line = line_graph(6);
  const auto r = steiner_pptt(line, {0, 5});
  REQUIRE(r.size() == 6);  // k + d - 1 = 2 + 5 - 1

  const auto grid = grid_graph(3, 4);
  const auto r2 = steiner_pptt(grid, {0, 2});
  REQUIRE(r2.size() == 3);
}

TEST_CASE("case solver: single repair vertex") {
  // A 3-leaf star: the three leaves are three components, fixed by the hub.
  const HardwareGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
  const auto r = steiner_pptt(star, {1, 2, 3});
  REQUIRE(r.is_certified_optimal);
  REQUIRE(r.size() == 4);

  // Three isolated corners of a grid that no single vertex repairs.
  const auto grid = grid_graph(3, 3);
  REQUIRE_FALSE(try_steiner_pptt(grid, {0, 2, 6}).has_value());
  REQUIRE_THROWS_AS(steiner_pptt(grid, {0, 2, 6}), std::invalid_argument);
}

TEST_CASE("exact solver basics") {
  const auto grid = grid_graph(3, 3);
  const auto single = steiner_exact_small(grid, {4});
  REQUIRE(single.size() == 1);
  REQUIRE(single.tree_edges.empty());

  const auto pair = steiner_exact_small(grid, {0, 1});
  REQUIRE(pair.size() == 2);
  REQUIRE(pair.tree_edges.size() == 1);

  REQUIRE_THROWS_AS(
      steiner_exact_small(complete_graph(21), {0, 1}),
      std::invalid_argument);
}

TEST_CASE("exact solver matches brute force") {
  Rng rng(31);
  for (const auto* name : {"heavy_hex", "grid"}) {
    const HardwareGraph g = name[0] == 'h' ? heavy_hex_graph(12) : grid_graph(3, 4);
    for (int it = 0; it < 25; ++it) {
      std::set<std::uint32_t> pick;
      const std::size_t count = 2 + rng.next_below(3);
      while (pick.size() < count) {
        pick.insert(static_cast<std::uint32_t>(rng.next_below(g.n_vertices())));
      }
      const std::vector<std::uint32_t> terminals(pick.begin(), pick.end());
      const auto exact = steiner_exact_small(g, terminals);
      REQUIRE(exact.size() == brute_force_steiner_size(g, terminals));
    }
  }
}

TEST_CASE("heuristic solver") {
  const auto line = line_graph(6);
  const auto whole = steiner_heuristic(line, {0, 5});
  REQUIRE(whole.size() == 6);
  REQUIRE_FALSE(whole.is_certified_optimal);

  // Connected terminals come back unchanged.
  const auto grid = grid_graph(3, 3);
  const auto conn = steiner_heuristic(grid, {0, 1, 2});
  REQUIRE(conn.tree_vertices == std::vector<std::uint32_t>{0, 1, 2});

  // Within twice the optimum on the grid corners.
  const std::vector<std::uint32_t> corners{0, 2, 6, 8};
  const auto heur = steiner_heuristic(grid, corners);
  const auto exact = steiner_exact_small(grid, corners);
  REQUIRE(heur.size() >= exact.size());
  REQUIRE(heur.size() <= 2 * exact.size());
}

TEST_CASE("edge additions never help the case solver less") {
  Rng rng(77);
  const auto base = grid_graph(3, 4);
  for (int it = 0; it < 40; ++it) {
    std::set<std::uint32_t> pick;
    while (pick.size() < 3) {
      pick.insert(static_cast<std::uint32_t>(rng.next_below(12)));
    }
    const std::vector<std::uint32_t> terminals(pick.begin(), pick.end());
    const auto before = try_steiner_pptt(base, terminals);
    if (!before) continue;
    auto edges = base.edges();
    const auto a = static_cast<std::uint32_t>(rng.next_below(12));
    const auto b = static_cast<std::uint32_t>(rng.next_below(12));
    if (a == b || base.has_edge(a, b)) continue;
    edges.push_back(make_edge(a, b));
    const HardwareGraph bigger(12, edges);
    const auto after = try_steiner_pptt(bigger, terminals);
    REQUIRE(after.has_value());
    REQUIRE(after->size() <= before->size());
  }
}
