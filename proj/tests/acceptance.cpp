// Acceptance suite: one line per criterion, nonzero exit on any hard failure.
// Criterion 9 is a soft benchmark target; a miss prints WARN and is reported
// as a flagged regression without failing the run.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "treespile/dense.hpp"
#include "treespile/enumerate.hpp"
#include "treespile/io.hpp"
#include "treespile/treespile.hpp"

using namespace treespile;

namespace {

int failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2e", v);
  return buf;
}

void report(int criterion, const std::string& name, bool pass, double seconds,
            const std::string& detail, bool soft = false) {
  const char* tag = pass ? "PASS" : (soft ? "WARN" : "FAIL");
  std::printf("%s criterion %2d: %s (%s, %.2fs)\n", tag, criterion, name.c_str(),
              detail.c_str(), seconds);
  std::fflush(stdout);
  if (!pass && !soft) ++failures;
}

std::string data_file(const std::string& name) {
  return std::string(TREESPILE_DATA_DIR) + "/" + name;
}

// --------------------------------------------------------------------------

void criterion_1_jw_equivalence() {
  Timer timer;
  bool pass = true;
  std::string detail = "N = 2..16 bit-exact";
  for (std::size_t n = 2; n <= 16 && pass; ++n) {
    const auto t = jw_tree(n);
    const auto a = pair_strings(t);
    PauliString all_z(n);
    for (std::size_t j = 0; j < n; ++j) {
      PauliString mx(n), my(n);
      for (std::size_t k = 0; k < j; ++k) {
        mx.set_letter(k, 'Z');
        my.set_letter(k, 'Z');
      }
      mx.set_letter(j, 'X');
      my.set_letter(j, 'Y');
      all_z.set_letter(j, 'Z');
      pass = pass && a.string[2 * j] == mx && a.string[2 * j + 1] == my &&
             a.sign[2 * j] == 1 && a.sign[2 * j + 1] == 1;
    }
    const auto legs = strings_from_tree(t);
    pass = pass && legs.size() == 2 * n + 1;
    std::size_t z_hits = 0;
    for (const auto& leg : legs) z_hits += leg == all_z ? 1 : 0;
    pass = pass && z_hits == 1;
    if (!pass) detail = "mismatch at N = " + std::to_string(n);
  }
  const double sec = timer.seconds();
  if (sec >= 1.0) {
    pass = false;
    detail += "; over 1 s budget";
  }
  report(1, "path-mapping equivalence", pass, sec, detail);
}

void criterion_2_anticommutation() {
  Timer timer;
  Rng rng(202);
  bool pass = true;
  std::string detail = "200 random trees, N <= 12";
  for (int it = 0; it < 200 && pass; ++it) {
    const std::size_t n = 2 + rng.next_below(11);
    const auto t = random_tree(n, rng);
    const auto legs = strings_from_tree(t);
    for (std::size_t i = 0; i < legs.size() && pass; ++i) {
      for (std::size_t j = i + 1; j < legs.size(); ++j) {
        if (legs[i].commutes_with(legs[j])) {
          pass = false;
          detail = "commuting pair found";
          break;
        }
      }
    }
    const auto prof = occupation_profile(pair_strings(t));
    for (int s : prof.sign) {
      if (s != -1) {
        pass = false;
        detail = "sign violation";
      }
    }
    std::vector<int> occ(n, 0);
    for (std::size_t j = 0; j < n; ++j) occ[j] = static_cast<int>(j % 2);
    try {
      occupation_to_bitstring(t, occ);  // also proves D invertible
    } catch (const std::exception&) {
      pass = false;
      detail = "singular occupation matrix";
    }
  }
  const double sec = timer.seconds();
  if (sec >= 30.0) {
    pass = false;
    detail += "; over 30 s budget";
  }
  report(2, "anticommutation and pairing soundness", pass, sec, detail);
}

void criterion_3_vacuum() {
  Timer timer;
  Rng rng(303);
  double worst = 0.0;
  for (int it = 0; it < 50; ++it) {
    const std::size_t n = 2 + rng.next_below(5);  // N <= 6
    const auto t = random_tree(n, rng);
    const auto a = pair_strings(t);
    DenseState vac(n);
    for (std::size_t j = 0; j < n; ++j) {
      worst = std::max(worst, apply_sum(vac, mapped_annihilator(a, j)).norm());
    }
  }
  const double sec = timer.seconds();
  bool pass = worst <= 1e-12;
  std::string detail = "max residual " + sci(worst);
  if (sec >= 60.0) {
    pass = false;
    detail += "; over 60 s budget";
  }
  report(3, "vacuum annihilation", pass, sec, detail);
}

void criterion_4_energy_invariance() {
  Timer timer;
  Rng rng(404);
  double worst = 0.0;
  for (int it = 0; it < 20; ++it) {
    const int n = 5 + static_cast<int>(rng.next_below(2));  // N = 5, 6
    // Random Hermitian Hamiltonian: quadratics with imaginary coefficients,
    // quartics with real ones.
    HamiltonianSpec h;
    h.n_modes = n;
    for (int k = 0; k < 6; ++k) {
      std::vector<int> idx;
      const int arity = k < 3 ? 2 : 4;
      while (static_cast<int>(idx.size()) < arity) {
        const int c = static_cast<int>(rng.next_below(2 * n));
        bool dup = false;
        for (int v : idx) dup |= v == c;
        if (!dup) idx.push_back(c);
      }
      std::sort(idx.begin(), idx.end());
      const double mag = rng.next_double() - 0.5;
      h.terms.push_back(MajoranaMonomial(
          idx, arity == 2 ? std::complex<double>(0.0, mag)
                          : std::complex<double>(mag, 0.0)));
    }
    FermionicAnsatz ansatz;
    ansatz.n_modes = n;
    ansatz.reference_occupations.assign(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n / 2; ++j) ansatz.reference_occupations[j] = 1;
    for (int k = 0; k < 4; ++k) {
      std::vector<int> idx;
      while (static_cast<int>(idx.size()) < 4) {
        const int c = static_cast<int>(rng.next_below(2 * n));
        bool dup = false;
        for (int v : idx) dup |= v == c;
        if (!dup) idx.push_back(c);
      }
      const double theta = rng.next_double() - 0.5;
      if (k % 2 == 0) {
        ansatz.generators.push_back(
            FermionicGenerator::maj4(idx[0], idx[1], idx[2], idx[3], theta));
      } else {
        ansatz.generators.push_back(
            FermionicGenerator::maj2(idx[0], idx[1], theta));
      }
    }
    auto energy_under = [&](const MappingTree& t) {
      const auto bits = occupation_to_bitstring(t, ansatz.reference_occupations);
      std::size_t index = 0;
      for (std::size_t q = 0; q < bits.size(); ++q) {
        if (bits[q]) index |= std::size_t{1} << q;
      }
      DenseState s = DenseState::basis(t.min_width(), index);
      for (const auto& mg : map_ansatz(t, ansatz)) {
        s = apply_generator_exp(s, mg.sum, mg.theta);
      }
      return expectation(s, map_hamiltonian(t, h)).real();
    };
    const double e1 = energy_under(random_tree(static_cast<std::size_t>(n), rng));
    const double e2 = energy_under(random_tree(static_cast<std::size_t>(n), rng));
    worst = std::max(worst, std::abs(e1 - e2));
  }
  const double sec = timer.seconds();
  bool pass = worst <= 1e-9;
  std::string detail = "max spread " + sci(worst);
  if (sec >= 120.0) {
    pass = false;
    detail += "; over 2 min budget";
  }
  report(4, "energy invariance across mappings", pass, sec, detail);
}

void criterion_5_braiding() {
  Timer timer;
  const auto t = jw_tree(2);
  const auto a = pair_strings(t);
  const auto [c, p] = map_monomial(a, MajoranaMonomial({2, 1}, {1.0, 0.0}));
  DenseState vac(2);
  const DenseState out = apply_pauli_exp(vac, p, (M_PI / 4.0) * c.imag());
  const double inv = 1.0 / std::sqrt(2.0);
  double err = std::abs(out.amp[0] - std::complex<double>(inv, 0.0));
  err = std::max(err, std::abs(out.amp[3] - std::complex<double>(0.0, -inv)));
  err = std::max(err, std::abs(out.amp[1]));
  err = std::max(err, std::abs(out.amp[2]));
  report(5, "braiding identity on the vacuum", err <= 1e-12, timer.seconds(),
         "amplitude error " + sci(err));
}

void criterion_6_circuit_correctness() {
  Timer timer;
  Rng rng(606);
  bool pass = true;
  double worst = 0.0;
  const char letters[3] = {'X', 'Y', 'Z'};
  for (int it = 0; it < 100 && pass; ++it) {
    const std::size_t n = 2 + rng.next_below(7);  // up to 8 qubits
    // Random connected graph: a random spanning tree plus extra edges.
    std::vector<Edge> edges;
    for (std::uint32_t v = 1; v < n; ++v) {
      edges.push_back(make_edge(v, static_cast<std::uint32_t>(rng.next_below(v))));
    }
    for (int extra = 0; extra < static_cast<int>(n); ++extra) {
      const auto a = static_cast<std::uint32_t>(rng.next_below(n));
      const auto b = static_cast<std::uint32_t>(rng.next_below(n));
      if (a != b) edges.push_back(make_edge(a, b));
    }
    const HardwareGraph g(n, edges);
    PauliString p(n);
    bool any = false;
    for (std::size_t q = 0; q < n; ++q) {
      if (rng.next_below(2)) {
        p.set_letter(q, letters[rng.next_below(3)]);
        any = true;
      }
    }
    if (!any) p.set_letter(rng.next_below(n), 'X');
    const double theta = 2.0 * rng.next_double() - 1.0;
    std::vector<std::uint32_t> terminals;
    for (std::size_t q : p.support()) {
      terminals.push_back(static_cast<std::uint32_t>(q));
    }
    auto st = try_steiner_pptt(g, terminals);
    if (!st) st = steiner_heuristic(g, terminals);
    const auto circuit = compile_pauli_exp(p, theta, g, *st);
    const std::size_t expected =
        2 * (2 * st->tree_vertices.size() - terminals.size() - 1);
    if (circuit.cnot_count() != expected) {
      pass = false;
      break;
    }
    PauliSum sum(n);
    sum.add_term({0.0, 1.0}, p);
    sum.simplify();
    worst = std::max(worst,
                     phase_insensitive_distance(
                         circuit_unitary(circuit),
                         generator_exponential(sum, theta)));
  }
  pass = pass && worst <= 1e-9;
  const double sec = timer.seconds();
  std::string detail = "100 exponentials, max distance " + sci(worst);
  if (sec >= 120.0) {
    pass = false;
    detail += "; over 2 min budget";
  }
  report(6, "compiled exponential correctness", pass, sec, detail);
}

void criterion_7_steiner_optimality() {
  Timer timer;
  Rng rng(707);
  bool pass = true;
  int compared = 0, resampled = 0, monotone_checks = 0;
  std::string detail;
  const std::vector<HardwareGraph> graphs{heavy_hex_graph(12), grid_graph(3, 4)};
  for (int gi = 0; gi < 2 && pass; ++gi) {
    const auto& g = graphs[static_cast<std::size_t>(gi)];
    int samples = 0;
    while (samples < 250 && pass) {
      const auto t = random_cp_tree(g, 6, rng);
      const auto a = pair_strings(t, g.n_vertices());
      const int arity = rng.next_below(2) ? 2 : 4;
      std::vector<int> idx;
      while (static_cast<int>(idx.size()) < arity) {
        const int c = static_cast<int>(rng.next_below(12));
        bool dup = false;
        for (int v : idx) dup |= v == c;
        if (!dup) idx.push_back(c);
      }
      const auto [coeff, p] = map_monomial(a, MajoranaMonomial(idx, {1.0, 0.0}));
      if (p.is_identity_letters()) continue;
      std::vector<std::uint32_t> terminals;
      for (std::size_t q : p.support()) {
        terminals.push_back(static_cast<std::uint32_t>(q));
      }
      // Every 2-/4-Majorana product must match one of the optimal cases.
      const auto st = try_steiner_pptt(g, terminals);
      if (!st) {
        pass = false;
        detail = "case analysis failed on a Majorana product";
        break;
      }
      if (arity == 2) {
        // Quadratic products always induce a connected subgraph.
        if (st->size() != terminals.size()) {
          pass = false;
          detail = "2-Majorana product was not connected";
          break;
        }
      }
      if (terminals.size() > 10) {
        ++resampled;  // exact oracle limit; case checks above still ran
        continue;
      }
      const auto exact = steiner_exact_small(g, terminals);
      ++compared;
      ++samples;
      if (exact.size() != st->size()) {
        pass = false;
        detail = "optimal-case size differs from exact";
        break;
      }
      // Adding an edge must never grow the optimal tree.
      if (monotone_checks < 100) {
        const auto x = static_cast<std::uint32_t>(rng.next_below(12));
        const auto y = static_cast<std::uint32_t>(rng.next_below(12));
        if (x != y && !g.has_edge(x, y)) {
          auto edges = g.edges();
          edges.push_back(make_edge(x, y));
          const HardwareGraph bigger(12, edges);
          const auto after = try_steiner_pptt(bigger, terminals);
          ++monotone_checks;
          if (!after || after->size() > st->size()) {
            pass = false;
            detail = "edge addition increased the tree";
            break;
          }
        }
      }
    }
  }
  const double sec = timer.seconds();
  if (detail.empty()) {
    detail = std::to_string(compared) + " exact comparisons, " +
             std::to_string(monotone_checks) + " monotonicity checks, " +
             std::to_string(resampled) + " oversize resamples";
  }
  if (sec >= 300.0) {
    pass = false;
    detail += "; over 5 min budget";
  }
  report(7, "optimal-case Steiner equals exact", pass, sec, detail);
}

void criterion_8_annealing_guarantees() {
  Timer timer;
  bool pass = true;
  std::string detail;

  const auto file =
      ansatz_from_json(load_json_file(data_file("benchmark_majoranic_12.json")));
  FermionicAnsatz small = file.fermionic();
  small.generators.resize(10);

  AnnealConfig cfg;
  cfg.iterations = 1500;
  cfg.restarts = 2;
  cfg.seed = 88;
  cfg.search_mode = SearchMode::Cp;
  const auto g = heavy_hex_graph(24);
  const auto run1 = treespile_anneal(small, g, cfg);
  const auto run2 = treespile_anneal(small, g, cfg);
  if (run1.best_cost > run1.initial_cost) {
    pass = false;
    detail = "best exceeded initial";
  }
  const std::string fp1 = mapping_to_json(run1.best_mapping).dump() +
                          std::to_string(run1.best_cost);
  const std::string fp2 = mapping_to_json(run2.best_mapping).dump() +
                          std::to_string(run2.best_cost);
  if (fp1 != fp2) {
    pass = false;
    detail = "seeded runs disagree";
  }
  if (run1.cost_trace.size() != run2.cost_trace.size() ||
      run1.cost_trace != run2.cost_trace) {
    pass = false;
    detail = "seeded traces disagree";
  }

  // Move fuzzing: 1e5 proposals across modes keep every invariant.
  Rng rng(808);
  MappingTree cur = bonsai_tree(g, 12);
  MappingTree free_cur = jw_tree(8);
  const auto free_graph = complete_graph(8);
  for (int it = 0; it < 100000 && pass; ++it) {
    if (it % 2 == 0) {
      if (auto next = try_propose_move(cur, g, SearchMode::Cp, true, rng)) {
        cur = *next;
        if (!cur.is_subgraph_of(g)) {
          pass = false;
          detail = "cp move left the device";
        }
      }
    } else {
      if (auto next = try_propose_move(free_cur, free_graph, SearchMode::Free,
                                       true, rng)) {
        free_cur = *next;
      }
    }
  }
  if (detail.empty()) detail = "determinism, monotone best, 1e5-move fuzz";
  report(8, "annealing guarantees", pass, timer.seconds(), detail);
}

void criterion_9_benchmark() {
  Timer timer;
  const auto file =
      ansatz_from_json(load_json_file(data_file("benchmark_majoranic_12.json")));
  const auto ansatz = file.fermionic();
  const auto g = heavy_hex_graph(127);
  AnnealConfig cfg;
  cfg.iterations = 20000;
  cfg.restarts = 5;
  cfg.seed = 7;
  cfg.search_mode = SearchMode::Cp;
  cfg.cost_kind = CostKind::Pauli;
  const auto res = treespile_anneal(ansatz, g, cfg);
  const double ratio = static_cast<double>(res.best_cost) /
                       static_cast<double>(res.initial_cost);
  const double sec = timer.seconds();
  const bool pass = ratio <= 0.8 && sec < 300.0;
  report(9, "scaled reduction benchmark", pass, sec,
         "initial " + std::to_string(res.initial_cost) + " -> best " +
             std::to_string(res.best_cost) + " (ratio " + std::to_string(ratio) +
             ")" + (pass ? "" : "; flagged regression, not a hard failure"),
         /*soft=*/true);
}

void criterion_10_enumeration_bounds() {
  Timer timer;
  bool pass = true;
  std::string detail;
  struct Case {
    std::size_t n;
    HardwareGraph g;
  };
  const std::vector<Case> cases{{2, complete_graph(2)},
                                {2, complete_graph(3)},
                                {3, complete_graph(3)}};
  for (const auto& c : cases) {
    const auto counts = count_mappings(c.g, c.n);
    if (counts.mappings > counts.bound_complete) {
      pass = false;
      detail = "complete-graph bound violated";
    }
  }
  const auto line_counts = count_mappings(line_graph(4), 3);
  if (line_counts.mappings > line_counts.bound_bounded_degree) {
    pass = false;
    detail = "bounded-degree bound violated";
  }
  const double sec = timer.seconds();
  if (detail.empty()) {
    detail = "counts within n!(2n)!C(Q,n) and the degree-d form";
  }
  if (sec >= 120.0) {
    pass = false;
    detail += "; over 2 min budget";
  }
  report(10, "enumeration bounds", pass, sec, detail);
}

void criterion_11_reachability() {
  Timer timer;
  const auto g = grid_graph(2, 3);
  const auto rep = reachability(g, 3, bonsai_tree(g, 3));
  bool pass = rep.fraction == 1.0;
  std::string detail = "reached " + std::to_string(rep.reached) + "/" +
                       std::to_string(rep.enumerated);

  // The degree obstruction: a fully loaded node (parent plus three children)
  // must never be offered as a leaf-move target.
  std::vector<MappingNode> nodes(5);
  for (std::size_t i = 0; i < 5; ++i) {
    nodes[i].qubit = nodes[i].mode = static_cast<std::uint32_t>(i);
  }
  nodes[0].child = {1, 2, 3};
  nodes[3].child = {kNoChild, kNoChild, 4};
  const MappingTree blocked(std::move(nodes), 0);
  for (const auto& m : enumerate_moves_of_kind(
           blocked, complete_graph(5), SearchMode::Free, MoveKind::LeafMove)) {
    if (m.w == 0) {
      pass = false;
      detail += "; degree obstruction violated";
      break;
    }
  }
  const double sec = timer.seconds();
  if (sec >= 120.0) {
    pass = false;
    detail += "; over 2 min budget";
  }
  report(11, "move-set reachability", pass, sec, detail);
}

}  // namespace

int main() {
  criterion_1_jw_equivalence();
  criterion_2_anticommutation();
  criterion_3_vacuum();
  criterion_4_energy_invariance();
  criterion_5_braiding();
  criterion_6_circuit_correctness();
  criterion_7_steiner_optimality();
  criterion_8_annealing_guarantees();
  criterion_9_benchmark();
  criterion_10_enumeration_bounds();
  criterion_11_reachability();
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
