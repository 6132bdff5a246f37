#include <catch2/catch_amalgamated.hpp>

#include "treespile/circuit.hpp"
#include "treespile/dense.hpp"
#include "treespile/rng.hpp"

using namespace treespile;

namespace {

SteinerResult steiner_for(const HardwareGraph& g, const PauliString& p) {
  std::vector<std::uint32_t> terminals;
  for (std::size_t q : p.support()) {
    terminals.push_back(static_cast<std::uint32_t>(q));
  }
  if (auto r = try_steiner_pptt(g, terminals)) return *r;
  return steiner_heuristic(g, terminals);
}

PauliSum single_term_sum(const PauliString& p,
                         std::complex<double> coeff = {0.0, 1.0}) {
  PauliSum s(p.width());
  s.add_term(coeff, p);
  s.simplify();
  return s;
}

}  // namespace

TEST_CASE("single-qubit Z needs no CNOTs") {
  const auto g = complete_graph(1);
  const auto p = PauliString::single(1, 0, 'Z');
  const auto c = compile_pauli_exp(p, 0.5, g, steiner_for(g, p));
  REQUIRE(c.cnot_count() == 0);
  std::size_t rz = 0;
  for (const auto& gate : c.gates) rz += gate.kind == GateKind::Rz ? 1 : 0;
  REQUIRE(rz == 1);
}

TEST_CASE("two-qubit ZZ on an edge uses two CNOTs") {
  const auto g = line_graph(2);
  const auto p = PauliString::from_text("ZZ");
  const auto c = compile_pauli_exp(p, 0.25, g, steiner_for(g, p));
  REQUIRE(c.cnot_count() == 2);
}

TEST_CASE("X0 Z2 on a line routes through the middle") {
  const auto g = line_graph(3);
  const auto p = PauliString::from_text("XIZ");
  const auto c = compile_pauli_exp(p, 0.125, g, steiner_for(g, p));
  REQUIRE(c.cnot_count() == 6);  // 2(2*3 - 2 - 1)
  REQUIRE(c.gates.front().kind == GateKind::H);
  REQUIRE(c.gates.front().q0 == 0);
  REQUIRE(c.gates.back().kind == GateKind::H);
  REQUIRE(c.gates.back().q0 == 0);
  REQUIRE(c.all_cnots_on_edges(g));
}

TEST_CASE("compiled exponentials match the matrix exponential") {
  Rng rng(8);
  const char letters[3] = {'X', 'Y', 'Z'};
  for (int it = 0; it < 30; ++it) {
    const std::size_t n = 2 + rng.next_below(4);
    const auto g = it % 2 == 0 ? line_graph(n) : complete_graph(n);
    PauliString p(n);
    bool any = false;
    for (std::size_t q = 0; q < n; ++q) {
      if (rng.next_below(2)) {
        p.set_letter(q, letters[rng.next_below(3)]);
        any = true;
      }
    }
    if (!any) p.set_letter(0, 'Y');
    const double theta = 2.0 * rng.next_double() - 1.0;
    const auto st = steiner_for(g, p);
    const auto c = compile_pauli_exp(p, theta, g, st);
    REQUIRE(c.cnot_count() ==
            2 * (2 * st.tree_vertices.size() - p.support().size() - 1));
    const double dist = phase_insensitive_distance(
        circuit_unitary(c), generator_exponential(single_term_sum(p), theta));
    REQUIRE(dist < 1e-9);
  }
}

TEST_CASE("compile rejects bad inputs") {
  const auto g = line_graph(2);
  PauliString ip = PauliString::from_text("iZZ");
  REQUIRE_THROWS_AS(compile_pauli_exp(ip, 0.1, g, steiner_for(g, ip)),
                    std::invalid_argument);

  const auto p = PauliString::from_text("ZZ");
  SteinerResult st;
  st.tree_vertices = {0};
  REQUIRE_THROWS_AS(compile_pauli_exp(p, 0.1, g, st), std::invalid_argument);

  REQUIRE_THROWS_AS(
      compile_pauli_exp(PauliString(2), 0.1, g, steiner_for(g, p)),
      std::invalid_argument);
}

TEST_CASE("peephole examples") {
  Circuit c(2);
  c.cx(0, 1);
  c.cx(0, 1);
  REQUIRE(peephole_cancel(c).gates.empty());

  Circuit d(1);
  d.h(0);
  d.h(0);
  d.rz(0.25, 0);
  d.rz(0.5, 0);
  const auto out = peephole_cancel(d);
  REQUIRE(out.gates.size() == 1);
  REQUIRE(out.gates[0].kind == GateKind::Rz);
  REQUIRE(out.gates[0].angle == Catch::Approx(0.75));

  // Gates on disjoint qubits commute for adjacency purposes.
  Circuit e(3);
  e.h(0);
  e.x(2);
  e.h(0);
  const auto out2 = peephole_cancel(e);
  REQUIRE(out2.gates.size() == 1);
  REQUIRE(out2.gates[0].kind == GateKind::X);

  // A blocking gate on a shared qubit prevents cancellation.
  Circuit f(2);
  f.h(0);
  f.cx(0, 1);
  f.h(0);
  REQUIRE(peephole_cancel(f).gates.size() == 3);
}

TEST_CASE("peephole preserves the unitary and never grows") {
  Rng rng(21);
  for (int it = 0; it < 25; ++it) {
    const std::size_t n = 2 + rng.next_below(3);
    Circuit c(n);
    for (int gi = 0; gi < 24; ++gi) {
      const auto q = static_cast<std::uint32_t>(rng.next_below(n));
      switch (rng.next_below(6)) {
        case 0: c.h(q); break;
        case 1: c.s(q); break;
        case 2: c.sdg(q); break;
        case 3: c.x(q); break;
        case 4: c.rz(rng.next_double(), q); break;
        default: {
          auto t = static_cast<std::uint32_t>(rng.next_below(n));
          if (t != q) c.cx(q, t);
          break;
        }
      }
    }
    const auto reduced = peephole_cancel(c);
    REQUIRE(reduced.gates.size() <= c.gates.size());
    REQUIRE(phase_insensitive_distance(circuit_unitary(c),
                                       circuit_unitary(reduced)) < 1e-9);
  }
}

TEST_CASE("repeated exponentials share one ladder after cancellation") {
  const auto g = complete_graph(4);
  const auto p = PauliString::from_text("ZZZZ");
  const auto st = steiner_for(g, p);
  Circuit both(4);
  both.append(compile_pauli_exp(p, 0.3, g, st));
  both.append(compile_pauli_exp(p, 0.4, g, st));
  REQUIRE(both.cnot_count() == 12);
  const auto reduced = peephole_cancel(both);
  REQUIRE(reduced.cnot_count() == 6);  // 2(k-1)
  const double dist = phase_insensitive_distance(
      circuit_unitary(reduced),
      generator_exponential(single_term_sum(p), 0.7));
  REQUIRE(dist < 1e-9);
}

TEST_CASE("reference state preparation") {
  const auto t = jw_tree(4);
  const auto empty = hf_state_prep(t, {0, 0, 0, 0});
  REQUIRE(empty.gates.empty());

  const auto c = hf_state_prep(t, {1, 1, 0, 0});
  REQUIRE(c.cnot_count() == 0);
  REQUIRE(c.gates.size() == 2);
  REQUIRE(c.gates[0].kind == GateKind::X);
  REQUIRE(c.gates[0].q0 == 0);
  REQUIRE(c.gates[1].q0 == 1);
}

TEST_CASE("compile_ansatz end to end") {
  FermionicAnsatz ansatz;
  ansatz.n_modes = 4;
  ansatz.reference_occupations = {0, 0, 0, 0};
  ansatz.generators = {FermionicGenerator::maj2(0, 1, 0.3)};
  const auto t = jw_tree(4);
  const auto g = complete_graph(4);
  const auto mapped = map_ansatz(t, ansatz, 4);
  const auto c = compile_ansatz(mapped, t, g, CompileMode::Cp,
                                &ansatz.reference_occupations);
  REQUIRE(c.cnot_count() == 0);
  std::size_t rz = 0;
  for (const auto& gate : c.gates) rz += gate.kind == GateKind::Rz ? 1 : 0;
  REQUIRE(rz == 1);

  // CP mode requires the tree to live on the device.
  const auto line = line_graph(3);
  REQUIRE_THROWS_AS(
      compile_ansatz(mapped, t, line, CompileMode::Cp, nullptr),
      std::invalid_argument);
}

TEST_CASE("qasm emission and round trip") {
  Circuit empty(2);
  const auto text = emit_qasm(empty);
  REQUIRE(text == "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\n");

  Circuit c(3);
  c.cx(0, 1);
  c.h(2);
  c.sdg(0);
  c.rz(-0.123456789012345678, 1);
  c.x(2);
  c.s(1);
  const auto emitted = emit_qasm(c);
  REQUIRE(emitted.find("cx q[0],q[1];") != std::string::npos);
  const auto parsed = parse_qasm(emitted);
  REQUIRE(parsed.n_qubits == c.n_qubits);
  REQUIRE(parsed.gates.size() == c.gates.size());
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    REQUIRE(parsed.gates[i].kind == c.gates[i].kind);
    REQUIRE(parsed.gates[i].q0 == c.gates[i].q0);
    REQUIRE(parsed.gates[i].q1 == c.gates[i].q1);
    REQUIRE(parsed.gates[i].angle == c.gates[i].angle);
  }
}
