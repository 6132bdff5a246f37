#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "treespile/circuit.hpp"
#include "treespile/graph.hpp"
#include "treespile/mapping.hpp"

namespace treespile {

enum class Connectivity { Full, Limited };
enum class CostModelKind { PauliFc, PauliLc, Compiled };

inline const char* to_string(CostModelKind k) {
  switch (k) {
    case CostModelKind::PauliFc: return "pauli_fc";
    case CostModelKind::PauliLc: return "pauli_lc";
    case CostModelKind::Compiled: return "compiled";
  }
  return "?";
}

struct CostBreakdown {
  std::int64_t total_cnots = 0;
  std::vector<std::int64_t> per_generator;
  CostModelKind cost_kind = CostModelKind::PauliFc;
};

/// Closed-form CNOT estimate: 2(k-1) per term on full connectivity, or
/// 2(2n-k-1) with n the Steiner-tree size on a limited device. The optimal
/// case solver is used whenever the mapping tree is a subgraph of the device
/// and the term matches the 2-/4-Majorana structure; otherwise the heuristic.
/// Identity terms cost 0.
inline CostBreakdown pauli_cost(const std::vector<MappedGenerator>& mapped,
                                const HardwareGraph& g, const MappingTree& t,
                                Connectivity connectivity) {
  CostBreakdown breakdown;
  breakdown.cost_kind = connectivity == Connectivity::Full
                            ? CostModelKind::PauliFc
                            : CostModelKind::PauliLc;
  const bool cp_capable =
      connectivity == Connectivity::Limited && t.is_subgraph_of(g);
  for (const auto& mg : mapped) {
    std::int64_t cost = 0;
    for (const auto& term : mg.sum.terms()) {
      const std::size_t k = term.string.weight();
      if (k == 0) continue;
      if (connectivity == Connectivity::Full) {
        cost += 2 * (static_cast<std::int64_t>(k) - 1);
      } else {
        if (term.string.width() != g.n_vertices()) {
          throw std::invalid_argument("pauli_cost: term width must match graph");
        }
        std::vector<std::uint32_t> terminals;
        for (std::size_t q : term.string.support()) {
          terminals.push_back(static_cast<std::uint32_t>(q));
        }
        std::size_t n = 0;
        if (cp_capable) {
          if (auto st = try_steiner_pptt(g, terminals)) {
            n = st->size();
          }
        }
        if (n == 0) n = steiner_heuristic(g, terminals).size();
        cost += 2 * (2 * static_cast<std::int64_t>(n) -
                     static_cast<std::int64_t>(k) - 1);
      }
    }
    breakdown.per_generator.push_back(cost);
    breakdown.total_cnots += cost;
  }
  return breakdown;
}

/// Deterministic compiled CNOT count: map, compile (reference prep included),
/// run peephole cancellation, count CNOTs per originating generator.
inline CostBreakdown compiled_cost(const FermionicAnsatz& ansatz,
                                   const MappingTree& t,
                                   const HardwareGraph& g) {
  const auto mapped = map_ansatz(t, ansatz, g.n_vertices());
  const CompileMode mode =
      t.is_subgraph_of(g) ? CompileMode::Cp : CompileMode::General;
  Circuit circuit = compile_ansatz(mapped, t, g, mode,
                                   &ansatz.reference_occupations);
  circuit = peephole_cancel(circuit);
  CostBreakdown breakdown;
  breakdown.cost_kind = CostModelKind::Compiled;
  breakdown.per_generator.assign(mapped.size(), 0);
  for (const auto& gate : circuit.gates) {
    if (gate.kind != GateKind::Cnot) continue;
    ++breakdown.total_cnots;
    if (gate.tag >= 0 &&
        static_cast<std::size_t>(gate.tag) < breakdown.per_generator.size()) {
      ++breakdown.per_generator[static_cast<std::size_t>(gate.tag)];
    }
  }
  return breakdown;
}

}  // namespace treespile
