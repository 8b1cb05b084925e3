#include "grundy/two_cluster.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>

namespace grundy {

namespace {

// Per equivalence class, everything the placement predicate needs, valid for
// any remaining member because members share closed neighborhoods.
struct ClassFacts {
  int firstMiss = 0;        // least prefix class index the member fails to hit
  std::uint32_t covers = 0; // prefix vertices adjacent to the member
};

struct PrefixFacts {
  std::vector<int> verts;               // sorted Q ∪ R
  std::vector<std::uint32_t> classBits; // per prefix class: mask over verts
  int gamma = 0;

  int vertIndex(int v) const {
    auto it = std::lower_bound(verts.begin(), verts.end(), v);
    return it != verts.end() && *it == v ? static_cast<int>(it - verts.begin()) : -1;
  }
};

PrefixFacts prefix_facts(const PrefixColoring& prefix, const std::vector<int>& modulator) {
  PrefixFacts f;
  f.verts = prefix.q;
  f.verts.insert(f.verts.end(), modulator.begin(), modulator.end());
  std::sort(f.verts.begin(), f.verts.end());
  if (f.verts.size() > 30) fail(ErrorKind::guard, "prefix beyond 30 vertices");
  f.gamma = prefix.gamma();
  for (const auto& cls : prefix.classes.classes) {
    std::uint32_t bits = 0;
    for (int v : cls) {
      int idx = f.vertIndex(v);
      if (idx < 0) fail(ErrorKind::contract, "prefix class vertex outside Q ∪ R");
      bits |= std::uint32_t{1} << idx;
    }
    f.classBits.push_back(bits);
  }
  return f;
}

ClassFacts facts_for_vertex(const Graph& g, const PrefixFacts& pf, const PrefixColoring& prefix,
                            int u) {
  ClassFacts cf;
  for (std::size_t i = 0; i < pf.verts.size(); ++i)
    if (g.has_edge(u, pf.verts[i])) cf.covers |= std::uint32_t{1} << i;
  cf.firstMiss = pf.gamma;
  for (int p = 0; p < pf.gamma; ++p) {
    bool hit = false;
    for (int y : prefix.classes.classes[p])
      if (g.has_edge(u, y)) {
        hit = true;
        break;
      }
    if (!hit) {
      cf.firstMiss = p;
      break;
    }
  }
  return cf;
}

// Feasible gap interval for a class pair (or singleton with coversB = 0,
// firstMissB = gamma): gaps lo..hi, empty when lo > hi.
std::pair<int, int> gap_interval(const PrefixFacts& pf, const ClassFacts& a, const ClassFacts& b) {
  int hi = std::min(a.firstMiss, b.firstMiss);
  std::uint32_t cov = a.covers | b.covers;
  int lo = 0;
  for (int q = pf.gamma - 1; q >= 0; --q)
    if ((pf.classBits[q] & cov) != pf.classBits[q]) {
      lo = q + 1;
      break;
    }
  return {lo, hi};
}

std::vector<int> remaining_of(const std::vector<int>& clique, const std::vector<int>& q) {
  std::vector<int> out;
  for (int v : clique)
    if (!std::binary_search(q.begin(), q.end(), v)) out.push_back(v);
  return out;
}

}  // namespace

bool placement_feasible(const ModulatorInstance& inst, const PrefixColoring& prefix, int u,
                        std::optional<int> partner, int gap) {
  const int gamma = prefix.gamma();
  if (gap < 0 || gap > gamma) fail(ErrorKind::contract, "gap out of range");
  if (!partner && gap != gamma)
    fail(ErrorKind::contract, "a singleton class may only enter the final gap");

  std::vector<int> members{u};
  if (partner) members.push_back(*partner);
  for (int member : members)
    for (int p = 0; p < gap; ++p) {
      bool hit = false;
      for (int y : prefix.classes.classes[p])
        if (inst.graph.has_edge(member, y)) {
          hit = true;
          break;
        }
      if (!hit) return false;
    }
  for (int q = gap; q < gamma; ++q)
    for (int y : prefix.classes.classes[q]) {
      bool hit = false;
      for (int member : members)
        if (inst.graph.has_edge(member, y)) {
          hit = true;
          break;
        }
      if (!hit) return false;
    }
  return true;
}

ExtensionNetwork build_extension_network(const ModulatorInstance& inst,
                                         const PrefixColoring& prefix) {
  if (inst.k() != 2)
    fail(ErrorKind::wrong_solver, "extension network needs exactly two cliques");

  ExtensionNetwork net;
  net.gammaPrime = prefix.gamma();
  std::vector<int> rem0 = remaining_of(inst.decomposition.cliques[0], prefix.q);
  std::vector<int> rem1 = remaining_of(inst.decomposition.cliques[1], prefix.q);
  if (rem0.size() >= rem1.size()) {
    net.sVertices = std::move(rem0);
    net.tVertices = std::move(rem1);
  } else {
    net.sVertices = std::move(rem1);
    net.tVertices = std::move(rem0);
  }
  net.s = static_cast<int>(net.sVertices.size());
  net.sPrime = static_cast<int>(net.tVertices.size());

  const PrefixFacts pf = prefix_facts(prefix, inst.modulator);
  std::vector<ClassFacts> sFacts(net.s), tFacts(net.sPrime);
  for (int i = 0; i < net.s; ++i)
    sFacts[i] = facts_for_vertex(inst.graph, pf, prefix, net.sVertices[i]);
  for (int j = 0; j < net.sPrime; ++j)
    tFacts[j] = facts_for_vertex(inst.graph, pf, prefix, net.tVertices[j]);

  const int gaps = net.gammaPrime + 1;
  net.network.nodeCount = net.s * (net.gammaPrime + 3) + 2;
  net.network.source = net.source();
  net.network.sink = net.sink();
  auto& arcs = net.network.arcs;
  for (int j = 0; j < net.s; ++j) arcs.push_back({net.source(), net.partnerNode(j), 1});

  const ClassFacts nullFacts{net.gammaPrime, 0};
  for (int j = 0; j < net.s; ++j)
    for (int i = 0; i < net.s; ++i) {
      auto [lo, hi] = j < net.sPrime ? gap_interval(pf, sFacts[i], tFacts[j])
                                     : gap_interval(pf, sFacts[i], nullFacts);
      if (j >= net.sPrime) lo = std::max(lo, net.gammaPrime);  // dummies mean singletons: final gap only
      for (int gap = lo; gap <= hi && gap < gaps; ++gap) {
        arcs.push_back({net.partnerNode(j), net.pairNode(i, gap), 1});
        net.pairArcs.push_back({j, i, gap});
      }
    }
  for (int i = 0; i < net.s; ++i)
    for (int gap = 0; gap < gaps; ++gap) arcs.push_back({net.pairNode(i, gap), net.auxNode(i), 1});
  for (int i = 0; i < net.s; ++i) arcs.push_back({net.auxNode(i), net.sink(), 1});
  return net;
}

std::optional<ExtensionPlan> check_extendable_2(const ModulatorInstance& inst,
                                                const PrefixColoring& prefix) {
  ExtensionNetwork net = build_extension_network(inst, prefix);
  MaxFlowResult flow = max_flow(net.network);
  if (flow.value != net.s) return std::nullopt;

  ExtensionPlan plan;
  plan.perGap.assign(net.gammaPrime + 1, {});
  // Pair arcs start right after the s source arcs.
  struct Placement {
    int i, j, gap;
  };
  std::vector<Placement> placements;
  for (std::size_t t = 0; t < net.pairArcs.size(); ++t)
    if (flow.arcFlows[net.s + t] == 1)
      placements.push_back({net.pairArcs[t].i, net.pairArcs[t].j, net.pairArcs[t].gap});
  // Within a gap: pairs ordered by larger-side vertex, singletons last.
  std::sort(placements.begin(), placements.end(), [&](const Placement& a, const Placement& b) {
    bool aSingle = a.j >= net.sPrime, bSingle = b.j >= net.sPrime;
    if (a.gap != b.gap) return a.gap < b.gap;
    if (aSingle != bSingle) return bSingle;
    return net.sVertices[a.i] < net.sVertices[b.i];
  });
  for (const Placement& p : placements) {
    std::vector<int> members{net.sVertices[p.i]};
    if (p.j < net.sPrime) members.push_back(net.tVertices[p.j]);
    std::sort(members.begin(), members.end());
    plan.perGap[p.gap].push_back(std::move(members));
  }
  return plan;
}

GrundySolution solve_two_cluster(const ModulatorInstance& inst, const TwoClusterOptions& options) {
  (void)options;
  const auto startTime = std::chrono::steady_clock::now();
  if (inst.k() != 2)
    fail(ErrorKind::wrong_solver,
         "two-cluster solver needs exactly two cliques, got " + std::to_string(inst.k()));

  EquivalenceStructure eq =
      compute_equivalence_classes(inst.graph, inst.decomposition, inst.modulator);

  GrundySolution sol;
  sol.algorithm = "two-cluster";
  int bestValue = -1;
  SolveStats stats;

  for_each_prefix(inst, eq, 2 * inst.r(), [&](const PrefixColoring& prefix) {
    ++stats.candidates_examined;
    const int s0 = static_cast<int>(
        remaining_of(inst.decomposition.cliques[0], prefix.q).size());
    const int s1 = static_cast<int>(
        remaining_of(inst.decomposition.cliques[1], prefix.q).size());
    const int beta = std::max(s0, s1);
    if (prefix.gamma() + beta <= bestValue) return;

    ++stats.flow_checks;
    std::optional<ExtensionPlan> plan = check_extendable_2(inst, prefix);
    if (!plan) return;

    ColorClasses witness;
    for (int gap = 0; gap <= prefix.gamma(); ++gap) {
      for (auto& cls : plan->perGap[gap]) witness.classes.push_back(cls);
      if (gap < prefix.gamma()) witness.classes.push_back(prefix.classes.classes[gap]);
    }
    std::string why;
    if (!validate_grundy_coloring(inst.graph, witness, &why))
      fail(ErrorKind::internal, "assembled two-cluster certificate invalid: " + why);
    if (witness.count() != prefix.gamma() + beta)
      fail(ErrorKind::internal, "two-cluster certificate has unexpected class count");

    bestValue = prefix.gamma() + beta;
    sol.grundy_number = bestValue;
    sol.witness = std::move(witness);
  });

  if (bestValue < 0) fail(ErrorKind::internal, "no extendable prefix found");
  sol.ordering = sorted_permutation(inst.graph, sol.witness);
  sol.stats = stats;
  sol.stats.elapsed_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - startTime)
                             .count();
  return sol;
}

}  // namespace grundy
