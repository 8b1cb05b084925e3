#pragma once

#include <optional>

#include "grundy/maxflow.hpp"
#include "grundy/prefix.hpp"
#include "grundy/solution.hpp"

namespace grundy {

/// Flow network deciding whether a prefix coloring extends: one unit of
/// supply per partner (real or dummy), pair nodes per (larger-side vertex,
/// gap), and an auxiliary node per larger-side vertex capping it to one
/// placement. The prefix is extendable iff the maximum flow saturates all
/// `s` partners.
struct ExtensionNetwork {
  FlowNetwork network;
  int s = 0;           // remaining vertices on the larger side
  int sPrime = 0;      // remaining vertices on the smaller side
  int gammaPrime = 0;  // prefix classes
  std::vector<int> sVertices;  // ascending original ids, larger side
  std::vector<int> tVertices;  // ascending original ids, smaller side

  int source() const { return 0; }
  int partnerNode(int j) const { return 1 + j; }  // j in [0, s); real iff j < sPrime
  int pairNode(int i, int gap) const { return 1 + s + i * (gammaPrime + 1) + gap; }
  int auxNode(int i) const { return 1 + s + s * (gammaPrime + 1) + i; }
  int sink() const { return s * (gammaPrime + 3) + 1; }

  // Decoding data: pair arcs start after the s source arcs; arc t is
  // (partner pairArcs[t].j -> pairNode(pairArcs[t].i, pairArcs[t].gap)).
  struct PairArc {
    int j, i, gap;
  };
  std::vector<PairArc> pairArcs;
};

// One inserted color class and where it goes.
struct PlannedClass {
  std::vector<int> members;  // one or two vertices, sorted
  int gap = 0;
};

struct ExtensionPlan {
  std::vector<std::vector<std::vector<int>>> perGap;  // gap -> classes in order
};

// Placement predicate: can a class formed by `u` and `partner` (nullopt for
// a singleton, only allowed in the final gap) sit immediately after the
// gap-th prefix class? Requires every member to hit all earlier prefix
// classes and every later prefix vertex to hit the pair.
bool placement_feasible(const ModulatorInstance& inst, const PrefixColoring& prefix, int u,
                        std::optional<int> partner, int gap);

ExtensionNetwork build_extension_network(const ModulatorInstance& inst,
                                         const PrefixColoring& prefix);

std::optional<ExtensionPlan> check_extendable_2(const ModulatorInstance& inst,
                                                const PrefixColoring& prefix);

struct TwoClusterOptions {
  int workers = 1;  // accepted for interface parity; the scan is serial
};

// Exact Grundy solution for a 2-cluster modulator: maximizes γ' + β over
// extendable prefixes, β being the larger remaining clique size.
GrundySolution solve_two_cluster(const ModulatorInstance& inst,
                                 const TwoClusterOptions& options = {});

}  // namespace grundy
