#pragma once

#include <vector>

#include "grundy/graph.hpp"

namespace grundy {

/// The connected components of G - R, each a clique, ordered by their
/// smallest contained vertex.
struct ClusterDecomposition {
  std::vector<std::vector<int>> cliques;  // each sorted ascending

  int clique_count() const { return static_cast<int>(cliques.size()); }
};

/// A graph together with a vertex set R whose removal leaves a cluster graph.
struct ModulatorInstance {
  Graph graph;
  std::vector<int> modulator;  // sorted ascending
  ClusterDecomposition decomposition;

  int r() const { return static_cast<int>(modulator.size()); }
  int k() const { return decomposition.clique_count(); }
};

// Checks that every component of G - R is a complete graph and returns the
// components ordered by smallest vertex. Completeness is decided by edge
// counting: |E(S)| == |S|(|S|-1)/2. On failure the error names a missing
// edge of the offending component.
ClusterDecomposition validate_cluster_modulator(const Graph& g, const std::vector<int>& modulator);

ModulatorInstance make_instance(Graph g, std::vector<int> modulator);

// Smallest R (ties: lexicographically least as a sorted vertex list) such
// that G - R is a cluster graph with at most `maxCliques` components.
// Exhaustive over subsets; guarded to n <= 24.
std::vector<int> find_min_cluster_modulator(const Graph& g, int maxCliques);

}  // namespace grundy
