#pragma once

#include <cstdint>
#include <vector>

#include "grundy/cluster.hpp"

namespace grundy {

/// One group of clique vertices sharing a closed neighborhood. Inside a
/// clique, equal closed neighborhoods reduce to an equal neighbor set within
/// the modulator, captured as a bitmask over the sorted modulator.
struct EquivalenceClass {
  int clique = 0;                 // index into the decomposition
  std::uint64_t signature = 0;    // bit i set <=> adjacent to modulator[i]
  std::vector<int> members;       // sorted ascending
  std::vector<int> representatives;  // min{r,|members|} lowest-indexed members
};

struct EquivalenceStructure {
  std::vector<std::vector<int>> perClique;  // class indices per clique
  std::vector<EquivalenceClass> classes;
  std::vector<int> representatives;  // F: union of per-class representatives, sorted
  std::vector<int> classOf;          // per vertex: class index, -1 for modulator vertices
};

// Groups the clique vertices of `dec` by their neighbor set within the
// modulator. Classes within a clique are ordered by smallest member;
// representatives are the lowest-indexed members (deterministic).
// Requires |modulator| <= 64.
EquivalenceStructure compute_equivalence_classes(const Graph& g, const ClusterDecomposition& dec,
                                                 const std::vector<int>& modulator);

}  // namespace grundy
