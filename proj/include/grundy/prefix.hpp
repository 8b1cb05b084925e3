#pragma once

#include <functional>
#include <vector>

#include "grundy/cluster.hpp"
#include "grundy/coloring.hpp"
#include "grundy/equivalence.hpp"

namespace grundy {

/// A candidate head of an optimal coloring: the classes that contain
/// modulator vertices, restricted to Q ∪ R where Q holds the clique
/// representatives those classes use.
struct PrefixColoring {
  std::vector<int> q;     // sorted, ⊆ representative set, ≤ r per clique
  ColorClasses classes;   // Grundy coloring of G[Q ∪ R]; each class meets R

  int gamma() const { return classes.count(); }
};

// Streams every candidate prefix: each Q ⊆ F with at most r representatives
// per clique and |Q| ≤ maxTotal (Q sets in lexicographic order), and for each
// Q every Grundy coloring of G[Q ∪ R] whose classes all contain a modulator
// vertex. Such colorings are exactly the ordered partitions in which every
// class is independent, meets R, and dominates the still-unplaced vertices;
// they are generated directly instead of deduplicating vertex orderings.
// Deterministic order throughout.
void for_each_prefix(const ModulatorInstance& inst, const EquivalenceStructure& eq, int maxTotal,
                     const std::function<void(const PrefixColoring&)>& visit);

// True iff `prefix` appears classwise, in order, inside `full`.
bool is_classwise_subsequence(const ColorClasses& prefix, const ColorClasses& full);

}  // namespace grundy
