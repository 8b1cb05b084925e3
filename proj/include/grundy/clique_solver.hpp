#pragma once

#include "grundy/cluster.hpp"
#include "grundy/equivalence.hpp"
#include "grundy/solution.hpp"

namespace grundy {

/// The reduced instance for a clique modulator: the graph induced on the
/// modulator plus the representative set. Its Grundy number plus the number
/// of discarded clique vertices equals the original's.
struct Kernel {
  Graph kernelGraph;                // induced on mapping (sorted R ∪ F)
  std::vector<int> mapping;         // kernel id -> original id
  std::vector<int> removedVertices; // sorted; V \ (R ∪ F)
  long long removedCount = 0;
};

Kernel build_kernel(const ModulatorInstance& inst);
Kernel build_kernel(const ModulatorInstance& inst, const EquivalenceStructure& eq);

struct CliqueSolverOptions {
  int workers = 1;  // 0 = hardware concurrency
};

// Exact Grundy solution for an instance whose cliques-after-removal count is
// at most one. Enumerates Q ⊆ F with |Q| ≤ r together with every ordering of
// Q ∪ R, runs first-fit on the kernel with the rest appended ascending, and
// lifts the best kernel coloring by one singleton class per removed vertex.
GrundySolution solve_clique(const ModulatorInstance& inst, const CliqueSolverOptions& options = {});

}  // namespace grundy
