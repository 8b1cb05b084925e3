#pragma once

#include "grundy/graph.hpp"
#include "grundy/solution.hpp"

namespace grundy {

struct OracleOptions {
  int guard = 9;  // refuse graphs larger than this
};

// Exact Grundy number by exhaustive search, used as ground truth in tests.
// Rather than all n! orderings it enumerates ordered partitions directly:
// a set can open the next color class iff it is independent and dominates
// every remaining vertex, which characterizes the classes first-fit can
// produce. Memoized over the remaining-vertex bitmask.
GrundySolution grundy_oracle(const Graph& g, const OracleOptions& options = {});

}  // namespace grundy
