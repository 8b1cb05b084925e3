#pragma once

#include <vector>

#include "grundy/error.hpp"

namespace grundy {

struct Arc {
  int from = 0;
  int to = 0;
  long long capacity = 0;
};

struct FlowNetwork {
  int nodeCount = 0;
  std::vector<Arc> arcs;
  int source = 0;
  int sink = 0;
};

struct MaxFlowResult {
  long long value = 0;
  std::vector<long long> arcFlows;  // aligned with the input arc order
};

// Integral maximum flow via blocking flows (Dinic). Conservation holds at
// every non-terminal node and 0 <= flow <= capacity on every arc.
MaxFlowResult max_flow(const FlowNetwork& net);

}  // namespace grundy
