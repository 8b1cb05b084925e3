#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "grundy/maxflow.hpp"

using namespace grundy;

namespace {

// Brute-force maximum flow for unit-capacity networks with few arcs: try all
// 0/1 arc assignments, keep the best that conserves flow everywhere.
long long brute_force_unit_flow(const FlowNetwork& net) {
  const int arcs = static_cast<int>(net.arcs.size());
  long long best = 0;
  for (int mask = 0; mask < (1 << arcs); ++mask) {
    std::vector<long long> balance(net.nodeCount, 0);
    for (int a = 0; a < arcs; ++a)
      if (mask >> a & 1) {
        if (net.arcs[a].capacity == 0 || net.arcs[a].from == net.arcs[a].to) goto next;
        --balance[net.arcs[a].from];
        ++balance[net.arcs[a].to];
      }
    {
      bool ok = true;
      for (int v = 0; v < net.nodeCount; ++v)
        if (v != net.source && v != net.sink && balance[v] != 0) ok = false;
      if (ok) best = std::max(best, balance[net.sink]);
    }
  next:;
  }
  return best;
}

void check_feasible(const FlowNetwork& net, const MaxFlowResult& res) {
  std::vector<long long> balance(net.nodeCount, 0);
  REQUIRE(res.arcFlows.size() == net.arcs.size());
  for (std::size_t a = 0; a < net.arcs.size(); ++a) {
    CHECK(res.arcFlows[a] >= 0);
    CHECK(res.arcFlows[a] <= net.arcs[a].capacity);
    balance[net.arcs[a].from] -= res.arcFlows[a];
    balance[net.arcs[a].to] += res.arcFlows[a];
  }
  for (int v = 0; v < net.nodeCount; ++v)
    if (v != net.source && v != net.sink) CHECK(balance[v] == 0);
  CHECK(balance[net.sink] == res.value);
  CHECK(balance[net.source] == -res.value);
}

}  // namespace

TEST_CASE("single path and empty cut") {
  FlowNetwork net{3, {{0, 1, 1}, {1, 2, 1}}, 0, 2};
  MaxFlowResult res = max_flow(net);
  CHECK(res.value == 1);
  check_feasible(net, res);

  FlowNetwork lonely{2, {}, 0, 1};
  CHECK(max_flow(lonely).value == 0);
}

TEST_CASE("complete bipartite 3+3 has a perfect matching") {
  // source 0, left 1..3, right 4..6, sink 7
  FlowNetwork net{8, {}, 0, 7};
  for (int l = 1; l <= 3; ++l) net.arcs.push_back({0, l, 1});
  for (int l = 1; l <= 3; ++l)
    for (int r = 4; r <= 6; ++r) net.arcs.push_back({l, r, 1});
  for (int r = 4; r <= 6; ++r) net.arcs.push_back({r, 7, 1});
  MaxFlowResult res = max_flow(net);
  CHECK(res.value == 3);
  check_feasible(net, res);
}

TEST_CASE("value matches brute force on small unit networks") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 150; ++iter) {
    int nodes = 3 + static_cast<int>(rng() % 4);
    int arcCount = 1 + static_cast<int>(rng() % 12);
    FlowNetwork net{nodes, {}, 0, nodes - 1};
    for (int a = 0; a < arcCount; ++a) {
      int from = static_cast<int>(rng() % nodes);
      int to = static_cast<int>(rng() % nodes);
      net.arcs.push_back({from, to, static_cast<long long>(rng() % 2)});
    }
    MaxFlowResult res = max_flow(net);
    CHECK(res.value == brute_force_unit_flow(net));
    check_feasible(net, res);
  }
}

TEST_CASE("value is invariant under arc permutation") {
  std::mt19937_64 rng(12);
  for (int iter = 0; iter < 50; ++iter) {
    int nodes = 4 + static_cast<int>(rng() % 4);
    FlowNetwork net{nodes, {}, 0, nodes - 1};
    int arcCount = 5 + static_cast<int>(rng() % 15);
    for (int a = 0; a < arcCount; ++a)
      net.arcs.push_back({static_cast<int>(rng() % nodes), static_cast<int>(rng() % nodes),
                          static_cast<long long>(rng() % 4)});
    long long value = max_flow(net).value;
    FlowNetwork shuffled = net;
    for (int i = arcCount - 1; i > 0; --i)
      std::swap(shuffled.arcs[i], shuffled.arcs[rng() % (i + 1)]);
    CHECK(max_flow(shuffled).value == value);
  }
}

TEST_CASE("network validation") {
  CHECK_THROWS_AS((void)max_flow(FlowNetwork{2, {}, 0, 0}), Error);
  CHECK_THROWS_AS((void)max_flow(FlowNetwork{2, {{0, 5, 1}}, 0, 1}), Error);
  CHECK_THROWS_AS((void)max_flow(FlowNetwork{2, {{0, 1, -2}}, 0, 1}), Error);
  CHECK_THROWS_AS((void)max_flow(FlowNetwork{0, {}, 0, 0}), Error);
}
