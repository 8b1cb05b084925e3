#include "grundy/maxflow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace grundy {

namespace {

class Dinic {
 public:
  Dinic(int n, int source, int sink) : n_(n), source_(source), sink_(sink), head_(n), level_(n), iter_(n) {}

  void add_arc(int from, int to, long long capacity) {
    edges_.push_back({to, capacity});
    edges_.push_back({from, 0});
  }

  void build() {
    std::vector<int> deg(n_, 0);
    for (std::size_t e = 0; e < edges_.size(); ++e) ++deg[edges_[e ^ 1].to];
    head_.assign(n_ + 1, 0);
    for (int v = 0; v < n_; ++v) head_[v + 1] = head_[v] + deg[v];
    order_.resize(edges_.size());
    std::vector<int> fill = head_;
    for (std::size_t e = 0; e < edges_.size(); ++e) order_[fill[edges_[e ^ 1].to]++] = static_cast<int>(e);
  }

  long long run() {
    long long total = 0;
    while (bfs()) {
      iter_ = head_;
      long long f;
      while ((f = dfs(source_, std::numeric_limits<long long>::max())) > 0) total += f;
    }
    return total;
  }

  long long flow_on(std::size_t arcIndex) const { return edges_[2 * arcIndex ^ 1].cap; }

 private:
  struct Edge {
    int to;
    long long cap;
  };

  bool bfs() {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    q.push(source_);
    level_[source_] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int idx = head_[v]; idx < head_[v + 1]; ++idx) {
        const Edge& e = edges_[order_[idx]];
        if (e.cap > 0 && level_[e.to] == -1) {
          level_[e.to] = level_[v] + 1;
          q.push(e.to);
        }
      }
    }
    return level_[sink_] != -1;
  }

  long long dfs(int v, long long limit) {
    if (v == sink_) return limit;
    for (int& idx = iter_[v]; idx < head_[v + 1]; ++idx) {
      int eid = order_[idx];
      Edge& e = edges_[eid];
      if (e.cap <= 0 || level_[e.to] != level_[v] + 1) continue;
      long long got = dfs(e.to, std::min(limit, e.cap));
      if (got > 0) {
        e.cap -= got;
        edges_[eid ^ 1].cap += got;
        return got;
      }
    }
    return 0;
  }

  int n_, source_, sink_;
  std::vector<int> head_;
  std::vector<int> order_;
  std::vector<Edge> edges_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace

MaxFlowResult max_flow(const FlowNetwork& net) {
  if (net.nodeCount <= 0) fail(ErrorKind::input, "flow network needs at least one node");
  if (net.source == net.sink) fail(ErrorKind::input, "source equals sink");
  auto checkNode = [&](int v) {
    if (v < 0 || v >= net.nodeCount) fail(ErrorKind::input, "flow node out of range");
  };
  checkNode(net.source);
  checkNode(net.sink);
  Dinic dinic(net.nodeCount, net.source, net.sink);
  for (const Arc& a : net.arcs) {
    checkNode(a.from);
    checkNode(a.to);
    if (a.capacity < 0) fail(ErrorKind::input, "negative arc capacity");
    dinic.add_arc(a.from, a.to, a.from == a.to ? 0 : a.capacity);
  }
  dinic.build();
  MaxFlowResult res;
  res.value = dinic.run();
  res.arcFlows.resize(net.arcs.size());
  for (std::size_t i = 0; i < net.arcs.size(); ++i) res.arcFlows[i] = dinic.flow_on(i);
  return res;
}

}  // namespace grundy
