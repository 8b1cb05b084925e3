#include "grundy/graph.hpp"

#include <algorithm>

namespace grundy {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) fail(ErrorKind::input, "negative vertex count");
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  g.finalize();
  return g;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) fail(ErrorKind::input, "self-loop at vertex " + std::to_string(u));
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  finalized_ = false;
}

void Graph::add_clique_block(std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (int v : members) {
    check_vertex(v);
    if (block_of_[v] != -1)
      fail(ErrorKind::input, "vertex " + std::to_string(v) + " already in a clique block");
  }
  if (members.size() < 2) return;  // a block of one vertex carries no edges
  int id = static_cast<int>(blocks_.size());
  for (int v : members) block_of_[v] = id;
  blocks_.push_back(std::move(members));
  finalized_ = false;
}

void Graph::finalize() {
  m_ = 0;
  for (int v = 0; v < n_; ++v) {
    auto& a = adj_[v];
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end())
      fail(ErrorKind::input, "duplicate edge at vertex " + std::to_string(v));
    for (int u : a) {
      if (block_of_[v] != -1 && block_of_[v] == block_of_[u])
        fail(ErrorKind::input, "explicit edge duplicates clique-block edge " +
                                   std::to_string(v) + "-" + std::to_string(u));
    }
    m_ += static_cast<long long>(a.size());
  }
  m_ /= 2;
  for (const auto& b : blocks_)
    m_ += static_cast<long long>(b.size()) * (static_cast<long long>(b.size()) - 1) / 2;
  finalized_ = true;
}

bool Graph::has_edge(int u, int v) const {
  require_finalized();
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  if (block_of_[u] != -1 && block_of_[u] == block_of_[v]) return true;
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  int w = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), w);
}

int Graph::degree(int v) const {
  require_finalized();
  check_vertex(v);
  int d = static_cast<int>(adj_[v].size());
  if (block_of_[v] != -1) d += static_cast<int>(blocks_[block_of_[v]].size()) - 1;
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  require_finalized();
  check_vertex(v);
  std::vector<int> out = adj_[v];
  if (block_of_[v] != -1) {
    for (int u : blocks_[block_of_[v]])
      if (u != v) out.push_back(u);
    std::sort(out.begin(), out.end());
  }
  return out;
}

Graph Graph::induced(const std::vector<int>& vertices) const {
  require_finalized();
  Graph sub(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    check_vertex(vertices[i]);
    if (i > 0 && vertices[i] <= vertices[i - 1])
      fail(ErrorKind::contract, "induced() needs sorted distinct vertices");
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (has_edge(vertices[i], vertices[j]))
        sub.add_edge(static_cast<int>(i), static_cast<int>(j));
  }
  sub.finalize();
  return sub;
}

}  // namespace grundy
