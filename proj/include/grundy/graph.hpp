#pragma once

#include <string>
#include <utility>
#include <vector>

#include "grundy/error.hpp"

namespace grundy {

/// Undirected simple graph with 0-based vertex ids.
///
/// Edges live in two stores: sorted per-vertex adjacency vectors, plus
/// optional clique "blocks" — vertex sets whose members are implicitly
/// pairwise adjacent. Blocks keep generated instances with very large
/// cliques compact; parsed graphs use explicit edges only. The stores never
/// overlap: an explicit edge between two members of one block is rejected.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(n), block_of_(n, -1) {}

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  long long edge_count() const { return m_; }

  // Mutation is only allowed before finalize(). finalize() sorts adjacency,
  // rejects duplicate edges and recomputes the edge count.
  void add_edge(int u, int v);
  void add_clique_block(std::vector<int> members);
  void finalize();
  bool finalized() const { return finalized_; }

  bool has_edge(int u, int v) const;
  int degree(int v) const;

  const std::vector<int>& explicit_neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  // -1 when v is in no block.
  int block_of(int v) const {
    check_vertex(v);
    return block_of_[v];
  }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<int>& block_members(int b) const { return blocks_[b]; }

  // Materialized sorted neighbor list (explicit plus block members). Costs
  // O(|block|) for block vertices; avoid in per-vertex loops on big cliques.
  std::vector<int> neighbors(int v) const;

  // Induced subgraph on `vertices` (must be sorted, distinct, in range),
  // relabeled to 0..|vertices|-1 in the given order. Result is explicit.
  Graph induced(const std::vector<int>& vertices) const;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) fail(ErrorKind::input, "vertex " + std::to_string(v) + " out of range");
  }
  void require_finalized() const {
    if (!finalized_) fail(ErrorKind::contract, "graph queried before finalize()");
  }

  int n_ = 0;
  long long m_ = 0;
  bool finalized_ = true;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;
};

}  // namespace grundy
