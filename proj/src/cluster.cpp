#include "grundy/cluster.hpp"

#include <algorithm>
#include <numeric>

namespace grundy {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

ClusterDecomposition validate_cluster_modulator(const Graph& g, const std::vector<int>& modulator) {
  const int n = g.vertex_count();
  std::vector<char> inR(n, 0);
  for (int v : modulator) {
    if (v < 0 || v >= n) fail(ErrorKind::input, "modulator vertex " + std::to_string(v) + " out of range");
    if (inR[v]) fail(ErrorKind::input, "duplicate modulator vertex " + std::to_string(v));
    inR[v] = 1;
  }

  UnionFind uf(n);
  for (int v = 0; v < n; ++v) {
    if (inR[v]) continue;
    for (int u : g.explicit_neighbors(v))
      if (u > v && !inR[u]) uf.unite(u, v);
  }
  for (int b = 0; b < g.block_count(); ++b) {
    int prev = -1;
    for (int v : g.block_members(b)) {
      if (inR[v]) continue;
      if (prev != -1) uf.unite(prev, v);
      prev = v;
    }
  }

  // Group by root; components come out ordered by smallest vertex because
  // vertices are scanned ascending.
  std::vector<int> compIndex(n, -1);
  ClusterDecomposition dec;
  for (int v = 0; v < n; ++v) {
    if (inR[v]) continue;
    int root = uf.find(v);
    if (compIndex[root] == -1) {
      compIndex[root] = dec.clique_count();
      dec.cliques.emplace_back();
    }
    dec.cliques[compIndex[root]].push_back(v);
  }

  // Edge counting per component: explicit edges inside, plus implied clique
  // block pairs (a block's non-modulator part always lands in one component).
  std::vector<long long> edgesIn(dec.clique_count(), 0);
  for (int v = 0; v < n; ++v) {
    if (inR[v]) continue;
    for (int u : g.explicit_neighbors(v))
      if (u > v && !inR[u]) ++edgesIn[compIndex[uf.find(v)]];
  }
  for (int b = 0; b < g.block_count(); ++b) {
    long long cnt = 0;
    int any = -1;
    for (int v : g.block_members(b))
      if (!inR[v]) {
        ++cnt;
        any = v;
      }
    if (cnt >= 2) edgesIn[compIndex[uf.find(any)]] += cnt * (cnt - 1) / 2;
  }

  for (int c = 0; c < dec.clique_count(); ++c) {
    const auto& comp = dec.cliques[c];
    long long size = static_cast<long long>(comp.size());
    if (edgesIn[c] == size * (size - 1) / 2) continue;
    // Not complete: name one missing pair for the diagnostic.
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = i + 1; j < comp.size(); ++j)
        if (!g.has_edge(comp[i], comp[j]))
          fail(ErrorKind::validation,
               "component containing vertex " + std::to_string(comp[0]) +
                   " is not a clique: missing edge {" + std::to_string(comp[i]) + "," +
                   std::to_string(comp[j]) + "}");
    fail(ErrorKind::internal, "edge count mismatch without missing pair");
  }
  return dec;
}

ModulatorInstance make_instance(Graph g, std::vector<int> modulator) {
  std::sort(modulator.begin(), modulator.end());
  ClusterDecomposition dec = validate_cluster_modulator(g, modulator);
  return ModulatorInstance{std::move(g), std::move(modulator), std::move(dec)};
}

namespace {

bool is_cluster_with_at_most(const Graph& g, const std::vector<int>& removed, int maxCliques) {
  try {
    ClusterDecomposition dec = validate_cluster_modulator(g, removed);
    return dec.clique_count() <= maxCliques;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::validation) return false;
    throw;
  }
}

}  // namespace

std::vector<int> find_min_cluster_modulator(const Graph& g, int maxCliques) {
  const int n = g.vertex_count();
  if (n > 24)
    fail(ErrorKind::guard,
         "minimum-modulator search is limited to 24 vertices; pass the modulator explicitly");
  for (int size = 0; size <= n; ++size) {
    // Lexicographically ordered size-`size` combinations of 0..n-1.
    std::vector<int> comb(size);
    std::iota(comb.begin(), comb.end(), 0);
    while (true) {
      if (is_cluster_with_at_most(g, comb, maxCliques)) return comb;
      int i = size - 1;
      while (i >= 0 && comb[i] == n - size + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  fail(ErrorKind::internal, "unreachable: R = V always works");
}

}  // namespace grundy
