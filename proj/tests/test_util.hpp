#pragma once

#include <random>
#include <vector>

#include "grundy/cluster.hpp"
#include "grundy/coloring.hpp"
#include "grundy/generator.hpp"

namespace testutil {

inline grundy::Graph path(int n) {
  grundy::Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  g.finalize();
  return g;
}

inline grundy::Graph complete(int n) {
  grundy::Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  g.finalize();
  return g;
}

inline grundy::Graph cycle(int n) {
  grundy::Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  g.finalize();
  return g;
}

inline grundy::Graph random_graph(std::mt19937_64& rng, int n, double p) {
  grundy::Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((rng() >> 11) * 0x1.0p-53 < p) g.add_edge(u, v);
  g.finalize();
  return g;
}

inline grundy::Ordering random_ordering(std::mt19937_64& rng, int n) {
  grundy::Ordering order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(order[i], order[rng() % (i + 1)]);
  return order;
}

inline grundy::GeneratorSpec random_cluster_spec(std::mt19937_64& rng, int k, int maxR, int maxN) {
  grundy::GeneratorSpec spec;
  spec.modulatorSize = static_cast<int>(rng() % (maxR + 1));
  int budget = maxN - spec.modulatorSize;
  for (int c = 0; c < k; ++c) {
    int maxSize = budget - (k - 1 - c);
    spec.cliqueSizes.push_back(1 + static_cast<int>(rng() % maxSize));
    budget -= spec.cliqueSizes.back();
  }
  spec.edgeProbability = static_cast<double>(rng() % 101) / 100.0;
  spec.seed = rng();
  return spec;
}

inline grundy::ModulatorInstance random_instance(std::mt19937_64& rng, int k, int maxR, int maxN) {
  grundy::GeneratedInstance gen = grundy::generate_instance(random_cluster_spec(rng, k, maxR, maxN));
  return grundy::make_instance(std::move(gen.graph), std::move(gen.modulator));
}

}  // namespace testutil
