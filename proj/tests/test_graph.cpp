#include <random>

#include "doctest.h"
#include "grundy/equivalence.hpp"
#include "grundy/graph_io.hpp"
#include "test_util.hpp"

using namespace grundy;

TEST_CASE("load_graph parses the smallest graphs") {
  Graph g = load_graph("p edge 2 1\ne 1 2\n");
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.has_edge(0, 1));

  Graph edgeless = load_graph("c empty\np edge 3 0\n");
  CHECK(edgeless.vertex_count() == 3);
  CHECK(edgeless.edge_count() == 0);

  Graph p4 = load_graph("p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n");
  CHECK(p4.has_edge(0, 1));
  CHECK(p4.has_edge(1, 2));
  CHECK(p4.has_edge(2, 3));
  CHECK_FALSE(p4.has_edge(0, 2));
  CHECK(p4.degree(1) == 2);
}

TEST_CASE("load_graph rejects malformed input with line numbers") {
  auto fails_at = [](const std::string& text, const std::string& lineTag) {
    try {
      load_graph(text);
      FAIL_CHECK("expected a parse error for: " << text);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::parse);
      CHECK(std::string(e.what()).find(lineTag) != std::string::npos);
    }
  };
  fails_at("p edge x 1\n", "line 1");
  fails_at("p edge 2 1\ne 1 3\n", "line 2");
  fails_at("p edge 2 1\ne 1 1\n", "line 2");
  fails_at("p edge 2 2\ne 1 2\ne 2 1\n", "line 3");
  fails_at("p edge 2 2\ne 1 2\n", "line 2");  // declared m unmet
  fails_at("e 1 2\n", "line 1");              // edge before header
  fails_at("p edge 2 1\nq 1 2\n", "line 2");
  fails_at("p edge 2 0\np edge 2 0\n", "line 2");
}

TEST_CASE("modulator files") {
  CHECK(load_modulator("r 1 3\n", 4) == std::vector<int>{0, 2});
  CHECK(load_modulator("", 4).empty());
  CHECK(load_modulator("\n", 4).empty());
  CHECK(load_modulator("r\n", 4).empty());
  CHECK_THROWS_AS((void)load_modulator("r 5\n", 4), Error);
  CHECK_THROWS_AS((void)load_modulator("r 1 1\n", 4), Error);
}

TEST_CASE("validate_cluster_modulator splits disjoint cliques") {
  // K4 ∪ K3 with no modulator.
  Graph g(7);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) g.add_edge(u, v);
  for (int u = 4; u < 7; ++u)
    for (int v = u + 1; v < 7; ++v) g.add_edge(u, v);
  g.finalize();
  ClusterDecomposition dec = validate_cluster_modulator(g, {});
  REQUIRE(dec.clique_count() == 2);
  CHECK(dec.cliques[0] == std::vector<int>{0, 1, 2, 3});
  CHECK(dec.cliques[1] == std::vector<int>{4, 5, 6});
}

TEST_CASE("validate_cluster_modulator on paths") {
  Graph p4 = testutil::path(4);
  ClusterDecomposition dec = validate_cluster_modulator(p4, {1, 2});
  REQUIRE(dec.clique_count() == 2);
  CHECK(dec.cliques[0] == std::vector<int>{0});
  CHECK(dec.cliques[1] == std::vector<int>{3});

  try {
    validate_cluster_modulator(p4, {3});
    FAIL_CHECK("0-1-2 is not a clique");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::validation);
    CHECK(std::string(e.what()).find("{0,2}") != std::string::npos);
  }
  CHECK_THROWS_AS(validate_cluster_modulator(p4, {7}), Error);
}

TEST_CASE("equivalence classes group by modulator neighborhoods") {
  // K4 on 0..3 plus pendant 4 attached to 0.
  Graph g(5);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) g.add_edge(u, v);
  g.add_edge(0, 4);
  g.finalize();
  ClusterDecomposition dec = validate_cluster_modulator(g, {4});
  EquivalenceStructure eq = compute_equivalence_classes(g, dec, {4});
  REQUIRE(eq.classes.size() == 2);
  CHECK(eq.classes[0].members == std::vector<int>{0});
  CHECK(eq.classes[1].members == std::vector<int>{1, 2, 3});
  CHECK(eq.representatives == std::vector<int>{0, 1});
}

TEST_CASE("equivalence classes, degenerate and universal cases") {
  Graph k5 = testutil::complete(5);
  ClusterDecomposition dec = validate_cluster_modulator(k5, {});
  EquivalenceStructure eq = compute_equivalence_classes(k5, dec, {});
  REQUIRE(eq.classes.size() == 1);
  CHECK(eq.classes[0].members.size() == 5);
  CHECK(eq.representatives.empty());  // min{0, 5} = 0

  // Two cliques, every vertex adjacent to the single modulator vertex.
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  for (int v = 0; v < 4; ++v) g.add_edge(v, 4);
  g.finalize();
  ClusterDecomposition dec2 = validate_cluster_modulator(g, {4});
  EquivalenceStructure eq2 = compute_equivalence_classes(g, dec2, {4});
  REQUIRE(eq2.classes.size() == 2);
  CHECK(eq2.representatives == std::vector<int>{0, 2});
}

TEST_CASE("equivalence classes partition and honor the size bound") {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 100; ++iter) {
    int k = 1 + static_cast<int>(rng() % 3);
    ModulatorInstance inst = testutil::random_instance(rng, k, 3, 9);
    EquivalenceStructure eq =
        compute_equivalence_classes(inst.graph, inst.decomposition, inst.modulator);
    long long covered = 0;
    for (const auto& cls : eq.classes) {
      covered += static_cast<long long>(cls.members.size());
      for (int v : cls.members)
        for (int u : cls.members) {
          if (u == v) continue;
          // Same class means identical closed neighborhoods.
          auto nu = inst.graph.neighbors(u);
          auto nv = inst.graph.neighbors(v);
          nu.push_back(u);
          nv.push_back(v);
          std::sort(nu.begin(), nu.end());
          std::sort(nv.begin(), nv.end());
          CHECK(nu == nv);
        }
    }
    CHECK(covered == inst.graph.vertex_count() - inst.r());
    CHECK((long long)eq.representatives.size() <=
          (long long)inst.r() * inst.k() * (1LL << inst.r()));
  }
}

TEST_CASE("clique blocks answer queries like explicit edges") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 20; ++iter) {
    ModulatorInstance inst = testutil::random_instance(rng, 2, 3, 9);
    const Graph& blocked = inst.graph;
    Graph explicitCopy(blocked.vertex_count());
    for (int v = 0; v < blocked.vertex_count(); ++v)
      for (int u : blocked.neighbors(v))
        if (u > v) explicitCopy.add_edge(v, u);
    explicitCopy.finalize();
    CHECK(explicitCopy.edge_count() == blocked.edge_count());
    for (int v = 0; v < blocked.vertex_count(); ++v) {
      CHECK(blocked.degree(v) == explicitCopy.degree(v));
      for (int u = 0; u < blocked.vertex_count(); ++u)
        CHECK(blocked.has_edge(v, u) == explicitCopy.has_edge(v, u));
    }
  }
}

TEST_CASE("find_min_cluster_modulator") {
  CHECK(find_min_cluster_modulator(testutil::complete(5), 5).empty());
  CHECK(find_min_cluster_modulator(testutil::path(4), 4) == std::vector<int>{1});
  // For the 4-cycle no single vertex works; {0,1} leaves the edge {2,3}.
  CHECK(find_min_cluster_modulator(testutil::cycle(4), 4) == std::vector<int>{0, 1});
  CHECK(find_min_cluster_modulator(testutil::cycle(4), 1) == std::vector<int>{0, 1});
  CHECK_THROWS_AS((void)find_min_cluster_modulator(Graph(25), 1), Error);
}

TEST_CASE("graph input validation") {
  Graph g(3);
  CHECK_THROWS_AS(g.add_edge(0, 0), Error);
  CHECK_THROWS_AS(g.add_edge(0, 5), Error);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  CHECK_THROWS_AS(g.finalize(), Error);  // duplicate

  Graph h(4);
  h.add_clique_block({0, 1, 2});
  h.add_edge(0, 1);
  CHECK_THROWS_AS(h.finalize(), Error);  // explicit edge duplicates block edge
  CHECK_THROWS_AS(Graph(4).add_clique_block({0, 9}), Error);
}
