#include <random>

#include "doctest.h"
#include "grundy/coloring.hpp"
#include "test_util.hpp"

using namespace grundy;

TEST_CASE("first_fit on the path") {
  Graph p4 = testutil::path(4);
  ColorClasses cc = first_fit(p4, {0, 3, 1, 2});
  REQUIRE(cc.count() == 3);
  CHECK(cc.classes[0] == std::vector<int>{0, 3});
  CHECK(cc.classes[1] == std::vector<int>{1});
  CHECK(cc.classes[2] == std::vector<int>{2});
}

TEST_CASE("first_fit basics and input checks") {
  Graph k1 = testutil::complete(1);
  CHECK(first_fit(k1, {0}).classes == std::vector<std::vector<int>>{{0}});

  Graph edgeless(3);
  edgeless.finalize();
  CHECK(first_fit(edgeless, {2, 0, 1}).count() == 1);

  Graph p4 = testutil::path(4);
  CHECK_THROWS_AS((void)first_fit(p4, {0, 1, 2}), Error);
  CHECK_THROWS_AS((void)first_fit(p4, {0, 1, 2, 2}), Error);
  CHECK_THROWS_AS((void)first_fit(p4, {0, 1, 2, 9}), Error);
}

TEST_CASE("validate_grundy_coloring") {
  Graph p4 = testutil::path(4);
  CHECK(validate_grundy_coloring(p4, {{{0, 3}, {1}, {2}}}));

  std::string why;
  CHECK_FALSE(validate_grundy_coloring(p4, {{{0}, {1}, {2}, {3}}}, &why));
  CHECK(why.find("lacks a neighbor") != std::string::npos);

  // A single independent class is always fine, even partial.
  CHECK(validate_grundy_coloring(p4, {{{0, 2}}}));
  // Adjacent vertices in one class.
  CHECK_FALSE(validate_grundy_coloring(p4, {{{0, 1}}}));

  CHECK_THROWS_AS((void)validate_grundy_coloring(p4, {{{0}, {0}}}), Error);
  CHECK_THROWS_AS((void)validate_grundy_coloring(p4, {{{9}}}), Error);
  CHECK_THROWS_AS((void)validate_grundy_coloring(p4, {{{0}, {}}}), Error);
}

TEST_CASE("sorted_permutation concatenates ascending") {
  CHECK(sorted_permutation({{{0, 3}, {1}, {2}}}) == Ordering{0, 3, 1, 2});
  CHECK(sorted_permutation({{{3, 0}, {1}, {2}}}) == Ordering{0, 3, 1, 2});

  Graph p4 = testutil::path(4);
  ColorClasses cc = first_fit(p4, {3, 0, 1, 2});
  Ordering sorted = sorted_permutation(p4, cc);
  CHECK(sorted == Ordering{0, 3, 1, 2});
  CHECK(first_fit(p4, sorted) == cc);
}

TEST_CASE("normalize_singletons_last") {
  // Star with center 0: ({0},{1,2}) is a Grundy coloring; the singleton moves.
  Graph star(3);
  star.add_edge(0, 1);
  star.add_edge(0, 2);
  star.finalize();
  ColorClasses cc{{{0}, {1, 2}}};
  REQUIRE(validate_grundy_coloring(star, cc));
  ColorClasses norm = normalize_singletons_last(star, cc);
  CHECK(norm.classes == std::vector<std::vector<int>>{{1, 2}, {0}});
  CHECK(validate_grundy_coloring(star, norm));

  // Already normalized stays put.
  Graph p4 = testutil::path(4);
  ColorClasses already{{{0, 3}, {1}, {2}}};
  CHECK(normalize_singletons_last(p4, already) == already);

  // No singletons at all.
  Graph edgeless(4);
  edgeless.finalize();
  ColorClasses one{{{0, 1, 2, 3}}};
  CHECK(normalize_singletons_last(edgeless, one) == one);

  // The keep-set variant pins protected singletons in place.
  ColorClasses kept = normalize_singletons_last(star, cc, {0});
  CHECK(kept == cc);

  CHECK_THROWS_AS((void)normalize_singletons_last(p4, {{{0}, {1}, {2}, {3}}}), Error);
}

TEST_CASE("classes_to_ordering") {
  CHECK(classes_to_ordering({{{0, 3}, {1}}}, {2}) == Ordering{0, 3, 1, 2});
  CHECK(classes_to_ordering({}, {0, 1, 2}) == Ordering{0, 1, 2});
  CHECK_THROWS_AS((void)classes_to_ordering({{{0}, {}}}, {}), Error);
  CHECK_THROWS_AS((void)classes_to_ordering({{{0, 3}}}, {3}), Error);
}

TEST_CASE("first_fit output always validates") {
  std::mt19937_64 rng(42);
  for (int iter = 0; iter < 200; ++iter) {
    int n = static_cast<int>(rng() % 9);
    Graph g = testutil::random_graph(rng, n, static_cast<double>(rng() % 101) / 100.0);
    ColorClasses cc = first_fit(g, testutil::random_ordering(rng, n));
    CHECK(validate_grundy_coloring(g, cc));
    long long covered = 0;
    for (const auto& cls : cc.classes) covered += static_cast<long long>(cls.size());
    CHECK(covered == n);
  }
}

TEST_CASE("block-backed graphs color exactly like explicit ones") {
  std::mt19937_64 rng(43);
  for (int iter = 0; iter < 50; ++iter) {
    ModulatorInstance inst = testutil::random_instance(rng, 1 + (int)(rng() % 3), 3, 9);
    const Graph& blocked = inst.graph;
    Graph explicitCopy(blocked.vertex_count());
    for (int v = 0; v < blocked.vertex_count(); ++v)
      for (int u : blocked.neighbors(v))
        if (u > v) explicitCopy.add_edge(v, u);
    explicitCopy.finalize();
    Ordering order = testutil::random_ordering(rng, blocked.vertex_count());
    ColorClasses a = first_fit(blocked, order);
    ColorClasses b = first_fit(explicitCopy, order);
    CHECK(a == b);
    CHECK(validate_grundy_coloring(blocked, a));
    CHECK(validate_grundy_coloring(explicitCopy, a));
  }
}

TEST_CASE("swap invariance for closed twins") {
  std::mt19937_64 rng(44);
  for (int iter = 0; iter < 200; ++iter) {
    int base = 1 + static_cast<int>(rng() % 7);
    Graph g0 = testutil::random_graph(rng, base, static_cast<double>(rng() % 101) / 100.0);
    int u = static_cast<int>(rng() % base);
    Graph g(base + 1);
    for (int a = 0; a < base; ++a)
      for (int b : g0.neighbors(a))
        if (b > a) g.add_edge(a, b);
    for (int b : g0.neighbors(u)) g.add_edge(base, b);
    g.add_edge(base, u);
    g.finalize();
    Ordering order = testutil::random_ordering(rng, base + 1);
    Ordering swapped = order;
    for (int& x : swapped) x = x == u ? base : (x == base ? u : x);
    CHECK(first_fit(g, order).count() == first_fit(g, swapped).count());
  }
}
