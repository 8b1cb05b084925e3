#include "grundy/coloring.hpp"

#include <algorithm>
#include <cassert>

namespace grundy {

namespace {

// Shared structural pass: assigns pos[v] = class index, throws on empty
// classes, overlaps and range errors.
std::vector<int> class_positions(const Graph& g, const ColorClasses& cc) {
  std::vector<int> pos(g.vertex_count(), -1);
  for (int i = 0; i < cc.count(); ++i) {
    if (cc.classes[i].empty())
      fail(ErrorKind::validation, "class " + std::to_string(i + 1) + " is empty");
    for (int v : cc.classes[i]) {
      if (v < 0 || v >= g.vertex_count())
        fail(ErrorKind::validation, "vertex " + std::to_string(v) + " out of range");
      if (pos[v] != -1)
        fail(ErrorKind::validation, "vertex " + std::to_string(v) + " appears in two classes");
      pos[v] = i;
    }
  }
  return pos;
}

}  // namespace

ColorClasses first_fit(const Graph& g, const Ordering& order) {
  const int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n)
    fail(ErrorKind::input, "ordering does not cover every vertex");
  std::vector<char> seen(n, 0);
  for (int v : order) {
    if (v < 0 || v >= n || seen[v]) fail(ErrorKind::input, "ordering is not a permutation of V");
    seen[v] = 1;
  }

  std::vector<int> color(n, -1);
  // Colors taken by explicit neighbors of the current vertex, epoch-stamped.
  std::vector<int> used(n + 1, -1);
  // Per clique block: which colors its colored members occupy, plus the
  // least unoccupied color. A block vertex can never take a color below
  // that mark, which keeps huge cliques linear instead of quadratic.
  std::vector<std::vector<char>> blockTaken(g.block_count());
  std::vector<int> blockMex(g.block_count(), 0);
  for (int b = 0; b < g.block_count(); ++b) blockTaken[b].assign(n + 1, 0);

  ColorClasses cc;
  int step = 0;
  for (int v : order) {
    for (int u : g.explicit_neighbors(v))
      if (color[u] >= 0) used[color[u]] = step;
    const int b = g.block_of(v);
    int c = b >= 0 ? blockMex[b] : 0;
    while (used[c] == step || (b >= 0 && blockTaken[b][c])) ++c;
    color[v] = c;
    if (c == cc.count()) cc.classes.emplace_back();
    cc.classes[c].push_back(v);
    if (b >= 0) {
      blockTaken[b][c] = 1;
      while (blockTaken[b][blockMex[b]]) ++blockMex[b];
    }
    ++step;
  }
  for (auto& cls : cc.classes) std::sort(cls.begin(), cls.end());
  return cc;
}

bool validate_grundy_coloring(const Graph& g, const ColorClasses& cc, std::string* why) {
  const std::vector<int> pos = class_positions(g, cc);
  const int gamma = cc.count();

  // Independence. Two members of one clique block are always adjacent.
  for (int i = 0; i < gamma; ++i) {
    std::vector<int> blocksSeen;
    for (int v : cc.classes[i]) {
      for (int u : g.explicit_neighbors(v)) {
        if (pos[u] == i) {
          if (why)
            *why = "class " + std::to_string(i + 1) + " contains adjacent vertices " +
                   std::to_string(v) + " and " + std::to_string(u);
          return false;
        }
      }
      int b = g.block_of(v);
      if (b < 0) continue;
      if (std::find(blocksSeen.begin(), blocksSeen.end(), b) != blocksSeen.end()) {
        if (why)
          *why = "class " + std::to_string(i + 1) + " contains two members of one clique";
        return false;
      }
      blocksSeen.push_back(b);
    }
  }

  // Back-domination. For a block vertex, every earlier class occupied by its
  // block is hit for free; explicit neighbors cover the rest. Counting
  // distinct earlier classes this way stays linear in n + m.
  std::vector<std::vector<int>> blockClassCount(g.block_count());
  std::vector<std::vector<int>> blockPrefixDistinct(g.block_count());
  for (int b = 0; b < g.block_count(); ++b) {
    blockClassCount[b].assign(gamma + 1, 0);
    for (int v : g.block_members(b))
      if (pos[v] >= 0) ++blockClassCount[b][pos[v]];
    auto& pre = blockPrefixDistinct[b];
    pre.assign(gamma + 1, 0);
    for (int i = 1; i <= gamma; ++i)
      pre[i] = pre[i - 1] + (blockClassCount[b][i - 1] > 0 ? 1 : 0);
  }

  std::vector<int> stamp(gamma + 1, -1);
  int step = 0;
  for (int i = 0; i < gamma; ++i) {
    for (int v : cc.classes[i]) {
      const int b = g.block_of(v);
      int hits = b >= 0 ? blockPrefixDistinct[b][i] : 0;
      for (int u : g.explicit_neighbors(v)) {
        int j = pos[u];
        if (j < 0 || j >= i) continue;
        if (b >= 0 && blockClassCount[b][j] > 0) continue;  // already counted
        if (stamp[j] != step) {
          stamp[j] = step;
          ++hits;
        }
      }
      ++step;
      if (hits != i) {
        if (why) {
          // Name the first class v misses.
          for (int j = 0; j < i; ++j) {
            bool hit = b >= 0 && blockClassCount[b][j] > 0;
            if (!hit)
              for (int u : g.explicit_neighbors(v))
                if (pos[u] == j) {
                  hit = true;
                  break;
                }
            if (!hit) {
              *why = "vertex " + std::to_string(v) + " lacks a neighbor in class " +
                     std::to_string(j + 1);
              break;
            }
          }
        }
        return false;
      }
    }
  }
  return true;
}

Ordering sorted_permutation(const ColorClasses& cc) {
  Ordering out;
  for (int i = 0; i < cc.count(); ++i) {
    if (cc.classes[i].empty())
      fail(ErrorKind::validation, "class " + std::to_string(i + 1) + " is empty");
    std::vector<int> cls = cc.classes[i];
    std::sort(cls.begin(), cls.end());
    out.insert(out.end(), cls.begin(), cls.end());
  }
  return out;
}

Ordering sorted_permutation(const Graph& g, const ColorClasses& cc) {
  Ordering out = sorted_permutation(cc);
#ifndef NDEBUG
  if (static_cast<int>(out.size()) == g.vertex_count())
    assert(first_fit(g, out) == cc && "sorted permutation must reproduce its classes");
#endif
  (void)g;
  return out;
}

namespace {

ColorClasses normalize_impl(const Graph& g, const ColorClasses& cc, const std::vector<int>* keep) {
  std::string why;
  if (!validate_grundy_coloring(g, cc, &why))
    fail(ErrorKind::validation, "not a Grundy coloring: " + why);

  std::vector<char> keepMark(g.vertex_count(), 0);
  if (keep)
    for (int v : *keep)
      if (v >= 0 && v < g.vertex_count()) keepMark[v] = 1;

  int lastLarge = -1;
  for (int i = 0; i < cc.count(); ++i)
    if (cc.classes[i].size() > 1) lastLarge = i;

  ColorClasses out;
  std::vector<std::vector<int>> moved;
  for (int i = 0; i < cc.count(); ++i) {
    const auto& cls = cc.classes[i];
    bool qualifies = cls.size() == 1 && !keepMark[cls[0]] && i < lastLarge;
    if (qualifies)
      moved.push_back(cls);
    else
      out.classes.push_back(cls);
  }
  for (auto& cls : moved) out.classes.push_back(std::move(cls));
  return out;
}

}  // namespace

ColorClasses normalize_singletons_last(const Graph& g, const ColorClasses& cc) {
  return normalize_impl(g, cc, nullptr);
}

ColorClasses normalize_singletons_last(const Graph& g, const ColorClasses& cc,
                                       const std::vector<int>& keep) {
  return normalize_impl(g, cc, &keep);
}

Ordering classes_to_ordering(const ColorClasses& cc, const Ordering& suffix) {
  Ordering out = sorted_permutation(cc);
  std::vector<int> sortedPrefix = out;
  std::sort(sortedPrefix.begin(), sortedPrefix.end());
  for (int v : suffix)
    if (std::binary_search(sortedPrefix.begin(), sortedPrefix.end(), v))
      fail(ErrorKind::validation, "suffix vertex " + std::to_string(v) + " already colored");
  out.insert(out.end(), suffix.begin(), suffix.end());
  return out;
}

}  // namespace grundy
