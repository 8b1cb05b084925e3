#include "grundy/prefix.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace grundy {

namespace {

// Subsets of the per-clique representative pools: at most `perClique` from
// each pool, at most `maxTotal` overall. Lexicographic order as vertex lists.
std::vector<std::vector<int>> representative_subsets(const std::vector<std::vector<int>>& pools,
                                                     int perClique, int maxTotal) {
  std::vector<std::vector<int>> out{{}};
  std::vector<int> current;

  // Flat pool with clique tags: extend by any element after the last chosen
  // one, respecting both capacity limits.
  struct Entry {
    int vertex;
    int clique;
  };
  std::vector<Entry> flat;
  for (std::size_t c = 0; c < pools.size(); ++c)
    for (int v : pools[c]) flat.push_back({v, static_cast<int>(c)});
  std::sort(flat.begin(), flat.end(), [](const Entry& a, const Entry& b) { return a.vertex < b.vertex; });

  std::vector<int> perCliqueCount(pools.size(), 0);
  auto extend = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(current.size()) == maxTotal) return;
    for (std::size_t i = from; i < flat.size(); ++i) {
      if (perCliqueCount[flat[i].clique] == perClique) continue;
      ++perCliqueCount[flat[i].clique];
      current.push_back(flat[i].vertex);
      out.push_back(current);
      self(self, i + 1);
      current.pop_back();
      --perCliqueCount[flat[i].clique];
    }
  };
  extend(extend, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

void for_each_prefix(const ModulatorInstance& inst, const EquivalenceStructure& eq, int maxTotal,
                     const std::function<void(const PrefixColoring&)>& visit) {
  const int r = inst.r();
  std::vector<std::vector<int>> pools(inst.k());
  for (int c = 0; c < inst.k(); ++c)
    for (int clsIdx : eq.perClique[c]) {
      const auto& reps = eq.classes[clsIdx].representatives;
      pools[c].insert(pools[c].end(), reps.begin(), reps.end());
    }

  const auto qSets = representative_subsets(pools, r, maxTotal);

  for (const auto& q : qSets) {
    std::vector<int> verts = q;
    verts.insert(verts.end(), inst.modulator.begin(), inst.modulator.end());
    std::sort(verts.begin(), verts.end());
    const int h = static_cast<int>(verts.size());
    if (h > 30) fail(ErrorKind::guard, "prefix graph beyond 30 vertices");

    std::vector<std::uint32_t> adj(h, 0);
    for (int i = 0; i < h; ++i)
      for (int j = i + 1; j < h; ++j)
        if (inst.graph.has_edge(verts[i], verts[j])) {
          adj[i] |= std::uint32_t{1} << j;
          adj[j] |= std::uint32_t{1} << i;
        }
    std::uint32_t rMask = 0;
    for (int i = 0; i < h; ++i)
      if (std::binary_search(inst.modulator.begin(), inst.modulator.end(), verts[i]))
        rMask |= std::uint32_t{1} << i;

    PrefixColoring prefix;
    prefix.q = q;
    std::vector<std::uint32_t> chosen;
    const std::uint32_t all = h == 0 ? 0 : (h == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << h) - 1);

    auto emit = [&]() {
      prefix.classes.classes.clear();
      for (std::uint32_t cls : chosen) {
        std::vector<int> members;
        for (std::uint32_t bits = cls; bits; bits &= bits - 1)
          members.push_back(verts[std::countr_zero(bits)]);
        prefix.classes.classes.push_back(std::move(members));
      }
      visit(prefix);
    };

    auto rec = [&](auto&& self, std::uint32_t remaining) -> void {
      if (remaining == 0) {
        emit();
        return;
      }
      for (std::uint32_t cls = remaining; cls; cls = (cls - 1) & remaining) {
        if (!(cls & rMask)) continue;  // every prefix class holds a modulator vertex
        bool ok = true;
        std::uint32_t rest = remaining & ~cls;
        for (std::uint32_t bits = cls; bits && ok; bits &= bits - 1)
          if (adj[std::countr_zero(bits)] & cls) ok = false;
        for (std::uint32_t bits = rest; bits && ok; bits &= bits - 1)
          if (!(adj[std::countr_zero(bits)] & cls)) ok = false;
        if (!ok) continue;
        chosen.push_back(cls);
        self(self, rest);
        chosen.pop_back();
      }
    };
    rec(rec, all);
  }
}

bool is_classwise_subsequence(const ColorClasses& prefix, const ColorClasses& full) {
  std::size_t at = 0;
  for (const auto& cls : prefix.classes) {
    while (at < full.classes.size() && full.classes[at] != cls) ++at;
    if (at == full.classes.size()) return false;
    ++at;
  }
  return true;
}

}  // namespace grundy
