#include "grundy/equivalence.hpp"

#include <algorithm>
#include <unordered_map>

namespace grundy {

EquivalenceStructure compute_equivalence_classes(const Graph& g, const ClusterDecomposition& dec,
                                                 const std::vector<int>& modulator) {
  const int r = static_cast<int>(modulator.size());
  if (r > 64) fail(ErrorKind::guard, "modulator larger than 64 vertices is unsupported");

  EquivalenceStructure eq;
  eq.classOf.assign(g.vertex_count(), -1);
  eq.perClique.resize(dec.clique_count());

  for (int c = 0; c < dec.clique_count(); ++c) {
    std::unordered_map<std::uint64_t, int> bySig;
    for (int v : dec.cliques[c]) {  // ascending, so members stay sorted
      std::uint64_t sig = 0;
      for (int i = 0; i < r; ++i)
        if (g.has_edge(v, modulator[i])) sig |= std::uint64_t{1} << i;
      auto it = bySig.find(sig);
      if (it == bySig.end()) {
        it = bySig.emplace(sig, static_cast<int>(eq.classes.size())).first;
        eq.classes.push_back(EquivalenceClass{c, sig, {}, {}});
        eq.perClique[c].push_back(it->second);
      }
      eq.classes[it->second].members.push_back(v);
      eq.classOf[v] = it->second;
    }
    // First-seen order equals order by smallest member (ascending scan).
    for (int idx : eq.perClique[c]) {
      auto& cls = eq.classes[idx];
      int take = std::min<int>(r, static_cast<int>(cls.members.size()));
      cls.representatives.assign(cls.members.begin(), cls.members.begin() + take);
      eq.representatives.insert(eq.representatives.end(), cls.representatives.begin(),
                                cls.representatives.end());
    }
  }
  std::sort(eq.representatives.begin(), eq.representatives.end());
  return eq;
}

}  // namespace grundy
