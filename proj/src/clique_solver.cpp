#include "grundy/clique_solver.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <thread>

namespace grundy {

namespace {

// All subsets of `pool` with at most `maxSize` elements, sorted
// lexicographically as vertex lists. The empty set comes first.
std::vector<std::vector<int>> small_subsets(const std::vector<int>& pool, int maxSize) {
  std::vector<std::vector<int>> out{{}};
  std::vector<int> current;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(current.size()) == maxSize) return;
    for (std::size_t i = from; i < pool.size(); ++i) {
      current.push_back(pool[i]);
      out.push_back(current);
      self(self, i + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// First-fit restricted to a small graph given as adjacency bitmasks; returns
// only the color count. Classes are rebuilt separately for the few winners.
int mask_first_fit_count(const std::vector<std::uint64_t>& adj, const std::vector<int>& order) {
  std::uint64_t classMask[64];
  int colors = 0;
  for (int v : order) {
    int c = 0;
    while (c < colors && (adj[v] & classMask[c])) ++c;
    if (c == colors) classMask[colors++] = 0;
    classMask[c] |= std::uint64_t{1} << v;
  }
  return colors;
}

ColorClasses mask_first_fit_classes(const std::vector<std::uint64_t>& adj,
                                    const std::vector<int>& order) {
  ColorClasses cc;
  std::vector<std::uint64_t> classMask;
  for (int v : order) {
    std::size_t c = 0;
    while (c < classMask.size() && (adj[v] & classMask[c])) ++c;
    if (c == classMask.size()) {
      classMask.push_back(0);
      cc.classes.emplace_back();
    }
    classMask[c] |= std::uint64_t{1} << v;
    cc.classes[c].push_back(v);
  }
  for (auto& cls : cc.classes) std::sort(cls.begin(), cls.end());
  return cc;
}

// Fallback for kernels beyond 64 vertices (r >= 4 can reach them).
int plain_first_fit_count(const std::vector<std::vector<int>>& adj, const std::vector<int>& order,
                          std::vector<int>& color, std::vector<char>& used) {
  int colors = 0;
  for (int v : order) {
    for (int u : adj[v])
      if (color[u] >= 0) used[color[u]] = 1;
    int c = 0;
    while (used[c]) ++c;
    color[v] = c;
    colors = std::max(colors, c + 1);
    for (int u : adj[v])
      if (color[u] >= 0) used[color[u]] = 0;
  }
  for (int v : order) color[v] = -1;
  return colors;
}

struct CandidateRef {
  long long qIndex = -1;
  long long permIndex = -1;
  bool valid() const { return qIndex >= 0; }
  bool operator<(const CandidateRef& o) const {
    return qIndex != o.qIndex ? qIndex < o.qIndex : permIndex < o.permIndex;
  }
};

}  // namespace

Kernel build_kernel(const ModulatorInstance& inst) {
  EquivalenceStructure eq =
      compute_equivalence_classes(inst.graph, inst.decomposition, inst.modulator);
  return build_kernel(inst, eq);
}

Kernel build_kernel(const ModulatorInstance& inst, const EquivalenceStructure& eq) {
  if (inst.k() > 1)
    fail(ErrorKind::wrong_solver, "clique kernel needs at most one clique, got " +
                                      std::to_string(inst.k()));
  Kernel kernel;
  kernel.mapping = inst.modulator;
  kernel.mapping.insert(kernel.mapping.end(), eq.representatives.begin(),
                        eq.representatives.end());
  std::sort(kernel.mapping.begin(), kernel.mapping.end());
  kernel.kernelGraph = inst.graph.induced(kernel.mapping);
  for (const auto& cls : eq.classes)
    kernel.removedVertices.insert(kernel.removedVertices.end(),
                                  cls.members.begin() + cls.representatives.size(),
                                  cls.members.end());
  std::sort(kernel.removedVertices.begin(), kernel.removedVertices.end());
  kernel.removedCount = static_cast<long long>(kernel.removedVertices.size());
  return kernel;
}

GrundySolution solve_clique(const ModulatorInstance& inst, const CliqueSolverOptions& options) {
  const auto startTime = std::chrono::steady_clock::now();
  if (inst.k() > 1)
    fail(ErrorKind::wrong_solver,
         "clique solver needs at most one clique, got " + std::to_string(inst.k()));

  const int r = inst.r();
  EquivalenceStructure eq =
      compute_equivalence_classes(inst.graph, inst.decomposition, inst.modulator);
  Kernel kernel = build_kernel(inst, eq);
  const int kn = kernel.kernelGraph.vertex_count();

  // Kernel-local ids.
  std::vector<int> toKernel(inst.graph.vertex_count(), -1);
  for (int i = 0; i < kn; ++i) toKernel[kernel.mapping[i]] = i;
  std::vector<char> isModulator(kn, 0);
  for (int v : inst.modulator) isModulator[toKernel[v]] = 1;
  std::vector<int> fLocal;
  for (int v : eq.representatives) fLocal.push_back(toKernel[v]);
  std::sort(fLocal.begin(), fLocal.end());

  // Signatures of equivalence classes that still own vertices outside the
  // kernel; the lifted singletons must see every modulator-only class.
  std::vector<std::uint64_t> deficientSigs;
  for (const auto& cls : eq.classes)
    if (cls.members.size() > cls.representatives.size()) deficientSigs.push_back(cls.signature);
  std::sort(deficientSigs.begin(), deficientSigs.end());
  deficientSigs.erase(std::unique(deficientSigs.begin(), deficientSigs.end()),
                      deficientSigs.end());
  std::vector<int> modulatorIndex(kn, -1);  // kernel id -> position in sorted R
  for (int i = 0; i < r; ++i) modulatorIndex[toKernel[inst.modulator[i]]] = i;

  const bool useMasks = kn <= 64;
  std::vector<std::uint64_t> maskAdj(useMasks ? kn : 0, 0);
  std::vector<std::vector<int>> plainAdj(useMasks ? 0 : kn);
  for (int v = 0; v < kn; ++v)
    for (int u : kernel.kernelGraph.neighbors(v)) {
      if (useMasks)
        maskAdj[v] |= std::uint64_t{1} << u;
      else
        plainAdj[v].push_back(u);
    }

  const std::vector<std::vector<int>> qSets = small_subsets(fLocal, std::min(r, (int)fLocal.size()));

  // A lifted certificate is valid exactly when every kernel class made of
  // modulator vertices only is seen by every deficient equivalence class.
  auto liftable = [&](const ColorClasses& kernelClasses) {
    for (const auto& cls : kernelClasses.classes) {
      bool allModulator = true;
      std::uint64_t classBits = 0;
      for (int v : cls) {
        if (!isModulator[v]) {
          allModulator = false;
          break;
        }
        classBits |= std::uint64_t{1} << modulatorIndex[v];
      }
      if (!allModulator) continue;
      for (std::uint64_t sig : deficientSigs)
        if ((sig & classBits) == 0) return false;
    }
    return true;
  };

  struct ChunkResult {
    int best = -1;
    CandidateRef firstBest;
    CandidateRef passing;
    ColorClasses passingClasses;  // kernel ids
    std::vector<int> passingQ;    // kernel ids
    long long candidates = 0;
  };

  auto scanChunk = [&](std::size_t qBegin, std::size_t qEnd) {
    ChunkResult res;
    std::vector<int> color(kn, -1);
    std::vector<char> used(kn + 1, 0);
    for (std::size_t qi = qBegin; qi < qEnd; ++qi) {
      const auto& q = qSets[qi];
      std::vector<int> head = q;
      for (int v = 0; v < kn; ++v)
        if (isModulator[v]) head.push_back(v);
      std::sort(head.begin(), head.end());
      std::vector<int> tail;
      for (int v : fLocal)
        if (!std::binary_search(q.begin(), q.end(), v)) tail.push_back(v);

      std::vector<int> order(head.size() + tail.size());
      std::copy(tail.begin(), tail.end(), order.begin() + head.size());
      long long permIndex = 0;
      std::vector<int> perm = head;
      do {
        std::copy(perm.begin(), perm.end(), order.begin());
        ++res.candidates;
        int cnt = useMasks ? mask_first_fit_count(maskAdj, order)
                           : plain_first_fit_count(plainAdj, order, color, used);
        CandidateRef ref{static_cast<long long>(qi), permIndex};
        if (cnt > res.best) {
          res.best = cnt;
          res.firstBest = ref;
          res.passing = CandidateRef{};
        }
        if (cnt == res.best && !res.passing.valid()) {
          ColorClasses cc = useMasks ? mask_first_fit_classes(maskAdj, order)
                                     : first_fit(kernel.kernelGraph, order);
          if (liftable(cc)) {
            res.passing = ref;
            res.passingClasses = std::move(cc);
            res.passingQ = q;
          }
        }
        ++permIndex;
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return res;
  };

  int workers = options.workers;
  if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
  workers = std::max(1, std::min<int>(workers, static_cast<int>(qSets.size())));

  ChunkResult merged;
  if (workers == 1 || kn == 0) {
    merged = scanChunk(0, qSets.size());
  } else {
    std::vector<ChunkResult> results(workers);
    std::vector<std::thread> threads;
    std::size_t per = (qSets.size() + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      std::size_t begin = std::min(qSets.size(), w * per);
      std::size_t end = std::min(qSets.size(), begin + per);
      threads.emplace_back([&, w, begin, end] { results[w] = scanChunk(begin, end); });
    }
    for (auto& t : threads) t.join();
    merged.best = -1;
    for (auto& res : results) {
      merged.candidates += res.candidates;
      if (res.best > merged.best) {
        merged.best = res.best;
        merged.firstBest = res.firstBest;
        merged.passing = CandidateRef{};
        merged.passingClasses = ColorClasses{};
      } else if (res.best < merged.best) {
        continue;
      }
      if (res.passing.valid() && (!merged.passing.valid() || res.passing < merged.passing)) {
        merged.passing = res.passing;
        merged.passingClasses = std::move(res.passingClasses);
        merged.passingQ = std::move(res.passingQ);
      }
    }
  }

  if (!merged.passing.valid())
    fail(ErrorKind::internal, "no kernel optimum lifted to a certificate");

  GrundySolution sol;
  sol.algorithm = "clique-modulator";
  sol.grundy_number = merged.best + static_cast<int>(kernel.removedCount);
  for (const auto& cls : merged.passingClasses.classes) {
    std::vector<int> orig;
    for (int v : cls) orig.push_back(kernel.mapping[v]);
    std::sort(orig.begin(), orig.end());
    sol.witness.classes.push_back(std::move(orig));
  }
  for (int w : kernel.removedVertices) sol.witness.classes.push_back({w});

  std::string why;
  if (!validate_grundy_coloring(inst.graph, sol.witness, &why))
    fail(ErrorKind::internal, "lifted certificate failed validation: " + why);
  sol.ordering = sorted_permutation(inst.graph, sol.witness);
  sol.stats.candidates_examined = merged.candidates;
  sol.stats.elapsed_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - startTime)
                             .count();
  return sol;
}

}  // namespace grundy
