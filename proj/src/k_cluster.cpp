#include "grundy/k_cluster.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>

namespace grundy {

namespace {

struct PrefixView {
  std::vector<int> verts;                // sorted Q ∪ R
  std::vector<std::uint32_t> classBits;  // per prefix class, mask over verts
  int gamma = 0;
};

PrefixView make_view(const ModulatorInstance& inst, const PrefixColoring& prefix) {
  PrefixView view;
  view.verts = prefix.q;
  view.verts.insert(view.verts.end(), inst.modulator.begin(), inst.modulator.end());
  std::sort(view.verts.begin(), view.verts.end());
  if (view.verts.size() > 30) fail(ErrorKind::guard, "prefix beyond 30 vertices");
  view.gamma = prefix.gamma();
  for (const auto& cls : prefix.classes.classes) {
    std::uint32_t bits = 0;
    for (int v : cls) {
      auto it = std::lower_bound(view.verts.begin(), view.verts.end(), v);
      if (it == view.verts.end() || *it != v)
        fail(ErrorKind::contract, "prefix class vertex outside Q ∪ R");
      bits |= std::uint32_t{1} << (it - view.verts.begin());
    }
    view.classBits.push_back(bits);
  }
  return view;
}

struct ClassFacts {
  int firstMiss = 0;         // least prefix class the representative misses
  std::uint32_t covers = 0;  // prefix vertices the representative is adjacent to
  long long demand = 0;
  int representative = -1;   // lowest-indexed remaining member
};

std::vector<ClassFacts> class_facts(const ModulatorInstance& inst, const EquivalenceStructure& eq,
                                    const PrefixColoring& prefix, const PrefixView& view) {
  std::vector<ClassFacts> facts(eq.classes.size());
  for (std::size_t e = 0; e < eq.classes.size(); ++e) {
    const auto& cls = eq.classes[e];
    ClassFacts& f = facts[e];
    for (int v : cls.members)
      if (!std::binary_search(prefix.q.begin(), prefix.q.end(), v)) {
        ++f.demand;
        if (f.representative < 0) f.representative = v;
      }
    if (f.representative < 0) continue;
    for (std::size_t i = 0; i < view.verts.size(); ++i)
      if (inst.graph.has_edge(f.representative, view.verts[i]))
        f.covers |= std::uint32_t{1} << i;
    f.firstMiss = view.gamma;
    for (int p = 0; p < view.gamma; ++p) {
      bool hit = false;
      for (int y : prefix.classes.classes[p])
        if (inst.graph.has_edge(f.representative, y)) {
          hit = true;
          break;
        }
      if (!hit) {
        f.firstMiss = p;
        break;
      }
    }
  }
  return facts;
}

// Feasible gap interval for a tuple given combined facts.
std::pair<int, int> tuple_interval(const PrefixView& view, int firstMiss, std::uint32_t covers) {
  int lo = 0;
  for (int q = view.gamma - 1; q >= 0; --q)
    if ((view.classBits[q] & covers) != view.classBits[q]) {
      lo = q + 1;
      break;
    }
  return {lo, firstMiss};
}

}  // namespace

bool tuple_placement_feasible(const ModulatorInstance& inst, const EquivalenceStructure& eq,
                              const PrefixColoring& prefix, const TupleClass& tuple, int gap) {
  const int gamma = prefix.gamma();
  if (gap < 0 || gap > gamma) fail(ErrorKind::contract, "gap out of range");
  if (static_cast<int>(tuple.perClique.size()) != inst.k())
    fail(ErrorKind::contract, "tuple arity does not match clique count");

  std::vector<int> members;
  for (int c = 0; c < inst.k(); ++c) {
    int local = tuple.perClique[c];
    if (local < 0) continue;
    if (local >= static_cast<int>(eq.perClique[c].size()))
      fail(ErrorKind::contract, "tuple names a missing equivalence class");
    const auto& cls = eq.classes[eq.perClique[c][local]];
    int rep = -1;
    for (int v : cls.members)
      if (!std::binary_search(prefix.q.begin(), prefix.q.end(), v)) {
        rep = v;
        break;
      }
    if (rep < 0) return false;  // no remaining member to place
    members.push_back(rep);
  }
  if (members.empty()) fail(ErrorKind::contract, "tuple selects no clique");

  for (int member : members)
    for (int p = 0; p < gap; ++p) {
      bool hit = false;
      for (int y : prefix.classes.classes[p])
        if (inst.graph.has_edge(member, y)) {
          hit = true;
          break;
        }
      if (!hit) return false;
    }
  for (int q = gap; q < gamma; ++q)
    for (int y : prefix.classes.classes[q]) {
      bool hit = false;
      for (int member : members)
        if (inst.graph.has_edge(member, y)) {
          hit = true;
          break;
        }
      if (!hit) return false;
    }
  return true;
}

ExtensionIlp build_extension_ilp(const ModulatorInstance& inst, const EquivalenceStructure& eq,
                                 const PrefixColoring& prefix, GapMonotonicity monotonicity) {
  const int k = inst.k();
  const PrefixView view = make_view(inst, prefix);
  const std::vector<ClassFacts> facts = class_facts(inst, eq, prefix, view);

  ExtensionIlp ext;
  ext.gaps = view.gamma + 1;
  ext.perClassDemand.resize(eq.classes.size());
  for (std::size_t e = 0; e < eq.classes.size(); ++e) ext.perClassDemand[e] = facts[e].demand;

  std::vector<long long> remaining(k, 0);
  for (int c = 0; c < k; ++c)
    for (int idx : eq.perClique[c]) remaining[c] += facts[idx].demand;
  long long beta = 0;
  for (int c = 0; c < k; ++c) beta = std::max(beta, remaining[c]);
  ext.beta = static_cast<int>(beta);

  // Stages: the t-th inserted class must touch exactly the cliques with at
  // least t remaining vertices. Runs of equal support form the stages.
  for (long long t = 1; t <= beta; ++t) {
    std::vector<int> support;
    for (int c = 0; c < k; ++c)
      if (remaining[c] >= t) support.push_back(c);
    if (!ext.stageCliques.empty() && ext.stageCliques.back() == support) {
      ++ext.stageCount.back();
    } else {
      ext.stageCliques.push_back(std::move(support));
      ext.stageCount.push_back(1);
    }
  }
  const int stages = static_cast<int>(ext.stageCliques.size());

  // Tuples per stage: one demand-positive class per supported clique.
  for (int st = 0; st < stages; ++st) {
    const auto& support = ext.stageCliques[st];
    if (support.empty()) fail(ErrorKind::internal, "stage without supported cliques");
    std::vector<std::vector<int>> choices(support.size());
    for (std::size_t s = 0; s < support.size(); ++s) {
      for (std::size_t local = 0; local < eq.perClique[support[s]].size(); ++local)
        if (facts[eq.perClique[support[s]][local]].demand > 0)
          choices[s].push_back(static_cast<int>(local));
      if (choices[s].empty())
        fail(ErrorKind::internal, "supported clique without a placeable class");
    }
    std::vector<std::size_t> pick(support.size(), 0);
    while (true) {
      TupleClass tuple;
      tuple.perClique.assign(k, -1);
      for (std::size_t s = 0; s < support.size(); ++s)
        tuple.perClique[support[s]] = choices[s][pick[s]];
      ext.tuples.push_back(tuple);
      ext.tupleStage.push_back(st);
      std::size_t s = support.size();
      while (s > 0 && ++pick[s - 1] == choices[s - 1].size()) pick[--s] = 0;
      if (s == 0) break;
    }
  }

  auto& ilp = ext.ilp;
  auto addVar = [&](const std::string& name, long long lo, long long hi) {
    ilp.variables.push_back({name, lo, hi});
    return static_cast<int>(ilp.variables.size() - 1);
  };

  // X grouped by (stage, gap) with the stage-use boolean right after its
  // group, so the search binds order conflicts as early as possible.
  ext.xVar.assign(ext.tuples.size(), std::vector<int>(ext.gaps, -1));
  ext.stageUseVar.assign(stages, std::vector<int>(ext.gaps, -1));
  for (int st = 0; st < stages; ++st) {
    for (int gap = 0; gap < ext.gaps; ++gap) {
      for (std::size_t l = 0; l < ext.tuples.size(); ++l) {
        if (ext.tupleStage[l] != st) continue;
        int firstMiss = view.gamma;
        std::uint32_t covers = 0;
        for (int c = 0; c < k; ++c) {
          int local = ext.tuples[l].perClique[c];
          if (local < 0) continue;
          const ClassFacts& f = facts[eq.perClique[c][local]];
          firstMiss = std::min(firstMiss, f.firstMiss);
          covers |= f.covers;
        }
        auto [lo, hi] = tuple_interval(view, firstMiss, covers);
        if (gap < lo || gap > hi) continue;
        ext.xVar[l][gap] = addVar("x_s" + std::to_string(st) + "_t" + std::to_string(l) + "_g" +
                                      std::to_string(gap),
                                  0, beta);
      }
      ext.stageUseVar[st][gap] =
          addVar("u_s" + std::to_string(st) + "_g" + std::to_string(gap), 0, 1);
    }
  }
  ext.yVar.assign(k, std::vector<int>(ext.gaps, -1));
  ext.yPrimeVar.assign(k, std::vector<int>(ext.gaps, -1));
  for (int c = 0; c < k; ++c)
    for (int gap = 0; gap < ext.gaps; ++gap) {
      ext.yVar[c][gap] = addVar("y_c" + std::to_string(c) + "_g" + std::to_string(gap), 0, 1);
      ext.yPrimeVar[c][gap] = addVar("yp_c" + std::to_string(c) + "_g" + std::to_string(gap), 0, 1);
    }

  const std::size_t width = ilp.variables.size();
  auto addConstraint = [&](Relation rel, long long rhs) -> std::vector<long long>& {
    ilp.constraints.push_back({std::vector<long long>(width, 0), rel, rhs});
    return ilp.constraints.back().coefficients;
  };

  // Total inserted classes across every gap.
  {
    auto& row = addConstraint(Relation::equal, beta);
    for (std::size_t l = 0; l < ext.tuples.size(); ++l)
      for (int gap = 0; gap < ext.gaps; ++gap)
        if (ext.xVar[l][gap] >= 0) row[ext.xVar[l][gap]] = 1;
  }
  // Every remaining member of every equivalence class is used exactly once.
  for (int c = 0; c < k; ++c)
    for (std::size_t local = 0; local < eq.perClique[c].size(); ++local) {
      long long demand = facts[eq.perClique[c][local]].demand;
      if (demand == 0) continue;
      auto& row = addConstraint(Relation::equal, demand);
      for (std::size_t l = 0; l < ext.tuples.size(); ++l) {
        if (ext.tuples[l].perClique[c] != static_cast<int>(local)) continue;
        for (int gap = 0; gap < ext.gaps; ++gap)
          if (ext.xVar[l][gap] >= 0) row[ext.xVar[l][gap]] = 1;
      }
    }
  // Printed occupancy linking: Y bounded by the gap's usage of the clique,
  // Y' forced up when the gap is unused, and the pair complementary.
  for (int c = 0; c < k; ++c)
    for (int gap = 0; gap < ext.gaps; ++gap) {
      auto& le = addConstraint(Relation::less_equal, 0);
      le[ext.yVar[c][gap]] = 1;
      for (std::size_t l = 0; l < ext.tuples.size(); ++l)
        if (ext.tuples[l].perClique[c] >= 0 && ext.xVar[l][gap] >= 0)
          le[ext.xVar[l][gap]] = -1;
      auto& ge = addConstraint(Relation::greater_equal, 1);
      ge[ext.yPrimeVar[c][gap]] = 1;
      for (std::size_t l = 0; l < ext.tuples.size(); ++l)
        if (ext.tuples[l].perClique[c] >= 0 && ext.xVar[l][gap] >= 0)
          ge[ext.xVar[l][gap]] = 1;
      auto& eqRow = addConstraint(Relation::equal, 1);
      eqRow[ext.yVar[c][gap]] = 1;
      eqRow[ext.yPrimeVar[c][gap]] = 1;
    }
  // Printed cross-gap ordering rows (gap 0 excluded as printed).
  for (int c = 0; c < k; ++c)
    for (int gap = 1; gap + 1 < ext.gaps; ++gap) {
      if (monotonicity == GapMonotonicity::nondecreasing ||
          monotonicity == GapMonotonicity::as_printed) {
        auto& row = addConstraint(Relation::greater_equal, 0);
        row[ext.yVar[c][gap + 1]] = 1;
        row[ext.yVar[c][gap]] = -1;
      }
      if (monotonicity == GapMonotonicity::nonincreasing ||
          monotonicity == GapMonotonicity::as_printed) {
        auto& row = addConstraint(Relation::less_equal, 0);
        row[ext.yPrimeVar[c][gap]] = 1;
        row[ext.yPrimeVar[c][gap + 1]] = -1;
      }
    }
  // Stage machinery: a gap used by a stage sets its boolean; a later stage
  // may never occupy an earlier gap than a preceding stage.
  for (int st = 0; st < stages; ++st)
    for (int gap = 0; gap < ext.gaps; ++gap) {
      auto& row = addConstraint(Relation::less_equal, 0);
      for (std::size_t l = 0; l < ext.tuples.size(); ++l)
        if (ext.tupleStage[l] == st && ext.xVar[l][gap] >= 0) row[ext.xVar[l][gap]] = 1;
      row[ext.stageUseVar[st][gap]] = -beta;
    }
  for (int st = 0; st < stages; ++st)
    for (int st2 = st + 1; st2 < stages; ++st2)
      for (int gap = 1; gap < ext.gaps; ++gap)
        for (int gap2 = 0; gap2 < gap; ++gap2) {
          auto& row = addConstraint(Relation::less_equal, 1);
          row[ext.stageUseVar[st][gap]] = 1;
          row[ext.stageUseVar[st2][gap2]] = 1;
        }
  return ext;
}

std::optional<KExtensionPlan> check_extendable_k(const ModulatorInstance& inst,
                                                 const EquivalenceStructure& eq,
                                                 const PrefixColoring& prefix,
                                                 const KClusterOptions& options,
                                                 SolveStats* stats) {
  ExtensionIlp ext = build_extension_ilp(inst, eq, prefix, options.monotonicity);
  IlpResult res = solve_feasibility(ext.ilp, options.ilpBudget);
  if (stats) ++stats->ilp_checks;
  if (!res.feasible()) return std::nullopt;
  const std::vector<long long>& x = *res.assignment;

  KExtensionPlan plan;
  plan.perGap.assign(ext.gaps, {});
  plan.classesPerGap.assign(ext.gaps, {});

  // Cursors hand out the lowest remaining member of each class first.
  std::vector<std::vector<int>> pool(eq.classes.size());
  std::vector<std::size_t> cursor(eq.classes.size(), 0);
  for (std::size_t e = 0; e < eq.classes.size(); ++e)
    for (int v : eq.classes[e].members)
      if (!std::binary_search(prefix.q.begin(), prefix.q.end(), v)) pool[e].push_back(v);

  // Gap ascending, stage ascending (= support descending), tuples in build
  // order (lexicographic within a stage).
  for (int gap = 0; gap < ext.gaps; ++gap)
    for (std::size_t l = 0; l < ext.tuples.size(); ++l) {
      if (ext.xVar[l][gap] < 0) continue;
      for (long long copy = 0; copy < x[ext.xVar[l][gap]]; ++copy) {
        std::vector<int> members;
        for (int c = 0; c < inst.k(); ++c) {
          int local = ext.tuples[l].perClique[c];
          if (local < 0) continue;
          int e = eq.perClique[c][local];
          if (cursor[e] >= pool[e].size())
            fail(ErrorKind::internal, "equivalence class over-consumed in decode");
          members.push_back(pool[e][cursor[e]++]);
        }
        std::sort(members.begin(), members.end());
        plan.perGap[gap].push_back(ext.tuples[l]);
        plan.classesPerGap[gap].push_back(std::move(members));
      }
    }

  for (int gap = 0; gap < ext.gaps; ++gap) {
    for (auto& cls : plan.classesPerGap[gap]) plan.witness.classes.push_back(cls);
    if (gap < prefix.gamma()) plan.witness.classes.push_back(prefix.classes.classes[gap]);
  }

  // Mandatory validation of the decoded plan. The within-gap order is
  // already descending by support; if the coloring still fails, the
  // candidate is treated as not extendable and the event is counted.
  std::string why;
  if (!validate_grundy_coloring(inst.graph, plan.witness, &why)) {
    if (stats) ++stats->inconsistencies;
    return std::nullopt;
  }
  return plan;
}

GrundySolution solve_k_cluster(const ModulatorInstance& inst, const KClusterOptions& options) {
  const auto startTime = std::chrono::steady_clock::now();
  EquivalenceStructure eq =
      compute_equivalence_classes(inst.graph, inst.decomposition, inst.modulator);

  GrundySolution sol;
  sol.algorithm = "k-cluster-ilp";
  int bestValue = -1;
  SolveStats stats;

  std::vector<long long> cliqueSizes(inst.k());
  for (int c = 0; c < inst.k(); ++c)
    cliqueSizes[c] = static_cast<long long>(inst.decomposition.cliques[c].size());

  for_each_prefix(inst, eq, inst.k() * inst.r(), [&](const PrefixColoring& prefix) {
    ++stats.candidates_examined;
    long long beta = 0;
    for (int c = 0; c < inst.k(); ++c) {
      long long inQ = 0;
      for (int v : prefix.q)
        if (std::binary_search(inst.decomposition.cliques[c].begin(),
                               inst.decomposition.cliques[c].end(), v))
          ++inQ;
      beta = std::max(beta, cliqueSizes[c] - inQ);
    }
    if (prefix.gamma() + beta <= bestValue) return;

    std::optional<KExtensionPlan> plan = check_extendable_k(inst, eq, prefix, options, &stats);
    if (!plan) return;
    if (plan->witness.count() != prefix.gamma() + beta)
      fail(ErrorKind::internal, "k-cluster certificate has unexpected class count");

    bestValue = prefix.gamma() + static_cast<int>(beta);
    sol.grundy_number = bestValue;
    sol.witness = std::move(plan->witness);
  });

  if (bestValue < 0) fail(ErrorKind::internal, "no extendable prefix found");
  sol.ordering = sorted_permutation(inst.graph, sol.witness);
  sol.stats = stats;
  sol.stats.elapsed_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - startTime)
                             .count();
  return sol;
}

}  // namespace grundy
