#pragma once

#include <optional>

#include "grundy/ilp.hpp"
#include "grundy/prefix.hpp"
#include "grundy/solution.hpp"

namespace grundy {

/// An inserted color class described per clique: NONE or the index of one of
/// that clique's equivalence classes (local to the clique).
struct TupleClass {
  std::vector<int> perClique;  // length k, -1 = NONE

  bool operator==(const TupleClass&) const = default;
};

/// Integer feasibility program deciding extendability. Variables: X(l, j)
/// counts copies of tuple class l inserted in gap j; Y/Y' are the printed
/// per-clique gap-occupancy booleans; stage-use booleans pin the order in
/// which clique supports may appear across gaps.
///
/// In any full extension the supports of the inserted classes are forced:
/// the t-th inserted class touches exactly the cliques with at least t
/// remaining vertices (supports shrink along the sequence and each clique is
/// touched once per remaining vertex). Tuples are therefore generated per
/// "stage" of that chain, and a pair of stage-use booleans in inverted gap
/// order may not both be set. That keeps feasibility equivalent to the
/// existence of a valid extension.
struct ExtensionIlp {
  IlpInstance ilp;
  std::vector<TupleClass> tuples;
  std::vector<int> tupleStage;                    // tuple -> stage
  std::vector<std::vector<int>> xVar;             // [tuple][gap] -> var index or -1
  std::vector<std::vector<int>> yVar, yPrimeVar;  // [clique][gap] -> var index
  std::vector<std::vector<int>> stageUseVar;      // [stage][gap] -> var index
  std::vector<std::vector<int>> stageCliques;     // stage -> cliques touched
  std::vector<int> stageCount;                    // stage -> classes to insert
  std::vector<long long> perClassDemand;          // eq-class -> remaining members
  int beta = 0;
  int gaps = 1;  // gammaPrime + 1
};

/// Which direction the printed gap-occupancy ordering rows take. The printed
/// linking only bounds Y from one side, so every direction is satisfiable by
/// Y = 0 and the choice does not affect answers; the exactness comes from
/// the stage machinery. Kept switchable for experimentation.
enum class GapMonotonicity {
  as_printed,     // both printed rows (they are opposite inequalities)
  nondecreasing,  // Y[i][j+1] >= Y[i][j]
  nonincreasing,  // Y[i][j]   >= Y[i][j+1]
  off,
};

struct KClusterOptions {
  GapMonotonicity monotonicity = GapMonotonicity::as_printed;
  long long ilpBudget = 20'000'000;
  int workers = 1;  // accepted for parity; the scan is serial
};

bool tuple_placement_feasible(const ModulatorInstance& inst, const EquivalenceStructure& eq,
                              const PrefixColoring& prefix, const TupleClass& tuple, int gap);

ExtensionIlp build_extension_ilp(const ModulatorInstance& inst, const EquivalenceStructure& eq,
                                 const PrefixColoring& prefix,
                                 GapMonotonicity monotonicity = GapMonotonicity::as_printed);

struct KExtensionPlan {
  std::vector<std::vector<TupleClass>> perGap;             // descending support order
  std::vector<std::vector<std::vector<int>>> classesPerGap;  // materialized vertices
  ColorClasses witness;                                    // full validated coloring
};

// Extendable iff the program is feasible and the decoded plan materializes
// into a coloring that passes validation (validation is mandatory; a decode
// that fails it is treated as not extendable and counted in `inconsistencies`).
std::optional<KExtensionPlan> check_extendable_k(const ModulatorInstance& inst,
                                                 const EquivalenceStructure& eq,
                                                 const PrefixColoring& prefix,
                                                 const KClusterOptions& options,
                                                 SolveStats* stats = nullptr);

// Exact Grundy solution for any cluster modulator via the integer program.
GrundySolution solve_k_cluster(const ModulatorInstance& inst, const KClusterOptions& options = {});

}  // namespace grundy
