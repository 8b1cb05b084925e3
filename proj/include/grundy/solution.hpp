#pragma once

#include <string>
#include <vector>

#include "grundy/coloring.hpp"

namespace grundy {

struct SolveStats {
  long long candidates_examined = 0;
  long long flow_checks = 0;
  long long ilp_checks = 0;
  long long oracle_calls = 0;
  long long inconsistencies = 0;
  double elapsed_ms = 0.0;
};

/// The result every solver emits: the Grundy number plus a witness that can
/// be re-checked independently — the classes validate, and first-fit on the
/// ordering reproduces them.
struct GrundySolution {
  int grundy_number = 0;
  ColorClasses witness;
  Ordering ordering;
  std::string algorithm;
  SolveStats stats;
};

// JSON wire form (1-based vertex ids, classes sorted ascending):
//   {"grundy_number": g, "classes": [[...]], "ordering": [...],
//    "algorithm": "...", "stats": {...}}
std::string solution_to_json(const GrundySolution& sol);

struct ParsedSolution {
  int grundy_number = 0;
  ColorClasses classes;      // 0-based after parsing
  Ordering ordering;         // may be empty if absent
};
ParsedSolution solution_from_json(const std::string& text);

}  // namespace grundy
