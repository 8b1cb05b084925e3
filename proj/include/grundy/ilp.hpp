#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grundy/error.hpp"

namespace grundy {

enum class Relation { less_equal, equal, greater_equal };

struct IlpVariable {
  std::string name;
  long long lower = 0;  // bounds are finite and non-negative
  long long upper = 0;
};

struct IlpConstraint {
  std::vector<long long> coefficients;  // one per variable
  Relation relation = Relation::equal;
  long long rhs = 0;
};

struct IlpInstance {
  std::vector<IlpVariable> variables;
  std::vector<IlpConstraint> constraints;
};

struct IlpResult {
  std::optional<std::vector<long long>> assignment;  // empty => infeasible
  long long nodes = 0;

  bool feasible() const { return assignment.has_value(); }
};

// Depth-first search over the variables in the given order, values ascending
// from the lower bound, pruning a branch as soon as some constraint's
// left-hand side can no longer reach its right-hand side given the interval
// still achievable by unfixed variables. Returns the lexicographically first
// satisfying assignment. Throws a resource error once `nodeBudget` value
// assignments have been tried.
IlpResult solve_feasibility(const IlpInstance& ilp, long long nodeBudget = 20'000'000);

}  // namespace grundy
