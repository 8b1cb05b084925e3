#include "grundy/ilp.hpp"

namespace grundy {

namespace {

struct Searcher {
  const IlpInstance& ilp;
  long long budget;
  long long nodes = 0;
  std::vector<long long> value;
  // Per constraint: sum over fixed variables, plus the min/max contribution
  // still possible from unfixed ones.
  std::vector<long long> fixedSum, slackMin, slackMax;

  bool constraint_alive(std::size_t c) const {
    const auto& con = ilp.constraints[c];
    long long lo = fixedSum[c] + slackMin[c];
    long long hi = fixedSum[c] + slackMax[c];
    switch (con.relation) {
      case Relation::less_equal:
        return lo <= con.rhs;
      case Relation::greater_equal:
        return hi >= con.rhs;
      case Relation::equal:
        return lo <= con.rhs && hi >= con.rhs;
    }
    return true;
  }

  bool dfs(std::size_t var) {
    if (var == ilp.variables.size()) return true;
    const auto& v = ilp.variables[var];
    // Remove this variable's contribution from the slack intervals.
    for (std::size_t c = 0; c < ilp.constraints.size(); ++c) {
      long long coef = ilp.constraints[c].coefficients[var];
      if (coef > 0) {
        slackMin[c] -= coef * v.lower;
        slackMax[c] -= coef * v.upper;
      } else if (coef < 0) {
        slackMin[c] -= coef * v.upper;
        slackMax[c] -= coef * v.lower;
      }
    }
    for (long long x = v.lower; x <= v.upper; ++x) {
      if (++nodes > budget) fail(ErrorKind::resource, "feasibility search budget exhausted");
      bool ok = true;
      for (std::size_t c = 0; c < ilp.constraints.size(); ++c) {
        long long coef = ilp.constraints[c].coefficients[var];
        if (coef != 0) fixedSum[c] += coef * x;
        if (ok) ok = constraint_alive(c);
      }
      if (ok) {
        value[var] = x;
        if (dfs(var + 1)) return true;
      }
      for (std::size_t c = 0; c < ilp.constraints.size(); ++c) {
        long long coef = ilp.constraints[c].coefficients[var];
        if (coef != 0) fixedSum[c] -= coef * x;
      }
    }
    // Restore the slack intervals for backtracking.
    for (std::size_t c = 0; c < ilp.constraints.size(); ++c) {
      long long coef = ilp.constraints[c].coefficients[var];
      if (coef > 0) {
        slackMin[c] += coef * v.lower;
        slackMax[c] += coef * v.upper;
      } else if (coef < 0) {
        slackMin[c] += coef * v.upper;
        slackMax[c] += coef * v.lower;
      }
    }
    return false;
  }
};

}  // namespace

IlpResult solve_feasibility(const IlpInstance& ilp, long long nodeBudget) {
  for (const auto& v : ilp.variables)
    if (v.lower < 0 || v.upper < v.lower)
      fail(ErrorKind::input, "variable " + v.name + " has invalid bounds");
  for (const auto& c : ilp.constraints)
    if (c.coefficients.size() != ilp.variables.size())
      fail(ErrorKind::input, "constraint width does not match variable count");

  Searcher s{ilp, nodeBudget, 0, std::vector<long long>(ilp.variables.size(), 0), {}, {}, {}};
  s.fixedSum.assign(ilp.constraints.size(), 0);
  s.slackMin.assign(ilp.constraints.size(), 0);
  s.slackMax.assign(ilp.constraints.size(), 0);
  for (std::size_t c = 0; c < ilp.constraints.size(); ++c) {
    for (std::size_t i = 0; i < ilp.variables.size(); ++i) {
      long long coef = ilp.constraints[c].coefficients[i];
      if (coef > 0) {
        s.slackMin[c] += coef * ilp.variables[i].lower;
        s.slackMax[c] += coef * ilp.variables[i].upper;
      } else if (coef < 0) {
        s.slackMin[c] += coef * ilp.variables[i].upper;
        s.slackMax[c] += coef * ilp.variables[i].lower;
      }
    }
  }
  // Infeasible before fixing anything?
  for (std::size_t c = 0; c < ilp.constraints.size(); ++c)
    if (!s.constraint_alive(c)) return IlpResult{std::nullopt, 0};

  IlpResult res;
  if (s.dfs(0)) res.assignment = s.value;
  res.nodes = s.nodes;
  return res;
}

}  // namespace grundy
