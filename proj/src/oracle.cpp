#include "grundy/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <bit>
#include <cstdint>

namespace grundy {

namespace {

struct OracleSearch {
  const std::vector<std::uint32_t>& adj;
  std::vector<int> best;           // max classes achievable from a remaining-set
  std::vector<std::uint32_t> pick; // the class chosen at the optimum
  long long candidates = 0;

  int solve(std::uint32_t remaining) {
    if (remaining == 0) return 0;
    int& memo = best[remaining];
    if (memo >= 0) return memo;
    memo = 0;
    for (std::uint32_t cls = remaining; cls; cls = (cls - 1) & remaining) {
      ++candidates;
      bool ok = true;
      std::uint32_t rest = remaining & ~cls;
      for (std::uint32_t bits = cls; bits && ok; bits &= bits - 1) {
        int v = std::countr_zero(bits);
        if (adj[v] & cls) ok = false;  // class must be independent
      }
      for (std::uint32_t bits = rest; bits && ok; bits &= bits - 1) {
        int w = std::countr_zero(bits);
        if (!(adj[w] & cls)) ok = false;  // class must dominate the rest
      }
      if (!ok) continue;
      int sub = 1 + solve(rest);
      if (sub > memo) {
        memo = sub;
        pick[remaining] = cls;
      }
    }
    return memo;
  }
};

}  // namespace

GrundySolution grundy_oracle(const Graph& g, const OracleOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const int n = g.vertex_count();
  if (n > options.guard)
    fail(ErrorKind::guard, "oracle guard: graph has " + std::to_string(n) +
                               " vertices, guard is " + std::to_string(options.guard));
  if (n > 24) fail(ErrorKind::guard, "oracle is capped at 24 vertices");

  std::vector<std::uint32_t> adj(n, 0);
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbors(v)) adj[v] |= std::uint32_t{1} << u;

  GrundySolution sol;
  sol.algorithm = "oracle";
  sol.stats.oracle_calls = 1;
  if (n > 0) {
    OracleSearch search{adj,
                        std::vector<int>(std::size_t{1} << n, -1),
                        std::vector<std::uint32_t>(std::size_t{1} << n, 0),
                        0};
    std::uint32_t all = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
    sol.grundy_number = search.solve(all);
    sol.stats.candidates_examined = search.candidates;
    for (std::uint32_t rem = all; rem;) {
      std::uint32_t cls = search.pick[rem];
      std::vector<int> members;
      for (std::uint32_t bits = cls; bits; bits &= bits - 1)
        members.push_back(std::countr_zero(bits));
      sol.witness.classes.push_back(std::move(members));
      rem &= ~cls;
    }
  }
  sol.ordering = sorted_permutation(g, sol.witness);
  sol.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return sol;
}

}  // namespace grundy
