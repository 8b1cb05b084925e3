#include "grundy/generator.hpp"

#include <numeric>
#include <random>

namespace grundy {

namespace {

// mt19937_64 drives the draws; the [0,1) mapping is spelled out here so the
// byte stream never depends on library distribution internals.
struct Coin {
  std::mt19937_64 rng;
  explicit Coin(std::uint64_t seed) : rng(seed) {}
  bool flip(double p) { return (rng() >> 11) * 0x1.0p-53 < p; }
};

}  // namespace

GeneratedInstance generate_instance(const GeneratorSpec& spec) {
  if (spec.cliqueSizes.empty()) fail(ErrorKind::input, "generator needs at least one clique");
  for (int s : spec.cliqueSizes)
    if (s <= 0) fail(ErrorKind::input, "clique sizes must be positive");
  if (spec.modulatorSize < 0) fail(ErrorKind::input, "negative modulator size");
  if (spec.edgeProbability < 0.0 || spec.edgeProbability > 1.0)
    fail(ErrorKind::input, "edge probability outside [0,1]");

  const long long cliqueTotal =
      std::accumulate(spec.cliqueSizes.begin(), spec.cliqueSizes.end(), 0LL);
  const long long n = cliqueTotal + spec.modulatorSize;
  if (n > 2'000'000'000LL) fail(ErrorKind::input, "instance too large");

  Graph g(static_cast<int>(n));
  int at = 0;
  for (int size : spec.cliqueSizes) {
    std::vector<int> members(size);
    std::iota(members.begin(), members.end(), at);
    g.add_clique_block(std::move(members));
    at += size;
  }
  GeneratedInstance out;
  for (int i = 0; i < spec.modulatorSize; ++i) out.modulator.push_back(at + i);

  Coin coin(spec.seed);
  for (int x : out.modulator) {
    for (int v = 0; v < static_cast<int>(cliqueTotal); ++v)
      if (coin.flip(spec.edgeProbability)) g.add_edge(x, v);
    for (int y : out.modulator)
      if (y > x && coin.flip(spec.edgeProbability)) g.add_edge(x, y);
  }
  g.finalize();

  // Self-check: the planted modulator must decompose into the planted cliques.
  ClusterDecomposition dec = validate_cluster_modulator(g, out.modulator);
  if (dec.clique_count() != static_cast<int>(spec.cliqueSizes.size()))
    fail(ErrorKind::internal, "generated instance lost its planted clique count");

  out.graph = std::move(g);
  return out;
}

}  // namespace grundy
