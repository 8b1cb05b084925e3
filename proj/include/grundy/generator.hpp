#pragma once

#include <cstdint>
#include <vector>

#include "grundy/cluster.hpp"

namespace grundy {

/// Planted cluster instance: cliques laid out first (vertex blocks in the
/// listed order), modulator vertices last. Each (modulator, other) and
/// (modulator, modulator) pair becomes an edge independently with
/// `edgeProbability`. Generation is a pure function of the spec.
struct GeneratorSpec {
  std::vector<int> cliqueSizes;
  int modulatorSize = 0;
  double edgeProbability = 0.5;
  std::uint64_t seed = 0;
};

struct GeneratedInstance {
  Graph graph;
  std::vector<int> modulator;  // sorted ascending
};

GeneratedInstance generate_instance(const GeneratorSpec& spec);

}  // namespace grundy
