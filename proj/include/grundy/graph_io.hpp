#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "grundy/graph.hpp"

namespace grundy {

// Graph files are DIMACS-like and line oriented:
//   c <comment>
//   p edge <n> <m>
//   e <u> <v>          (1-based endpoints, m such lines)
// Modulator files hold one line `r <v1> <v2> ...` (1-based); an empty file,
// a blank line or a bare `r` all mean the empty set.
Graph load_graph(const std::string& text);
Graph load_graph_file(const std::string& path);

std::vector<int> load_modulator(const std::string& text, int n);
std::vector<int> load_modulator_file(const std::string& path, int n);

void write_graph(std::ostream& out, const Graph& g);
void write_modulator(std::ostream& out, const std::vector<int>& modulator);

}  // namespace grundy
