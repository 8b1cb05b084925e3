#include "grundy/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace grundy {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  fail(ErrorKind::parse, "line " + std::to_string(line) + ": " + what);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::input, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

Graph load_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineNo = 0;
  int n = -1;
  long long declaredM = -1, seenM = 0;
  Graph g;
  std::unordered_set<long long> seen;
  int lastLine = 0;

  while (std::getline(in, line)) {
    ++lineNo;
    lastLine = lineNo;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank line
    if (tag == "c") continue;
    if (tag == "p") {
      if (n >= 0) parse_fail(lineNo, "second problem header");
      std::string kind;
      long long pn = -1, pm = -1;
      if (!(ls >> kind >> pn >> pm) || kind != "edge" || pn < 0 || pm < 0)
        parse_fail(lineNo, "malformed header, expected `p edge <n> <m>`");
      std::string extra;
      if (ls >> extra) parse_fail(lineNo, "trailing tokens after header");
      n = static_cast<int>(pn);
      declaredM = pm;
      g = Graph(n);
      continue;
    }
    if (tag == "e") {
      if (n < 0) parse_fail(lineNo, "edge before problem header");
      long long u = 0, v = 0;
      if (!(ls >> u >> v)) parse_fail(lineNo, "malformed edge line");
      std::string extra;
      if (ls >> extra) parse_fail(lineNo, "trailing tokens after edge");
      if (u < 1 || u > n || v < 1 || v > n)
        parse_fail(lineNo, "endpoint out of range 1.." + std::to_string(n));
      if (u == v) parse_fail(lineNo, "self-loop at vertex " + std::to_string(u));
      long long a = std::min(u, v) - 1, b = std::max(u, v) - 1;
      long long key = a * static_cast<long long>(n) + b;
      if (!seen.insert(key).second)
        parse_fail(lineNo, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
      g.add_edge(static_cast<int>(a), static_cast<int>(b));
      ++seenM;
      continue;
    }
    parse_fail(lineNo, "unknown line type `" + tag + "`");
  }
  if (n < 0) parse_fail(lastLine, "missing `p edge` header");
  if (seenM != declaredM)
    parse_fail(lastLine, "header declares " + std::to_string(declaredM) + " edges, found " +
                             std::to_string(seenM));
  g.finalize();
  return g;
}

Graph load_graph_file(const std::string& path) { return load_graph(read_file(path)); }

std::vector<int> load_modulator(const std::string& text, int n) {
  std::istringstream in(text);
  std::string line;
  int lineNo = 0;
  std::vector<int> out;
  bool found = false;
  while (std::getline(in, line)) {
    ++lineNo;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "c") continue;
    if (tag != "r") parse_fail(lineNo, "expected `r <v1> <v2> ...`");
    if (found) parse_fail(lineNo, "second modulator line");
    found = true;
    long long v;
    while (ls >> v) {
      if (v < 1 || v > n)
        parse_fail(lineNo, "modulator vertex " + std::to_string(v) + " out of range 1.." +
                               std::to_string(n));
      out.push_back(static_cast<int>(v - 1));
    }
    if (!ls.eof()) parse_fail(lineNo, "malformed modulator vertex");
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    fail(ErrorKind::parse, "duplicate modulator vertex");
  return out;
}

std::vector<int> load_modulator_file(const std::string& path, int n) {
  return load_modulator(read_file(path), n);
}

void write_graph(std::ostream& out, const Graph& g) {
  const int n = g.vertex_count();
  out << "p edge " << n << ' ' << g.edge_count() << '\n';
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbors(v))
      if (u > v) out << "e " << v + 1 << ' ' << u + 1 << '\n';
}

void write_modulator(std::ostream& out, const std::vector<int>& modulator) {
  out << 'r';
  for (int v : modulator) out << ' ' << v + 1;
  out << '\n';
}

}  // namespace grundy
