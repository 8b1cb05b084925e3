#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "grundy/cli.hpp"
#include "grundy/solution.hpp"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int exitCode;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = grundy::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name, const std::string& content) {
  fs::path p = fs::temp_directory_path() / ("grundy_test_" + name);
  std::ofstream f(p);
  f << content;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

const std::string kP4 = "p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n";

}  // namespace

TEST_CASE("solve dispatches by clique count") {
  auto graph = temp_file("p4.col", kP4);
  auto mod = temp_file("p4.mod", "r 2 3\n");
  CliResult res = run_cli({"solve", graph.string(), "--modulator", mod.string()});
  REQUIRE(res.exitCode == 0);
  auto j = nlohmann::json::parse(res.out);
  CHECK(j["grundy_number"] == 3);
  CHECK(j["algorithm"] == "two-cluster");

  auto k5 = temp_file("k5.col",
                      "p edge 5 10\ne 1 2\ne 1 3\ne 1 4\ne 1 5\ne 2 3\ne 2 4\ne 2 5\ne 3 4\ne 3 "
                      "5\ne 4 5\n");
  auto empty = temp_file("empty.mod", "\n");
  res = run_cli({"solve", k5.string(), "--modulator", empty.string()});
  REQUIRE(res.exitCode == 0);
  j = nlohmann::json::parse(res.out);
  CHECK(j["grundy_number"] == 5);
  CHECK(j["algorithm"] == "clique-modulator");

  // Pendant vertex as the modulator on K4.
  auto pendant = temp_file("pend.col", "p edge 5 7\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\ne 1 5\n");
  auto pendantMod = temp_file("pend.mod", "r 5\n");
  res = run_cli({"solve", pendant.string(), "--modulator", pendantMod.string()});
  REQUIRE(res.exitCode == 0);
  CHECK(nlohmann::json::parse(res.out)["grundy_number"] == 4);

  // Forcing the integer-program path flips the algorithm label only.
  res = run_cli({"solve", graph.string(), "--modulator", mod.string(), "--force-ilp"});
  REQUIRE(res.exitCode == 0);
  j = nlohmann::json::parse(res.out);
  CHECK(j["grundy_number"] == 3);
  CHECK(j["algorithm"] == "k-cluster-ilp");
}

TEST_CASE("oracle subcommand") {
  auto c4 = temp_file("c4.col", "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n");
  CliResult res = run_cli({"oracle", c4.string()});
  REQUIRE(res.exitCode == 0);
  CHECK(nlohmann::json::parse(res.out)["grundy_number"] == 2);

  auto k1 = temp_file("k1.col", "p edge 1 0\n");
  CHECK(nlohmann::json::parse(run_cli({"oracle", k1.string()}).out)["grundy_number"] == 1);

  auto e4 = temp_file("e4.col", "p edge 4 0\n");
  CHECK(nlohmann::json::parse(run_cli({"oracle", e4.string()}).out)["grundy_number"] == 1);
}

TEST_CASE("exit codes") {
  auto broken = temp_file("broken.col", "p edge x\n");
  CHECK(run_cli({"oracle", broken.string()}).exitCode == 2);

  auto p4 = temp_file("p4b.col", kP4);
  auto badMod = temp_file("bad.mod", "r 4\n");  // leaves the path 1-2-3
  CliResult res = run_cli({"solve", p4.string(), "--modulator", badMod.string()});
  CHECK(res.exitCode == 3);
  CHECK(res.err.find("clique") != std::string::npos);

  auto big = temp_file("big.col", [] {
    std::ostringstream g;
    g << "p edge 10 0\n";
    return g.str();
  }());
  CHECK(run_cli({"oracle", big.string()}).exitCode == 4);
}

TEST_CASE("gen produces solvable, reproducible instances") {
  fs::path g1 = fs::temp_directory_path() / "grundy_test_gen1.col";
  fs::path m1 = fs::temp_directory_path() / "grundy_test_gen1.mod";
  fs::path g2 = fs::temp_directory_path() / "grundy_test_gen2.col";
  fs::path m2 = fs::temp_directory_path() / "grundy_test_gen2.mod";
  CliResult res =
      run_cli({"gen", "--cliques", "2,3", "--r", "1", "--p", "1.0", "--seed", "9",
               "--graph-out", g1.string(), "--modulator-out", m1.string()});
  REQUIRE(res.exitCode == 0);
  CHECK(res.out == "r 6\n");  // planted modulator is the last vertex

  CliResult res2 =
      run_cli({"gen", "--cliques", "2,3", "--r", "1", "--p", "1.0", "--seed", "9",
               "--graph-out", g2.string(), "--modulator-out", m2.string()});
  REQUIRE(res2.exitCode == 0);
  CHECK(slurp(g1) == slurp(g2));
  CHECK(slurp(m1) == slurp(m2));

  // p = 1.0 forces a universal modulator vertex: K2 ∪ K3 plus one vertex
  // adjacent to everything has first-fit number 4.
  CliResult solved = run_cli({"solve", g1.string(), "--modulator", m1.string()});
  REQUIRE(solved.exitCode == 0);
  CHECK(nlohmann::json::parse(solved.out)["grundy_number"] == 4);

  // Round trip: solved output validates.
  fs::path sol = fs::temp_directory_path() / "grundy_test_sol.json";
  std::ofstream(sol) << solved.out;
  CHECK(run_cli({"validate", g1.string(), sol.string()}).exitCode == 0);
}

TEST_CASE("validate subcommand") {
  auto p4 = temp_file("p4c.col", kP4);
  auto good = temp_file("good.json",
                        R"({"grundy_number":3,"classes":[[1,4],[2],[3]],"ordering":[1,4,2,3]})");
  CHECK(run_cli({"validate", p4.string(), good.string()}).exitCode == 0);

  auto bad = temp_file("bad.json", R"({"grundy_number":4,"classes":[[1],[2],[3],[4]]})");
  CliResult res = run_cli({"validate", p4.string(), bad.string()});
  CHECK(res.exitCode == 1);
  CHECK(res.out.find("fail") != std::string::npos);

  auto partial = temp_file("partial.json", R"({"grundy_number":1,"classes":[[1,4]]})");
  CHECK(run_cli({"validate", p4.string(), partial.string()}).exitCode == 1);

  auto emptyGraph = temp_file("e0.col", "p edge 0 0\n");
  auto emptySol = temp_file("e0.json", R"({"grundy_number":0,"classes":[]})");
  CHECK(run_cli({"validate", emptyGraph.string(), emptySol.string()}).exitCode == 0);
}

TEST_CASE("bench emits deterministic CSV apart from timings") {
  CliResult empty = run_cli({"bench", "--k", "1", "--r-list", "", "--n", "30"});
  REQUIRE(empty.exitCode == 0);
  CHECK(empty.out == "n,r,k,algorithm,grundy,millis,candidates_examined,oracle,agreement\n");

  auto strip_millis = [](const std::string& csv) {
    std::istringstream in(csv);
    std::string line, out;
    while (std::getline(in, line)) {
      int field = 0;
      std::string kept;
      std::istringstream ls(line);
      std::string cell;
      while (std::getline(ls, cell, ',')) {
        if (field++ == 5) cell = "_";
        kept += cell + ",";
      }
      out += kept + "\n";
    }
    return out;
  };
  std::vector<std::string> cmd{"bench", "--k", "2", "--r-list", "1,2", "--n", "8",
                               "--seed", "5", "--p", "0.5"};
  CliResult a = run_cli(cmd);
  CliResult b = run_cli(cmd);
  REQUIRE(a.exitCode == 0);
  CHECK(strip_millis(a.out) == strip_millis(b.out));
  // With n at most the oracle guard the agreement column must read "=".
  std::istringstream lines(a.out);
  std::string line;
  std::getline(lines, line);  // header
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(line.substr(line.size() - 1) == "=");
  }
  CHECK(rows == 2);
}

TEST_CASE("kernel subcommand emits the reduced instance") {
  auto pendant = temp_file("pend2.col", "p edge 5 7\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\ne 1 5\n");
  auto mod = temp_file("pend2.mod", "r 5\n");
  CliResult res = run_cli({"kernel", pendant.string(), "--modulator", mod.string()});
  REQUIRE(res.exitCode == 0);
  CHECK(res.out.find("c removed-count 2") != std::string::npos);
  CHECK(res.out.find("p edge 3 2") != std::string::npos);
}
