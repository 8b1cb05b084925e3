#include "grundy/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "grundy/clique_solver.hpp"
#include "grundy/generator.hpp"
#include "grundy/graph_io.hpp"
#include "grundy/k_cluster.hpp"
#include "grundy/oracle.hpp"
#include "grundy/two_cluster.hpp"

namespace grundy::cli {

namespace {

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::parse:
      return 2;
    case ErrorKind::input:
    case ErrorKind::validation:
    case ErrorKind::wrong_solver:
      return 3;
    case ErrorKind::guard:
    case ErrorKind::resource:
      return 4;
    default:
      return 1;
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

GrundySolution dispatch_solve(const ModulatorInstance& inst, bool forceIlp, int workers) {
  if (forceIlp) {
    KClusterOptions opts;
    opts.workers = workers;
    return solve_k_cluster(inst, opts);
  }
  if (inst.k() <= 1) {
    CliqueSolverOptions opts;
    opts.workers = workers;
    return solve_clique(inst, opts);
  }
  if (inst.k() == 2) {
    TwoClusterOptions opts;
    opts.workers = workers;
    return solve_two_cluster(inst, opts);
  }
  KClusterOptions opts;
  opts.workers = workers;
  return solve_k_cluster(inst, opts);
}

ModulatorInstance load_instance(const std::string& graphPath, const std::string& modulatorPath) {
  Graph g = load_graph_file(graphPath);
  std::vector<int> modulator = load_modulator_file(modulatorPath, g.vertex_count());
  return make_instance(std::move(g), std::move(modulator));
}

int cmd_validate(const std::string& graphPath, const std::string& solutionPath, std::ostream& out) {
  Graph g = load_graph_file(graphPath);
  std::ifstream in(solutionPath);
  if (!in) fail(ErrorKind::input, "cannot open " + solutionPath);
  std::ostringstream buf;
  buf << in.rdbuf();
  ParsedSolution sol = solution_from_json(buf.str());

  long long covered = 0;
  for (const auto& cls : sol.classes.classes) covered += static_cast<long long>(cls.size());
  std::string why;
  if (!validate_grundy_coloring(g, sol.classes, &why)) {
    out << "fail: " << why << '\n';
    return 1;
  }
  if (covered != g.vertex_count()) {
    out << "fail: classes cover " << covered << " of " << g.vertex_count() << " vertices\n";
    return 1;
  }
  if (sol.grundy_number != sol.classes.count()) {
    out << "fail: declared grundy_number " << sol.grundy_number << " but " << sol.classes.count()
        << " classes\n";
    return 1;
  }
  out << "pass: grundy coloring with " << sol.classes.count() << " classes\n";
  return 0;
}

int cmd_bench(int k, const std::vector<int>& rList, int n, double p, std::uint64_t seed,
              bool forceIlp, int workers, int oracleGuard, bool asJson, std::ostream& out) {
  struct Row {
    int n, r, k;
    std::string algorithm;
    int grundy;
    double millis;
    long long candidates;
    int oracle = -1;
    std::string agreement;
  };
  std::vector<Row> rows;
  for (int r : rList) {
    if (n - r < k) fail(ErrorKind::input, "n too small for the requested k and r");
    GeneratorSpec spec;
    spec.modulatorSize = r;
    spec.edgeProbability = p;
    spec.seed = seed + static_cast<std::uint64_t>(r);
    int rest = n - r;
    for (int c = 0; c < k; ++c) spec.cliqueSizes.push_back(rest / k + (c < rest % k ? 1 : 0));
    GeneratedInstance gen = generate_instance(spec);
    ModulatorInstance inst = make_instance(std::move(gen.graph), std::move(gen.modulator));
    GrundySolution sol = dispatch_solve(inst, forceIlp, workers);
    Row row{n,   r,   inst.k(),           sol.algorithm,
            sol.grundy_number, sol.stats.elapsed_ms, sol.stats.candidates_examined};
    if (n <= oracleGuard) {
      OracleOptions oracleOpts;
      oracleOpts.guard = oracleGuard;
      GrundySolution truth = grundy_oracle(inst.graph, oracleOpts);
      row.oracle = truth.grundy_number;
      row.agreement = truth.grundy_number == sol.grundy_number ? "=" : "!";
    }
    rows.push_back(std::move(row));
  }
  if (asJson) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Row& row : rows) {
      nlohmann::ordered_json j{{"n", row.n},
                               {"r", row.r},
                               {"k", row.k},
                               {"algorithm", row.algorithm},
                               {"grundy", row.grundy},
                               {"millis", row.millis},
                               {"candidates_examined", row.candidates}};
      if (row.oracle >= 0) {
        j["oracle"] = row.oracle;
        j["agreement"] = row.agreement;
      }
      arr.push_back(std::move(j));
    }
    out << arr.dump() << '\n';
    return 0;
  }
  out << "n,r,k,algorithm,grundy,millis,candidates_examined,oracle,agreement\n";
  for (const Row& row : rows) {
    out << row.n << ',' << row.r << ',' << row.k << ',' << row.algorithm << ',' << row.grundy
        << ',' << row.millis << ',' << row.candidates << ',';
    if (row.oracle >= 0)
      out << row.oracle << ',' << row.agreement;
    else
      out << ',';
    out << '\n';
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Grundy (first-fit) chromatic number solvers for graphs with a cluster modulator"};
  app.require_subcommand(1);

  std::string graphPath, modulatorPath, solutionPath, graphOut, modulatorOut;
  bool forceIlp = false;
  int workers = 0;
  int oracleGuard = 9;
  std::string cliquesArg = "3", rListArg = "1";
  int genR = 0, benchK = 1, benchN = 100;
  double probability = 0.5;
  std::uint64_t seed = 0;
  bool jsonOut = false, csvOut = false;

  auto* solve = app.add_subcommand("solve", "solve an instance given its cluster modulator");
  solve->add_option("graph", graphPath, "graph file")->required();
  solve->add_option("--modulator", modulatorPath,
                    "modulator file (omit to search for a minimum one, small graphs only)");
  solve->add_flag("--force-ilp", forceIlp, "use the integer-program path regardless of k");
  solve->add_option("--workers", workers, "worker threads (0 = hardware)");
  solve->add_flag("--json", jsonOut, "emit JSON (the default)");

  auto* oracle = app.add_subcommand("oracle", "exhaustive ground-truth solver for small graphs");
  oracle->add_option("graph", graphPath, "graph file")->required();
  oracle->add_option("--oracle-guard", oracleGuard, "size guard for the exhaustive search");

  auto* gen = app.add_subcommand("gen", "generate a planted cluster instance");
  gen->add_option("--cliques", cliquesArg, "comma-separated clique sizes")->required();
  gen->add_option("--r", genR, "modulator size");
  gen->add_option("--p", probability, "modulator edge probability");
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("--graph-out", graphOut, "graph file to write")->required();
  gen->add_option("--modulator-out", modulatorOut, "modulator file to write")->required();

  auto* validate = app.add_subcommand("validate", "check a solution JSON against a graph");
  validate->add_option("graph", graphPath, "graph file")->required();
  validate->add_option("solution", solutionPath, "solution JSON file")->required();

  auto* bench = app.add_subcommand("bench", "CSV timing sweep over generated instances");
  bench->add_option("--k", benchK, "clique count");
  bench->add_option("--r-list", rListArg, "comma-separated modulator sizes");
  bench->add_option("--n", benchN, "total vertex count");
  bench->add_option("--p", probability, "modulator edge probability");
  bench->add_option("--seed", seed, "generator seed");
  bench->add_flag("--force-ilp", forceIlp, "use the integer-program path");
  bench->add_option("--workers", workers, "worker threads (0 = hardware)");
  bench->add_option("--oracle-guard", oracleGuard, "oracle column cutoff");
  bench->add_flag("--json", jsonOut, "emit a JSON array instead of CSV");
  bench->add_flag("--csv", csvOut, "emit CSV (the default)");

  auto* kernelCmd = app.add_subcommand("kernel", "emit the reduced clique-modulator instance");
  kernelCmd->add_option("graph", graphPath, "graph file")->required();
  kernelCmd->add_option("--modulator", modulatorPath, "modulator file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << '\n';
    return 64;
  }

  try {
    if (solve->parsed()) {
      ModulatorInstance inst = [&] {
        if (!modulatorPath.empty()) return load_instance(graphPath, modulatorPath);
        Graph g = load_graph_file(graphPath);
        std::vector<int> found = find_min_cluster_modulator(g, g.vertex_count());
        err << "note: using minimum modulator";
        for (int v : found) err << ' ' << v + 1;
        err << '\n';
        return make_instance(std::move(g), std::move(found));
      }();
      GrundySolution sol = dispatch_solve(inst, forceIlp, workers);
      out << solution_to_json(sol) << '\n';
      return 0;
    }
    if (oracle->parsed()) {
      if (oracleGuard > 9)
        err << "warning: oracle guard " << oracleGuard << " may take a very long time\n";
      Graph g = load_graph_file(graphPath);
      OracleOptions opts;
      opts.guard = oracleGuard;
      GrundySolution sol = grundy_oracle(g, opts);
      out << solution_to_json(sol) << '\n';
      return 0;
    }
    if (gen->parsed()) {
      GeneratorSpec spec;
      spec.cliqueSizes = parse_int_list(cliquesArg);
      spec.modulatorSize = genR;
      spec.edgeProbability = probability;
      spec.seed = seed;
      GeneratedInstance instance = generate_instance(spec);
      std::ofstream gOut(graphOut);
      if (!gOut) fail(ErrorKind::input, "cannot write " + graphOut);
      write_graph(gOut, instance.graph);
      std::ofstream mOut(modulatorOut);
      if (!mOut) fail(ErrorKind::input, "cannot write " + modulatorOut);
      write_modulator(mOut, instance.modulator);
      write_modulator(out, instance.modulator);
      return 0;
    }
    if (validate->parsed()) return cmd_validate(graphPath, solutionPath, out);
    if (bench->parsed()) {
      if (jsonOut && csvOut) fail(ErrorKind::input, "--json and --csv are mutually exclusive");
      return cmd_bench(benchK, parse_int_list(rListArg), benchN, probability, seed, forceIlp,
                       workers, oracleGuard, jsonOut, out);
    }
    if (kernelCmd->parsed()) {
      ModulatorInstance inst = load_instance(graphPath, modulatorPath);
      Kernel kernel = build_kernel(inst);
      out << "c removed-count " << kernel.removedCount << '\n';
      for (std::size_t i = 0; i < kernel.mapping.size(); ++i)
        out << "c map " << i + 1 << ' ' << kernel.mapping[i] + 1 << '\n';
      write_graph(out, kernel.kernelGraph);
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return 1;
}

}  // namespace grundy::cli
