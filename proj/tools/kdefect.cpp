// Command-line front end: solve one instance, verify the solver against the
// brute-force reference on small graphs, compare bound strategies (on a given
// graph or a seeded random suite), and run regression benches from a manifest.
//
// Exit codes: 0 ok, 2 time limit hit, 3 mismatch/violation, 64 usage.

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "kdefect/bounds.hpp"
#include "kdefect/gen.hpp"
#include "kdefect/graph.hpp"
#include "kdefect/model.hpp"
#include "kdefect/oracle.hpp"
#include "kdefect/report.hpp"
#include "kdefect/solver.hpp"

namespace fs = std::filesystem;
using namespace kdefect;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitTimeout = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitUsage = 64;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph load_graph(const std::string& path) { return parse_graph(slurp(path)); }

std::string graph_name(const std::string& path) { return fs::path(path).stem().string(); }

const std::vector<BoundKind> kAllBounds = {BoundKind::packing, BoundKind::coloring,
                                           BoundKind::sorting, BoundKind::club,
                                           BoundKind::dp,      BoundKind::pcc};

int run_solve(const std::string& graph_path, int k, BoundKind bound, double time_limit,
              const std::string& format) {
  Graph g = load_graph(graph_path);
  SolverOptions opts;
  opts.bound = bound;
  opts.time_limit_s = time_limit;
  SolveReport rep = solve(g, k, opts);
  if (format == "tsv") {
    std::printf("%s\n%s\n", tsv_header(), report_to_tsv(rep, graph_name(graph_path)).c_str());
  } else {
    json j = report_to_json(rep, graph_name(graph_path));
    j["solution"] = solution_to_json(rep.solution);
    std::printf("%s\n", j.dump(2).c_str());
  }
  return rep.complete ? kExitOk : kExitTimeout;
}

int run_verify(const std::string& graph_path, int k, BoundKind bound, int max_n) {
  Graph g = load_graph(graph_path);
  if (g.n > max_n) {
    std::fprintf(stderr, "verify: graph has %d vertices, oracle limit is %d\n", g.n, max_n);
    return kExitUsage;
  }
  Solution ref = oracle::brute_max_kdc(g, k, max_n);
  SolverOptions opts;
  opts.bound = bound;
  SolveReport rep = solve(g, k, opts);
  std::printf("oracle: %d\nsolver: %d\n", ref.size(), rep.solution.size());
  if (ref.size() != rep.solution.size()) {
    std::fprintf(stderr, "verify: MISMATCH\n");
    return kExitMismatch;
  }
  std::printf("verify: ok\n");
  return kExitOk;
}

int run_bounds_compare_graph(const std::string& graph_path, int k, double time_limit) {
  Graph g = load_graph(graph_path);
  Instance root(g, k);
  Partition part = greedy_partition(root);
  std::printf("bound\troot_value\topt\tnodes_k\ttime_s\tstatus\n");
  int rc = kExitOk;
  for (BoundKind b : kAllBounds) {
    BoundEvaluator be(b);
    int root_value = be(root, 0);
    SolverOptions opts;
    opts.bound = b;
    opts.time_limit_s = time_limit;
    SolveReport rep = solve(g, k, opts);
    std::string opt = rep.no && rep.complete
                          ? "no"
                          : (rep.complete ? "" : ">=") + std::to_string(rep.solution.size());
    std::printf("%s\t%d\t%s\t%.1f\t%.3f\t%s\n", bound_name(b), root_value, opt.c_str(),
                rep.stats.nodes / 1000.0, rep.stats.time_ms / 1000.0,
                rep.complete ? "solved" : "oot");
    if (!rep.complete) rc = kExitTimeout;
  }
  return rc;
}

int run_bounds_compare_random(unsigned seed, int instances, int max_n) {
  std::mt19937 rng(seed);
  long long violations = 0;
  for (int it = 0; it < instances; it++) {
    RandomInstance ri = random_instance(rng, max_n);
    const Instance& inst = *ri.inst;
    Partition part = greedy_partition(inst);
    int omega = oracle::brute_omega_instance(inst);
    int packing = packing_bound(inst);
    int coloring = coloring_bound(inst, part);
    int sorting = sorting_bound(inst, part);
    int club = club_bound(inst);
    int dp = dp_bound(inst, part);
    for (int lb : {omega > 0 ? omega - 1 : 0, omega}) {
      int pcc = pack_color_conf(inst, lb, part);
      if (pcc > dp) violations++;
    }
    if (dp != sorting) violations++;
    if (sorting > packing) violations++;
    if (dp > coloring) violations++;
    if (club > packing) violations++;
  }
  std::printf("instances: %d\nviolations: %lld\n", instances, violations);
  return violations == 0 ? kExitOk : kExitMismatch;
}

struct BenchRow {
  std::string path;
  int k = 0;
  std::string expected;  // decimal size, "no", or "?"
};

struct BenchResult {
  bool skipped = false;
  bool mismatch = false;
  bool oot = false;
  std::string line;
};

std::vector<BenchRow> parse_manifest(const std::string& path) {
  std::string text = slurp(path);
  fs::path base = fs::path(path).parent_path();
  std::vector<BenchRow> rows;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    line_no++;
    std::istringstream ls(line);
    std::string graph, kstr, expected;
    if (!(ls >> graph)) continue;
    if (graph[0] == '#') continue;
    if (!(ls >> kstr >> expected))
      throw std::runtime_error("manifest line " + std::to_string(line_no) +
                               ": want <graph> <k> <expected>");
    BenchRow row;
    row.path = (base / graph).string();
    row.k = std::stoi(kstr);
    row.expected = expected;
    rows.push_back(std::move(row));
  }
  return rows;
}

BenchResult run_bench_row(const BenchRow& row, BoundKind bound, double time_limit) {
  BenchResult res;
  char buf[512];
  if (!fs::exists(row.path)) {
    std::fprintf(stderr, "warning: %s missing, row skipped\n", row.path.c_str());
    res.skipped = true;
    std::snprintf(buf, sizeof buf, "%s\t%d\t%s\t-\t-\t-\tskipped\t-",
                  graph_name(row.path).c_str(), row.k, row.expected.c_str());
    res.line = buf;
    return res;
  }
  Graph g = load_graph(row.path);
  SolverOptions opts;
  opts.bound = bound;
  opts.time_limit_s = time_limit;
  SolveReport rep = solve(g, row.k, opts);
  std::string opt = rep.no && rep.complete
                        ? "no"
                        : (rep.complete ? "" : ">=") + std::to_string(rep.solution.size());
  res.oot = !rep.complete;
  if (rep.complete && row.expected != "?") {
    res.mismatch = opt != row.expected;
  } else if (!rep.complete && row.expected != "?") {
    res.mismatch = false;  // could not confirm within the limit; reported as oot
  }
  std::snprintf(buf, sizeof buf, "%s\t%d\t%s\t%s\t%.1f\t%.3f\t%s\t%s",
                graph_name(row.path).c_str(), row.k, row.expected.c_str(), opt.c_str(),
                rep.stats.nodes / 1000.0, rep.stats.time_ms / 1000.0,
                rep.complete ? "solved" : "oot",
                res.mismatch ? "MISMATCH" : (rep.complete ? "ok" : "-"));
  res.line = buf;
  return res;
}

int run_bench(const std::string& manifest, BoundKind bound, double time_limit, int parallel) {
  std::vector<BenchRow> rows = parse_manifest(manifest);
  std::vector<BenchResult> results(rows.size());
  if (parallel < 1) parallel = 1;
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next.fetch_add(1); i < rows.size(); i = next.fetch_add(1))
      results[i] = run_bench_row(rows[i], bound, time_limit);
  };
  if (parallel == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < parallel; t++) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  std::printf("graph\tk\texpected\topt\tnodes_k\ttime_s\tstatus\tcheck\n");
  bool mismatch = false, oot = false;
  for (const auto& res : results) {
    std::printf("%s\n", res.line.c_str());
    mismatch |= res.mismatch;
    oot |= res.oot;
  }
  if (mismatch) return kExitMismatch;
  if (oot) return kExitTimeout;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact maximum k-defective clique solver"};
  app.require_subcommand(1);

  std::string graph_path, format = "json", bound_str = "pcc", manifest;
  int k = 1, instances = 1000, max_n = 14, parallel = 1;
  unsigned seed = 1;
  double time_limit = 10800;

  auto add_common = [&](CLI::App* cmd, bool needs_graph) {
    if (needs_graph)
      cmd->add_option("--graph", graph_path, "graph file (edge list or MatrixMarket)")
          ->envname("KDEFECT_GRAPH")
          ->required();
    cmd->add_option("--k", k, "missing-edge budget")->envname("KDEFECT_K");
    cmd->add_option("--time-limit", time_limit, "seconds before giving up")
        ->envname("KDEFECT_TIME_LIMIT")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* c_solve = app.add_subcommand("solve", "solve one instance");
  add_common(c_solve, true);
  c_solve->add_option("--bound", bound_str, "packing|coloring|sorting|club|dp|pcc|none")
      ->envname("KDEFECT_BOUND");
  c_solve->add_option("--format", format, "json|tsv")->envname("KDEFECT_FORMAT");

  CLI::App* c_verify = app.add_subcommand("verify", "cross-check solver vs brute force");
  add_common(c_verify, true);
  c_verify->add_option("--bound", bound_str, "bound strategy for the solver run");
  c_verify->add_option("--max-n", max_n, "oracle size limit");

  CLI::App* c_cmp = app.add_subcommand("bounds-compare", "compare bound strategies");
  c_cmp->add_option("--graph", graph_path, "graph file; omit for seeded random mode")
      ->envname("KDEFECT_GRAPH");
  c_cmp->add_option("--k", k, "missing-edge budget")->envname("KDEFECT_K");
  c_cmp->add_option("--time-limit", time_limit, "seconds per solve")->check(CLI::PositiveNumber);
  c_cmp->add_option("--seed", seed, "random-mode seed")->envname("KDEFECT_SEED");
  c_cmp->add_option("--instances", instances, "random-mode instance count");
  c_cmp->add_option("--max-n", max_n, "random-mode size cap");

  CLI::App* c_bench = app.add_subcommand("bench", "run a manifest of regression rows");
  c_bench->add_option("manifest", manifest, "manifest: <graph> <k> <expected> per line")
      ->required();
  c_bench->add_option("--bound", bound_str, "bound strategy");
  c_bench->add_option("--time-limit", time_limit, "seconds per row")->check(CLI::PositiveNumber);
  c_bench->add_option("--parallel", parallel, "rows solved concurrently");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  auto bound = parse_bound(bound_str);
  if (!bound) {
    std::fprintf(stderr, "unknown bound: %s\n", bound_str.c_str());
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(c_solve)) return run_solve(graph_path, k, *bound, time_limit, format);
    if (app.got_subcommand(c_verify)) return run_verify(graph_path, k, *bound, max_n);
    if (app.got_subcommand(c_cmp)) {
      if (!graph_path.empty()) return run_bounds_compare_graph(graph_path, k, time_limit);
      return run_bounds_compare_random(seed, instances, max_n);
    }
    if (app.got_subcommand(c_bench)) return run_bench(manifest, *bound, time_limit, parallel);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
