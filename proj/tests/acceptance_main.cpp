// Acceptance gate: nine end-to-end checks over the solver, the bounds, the
// conflict rules, and the enumeration/degeneracy machinery. Each criterion
// prints exactly one PASS/FAIL/SKIP line; the exit code is the number of
// failures. Checks that need the large published graphs skip with a warning
// when the files are absent from data/external/.

#include <kdefect/bounds.hpp>
#include <kdefect/branch.hpp>
#include <kdefect/gen.hpp>
#include <kdefect/graph.hpp>
#include <kdefect/model.hpp>
#include <kdefect/oracle.hpp>
#include <kdefect/solver.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace kdefect;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string external_path(const std::string& name) {
  return std::string(KDEFECT_SOURCE_DIR) + "/data/external/" + name;
}

bool have_file(const std::string& path) {
  std::error_code ec;
  return std::filesystem::exists(path, ec);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

struct Verdict {
  bool failed = false;
  bool skipped = false;
  std::string detail;
};

void report(int idx, const Verdict& v, int& fails) {
  const char* status = v.skipped ? "SKIP" : (v.failed ? "FAIL" : "PASS");
  if (v.failed) fails++;
  std::printf("%s criterion %d: %s\n", status, idx, v.detail.c_str());
  std::fflush(stdout);
}

// Shared random-graph corpus: 500 graphs, n in [6, 14], the five edge
// densities, with the budget-0..3 optima precomputed by the oracle.
struct Suite {
  std::vector<Graph> graphs;
  std::vector<std::array<int, 4>> omega;  // omega[i][k]
};

Suite build_suite() {
  Suite s;
  std::mt19937 rng(101);
  for (int i = 0; i < 500; i++) {
    int n = std::uniform_int_distribution<int>(6, 14)(rng);
    s.graphs.push_back(er_graph(n, pick_density(rng), rng));
    std::array<int, 4> om{};
    for (int k = 0; k < 4; k++) om[k] = oracle::brute_max_kdc_size_bitmask(s.graphs.back(), k);
    s.omega.push_back(om);
  }
  return s;
}

constexpr BoundKind kStrategies[] = {BoundKind::packing, BoundKind::coloring, BoundKind::sorting,
                                     BoundKind::club,    BoundKind::dp,       BoundKind::pcc};

// 1. Every bound strategy drives the solver to the exact optimum on the corpus.
Verdict criterion1(const Suite& suite) {
  auto t0 = std::chrono::steady_clock::now();
  long long solves = 0, mismatches = 0;
  for (size_t i = 0; i < suite.graphs.size(); i++) {
    const Graph& g = suite.graphs[i];
    for (int k = 0; k < 4; k++) {
      int ref = suite.omega[i][k];
      for (BoundKind kind : kStrategies) {
        SolverOptions opts;
        opts.bound = kind;
        SolveReport rep = solve(g, k, opts);
        solves++;
        if (ref >= k + 2) {
          bool ok = !rep.no && rep.solution.size() == ref;
          if (ok) {
            try {
              check_solution(g, rep.solution.vertices, k);
            } catch (const std::exception&) {
              ok = false;
            }
          }
          if (!ok) mismatches++;
        } else if (!rep.no) {
          mismatches++;
        }
      }
    }
  }
  Verdict v;
  v.failed = mismatches != 0;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "solver exactness: %lld solves (500 graphs x 4 budgets x 6 bounds), %lld mismatches, %.1fs",
                solves, mismatches, seconds_since(t0));
  v.detail = buf;
  return v;
}

// 2. The dominance chain between the bounds holds on shared partitions.
Verdict criterion2() {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937 rng(202);
  long long checks = 0, violations = 0;
  for (int it = 0; it < 1000; it++) {
    auto ri = random_instance(rng);
    const Instance& inst = *ri.inst;
    Partition part = greedy_partition(inst);
    int pack = packing_bound(inst);
    int color = coloring_bound(inst, part);
    int sort_b = sorting_bound(inst, part);
    int club = club_bound(inst);
    int dp = dp_bound(inst, part);
    auto expect = [&](bool ok) {
      checks++;
      if (!ok) violations++;
    };
    expect(dp == sort_b);
    expect(sort_b <= pack);
    expect(dp <= color);
    expect(club <= pack);
    int omega = oracle::brute_omega_instance(inst);
    for (int lb : {omega > 0 ? omega - 1 : 0, omega})
      expect(pack_color_conf(inst, lb, part) <= dp);
  }
  Verdict v;
  v.failed = violations != 0;
  char buf[160];
  std::snprintf(buf, sizeof buf, "bound dominance: 1000 instances, %lld comparisons, %lld violations, %.1fs",
                checks, violations, seconds_since(t0));
  v.detail = buf;
  return v;
}

// 3. The DP bound equals the exact optimum of the per-class selection problem.
Verdict criterion3() {
  std::mt19937 rng(303);
  long long mismatches = 0;
  for (int it = 0; it < 500; it++) {
    auto ri = random_instance(rng, 14);
    const Instance& inst = *ri.inst;
    Partition part = greedy_partition(inst);
    if (dp_bound(inst, part) != oracle::brute_opt(inst, part)) mismatches++;
  }
  Verdict v;
  v.failed = mismatches != 0;
  v.detail = "dp bound optimality: 500 instances vs exhaustive class selection, " +
             std::to_string(mismatches) + " mismatches";
  return v;
}

// 4. A flagged conflict pair never appears together in a solution beating lb.
Verdict criterion4() {
  std::mt19937 rng(404);
  long long flagged = 0, violations = 0;
  for (int it = 0; it < 300; it++) {
    auto ri = random_instance(rng, 12);
    const Instance& inst = *ri.inst;
    int omega = oracle::brute_omega_instance(inst);
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < inst.n(); u++)
      for (int w = u + 1; w < inst.n(); w++) pairs.emplace_back(u, w);
    for (int lb : {omega - 1, omega}) {
      if (lb < 0) continue;
      ConflictOracle co = build_conflicts(inst, lb, pairs);
      auto sols = oracle::enumerate_instance_solutions(inst, lb);  // size > lb
      for (auto [u, w] : pairs) {
        if (!co.conflict(u, w)) continue;
        flagged++;
        uint32_t pm = (1u << u) | (1u << w);
        for (uint32_t mask : sols)
          if ((mask & pm) == pm) violations++;
      }
    }
  }
  Verdict v;
  v.failed = violations != 0;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "conflict soundness: 300 instances, %lld flagged pairs checked, %lld co-occurrences",
                flagged, violations);
  v.detail = buf;
  return v;
}

// 5. No strategy ever undercuts the true optimum it must dominate.
Verdict criterion5(const Suite& suite) {
  long long checks = 0, violations = 0;
  for (size_t i = 0; i < suite.graphs.size(); i++) {
    const Graph& g = suite.graphs[i];
    for (int k = 0; k < 4; k++) {
      int omega = suite.omega[i][k];
      Instance inst(g, k);
      Partition part = greedy_partition(inst);
      auto expect = [&](bool ok) {
        checks++;
        if (!ok) violations++;
      };
      expect(packing_bound(inst) >= omega);
      expect(coloring_bound(inst, part) >= omega);
      expect(sorting_bound(inst, part) >= omega);
      expect(club_bound(inst) >= omega);
      expect(dp_bound(inst, part) >= omega);
      expect(pack_color_conf(inst, omega - 1, part) >= omega);  // omega > lb
    }
  }
  Verdict v;
  v.failed = violations != 0;
  char buf[160];
  std::snprintf(buf, sizeof buf, "bound soundness: %lld bound values vs the oracle optimum, %lld undercuts",
                checks, violations);
  v.detail = buf;
  return v;
}

// 6. Published-graph reproduction (exact optima; runtimes informational).
Verdict criterion6() {
  struct Row {
    const char* file;
    int k;
    int expect;
  };
  const Row rows[] = {
      {"as-22july06.mtx", 1, 18},     {"as-22july06.mtx", 10, 22},  {"as-22july06.mtx", 20, 24},
      {"email-EuAll.txt", 1, 17},     {"email-EuAll.txt", 10, 21},  {"email-EuAll.txt", 20, 24},
      {"rt-retweet-crawl.mtx", 1, 14}, {"rt-retweet-crawl.mtx", 10, 17},
  };
  int checked = 0, matched = 0, missing = 0;
  std::string notes;
  bool failed = false;
  for (const Row& row : rows) {
    std::string path = external_path(row.file);
    if (!have_file(path)) {
      missing++;
      continue;
    }
    Graph g = load_graph(path);
    SolverOptions opts;
    opts.time_limit_s = 10800;
    SolveReport rep = solve(g, row.k, opts);
    checked++;
    bool ok = rep.complete && !rep.no && rep.solution.size() == row.expect;
    if (ok)
      matched++;
    else
      failed = true;
    char buf[160];
    std::snprintf(buf, sizeof buf, " [%s k=%d opt=%d want=%d %s %.1fs]", row.file, row.k,
                  rep.solution.size(), row.expect, rep.complete ? "done" : "timeout",
                  rep.stats.time_ms / 1000.0);
    notes += buf;
  }
  Verdict v;
  if (checked == 0) {
    v.skipped = true;
    v.detail =
        "published-graph rows: all 8 datasets missing under data/external/ "
        "(download separately; see README), nothing to verify";
    return v;
  }
  v.failed = failed;
  char buf[160];
  std::snprintf(buf, sizeof buf, "published-graph rows: %d checked, %d matched, %d skipped (missing files)",
                checked, matched, missing);
  v.detail = buf + notes;
  return v;
}

// Per-node three-way bound comparison riding along a live search.
struct ChainWatch : BranchObserver {
  BoundEvaluator pcc{BoundKind::pcc};
  BoundEvaluator dp{BoundKind::dp};
  BoundEvaluator packing{BoundKind::packing};
  long long nodes_checked = 0;
  long long chain_breaks = 0;
  void on_node(const Instance& inst, int lb) override {
    if (inst.slack() < 0) return;  // pruned before any bound would run
    int a = pcc(inst, lb);
    int b = dp(inst, lb);
    int c = packing(inst, lb);
    nodes_checked++;
    if (!(a <= b && b <= c)) chain_breaks++;
  }
};

// 7. Tighter bounds prune at least as often, node for node; totals follow.
Verdict criterion7(const Suite& suite) {
  auto t0 = std::chrono::steady_clock::now();
  ChainWatch watch;
  long long pairs_total = 0, pairs_ok = 0;
  for (size_t i = 0; i < suite.graphs.size(); i++) {
    const Graph& g = suite.graphs[i];
    for (int k = 0; k < 4; k++) {
      SolverOptions pcc_opts;
      pcc_opts.bound = BoundKind::pcc;
      pcc_opts.observer = &watch;
      SolveReport pcc_rep = solve(g, k, pcc_opts);
      SolverOptions dp_opts;
      dp_opts.bound = BoundKind::dp;
      SolveReport dp_rep = solve(g, k, dp_opts);
      pairs_total++;
      if (pcc_rep.stats.nodes <= dp_rep.stats.nodes) pairs_ok++;
    }
  }
  double frac = pairs_total ? double(pairs_ok) / double(pairs_total) : 1.0;
  Verdict v;
  v.failed = watch.chain_breaks != 0 || frac < 0.95;
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "prune ordering: %lld nodes with pcc<=dp<=packing (%lld breaks), node totals "
                "pcc<=dp on %lld/%lld runs (%.1f%%), %.1fs",
                watch.nodes_checked, watch.chain_breaks, pairs_ok, pairs_total, 100.0 * frac,
                seconds_since(t0));
  v.detail = buf;
  return v;
}

// Collects each terminal's committed set during an unbounded search.
struct TerminalLog : BranchObserver {
  std::vector<std::vector<int>> sets;
  void on_terminal(const Instance& inst) override {
    auto p = inst.p_vertices();
    std::vector<int> s(p.begin(), p.end());
    std::sort(s.begin(), s.end());
    sets.push_back(std::move(s));
  }
};

// 8. Unbounded branching emits every defective set between P0 and P0+R0 once.
Verdict criterion8() {
  std::mt19937 rng(808);
  long long instances = 0, violations = 0;
  for (int it = 0; it < 200; it++) {
    auto ri = random_instance(rng);
    Instance& inst = *ri.inst;
    const Graph& g = inst.graph();
    std::vector<int> p0(inst.p_vertices().begin(), inst.p_vertices().end());
    std::sort(p0.begin(), p0.end());
    std::vector<int> r0;
    for (int u = 0; u < inst.n(); u++)
      if (inst.in_r(u)) r0.push_back(u);

    TerminalLog log;
    Incumbent incumbent;
    SearchStats stats;
    BranchContext ctx;
    ctx.incumbent = &incumbent;
    ctx.bound = nullptr;
    ctx.stats = &stats;
    ctx.observer = &log;
    branch(inst, ctx);

    std::vector<std::vector<int>> emitted;
    for (auto& s : log.sets)
      if (is_k_defective_set(g, s, inst.k())) emitted.push_back(s);
    std::sort(emitted.begin(), emitted.end());
    bool dup = std::adjacent_find(emitted.begin(), emitted.end()) != emitted.end();
    auto want = oracle::enumerate_kdef_sets(g, inst.k(), p0, r0);
    instances++;
    if (dup || emitted != want) violations++;
  }
  Verdict v;
  v.failed = violations != 0;
  v.detail = "enumeration completeness: " + std::to_string(instances) +
             " (graph, committed, candidate) instances, " + std::to_string(violations) +
             " mismatches against exhaustive listing";
  return v;
}

// 9. The peel order's degeneracy agrees with the definition; big graphs logged.
Verdict criterion9(const Suite& suite) {
  long long graphs = 0, mismatches = 0;
  for (const Graph& g : suite.graphs) {
    if (g.n > 10) continue;
    graphs++;
    if (degeneracy_order(g).degeneracy != oracle::brute_degeneracy(g)) mismatches++;
  }
  std::string notes;
  bool failed = mismatches != 0;

  std::string as_path = external_path("as-22july06.mtx");
  if (have_file(as_path)) {
    Graph g = load_graph(as_path);
    notes += ", as-22july06 d(G)=" + std::to_string(degeneracy_order(g).degeneracy);
  } else {
    notes += ", as-22july06 absent";
  }
  bool lj_found = false;
  for (const char* name : {"soc-LiveJournal.mtx", "soc-LiveJournal.txt", "soc-LiveJournal1.mtx"}) {
    std::string path = external_path(name);
    if (!have_file(path)) continue;
    lj_found = true;
    Graph g = load_graph(path);
    int d = degeneracy_order(g).degeneracy;
    notes += ", soc-LiveJournal d(G)=" + std::to_string(d) + " (want 213)";
    if (d != 213) failed = true;
    break;
  }
  if (!lj_found) notes += ", soc-LiveJournal absent";

  Verdict v;
  v.failed = failed;
  v.detail = "degeneracy: " + std::to_string(graphs) + " graphs with n<=10 vs definition, " +
             std::to_string(mismatches) + " mismatches" + notes;
  return v;
}

}  // namespace

int main() {
  std::printf("acceptance suite: building the shared 500-graph corpus\n");
  std::fflush(stdout);
  Suite suite = build_suite();

  int fails = 0;
  report(1, criterion1(suite), fails);
  report(2, criterion2(), fails);
  report(3, criterion3(), fails);
  report(4, criterion4(), fails);
  report(5, criterion5(suite), fails);
  report(6, criterion6(), fails);
  report(7, criterion7(suite), fails);
  report(8, criterion8(), fails);
  report(9, criterion9(suite), fails);

  std::printf("acceptance suite: %d of 9 criteria failed\n", fails);
  return fails;
}
