#pragma once

// Top level: decompose-and-branch. A cheap minimum-degree peel seeds the
// incumbent, then every vertex v of the degeneracy order spawns two small
// instances over later-ranked vertices: one where v is committed (candidates
// reach two hops, which is as far as members of a non-trivial defective set
// can sit from each other) and one where v is branched away but still usable
// as clique material (candidates only its neighbors). Either instance is
// skipped outright when its whole universe could not beat the incumbent.

#include <chrono>
#include <memory>
#include <queue>
#include <utility>
#include <vector>

#include "kdefect/branch.hpp"
#include "kdefect/graph.hpp"
#include "kdefect/model.hpp"

namespace kdefect {

// Greedy lower bound: peel minimum-degree vertices (ties by id) until the
// survivors miss at most k edges.
inline Solution heuristic_initial(const Graph& g, int k) {
  long long missing = pairs_of(g.n) - g.m;
  std::vector<int> deg(g.n);
  std::vector<char> alive(g.n, 1);
  std::priority_queue<uint64_t, std::vector<uint64_t>, std::greater<>> heap;
  for (int v = 0; v < g.n; v++) {
    deg[v] = g.degree(v);
    heap.push((static_cast<uint64_t>(deg[v]) << 32) | static_cast<uint32_t>(v));
  }
  int size = g.n;
  while (missing > k) {
    uint64_t key = heap.top();
    heap.pop();
    int v = static_cast<int>(key & 0xffffffffu);
    int d = static_cast<int>(key >> 32);
    if (!alive[v] || d != deg[v]) continue;
    alive[v] = 0;
    missing -= (size - 1) - deg[v];
    size--;
    for (int u : g.neighbors(v))
      if (alive[u]) {
        deg[u]--;
        heap.push((static_cast<uint64_t>(deg[u]) << 32) | static_cast<uint32_t>(u));
      }
  }
  std::vector<int> verts;
  verts.reserve(size);
  for (int v = 0; v < g.n; v++)
    if (alive[v]) verts.push_back(v);
  return check_solution(g, verts, k);
}

// One decomposed instance: a local universe with its own graph plus the
// mapping back to original ids.
struct SubInstance {
  std::unique_ptr<SubgraphMap> map;
  Instance inst;
};

namespace detail {

inline int local_id(const std::vector<int>& to_global, int v) {
  return static_cast<int>(std::lower_bound(to_global.begin(), to_global.end(), v) -
                          to_global.begin());
}

inline SubInstance make_sub(const Graph& g, int k, const std::vector<int>& universe,
                            SubgraphScratch* sc) {
  auto map = std::make_unique<SubgraphMap>(induced_subgraph(g, universe, sc));
  Instance inst(map->local, k);
  return SubInstance{std::move(map), std::move(inst)};
}

}  // namespace detail

// The two instances rooted at the i-th vertex of the order: one committing it
// with candidates N+ and N2+, one discarding it with candidates N+.
inline std::pair<SubInstance, SubInstance> build_subinstances(const Graph& g,
                                                              const VertexOrder& vo, int i, int k,
                                                              TwoHopScratch* th = nullptr,
                                                              SubgraphScratch* sc = nullptr) {
  int v = vo.order[i];
  std::vector<int> np = neighbors_after(g, vo, v);
  std::vector<int> n2 = two_hop_after(g, vo, v, th);

  std::vector<int> u1;
  u1.reserve(np.size() + n2.size() + 1);
  u1.push_back(v);
  u1.insert(u1.end(), np.begin(), np.end());
  u1.insert(u1.end(), n2.begin(), n2.end());
  std::sort(u1.begin(), u1.end());
  SubInstance first = detail::make_sub(g, k, u1, sc);
  first.inst.include(detail::local_id(first.map->to_global, v));

  std::vector<int> u2;
  u2.reserve(np.size() + 1);
  u2.push_back(v);
  u2.insert(u2.end(), np.begin(), np.end());
  std::sort(u2.begin(), u2.end());
  SubInstance second = detail::make_sub(g, k, u2, sc);
  second.inst.exclude(detail::local_id(second.map->to_global, v));

  return {std::move(first), std::move(second)};
}

struct SolverOptions {
  BoundKind bound = BoundKind::pcc;
  double time_limit_s = 10800;
  BranchObserver* observer = nullptr;
};

struct SolveReport {
  Solution solution;
  bool no = true;  // no non-trivial solution (best size < k + 2)
  SearchStats stats;
  int k = 0;
  BoundKind bound = BoundKind::pcc;
  double time_limit_s = 0;
  int n = 0;
  long long m = 0;
  int degeneracy = 0;
  bool complete = true;
};

inline SolveReport solve(const Graph& g, int k, const SolverOptions& opts = {}) {
  auto t0 = std::chrono::steady_clock::now();
  auto deadline = t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(opts.time_limit_s));
  SolveReport rep;
  rep.k = k;
  rep.bound = opts.bound;
  rep.time_limit_s = opts.time_limit_s;
  rep.n = g.n;
  rep.m = g.m;

  VertexOrder vo = degeneracy_order(g);
  rep.degeneracy = vo.degeneracy;

  Incumbent inc;
  if (g.n > 0) inc.offer(heuristic_initial(g, k).vertices);

  if (k + 2 <= g.n) {  // otherwise no non-trivial solution can exist
    BoundEvaluator be(opts.bound);
    BranchContext ctx;
    ctx.incumbent = &inc;
    ctx.bound = &be;
    ctx.stats = &rep.stats;
    ctx.observer = opts.observer;
    ctx.deadline = deadline;
    TwoHopScratch th;
    SubgraphScratch sc;
    for (int i = 0; i < g.n; i++) {
      if (std::chrono::steady_clock::now() > deadline) {
        rep.stats.timed_out = true;
        break;
      }
      int v = vo.order[i];
      std::vector<int> np = neighbors_after(g, vo, v);
      std::vector<int> n2 = two_hop_after(g, vo, v, &th);
      int lb = inc.size();
      if (1 + static_cast<int>(np.size() + n2.size()) > lb) {
        std::vector<int> u1;
        u1.reserve(np.size() + n2.size() + 1);
        u1.push_back(v);
        u1.insert(u1.end(), np.begin(), np.end());
        u1.insert(u1.end(), n2.begin(), n2.end());
        std::sort(u1.begin(), u1.end());
        SubInstance sub = detail::make_sub(g, k, u1, &sc);
        sub.inst.include(detail::local_id(sub.map->to_global, v));
        ctx.to_global = &sub.map->to_global;
        branch(sub.inst, ctx);
        if (rep.stats.timed_out) break;
      }
      lb = inc.size();
      if (1 + static_cast<int>(np.size()) > lb) {
        std::vector<int> u2;
        u2.reserve(np.size() + 1);
        u2.push_back(v);
        u2.insert(u2.end(), np.begin(), np.end());
        std::sort(u2.begin(), u2.end());
        SubInstance sub = detail::make_sub(g, k, u2, &sc);
        sub.inst.exclude(detail::local_id(sub.map->to_global, v));
        ctx.to_global = &sub.map->to_global;
        branch(sub.inst, ctx);
        if (rep.stats.timed_out) break;
      }
    }
  }

  rep.solution = check_solution(g, inc.vertices(), k);
  rep.no = rep.solution.size() < k + 2;
  rep.complete = !rep.stats.timed_out;
  rep.stats.time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace kdefect
