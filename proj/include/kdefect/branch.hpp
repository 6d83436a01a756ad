#pragma once

// The branch-and-bound over (P, R) instances. Each invocation is one search
// node. Order of business at a node: feasibility (negative slack, or some
// committed vertex adjacent to everything left — then no completion can give
// every P-member its non-neighbor), bound pruning, terminal completion once
// the budget is spent or candidates ran out (maximum clique over the common
// neighborhood of P joins the incumbent race), the free reduction for a
// candidate adjacent to everything, and otherwise a two-way branch on the
// heaviest candidate, include first.

#include <atomic>
#include <chrono>
#include <mutex>
#include <vector>

#include "kdefect/bounds.hpp"
#include "kdefect/graph.hpp"
#include "kdefect/max_clique.hpp"
#include "kdefect/model.hpp"

namespace kdefect {

struct SearchStats {
  long long nodes = 0;
  long long bound_prunes = 0;
  long long reduction_applications = 0;
  long long mc_calls = 0;
  double time_ms = 0;
  bool timed_out = false;
};

// Best solution so far, in original-graph vertex ids. Improvement is
// compare-and-swap style so subinstance workers could share one.
class Incumbent {
 public:
  int size() const { return size_.load(std::memory_order_relaxed); }

  std::vector<int> vertices() const {
    std::lock_guard<std::mutex> lock(mu_);
    return vertices_;
  }

  // Strict improvement only; returns whether verts was adopted.
  bool offer(const std::vector<int>& verts) {
    std::lock_guard<std::mutex> lock(mu_);
    if (static_cast<int>(verts.size()) <= size_.load(std::memory_order_relaxed)) return false;
    vertices_ = verts;
    size_.store(static_cast<int>(verts.size()), std::memory_order_relaxed);
    return true;
  }

 private:
  mutable std::mutex mu_;
  std::vector<int> vertices_;
  std::atomic<int> size_{0};
};

// Test instrumentation; every callback fires with the node's current state.
struct BranchObserver {
  virtual ~BranchObserver() = default;
  virtual void on_node(const Instance&, int /*lb*/) {}
  virtual void on_feasibility_prune(const Instance&) {}
  virtual void on_terminal(const Instance&) {}
  virtual void on_reduction(const Instance&, int /*v*/) {}
  virtual void on_branch_vertex(const Instance&, int /*v*/) {}
};

struct BranchContext {
  Incumbent* incumbent = nullptr;
  BoundEvaluator* bound = nullptr;  // null disables the bound hook
  SearchStats* stats = nullptr;
  const std::vector<int>* to_global = nullptr;  // null = ids are already global
  BranchObserver* observer = nullptr;
  std::chrono::steady_clock::time_point deadline = std::chrono::steady_clock::time_point::max();
  // scratch
  SubgraphScratch sub_scratch;
  std::vector<int> cand_buf;
  std::vector<int> sol_buf;
};

// Heaviest candidate wins, smallest id on ties. R must be non-empty.
inline int select_branch_vertex(const Instance& inst) {
  int best = -1, best_w = -1;
  for (int v = 0; v < inst.n(); v++)
    if (inst.in_r(v)) {
      int w = inst.weight(v);
      if (w > best_w) {
        best_w = w;
        best = v;
      }
    }
  return best;
}

namespace detail {

inline void offer_completion(Instance& inst, BranchContext& ctx) {
  // completion universe: common neighborhood of P, or everything when P is empty
  std::vector<int>& cand = ctx.cand_buf;
  cand.clear();
  int psz = inst.p_size();
  for (int v = 0; v < inst.n(); v++)
    if (!inst.in_p(v) && inst.p_degree(v) == psz) cand.push_back(v);
  if (psz + static_cast<int>(cand.size()) <= ctx.incumbent->size()) return;
  CliqueResult clique;
  if (!cand.empty()) {
    int floor = ctx.incumbent->size() - psz;
    if (floor < 0) floor = 0;
    ctx.stats->mc_calls++;
    SubgraphMap sub = induced_subgraph(inst.graph(), cand, &ctx.sub_scratch);
    clique = max_clique(sub.local, floor);
    for (int& v : clique.vertices) v = sub.to_global[v];
  }
  if (psz + clique.size() <= ctx.incumbent->size()) return;
  std::vector<int>& sol = ctx.sol_buf;
  sol.clear();
  for (int v : inst.p_vertices()) sol.push_back(v);
  for (int v : clique.vertices) sol.push_back(v);
  if (ctx.to_global)
    for (int& v : sol) v = (*ctx.to_global)[v];
  ctx.incumbent->offer(sol);
}

}  // namespace detail

inline void branch(Instance& inst, BranchContext& ctx) {
  SearchStats& stats = *ctx.stats;
  stats.nodes++;
  if ((stats.nodes & 1023) == 0 && std::chrono::steady_clock::now() > ctx.deadline) {
    stats.timed_out = true;
    return;
  }
  if (ctx.observer) ctx.observer->on_node(inst, ctx.incumbent->size());

  if (inst.slack() < 0) {
    if (ctx.observer) ctx.observer->on_feasibility_prune(inst);
    return;
  }
  int total = inst.p_size() + inst.r_size();
  int reducible = -1;
  for (int v = 0; v < inst.n(); v++) {
    if (inst.pr_degree(v) != total - 1) continue;
    if (inst.in_p(v)) {
      // v would stay without a non-neighbor in any completion
      if (ctx.observer) ctx.observer->on_feasibility_prune(inst);
      return;
    }
    if (inst.in_r(v) && reducible < 0) reducible = v;
  }

  if (ctx.bound && ctx.bound->kind() != BoundKind::none) {
    int lb = ctx.incumbent->size();
    if ((*ctx.bound)(inst, lb) <= lb) {
      stats.bound_prunes++;
      return;
    }
  }

  if (inst.slack() == 0 || inst.r_size() == 0) {
    if (ctx.observer) ctx.observer->on_terminal(inst);
    detail::offer_completion(inst, ctx);
    return;
  }

  if (reducible >= 0) {
    // adjacent to all of P+R: postponing it loses nothing, so don't branch
    stats.reduction_applications++;
    if (ctx.observer) ctx.observer->on_reduction(inst, reducible);
    inst.exclude(reducible);
    branch(inst, ctx);
    inst.undo_exclude(reducible);
    return;
  }

  int v = select_branch_vertex(inst);
  if (ctx.observer) ctx.observer->on_branch_vertex(inst, v);
  inst.include(v);
  branch(inst, ctx);
  inst.undo_include(v);
  if (stats.timed_out) return;
  inst.exclude(v);
  branch(inst, ctx);
  inst.undo_exclude(v);
}

}  // namespace kdefect
