#pragma once

// Brute-force references used only by tests and the verify tooling. These are
// written for obviousness, not speed, and deliberately share no search logic
// with the solver: subset enumeration over adjacency bitmasks, plus a
// hereditary DFS as a second, independently coded maximum oracle.

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "kdefect/bounds.hpp"
#include "kdefect/graph.hpp"
#include "kdefect/model.hpp"

namespace kdefect {
namespace oracle {

inline std::vector<uint32_t> adjacency_masks(const Graph& g) {
  if (g.n > 20) throw std::invalid_argument("oracle: graph too large (n > 20)");
  std::vector<uint32_t> adj(g.n, 0);
  for (int v = 0; v < g.n; v++)
    for (int u : g.neighbors(v)) adj[v] |= 1u << u;
  return adj;
}

inline long long missing_in_mask(const std::vector<uint32_t>& adj, uint32_t mask) {
  int size = std::popcount(mask);
  long long present = 0;
  for (uint32_t rest = mask; rest; rest &= rest - 1) {
    int v = std::countr_zero(rest);
    present += std::popcount(adj[v] & mask);
  }
  return pairs_of(size) - present / 2;
}

// Maximum k-defective clique by hereditary DFS: a partial set is only ever
// extended while its own missing-pair count stays within k, which is complete
// because the property is hereditary.
inline Solution brute_max_kdc(const Graph& g, int k, int max_n = 14) {
  if (g.n > max_n) throw std::invalid_argument("brute_max_kdc: n exceeds oracle limit");
  std::vector<uint32_t> adj = adjacency_masks(g);
  uint32_t best = 0;
  int best_size = 0;
  auto extend = [&](auto&& self, int start, uint32_t cur, int size, long long missing) -> void {
    if (size > best_size) {
      best_size = size;
      best = cur;
    }
    for (int v = start; v < g.n; v++) {
      long long added = size - std::popcount(adj[v] & cur);
      if (missing + added <= k) self(self, v + 1, cur | (1u << v), size + 1, missing + added);
    }
  };
  extend(extend, 0, 0, 0, 0);
  std::vector<int> verts;
  for (uint32_t rest = best; rest; rest &= rest - 1) verts.push_back(std::countr_zero(rest));
  return check_solution(g, verts, k);
}

// Same maximum by flat subset iteration; size only. Cross-checks brute_max_kdc.
inline int brute_max_kdc_size_bitmask(const Graph& g, int k) {
  std::vector<uint32_t> adj = adjacency_masks(g);
  int best = 0;
  for (uint32_t mask = 1; mask < (1u << g.n); mask++) {
    int size = std::popcount(mask);
    if (size <= best) continue;
    if (missing_in_mask(adj, mask) <= k) best = size;
  }
  return best;
}

// A set Q solves instance I when it is a k-defective clique whose defective
// part lands between P and P+R: every vertex of P keeps a non-neighbor in Q,
// and every vertex of Q outside P+R is adjacent to all the rest of Q.
inline bool mask_solves_instance(const Instance& inst, const std::vector<uint32_t>& adj,
                                 uint32_t mask) {
  int size = std::popcount(mask);
  if (missing_in_mask(adj, mask) > inst.k()) return false;
  for (uint32_t rest = mask; rest; rest &= rest - 1) {
    int v = std::countr_zero(rest);
    bool full = std::popcount(adj[v] & mask) == size - 1;
    if (inst.in_p(v) && full) return false;
    if (inst.excluded(v) && !full) return false;
  }
  return true;
}

// All instance solutions with more than min_size vertices, as bitmasks.
inline std::vector<uint32_t> enumerate_instance_solutions(const Instance& inst, int min_size) {
  const Graph& g = inst.graph();
  std::vector<uint32_t> adj = adjacency_masks(g);
  uint32_t p_mask = 0;
  for (int v : inst.p_vertices()) p_mask |= 1u << v;
  std::vector<uint32_t> out;
  for (uint32_t mask = 1; mask < (1u << g.n); mask++) {
    if ((mask & p_mask) != p_mask) continue;
    if (std::popcount(mask) <= min_size) continue;
    if (mask_solves_instance(inst, adj, mask)) out.push_back(mask);
  }
  return out;
}

// Instance optimum: the largest solution respecting (P, R), 0 when none exists.
inline int brute_omega_instance(const Instance& inst) {
  const Graph& g = inst.graph();
  std::vector<uint32_t> adj = adjacency_masks(g);
  uint32_t p_mask = 0;
  for (int v : inst.p_vertices()) p_mask |= 1u << v;
  int best = 0;
  for (uint32_t mask = 1; mask < (1u << g.n); mask++) {
    if ((mask & p_mask) != p_mask) continue;
    int size = std::popcount(mask);
    if (size <= best) continue;
    if (mask_solves_instance(inst, adj, mask)) best = size;
  }
  return best;
}

// Exact optimum of the per-class selection problem the partition bounds relax:
// pick S_i from each class so that sum_i (pairs(|S_i|) + sum of weights) fits
// the slack, maximizing |P| + sum |S_i|. An optional conflict predicate forbids
// pairs inside a class from being picked together.
inline int brute_opt(const Instance& inst, const Partition& part,
                     const std::function<bool(int, int)>* conflict = nullptr) {
  int budget = inst.slack();
  if (budget < 0) throw std::invalid_argument("brute_opt: negative slack");
  std::vector<int> f(budget + 1, 0);
  for (const auto& cls : part.classes) {
    if (cls.size() > 20) throw std::invalid_argument("brute_opt: class too large");
    // best size achievable in this class at each cost
    std::vector<int> t(budget + 1, 0);
    uint32_t lim = 1u << cls.size();
    for (uint32_t mask = 0; mask < lim; mask++) {
      int size = std::popcount(mask);
      long long cost = pairs_of(size);
      for (uint32_t rest = mask; rest; rest &= rest - 1)
        cost += inst.weight(cls[std::countr_zero(rest)]);
      if (cost > budget) continue;
      if (conflict) {
        bool bad = false;
        for (uint32_t a = mask; a && !bad; a &= a - 1)
          for (uint32_t b = a & (a - 1); b && !bad; b &= b - 1)
            if ((*conflict)(cls[std::countr_zero(a)], cls[std::countr_zero(b)])) bad = true;
        if (bad) continue;
      }
      for (int r = static_cast<int>(cost); r <= budget; r++) t[r] = std::max(t[r], size);
    }
    std::vector<int> nf(budget + 1, 0);
    for (int r = 0; r <= budget; r++)
      for (int rp = 0; rp <= r; rp++) nf[r] = std::max(nf[r], f[rp] + t[r - rp]);
    f = std::move(nf);
  }
  return inst.p_size() + f[budget];
}

// Every k-defective set D with p <= D <= p+r, each sorted, lexicographically
// ordered. p and r must be disjoint.
inline std::vector<std::vector<int>> enumerate_kdef_sets(const Graph& g, int k,
                                                         const std::vector<int>& p,
                                                         const std::vector<int>& r) {
  if (r.size() > 20) throw std::invalid_argument("enumerate_kdef_sets: candidate set too large");
  std::vector<std::vector<int>> out;
  for (uint32_t mask = 0; mask < (1u << r.size()); mask++) {
    std::vector<int> d = p;
    for (uint32_t rest = mask; rest; rest &= rest - 1) d.push_back(r[std::countr_zero(rest)]);
    std::sort(d.begin(), d.end());
    if (is_k_defective_set(g, d, k)) out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Degeneracy as its definition states it: the largest over all induced
// subgraphs of the minimum degree.
inline int brute_degeneracy(const Graph& g) {
  std::vector<uint32_t> adj = adjacency_masks(g);
  int best = 0;
  for (uint32_t mask = 1; mask < (1u << g.n); mask++) {
    int mindeg = g.n;
    for (uint32_t rest = mask; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      mindeg = std::min(mindeg, std::popcount(adj[v] & mask));
    }
    best = std::max(best, mindeg);
  }
  return best;
}

}  // namespace oracle
}  // namespace kdefect
