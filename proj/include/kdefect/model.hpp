#pragma once

// k-defective clique model: a vertex set S is a k-defective clique of G when
// the subgraph it induces misses at most k edges of the full clique on |S|
// vertices. Instance is the mutable (universe, P, R) search state used by the
// branch-and-bound: P is the committed part of the defective set, R the
// undecided candidates, and everything else stays in the universe as
// clique-completion material only.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "kdefect/graph.hpp"

namespace kdefect {

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Solution {
  std::vector<int> vertices;
  int k = 0;
  bool nontrivial = false;  // size >= k + 2
  int size() const { return static_cast<int>(vertices.size()); }
};

inline long long pairs_of(long long c) { return c * (c - 1) / 2; }

// Number of non-adjacent pairs inside s.
inline long long missing_edges(const Graph& g, std::span<const int> s) {
  std::vector<int> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  long long present = 0;
  for (int u : sorted) {
    auto nb = g.neighbors(u);
    size_t i = 0, j = 0;
    while (i < nb.size() && j < sorted.size()) {
      if (nb[i] < sorted[j])
        i++;
      else if (nb[i] > sorted[j])
        j++;
      else {
        present++;
        i++;
        j++;
      }
    }
  }
  present /= 2;
  return pairs_of(static_cast<long long>(sorted.size())) - present;
}

inline bool is_k_defective_clique(const Graph& g, std::span<const int> s, int k) {
  return missing_edges(g, s) <= k;
}

// A k-defective set additionally requires every member to have a non-neighbor
// inside the set; the empty set qualifies vacuously, a single vertex never does.
inline bool is_k_defective_set(const Graph& g, std::span<const int> s, int k) {
  if (s.empty()) return true;
  if (missing_edges(g, s) > k) return false;
  std::vector<int> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  for (int u : sorted) {
    auto nb = g.neighbors(u);
    long long inside = 0;
    size_t i = 0, j = 0;
    while (i < nb.size() && j < sorted.size()) {
      if (nb[i] < sorted[j])
        i++;
      else if (nb[i] > sorted[j])
        j++;
      else {
        inside++;
        i++;
        j++;
      }
    }
    if (inside == static_cast<long long>(sorted.size()) - 1) return false;  // no non-neighbor
  }
  return true;
}

// Validates s against the budget and wraps it as a Solution.
inline Solution check_solution(const Graph& g, std::span<const int> s, int k) {
  long long miss = missing_edges(g, s);
  if (miss > k)
    throw ValidationError("not a " + std::to_string(k) + "-defective clique: " +
                          std::to_string(miss) + " missing pairs");
  Solution sol;
  sol.vertices.assign(s.begin(), s.end());
  std::sort(sol.vertices.begin(), sol.vertices.end());
  sol.k = k;
  sol.nontrivial = sol.size() >= k + 2;
  return sol;
}

// Search-state over a fixed local universe. Vertices are in exactly one of
// three states: P (committed), R (candidate), or excluded (branched away but
// still available as clique-completion material). Weights w(u) = |P| - |N(u)&P|
// and the slack k - missing(P) are maintained incrementally.
class Instance {
 public:
  Instance(const Graph& g, int k)
      : g_(&g),
        k_(k),
        slack_(k),
        r_size_(g.n),
        state_(g.n, 0),
        p_cnt_(g.n, 0),
        pr_cnt_(g.n, 0) {
    for (int v = 0; v < g.n; v++) pr_cnt_[v] = g.degree(v);
    scan_order_ = degeneracy_order(g).order;
  }

  const Graph& graph() const { return *g_; }
  int n() const { return g_->n; }
  int k() const { return k_; }
  int slack() const { return slack_; }
  int p_size() const { return p_size_; }
  int r_size() const { return r_size_; }
  bool in_p(int v) const { return state_[v] == 1; }
  bool in_r(int v) const { return state_[v] == 0; }
  bool excluded(int v) const { return state_[v] == 2; }
  std::span<const int> p_vertices() const { return p_stack_; }
  const std::vector<int>& scan_order() const { return scan_order_; }

  // missing pairs u would add when joining P
  int weight(int u) const { return p_size_ - p_cnt_[u]; }
  int slack_after_add(int u) const { return slack_ - weight(u); }
  // |N(u) & (P+R)|, maintained for the all-adjacent tests
  int pr_degree(int u) const { return pr_cnt_[u]; }
  int p_degree(int u) const { return p_cnt_[u]; }

  void include(int v) {
    slack_ -= weight(v);
    state_[v] = 1;
    p_size_++;
    r_size_--;
    p_stack_.push_back(v);
    for (int u : g_->neighbors(v)) p_cnt_[u]++;
  }

  void undo_include(int v) {
    p_stack_.pop_back();
    for (int u : g_->neighbors(v)) p_cnt_[u]--;
    state_[v] = 0;
    p_size_--;
    r_size_++;
    slack_ += weight(v);
  }

  void exclude(int v) {
    state_[v] = 2;
    r_size_--;
    for (int u : g_->neighbors(v)) pr_cnt_[u]--;
  }

  void undo_exclude(int v) {
    state_[v] = 0;
    r_size_++;
    for (int u : g_->neighbors(v)) pr_cnt_[u]++;
  }

 private:
  const Graph* g_;
  int k_;
  int slack_;
  int p_size_ = 0;
  int r_size_;
  std::vector<int8_t> state_;  // 0 = R, 1 = P, 2 = excluded
  std::vector<int> p_cnt_;
  std::vector<int> pr_cnt_;
  std::vector<int> p_stack_;
  std::vector<int> scan_order_;  // degeneracy order of the universe, for coloring scans
};

}  // namespace kdefect
