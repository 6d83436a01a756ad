#pragma once

// Exact maximum clique. The main entry is a branch-and-bound in the style of
// Tomita: candidates are kept in degeneracy order, greedily colored, and
// expanded from the highest color downward so the |cur| + color <= best cutoff
// prunes whole suffixes. A floor lets callers skip work when only strictly
// larger cliques matter: the returned clique is empty unless its size beats
// the floor.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "kdefect/graph.hpp"

namespace kdefect {

struct CliqueResult {
  std::vector<int> vertices;
  int size() const { return static_cast<int>(vertices.size()); }
};

namespace detail {

struct McState {
  const Graph* g;
  int best;
  std::vector<int> best_set;
  std::vector<int> cur;

  void expand(const std::vector<int>& cand) {
    if (cand.empty()) {
      if (static_cast<int>(cur.size()) > best) {
        best = static_cast<int>(cur.size());
        best_set = cur;
      }
      return;
    }
    // greedy coloring in candidate order; colors are 1-based
    int ncand = static_cast<int>(cand.size());
    std::vector<int> color(ncand);
    std::vector<std::vector<int>> classes;
    for (int i = 0; i < ncand; i++) {
      int v = cand[i];
      int c = 0;
      while (c < static_cast<int>(classes.size())) {
        bool clash = false;
        for (int u : classes[c])
          if (g->adjacent(u, v)) {
            clash = true;
            break;
          }
        if (!clash) break;
        c++;
      }
      if (c == static_cast<int>(classes.size())) classes.emplace_back();
      classes[c].push_back(v);
      color[i] = c + 1;
    }
    // stable sort by color keeps the candidate order inside each color
    std::vector<int> idx(ncand);
    for (int i = 0; i < ncand; i++) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return color[a] < color[b]; });
    std::vector<int> ordered(ncand);
    std::vector<int> ocolor(ncand);
    for (int i = 0; i < ncand; i++) {
      ordered[i] = cand[idx[i]];
      ocolor[i] = color[idx[i]];
    }
    std::vector<int> next;
    for (int i = ncand - 1; i >= 0; i--) {
      if (static_cast<int>(cur.size()) + ocolor[i] <= best) return;
      int v = ordered[i];
      next.clear();
      for (int j = 0; j < i; j++)
        if (g->adjacent(ordered[j], v)) next.push_back(ordered[j]);
      cur.push_back(v);
      expand(next);
      cur.pop_back();
    }
  }
};

}  // namespace detail

// Maximum clique of g; result.vertices is empty when no clique beats floor.
inline CliqueResult max_clique(const Graph& g, int floor = 0) {
  CliqueResult res;
  if (g.n == 0) return res;
  detail::McState st;
  st.g = &g;
  st.best = floor;
  VertexOrder vo = degeneracy_order(g);
  st.expand(vo.order);
  res.vertices = std::move(st.best_set);
  std::sort(res.vertices.begin(), res.vertices.end());
  return res;
}

// Reference implementation by exhaustive extension; guards its input size.
inline CliqueResult brute_force_max_clique(const Graph& g) {
  if (g.n > 24) throw std::invalid_argument("brute_force_max_clique: n > 24");
  CliqueResult res;
  std::vector<int> cur;
  auto extend = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) > res.size()) res.vertices = cur;
    for (int v = start; v < g.n; v++) {
      bool ok = true;
      for (int u : cur)
        if (!g.adjacent(u, v)) {
          ok = false;
          break;
        }
      if (ok) {
        cur.push_back(v);
        self(self, v + 1);
        cur.pop_back();
      }
    }
  };
  extend(extend, 0);
  return res;
}

}  // namespace kdefect
