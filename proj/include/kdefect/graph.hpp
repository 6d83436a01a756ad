#pragma once

// Undirected simple graph in CSR form plus the ordering/neighborhood helpers
// used by the solver: degeneracy order, later-ranked one- and two-hop
// neighborhoods, induced subgraphs and common neighborhoods.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace kdefect {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("parse error at line " + std::to_string(line_) + ": " + msg),
        line(line_) {}
};

struct Graph {
  int n = 0;
  long long m = 0;                 // number of undirected edges
  std::vector<long long> off;      // size n+1
  std::vector<int> adj;            // sorted neighbor lists, both directions

  int degree(int u) const { return static_cast<int>(off[u + 1] - off[u]); }

  std::span<const int> neighbors(int u) const {
    return {adj.data() + off[u], adj.data() + off[u + 1]};
  }

  bool adjacent(int u, int v) const {
    if (u == v) return false;
    if (degree(u) > degree(v)) std::swap(u, v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }
};

// Builds a simple graph: self-loops dropped, duplicate edges merged.
inline Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g;
  g.n = n;
  std::vector<int> deg(n, 0);
  for (auto [u, v] : edges) {
    if (u == v) continue;
    deg[u]++;
    deg[v]++;
  }
  g.off.assign(n + 1, 0);
  for (int u = 0; u < n; u++) g.off[u + 1] = g.off[u] + deg[u];
  g.adj.resize(g.off[n]);
  std::vector<long long> pos(g.off.begin(), g.off.end() - 1);
  for (auto [u, v] : edges) {
    if (u == v) continue;
    g.adj[pos[u]++] = v;
    g.adj[pos[v]++] = u;
  }
  // sort + dedup each list, then compact
  long long w = 0;
  std::vector<long long> noff(n + 1, 0);
  for (int u = 0; u < n; u++) {
    auto b = g.adj.begin() + g.off[u], e = g.adj.begin() + g.off[u + 1];
    std::sort(b, e);
    auto ne = std::unique(b, e);
    noff[u] = w;
    for (auto it = b; it != ne; ++it) g.adj[w++] = *it;
  }
  noff[n] = w;
  g.adj.resize(w);
  g.off = std::move(noff);
  g.m = w / 2;
  return g;
}

// Parses whitespace-separated "u v" edge lines. '%' and '#' start comments; a
// %%MatrixMarket banner makes the next non-comment line a size header, which
// is skipped. Vertex labels are arbitrary integers, compacted to 0..n-1 by
// first appearance. format_hint: "auto" (default), "edgelist", or "mtx"
// (forces the size-header skip even without a banner).
inline Graph parse_graph(std::string_view text, std::string_view format_hint = "auto") {
  bool skip_size_line = (format_hint == "mtx");
  bool size_line_pending = skip_size_line;
  std::unordered_map<long long, int> label;
  label.reserve(1 << 16);
  std::vector<std::pair<int, int>> edges;
  auto intern = [&](long long raw) {
    auto [it, fresh] = label.emplace(raw, static_cast<int>(label.size()));
    (void)fresh;
    return it->second;
  };

  size_t i = 0, len = text.size();
  int line_no = 0;
  while (i < len) {
    size_t eol = text.find('\n', i);
    if (eol == std::string_view::npos) eol = len;
    std::string_view line = text.substr(i, eol - i);
    i = eol + 1;
    line_no++;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    size_t s = line.find_first_not_of(" \t");
    if (s == std::string_view::npos) continue;
    if (line[s] == '%') {
      if (line.substr(s).rfind("%%MatrixMarket", 0) == 0) size_line_pending = true;
      continue;
    }
    if (line[s] == '#') continue;
    if (size_line_pending) {
      size_line_pending = false;
      continue;
    }

    long long vals[2];
    size_t p = s;
    for (int t = 0; t < 2; t++) {
      while (p < line.size() && (line[p] == ' ' || line[p] == '\t')) p++;
      if (p >= line.size()) throw ParseError(line_no, "expected two vertex ids");
      bool neg = false;
      if (line[p] == '-') {
        neg = true;
        p++;
      }
      if (p >= line.size() || line[p] < '0' || line[p] > '9')
        throw ParseError(line_no, "malformed vertex id");
      long long v = 0;
      while (p < line.size() && line[p] >= '0' && line[p] <= '9') v = v * 10 + (line[p++] - '0');
      if (p < line.size() && line[p] != ' ' && line[p] != '\t')
        throw ParseError(line_no, "malformed vertex id");
      vals[t] = neg ? -v : v;
    }
    // trailing tokens (weights, timestamps) are ignored
    int u = intern(vals[0]);
    int v = intern(vals[1]);
    if (u != v) edges.emplace_back(u, v);  // labels registered even on self-loop lines
  }
  if (label.empty()) throw ParseError(line_no, "no vertices found");
  return from_edges(static_cast<int>(label.size()), edges);
}

// Canonical serialization: one "u v" line per edge with u < v, sorted.
inline std::string serialize_edge_list(const Graph& g) {
  std::string out;
  out.reserve(static_cast<size_t>(g.m) * 8);
  char buf[32];
  for (int u = 0; u < g.n; u++)
    for (int v : g.neighbors(u))
      if (v > u) {
        int len = std::snprintf(buf, sizeof buf, "%d %d\n", u, v);
        out.append(buf, len);
      }
  return out;
}

struct VertexOrder {
  std::vector<int> order;  // order[i] = i-th vertex removed by min-degree peel
  std::vector<int> rank;   // rank[order[i]] = i
  int degeneracy = 0;
};

// Degeneracy order by repeated minimum-degree removal, ties broken by smallest
// vertex id (lazy heap over packed (degree, id) keys).
inline VertexOrder degeneracy_order(const Graph& g) {
  VertexOrder vo;
  vo.order.reserve(g.n);
  vo.rank.assign(g.n, -1);
  std::vector<int> deg(g.n);
  std::priority_queue<uint64_t, std::vector<uint64_t>, std::greater<>> heap;
  for (int v = 0; v < g.n; v++) {
    deg[v] = g.degree(v);
    heap.push((static_cast<uint64_t>(deg[v]) << 32) | static_cast<uint32_t>(v));
  }
  std::vector<char> removed(g.n, 0);
  while (!heap.empty()) {
    uint64_t key = heap.top();
    heap.pop();
    int v = static_cast<int>(key & 0xffffffffu);
    int d = static_cast<int>(key >> 32);
    if (removed[v] || d != deg[v]) continue;  // stale entry
    removed[v] = 1;
    vo.rank[v] = static_cast<int>(vo.order.size());
    vo.order.push_back(v);
    vo.degeneracy = std::max(vo.degeneracy, d);
    for (int u : g.neighbors(v))
      if (!removed[u]) {
        deg[u]--;
        heap.push((static_cast<uint64_t>(deg[u]) << 32) | static_cast<uint32_t>(u));
      }
  }
  return vo;
}

// Neighbors of v ranked after v in the order; ascending vertex id.
inline std::vector<int> neighbors_after(const Graph& g, const VertexOrder& vo, int v) {
  std::vector<int> out;
  for (int u : g.neighbors(v))
    if (vo.rank[u] > vo.rank[v]) out.push_back(u);
  return out;
}

struct TwoHopScratch {
  std::vector<int> mark;  // 0 free, 1 in N+(v) or v, 2 collected
};

// Vertices at distance exactly two from v through a later-ranked neighbor,
// themselves ranked after v; excludes v and N+(v). Ascending vertex id.
inline std::vector<int> two_hop_after(const Graph& g, const VertexOrder& vo, int v,
                                      TwoHopScratch* scratch = nullptr) {
  TwoHopScratch local;
  TwoHopScratch& sc = scratch ? *scratch : local;
  if (static_cast<int>(sc.mark.size()) < g.n) sc.mark.assign(g.n, 0);
  std::vector<int> np = neighbors_after(g, vo, v);
  sc.mark[v] = 1;
  for (int u : np) sc.mark[u] = 1;
  std::vector<int> out;
  for (int u : np)
    for (int x : g.neighbors(u))
      if (vo.rank[x] > vo.rank[v] && sc.mark[x] == 0) {
        sc.mark[x] = 2;
        out.push_back(x);
      }
  sc.mark[v] = 0;
  for (int u : np) sc.mark[u] = 0;
  for (int x : out) sc.mark[x] = 0;
  std::sort(out.begin(), out.end());
  return out;
}

struct SubgraphMap {
  Graph local;
  std::vector<int> to_global;  // local id -> original id, ascending
};

struct SubgraphScratch {
  std::vector<int> to_local;  // lazily sized, -1 outside current call
};

// Induced subgraph on vertex set s (must be sorted, unique). Local ids follow
// the ascending global order, so local adjacency lists stay sorted.
inline SubgraphMap induced_subgraph(const Graph& g, std::span<const int> s,
                                    SubgraphScratch* scratch = nullptr) {
  SubgraphScratch local_scratch;
  SubgraphScratch& sc = scratch ? *scratch : local_scratch;
  if (static_cast<int>(sc.to_local.size()) < g.n) sc.to_local.assign(g.n, -1);
  SubgraphMap out;
  out.to_global.assign(s.begin(), s.end());
  int ln = static_cast<int>(s.size());
  for (int i = 0; i < ln; i++) sc.to_local[s[i]] = i;
  Graph& sub = out.local;
  sub.n = ln;
  sub.off.assign(ln + 1, 0);
  for (int i = 0; i < ln; i++) {
    int cnt = 0;
    for (int x : g.neighbors(s[i]))
      if (sc.to_local[x] >= 0) cnt++;
    sub.off[i + 1] = sub.off[i] + cnt;
  }
  sub.adj.resize(sub.off[ln]);
  long long w = 0;
  for (int i = 0; i < ln; i++)
    for (int x : g.neighbors(s[i]))
      if (sc.to_local[x] >= 0) sub.adj[w++] = sc.to_local[x];
  sub.m = w / 2;
  for (int i = 0; i < ln; i++) sc.to_local[s[i]] = -1;
  return out;
}

// Common neighborhood of a non-empty vertex set; ascending vertex id.
inline std::vector<int> common_neighbors(const Graph& g, std::span<const int> s) {
  if (s.empty()) throw std::invalid_argument("common_neighbors: empty vertex set");
  auto nb = g.neighbors(s[0]);
  std::vector<int> cur(nb.begin(), nb.end());
  std::vector<int> next;
  for (size_t i = 1; i < s.size() && !cur.empty(); i++) {
    auto other = g.neighbors(s[i]);
    next.clear();
    std::set_intersection(cur.begin(), cur.end(), other.begin(), other.end(),
                          std::back_inserter(next));
    cur.swap(next);
  }
  return cur;
}

}  // namespace kdefect
