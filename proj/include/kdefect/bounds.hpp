#pragma once

// Upper bounds on the instance optimum, all of the shape |P| + (how many more
// vertices could still join). Every strategy works over V\P (vertices branched
// away stay eligible as clique material), ignores vertices whose weight
// already exceeds the slack, and charges a joining vertex u its weight
// w(u) = |P \ N(u)|, which is exactly the number of missing pairs u adds
// against P. The partition-based strategies share one greedy coloring of
// G[V\P] and differ in how much of the missing-pair budget they make each
// color class account for.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kdefect/graph.hpp"
#include "kdefect/model.hpp"

namespace kdefect {

enum class BoundKind { none, packing, coloring, sorting, club, dp, pcc };

inline const char* bound_name(BoundKind k) {
  switch (k) {
    case BoundKind::none: return "none";
    case BoundKind::packing: return "packing";
    case BoundKind::coloring: return "coloring";
    case BoundKind::sorting: return "sorting";
    case BoundKind::club: return "club";
    case BoundKind::dp: return "dp";
    case BoundKind::pcc: return "pcc";
  }
  return "?";
}

inline std::optional<BoundKind> parse_bound(std::string_view s) {
  for (BoundKind k : {BoundKind::none, BoundKind::packing, BoundKind::coloring, BoundKind::sorting,
                      BoundKind::club, BoundKind::dp, BoundKind::pcc})
    if (s == bound_name(k)) return k;
  return std::nullopt;
}

struct Partition {
  std::vector<std::vector<int>> classes;  // independent sets covering V\P, creation order
  int chi() const { return static_cast<int>(classes.size()); }
};

struct PartitionScratch {
  std::vector<int> class_of;
  std::vector<uint64_t> placed;       // build id when vertex was placed
  std::vector<uint64_t> class_mark;   // per-vertex mark of blocked classes
  uint64_t build_id = 0;
  uint64_t mark = 0;
};

// Greedy sequential coloring of G[V\P], scanning the universe's degeneracy
// order; each vertex takes the first class containing none of its neighbors.
inline void build_partition(const Instance& inst, Partition& part, PartitionScratch& sc) {
  int n = inst.n();
  for (auto& cls : part.classes) cls.clear();
  if (static_cast<int>(sc.class_of.size()) < n) {
    sc.class_of.assign(n, 0);
    sc.placed.assign(n, 0);
  }
  sc.build_id = ++sc.mark;
  uint64_t build_id = sc.build_id;
  const Graph& g = inst.graph();
  int used = 0;
  for (int v : inst.scan_order()) {
    if (inst.in_p(v)) continue;
    uint64_t vmark = ++sc.mark;
    for (int u : g.neighbors(v))
      if (sc.placed[u] == build_id) {
        int c = sc.class_of[u];
        if (static_cast<int>(sc.class_mark.size()) <= c) sc.class_mark.resize(c + 1, 0);
        sc.class_mark[c] = vmark;
      }
    int c = 0;
    while (c < used && c < static_cast<int>(sc.class_mark.size()) && sc.class_mark[c] == vmark)
      c++;
    if (c == used) {
      used++;
      if (static_cast<int>(part.classes.size()) < used) part.classes.emplace_back();
    }
    part.classes[c].push_back(v);
    sc.class_of[v] = c;
    sc.placed[v] = build_id;
  }
  if (static_cast<int>(part.classes.size()) > used) part.classes.resize(used);
}

inline Partition greedy_partition(const Instance& inst) {
  Partition part;
  PartitionScratch sc;
  build_partition(inst, part, sc);
  return part;
}

// --- simple strategies ------------------------------------------------------

// Cheapest-first packing: admit vertices by ascending weight while the total
// fits the slack.
inline int packing_bound(const Instance& inst) {
  int slack = inst.slack();
  std::vector<int> ws;
  for (int u = 0; u < inst.n(); u++) {
    if (inst.in_p(u)) continue;
    int w = inst.weight(u);
    if (w <= slack) ws.push_back(w);
  }
  std::sort(ws.begin(), ws.end());
  long long sum = 0;
  int cnt = 0;
  for (int w : ws) {
    sum += w;
    if (sum > slack) break;
    cnt++;
  }
  return inst.p_size() + cnt;
}

// Each color class is an independent set, so s of its members carry pairs(s)
// missing pairs among themselves; the class can contribute at most the largest
// s with pairs(s) <= k.
inline int class_cap(int k) {
  int s = 1;
  while (pairs_of(s + 1) <= k) s++;
  return s;
}

inline int coloring_bound(const Instance& inst, const Partition& part) {
  int slack = inst.slack();
  int cap = class_cap(inst.k());
  int total = 0;
  for (const auto& cls : part.classes) {
    int cnt = 0;
    for (int u : cls)
      if (inst.weight(u) <= slack) cnt++;
    total += std::min(cap, cnt);
  }
  return inst.p_size() + total;
}

// Weight inflation: the j-th cheapest member of a class is charged w + j - 1,
// accounting for the pairs it misses against the j - 1 classmates before it;
// then pack the inflated weights globally.
inline int sorting_bound(const Instance& inst, const Partition& part) {
  int slack = inst.slack();
  std::vector<int> inflated;
  std::vector<std::pair<int, int>> members;
  for (const auto& cls : part.classes) {
    members.clear();
    for (int u : cls) {
      int w = inst.weight(u);
      if (w <= slack) members.emplace_back(w, u);
    }
    std::sort(members.begin(), members.end());
    for (size_t j = 0; j < members.size(); j++)
      inflated.push_back(members[j].first + static_cast<int>(j));
  }
  std::sort(inflated.begin(), inflated.end());
  long long sum = 0;
  int cnt = 0;
  for (int w : inflated) {
    sum += w;
    if (sum > slack) break;
    cnt++;
  }
  return inst.p_size() + cnt;
}

// Bucket variant: vertices of equal weight are grouped, each bucket colored
// greedily with chi_i classes, and the j-th member (weight-then-id order) pays
// an extra floor(j / chi_i); then pack globally.
inline int club_bound(const Instance& inst) {
  int slack = inst.slack();
  const Graph& g = inst.graph();
  std::vector<std::vector<int>> buckets(slack + 1);
  for (int u = 0; u < inst.n(); u++) {
    if (inst.in_p(u)) continue;
    int w = inst.weight(u);
    if (w <= slack) buckets[w].push_back(u);  // ascending id by construction
  }
  std::vector<int> inflated;
  std::vector<std::vector<int>> classes;
  for (int w = 0; w <= slack; w++) {
    const auto& bucket = buckets[w];
    if (bucket.empty()) continue;
    classes.clear();
    for (int v : bucket) {
      size_t c = 0;
      for (; c < classes.size(); c++) {
        bool clash = false;
        for (int u : classes[c])
          if (g.adjacent(u, v)) {
            clash = true;
            break;
          }
        if (!clash) break;
      }
      if (c == classes.size()) classes.emplace_back();
      classes[c].push_back(v);
    }
    int chi = static_cast<int>(classes.size());
    for (size_t j = 0; j < bucket.size(); j++)
      inflated.push_back(w + static_cast<int>(j) / chi);
  }
  std::sort(inflated.begin(), inflated.end());
  long long sum = 0;
  int cnt = 0;
  for (int w : inflated) {
    sum += w;
    if (sum > slack) break;
    cnt++;
  }
  return inst.p_size() + cnt;
}

// --- dynamic-programming strategies ----------------------------------------

// t[i][r]: most vertices class i can contribute with r budget; f[i][r]: most
// the first i+1 classes can contribute splitting r among them.
struct DpTables {
  int chi = 0;
  int budget = 0;
  std::vector<std::vector<int>> t, f;
  int total() const { return chi == 0 ? 0 : f[chi - 1][budget]; }
};

namespace detail {

// Shared DP over per-class cost profiles. costs[i][j] = cheapest total budget
// that lets class i contribute j vertices (non-decreasing in j).
inline DpTables run_dp(int budget, const std::vector<std::vector<long long>>& costs) {
  DpTables out;
  out.chi = static_cast<int>(costs.size());
  out.budget = budget;
  out.t.assign(out.chi, std::vector<int>(budget + 1, 0));
  for (int i = 0; i < out.chi; i++) {
    int j = 0;
    int limit = static_cast<int>(costs[i].size()) - 1;
    for (int r = 0; r <= budget; r++) {
      while (j < limit && costs[i][j + 1] <= r) j++;
      out.t[i][r] = j;
    }
  }
  if (out.chi > 0) {
    out.f.assign(out.chi, std::vector<int>(budget + 1, 0));
    out.f[0] = out.t[0];
    for (int i = 1; i < out.chi; i++)
      for (int r = 0; r <= budget; r++) {
        int best = 0;
        for (int rp = 0; rp <= r; rp++) best = std::max(best, out.f[i - 1][rp] + out.t[i][r - rp]);
        out.f[i][r] = best;
      }
  }
  return out;
}

}  // namespace detail

// Exact per-class packing: j vertices of one class cost pairs(j) for their
// internal missing pairs plus their j smallest weights.
inline DpTables dp_tables(const Instance& inst, const Partition& part) {
  int budget = inst.slack();
  std::vector<std::vector<long long>> costs;
  costs.reserve(part.classes.size());
  std::vector<int> ws;
  for (const auto& cls : part.classes) {
    ws.clear();
    for (int u : cls) {
      int w = inst.weight(u);
      if (w <= budget) ws.push_back(w);
    }
    std::sort(ws.begin(), ws.end());
    std::vector<long long> cost(ws.size() + 1, 0);
    long long pref = 0;
    for (size_t j = 0; j < ws.size(); j++) {
      pref += ws[j];
      cost[j + 1] = pairs_of(static_cast<long long>(j) + 1) + pref;
    }
    costs.push_back(std::move(cost));
  }
  return detail::run_dp(budget, costs);
}

inline int dp_bound(const Instance& inst, const Partition& part) {
  return inst.p_size() + dp_tables(inst, part).total();
}

// --- conflict-aware variant -------------------------------------------------

// Two vertices conflict when no solution larger than lb can hold both. The
// first three rules are structural; the last two count common neighborhood
// against what the budget leaves room for.
class ConflictOracle {
 public:
  ConflictOracle(const Instance& inst, int lb) : inst_(&inst), lb_(lb) {}

  int lb() const { return lb_; }

  bool conflict(int u, int v) const {
    if (u > v) std::swap(u, v);
    uint64_t key = (static_cast<uint64_t>(u) << 32) | static_cast<uint32_t>(v);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second != 0;
    bool c = compute(u, v);
    memo_.emplace(key, c ? 1 : 0);
    return c;
  }

 private:
  bool compute(int u, int v) const {
    const Instance& I = *inst_;
    const Graph& g = I.graph();
    // the rules reason about u and v joining P together; for a pair that
    // touches P the weights degenerate, so claim nothing
    if (I.in_p(u) || I.in_p(v)) return false;
    bool adj = g.adjacent(u, v);
    if (!adj) {
      // a branched-away vertex can only re-enter adjacent to everything
      if (I.excluded(u) || I.excluded(v)) return true;
    }
    int wu = I.weight(u), wv = I.weight(v);
    int e = adj ? 0 : 1;
    if (I.slack() - wu - wv - e < 0) return true;
    // every further member either shares both neighborhoods or burns budget
    int cn = 0;
    auto nu = g.neighbors(u), nv = g.neighbors(v);
    size_t i = 0, j = 0;
    while (i < nu.size() && j < nv.size()) {
      if (nu[i] < nv[j])
        i++;
      else if (nu[i] > nv[j])
        j++;
      else {
        if (!I.in_p(nu[i])) cn++;
        i++;
        j++;
      }
    }
    int thr = lb_ - (I.p_size() + I.slack() - wu - wv + 2 - e);
    return cn <= thr;
  }

  const Instance* inst_;
  int lb_;
  mutable std::unordered_map<uint64_t, uint8_t> memo_;
};

// Evaluates (and caches) the given pairs up front; later queries stay lazy.
inline ConflictOracle build_conflicts(const Instance& inst, int lb,
                                      const std::vector<std::pair<int, int>>& pairs) {
  ConflictOracle oracle(inst, lb);
  for (auto [u, v] : pairs) oracle.conflict(u, v);
  return oracle;
}

// Conflict-aware DP. Each class is peeled into layers of mutually conflicting
// vertices: a solution can use at most one vertex per layer, so j vertices of
// the class cost at least pairs(j) plus the j smallest layer minima.
template <class ConflictFn>
DpTables pcc_tables(const Instance& inst, const Partition& part, ConflictFn&& conflict) {
  int budget = inst.slack();
  std::vector<std::vector<long long>> costs;
  costs.reserve(part.classes.size());
  std::vector<std::pair<int, int>> members;
  std::vector<std::pair<int, int>> layer, rest;
  for (const auto& cls : part.classes) {
    members.clear();
    for (int u : cls) {
      int w = inst.weight(u);
      if (w <= budget) members.emplace_back(w, u);
    }
    std::sort(members.begin(), members.end());
    std::vector<long long> cost(1, 0);
    long long pref = 0;
    while (!members.empty()) {
      layer.clear();
      rest.clear();
      for (const auto& mv : members) {
        bool all = true;
        for (const auto& mu : layer)
          if (!conflict(mu.second, mv.second)) {
            all = false;
            break;
          }
        if (layer.empty() || all)
          layer.push_back(mv);
        else
          rest.push_back(mv);
      }
      pref += layer.front().first;  // layer minimum: first member by (w, id)
      cost.push_back(pairs_of(static_cast<long long>(cost.size())) + pref);
      members.swap(rest);
    }
    costs.push_back(std::move(cost));
  }
  return detail::run_dp(budget, costs);
}

template <class ConflictFn>
int pack_color_conf(const Instance& inst, const Partition& part, ConflictFn&& conflict) {
  return inst.p_size() + pcc_tables(inst, part, conflict).total();
}

inline int pack_color_conf(const Instance& inst, int lb, const Partition& part) {
  ConflictOracle oracle(inst, lb);
  return pack_color_conf(inst, part, [&](int u, int v) { return oracle.conflict(u, v); });
}

// --- per-node evaluator ------------------------------------------------------

// Reusable strategy dispatcher; owns the partition scratch so per-node bound
// evaluation allocates as little as possible.
class BoundEvaluator {
 public:
  explicit BoundEvaluator(BoundKind kind) : kind_(kind) {}

  BoundKind kind() const { return kind_; }

  int operator()(const Instance& inst, int lb) {
    switch (kind_) {
      case BoundKind::none:
        return std::numeric_limits<int>::max();
      case BoundKind::packing:
        return packing_bound(inst);
      case BoundKind::club:
        return club_bound(inst);
      default:
        break;
    }
    build_partition(inst, part_, scratch_);
    switch (kind_) {
      case BoundKind::coloring:
        return coloring_bound(inst, part_);
      case BoundKind::sorting:
        return sorting_bound(inst, part_);
      case BoundKind::dp:
        return dp_bound(inst, part_);
      case BoundKind::pcc:
        return pack_color_conf(inst, lb, part_);
      default:
        return std::numeric_limits<int>::max();
    }
  }

 private:
  BoundKind kind_;
  Partition part_;
  PartitionScratch scratch_;
};

}  // namespace kdefect
