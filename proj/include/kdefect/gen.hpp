#pragma once

// Seeded random inputs for the property suites and the bounds-compare random
// mode. Everything funnels through one mt19937 so a seed pins the whole run.

#include <memory>
#include <random>
#include <vector>

#include "kdefect/graph.hpp"
#include "kdefect/model.hpp"

namespace kdefect {

inline Graph er_graph(int n, double p, std::mt19937& rng) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++)
      if (coin(rng) < p) edges.emplace_back(u, v);
  return from_edges(n, edges);
}

inline double pick_density(std::mt19937& rng) {
  static const double ps[] = {0.2, 0.35, 0.5, 0.65, 0.8};
  return ps[std::uniform_int_distribution<int>(0, 4)(rng)];
}

// A random instance: G(n, p) with n in [6, max_n], k in [0, 4], a committed
// set of up to three vertices that keeps the slack non-negative, and up to two
// vertices branched away.
struct RandomInstance {
  std::unique_ptr<Graph> g;
  std::unique_ptr<Instance> inst;
};

inline RandomInstance random_instance(std::mt19937& rng, int max_n = 14) {
  RandomInstance out;
  int n = std::uniform_int_distribution<int>(6, max_n)(rng);
  out.g = std::make_unique<Graph>(er_graph(n, pick_density(rng), rng));
  int k = std::uniform_int_distribution<int>(0, 4)(rng);
  out.inst = std::make_unique<Instance>(*out.g, k);
  int want_p = std::uniform_int_distribution<int>(0, 3)(rng);
  for (int t = 0; t < want_p; t++) {
    int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
    if (out.inst->in_r(v) && out.inst->slack_after_add(v) >= 0) out.inst->include(v);
  }
  int want_x = std::uniform_int_distribution<int>(0, 2)(rng);
  for (int t = 0; t < want_x; t++) {
    int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
    if (out.inst->in_r(v)) out.inst->exclude(v);
  }
  return out;
}

}  // namespace kdefect
