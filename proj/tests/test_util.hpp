#pragma once

// Shared fixtures and small builders for the test suites.

#include <initializer_list>
#include <memory>
#include <utility>
#include <vector>

#include "kdefect/graph.hpp"
#include "kdefect/model.hpp"

namespace testutil {

inline kdefect::Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  return kdefect::from_edges(n, std::vector<std::pair<int, int>>(edges));
}

inline kdefect::Graph complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++) edges.emplace_back(u, v);
  return kdefect::from_edges(n, edges);
}

inline kdefect::Graph cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; u++) edges.emplace_back(u, (u + 1) % n);
  return kdefect::from_edges(n, edges);
}

inline kdefect::Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u + 1 < n; u++) edges.emplace_back(u, u + 1);
  return kdefect::from_edges(n, edges);
}

inline kdefect::Graph empty_graph(int n) { return kdefect::from_edges(n, {}); }

// Six-vertex k=1 worked example. Vertices 0..5 stand for v1..v6.
// {0,1,2,3} is 1-defective with defective part {0,1}; the common neighborhood
// of {0,1} is {2,3,4}; the optimum at k=1 is {0,1,2,3,4}.
inline kdefect::Graph fig_k1_graph() {
  return make_graph(6, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4},
                        {2, 3}, {2, 4}, {3, 4}});
}

// Budget-split worked example for the DP bounds: committed triangle {0,1,2},
// k=5, and two color classes {3,4,5,6} (weights 0,0,1,3) and {7,8,9,10}
// (weights 0,0,0,1); the classes form a biclique so the greedy partition
// recovers exactly these two classes.
inline kdefect::Graph dp_fixture_graph() {
  std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {1, 2}};
  auto adj_p = [&](int v, std::initializer_list<int> ps) {
    for (int p : ps) edges.emplace_back(p, v);
  };
  adj_p(3, {0, 1, 2});
  adj_p(4, {0, 1, 2});
  adj_p(5, {0, 1});
  // 6: none
  adj_p(7, {0, 1, 2});
  adj_p(8, {0, 1, 2});
  adj_p(9, {0, 1, 2});
  adj_p(10, {0, 1});
  for (int a : {3, 4, 5, 6})
    for (int b : {7, 8, 9, 10}) edges.emplace_back(a, b);
  return kdefect::from_edges(11, edges);
}

struct DpFixture {
  std::unique_ptr<kdefect::Graph> g;
  std::unique_ptr<kdefect::Instance> inst;
};

inline DpFixture dp_fixture() {
  DpFixture f;
  f.g = std::make_unique<kdefect::Graph>(dp_fixture_graph());
  f.inst = std::make_unique<kdefect::Instance>(*f.g, 5);
  f.inst->include(0);
  f.inst->include(1);
  f.inst->include(2);
  return f;
}

}  // namespace testutil
