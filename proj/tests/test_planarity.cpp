//
// distex - distance spectral extremal graph toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "distex/distex.hpp"
#include "oracles.hpp"

using namespace distex;

namespace {

// Brute-force planarity: G is nonplanar iff some subgraph, after pruning
// leaves and smoothing degree-2 vertices, is K5 or K3,3. Subgraphs are
// explored by edge deletion, memoised on canonical form.
bool brute_nonplanar(const Graph& g, std::set<CanonicalForm>& seen) {
  if (!seen.insert(canonical_form(g)).second) return false;
  // Drop isolated and degree-1 vertices and smooth degree-2 vertices.
  std::vector<Edge> edges = g.edges();
  int n = g.order();
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> deg(n, 0);
    for (const Edge& e : edges) ++deg[e.u], ++deg[e.v];
    for (int v = 0; v < n && !changed; ++v) {
      if (deg[v] == 1) {
        edges.erase(std::remove_if(edges.begin(), edges.end(),
                                   [&](const Edge& e) { return e.contains(v); }),
                    edges.end());
        changed = true;
      } else if (deg[v] == 2) {
        std::vector<Vertex> nb;
        for (const Edge& e : edges)
          if (e.contains(v)) nb.push_back(e.other(v));
        if (std::find(edges.begin(), edges.end(), Edge(nb[0], nb[1])) != edges.end()) continue;
        edges.erase(std::remove_if(edges.begin(), edges.end(),
                                   [&](const Edge& e) { return e.contains(v); }),
                    edges.end());
        edges.emplace_back(nb[0], nb[1]);
        changed = true;
      }
    }
  }
  std::vector<int> deg(n, 0);
  for (const Edge& e : edges) ++deg[e.u], ++deg[e.v];
  std::vector<Vertex> live;
  for (int v = 0; v < n; ++v)
    if (deg[v] > 0) live.push_back(v);
  if (live.empty()) return false;
  std::vector<int> index(n, -1);
  for (std::size_t i = 0; i < live.size(); ++i) index[live[i]] = static_cast<int>(i);
  std::vector<Edge> compact;
  for (const Edge& e : edges) compact.emplace_back(index[e.u], index[e.v]);
  Graph h(static_cast<int>(live.size()), compact);
  if (h.order() == 5 && h.size() == 10) return true;
  if (h.order() == 6 && h.size() == 9 && oracle::isomorphic(h, complete_bipartite_graph(3, 3)))
    return true;
  for (const Edge& e : h.edges())
    if (brute_nonplanar(delete_edge(h, e), seen)) return true;
  return false;
}

bool brute_planar(const Graph& g) {
  std::set<CanonicalForm> seen;
  return !brute_nonplanar(g, seen);
}

}  // namespace

TEST(Planarity, Examples) {
  EXPECT_TRUE(is_planar(complete_graph(4)).planar);
  auto k5 = is_planar(complete_graph(5));
  EXPECT_FALSE(k5.planar);
  ASSERT_TRUE(k5.witness);
  EXPECT_TRUE(is_kuratowski_subdivision(5, *k5.witness));
  EXPECT_FALSE(planarity_test(complete_bipartite_graph(3, 3)));
  EXPECT_TRUE(planarity_test(moser()));
  EXPECT_TRUE(planarity_test(mycielskian_triangle()));
  EXPECT_TRUE(planarity_test(t_graph()));
  EXPECT_TRUE(planarity_test(Graph(4)));
  // Petersen graph.
  Graph petersen(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8},
                      {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  auto pv = is_planar(petersen);
  EXPECT_FALSE(pv.planar);
  ASSERT_TRUE(pv.witness);
  EXPECT_TRUE(is_kuratowski_subdivision(10, *pv.witness));
}

TEST(Planarity, GridsAndWheelsArePlanar) {
  for (int r = 3; r <= 12; ++r) EXPECT_TRUE(planarity_test(wheel(r)));
  std::vector<Edge> grid;
  const int w = 7;
  for (int i = 0; i < w; ++i)
    for (int j = 0; j < w; ++j) {
      if (j + 1 < w) grid.emplace_back(i * w + j, i * w + j + 1);
      if (i + 1 < w) grid.emplace_back(i * w + j, (i + 1) * w + j);
      if (i + 1 < w && j + 1 < w) grid.emplace_back(i * w + j, (i + 1) * w + j + 1);
    }
  EXPECT_TRUE(planarity_test(Graph(w * w, grid)));
}

TEST(Planarity, AgreesWithBruteForce) {
  std::mt19937_64 rng(71);
  int nonplanar = 0;
  for (int t = 0; t < 500; ++t) {
    const int n = 5 + rng() % 3;
    Graph g = oracle::random_graph(n, 0.55 + 0.25 * (t % 3) / 2.0, rng);
    const bool fast = planarity_test(g);
    ASSERT_EQ(fast, brute_planar(g)) << encode_graph6(g);
    nonplanar += !fast;
    auto v = is_planar(g);
    EXPECT_EQ(v.planar, fast);
    if (!fast) {
      ASSERT_TRUE(v.witness);
      EXPECT_TRUE(is_kuratowski_subdivision(n, *v.witness));
      for (const Edge& e : *v.witness) EXPECT_TRUE(g.has_edge(e));
    }
  }
  EXPECT_GT(nonplanar, 50);
}

TEST(Planarity, EdgeBound) {
  std::mt19937_64 rng(73);
  for (int t = 0; t < 200; ++t) {
    Graph g = oracle::random_graph(3 + rng() % 12, 0.5, rng);
    if (planarity_test(g)) { EXPECT_LE(g.size(), 3 * g.order() - 6); }
  }
}

TEST(Kuratowski, RejectsNonWitnesses) {
  EXPECT_FALSE(is_kuratowski_subdivision(4, complete_graph(4).edges()));
  EXPECT_TRUE(is_kuratowski_subdivision(6, complete_bipartite_graph(3, 3).edges()));
  // Subdivide one K3,3 edge.
  auto edges = complete_bipartite_graph(3, 3).edges();
  edges.erase(edges.begin());
  const Edge first = complete_bipartite_graph(3, 3).edges().front();
  edges.emplace_back(first.u, 6);
  edges.emplace_back(6, first.v);
  EXPECT_TRUE(is_kuratowski_subdivision(7, edges));
  auto extra = edges;
  extra.emplace_back(0, 1);
  EXPECT_FALSE(is_kuratowski_subdivision(7, extra));
}
