//
// distex - distance spectral extremal graph toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include <random>

#include "distex/distex.hpp"
#include "oracles.hpp"

using namespace distex;

TEST(Triangles, CountsAgreeWithScan) {
  EXPECT_EQ(triangle_count(complete_graph(4)), 4);
  EXPECT_EQ(triangle_count(mycielskian_triangle()), 4);
  EXPECT_EQ(triangle_count(moser()), 4);
  EXPECT_EQ(oracle::triangles(moser()), 4);
  std::mt19937_64 rng(79);
  for (int t = 0; t < 200; ++t) {
    Graph g = oracle::random_graph(1 + rng() % 12, 0.4, rng);
    EXPECT_EQ(triangle_count(g), oracle::triangles(g));
  }
}

TEST(Diamond, Edges) {
  EXPECT_EQ(diamond_edges(complete_graph(4)).size(), 6u);
  Graph m = moser();
  auto d = diamond_edges(m);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_NE(std::find(d.begin(), d.end(), Edge(m.at("a"), m.at("a'"))), d.end());
  EXPECT_NE(std::find(d.begin(), d.end(), Edge(m.at("b"), m.at("b'"))), d.end());
  EXPECT_TRUE(diamond_edges(path_graph(5)).empty());
}

TEST(Diamond, Expand) {
  const Graph k4 = complete_graph(4);
  for (const Edge& e : k4.edges())
    for (int variant = 0; variant < 2; ++variant) {
      Graph m = diamond_expand(k4, e, variant);
      EXPECT_EQ(m.order(), 7);
      EXPECT_EQ(m.size(), 11);
      EXPECT_TRUE(oracle::isomorphic(m, moser()));
    }
  const Graph m = moser();
  for (const Edge& e : diamond_edges(m)) {
    Graph t = diamond_expand(m, e);
    EXPECT_TRUE(is_isomorphic(t, t_graph()));
    EXPECT_FALSE(t.has_edge(e));
  }
  EXPECT_THROW(diamond_expand(m, Edge(m.at("c"), m.at("d"))), Error);
  try {
    diamond_expand(path_graph(3), {0, 1});
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotADiamondEdge);
  }
}

TEST(Diamond, ExpansionPreservesOtherTriangles) {
  std::mt19937_64 rng(83);
  for (int t = 0; t < 100; ++t) {
    Graph g = oracle::random_graph(4 + rng() % 6, 0.6, rng);
    auto d = diamond_edges(g);
    if (d.empty()) continue;
    const Edge e = d[rng() % d.size()];
    Graph h = diamond_expand(g, e);
    EXPECT_FALSE(h.has_edge(e));
    for (const auto& tri : triangles(g)) {
      bool meets = (tri[0] == e.u || tri[1] == e.u || tri[2] == e.u) &&
                   (tri[0] == e.v || tri[1] == e.v || tri[2] == e.v);
      if (meets) continue;
      EXPECT_TRUE(h.has_edge(tri[0], tri[1]) && h.has_edge(tri[1], tri[2]) &&
                  h.has_edge(tri[0], tri[2]));
    }
  }
}

TEST(Diamond, TWSequencesKeepFourTriangles) {
  // Every graph reachable from K4 by up to three diamond expansions.
  std::vector<Graph> layer{complete_graph(4)};
  for (int depth = 1; depth <= 3; ++depth) {
    std::vector<Graph> next;
    std::set<CanonicalForm> seen;
    for (const Graph& g : layer)
      for (const Edge& e : diamond_edges(g))
        for (int variant = 0; variant < 2; ++variant) {
          Graph h = diamond_expand(g, e, variant);
          if (seen.insert(canonical_form(h)).second) next.push_back(h);
        }
    ASSERT_FALSE(next.empty());
    for (const Graph& g : next) {
      EXPECT_EQ(triangle_count(g), 4);
      EXPECT_TRUE(planarity_test(g));
      EXPECT_TRUE(is_k_critical(g, 4));
    }
    layer = next;
  }
}

TEST(Havel, Expand) {
  const Graph k4 = complete_graph(4);
  Graph h = havel_expand(k4, {0, 1});
  EXPECT_EQ(h.order(), 10);
  EXPECT_EQ(h.size(), 16);
  EXPECT_FALSE(h.has_edge(0, 1));
  // Two vertex-disjoint triangles among the new vertices.
  std::vector<std::array<Vertex, 3>> fresh;
  for (const auto& t : triangles(h))
    if (t[0] >= 4 && t[1] >= 4 && t[2] >= 4) fresh.push_back(t);
  bool disjoint_pair = false;
  for (std::size_t i = 0; i < fresh.size(); ++i)
    for (std::size_t j = i + 1; j < fresh.size(); ++j) {
      std::set<Vertex> s(fresh[i].begin(), fresh[i].end());
      s.insert(fresh[j].begin(), fresh[j].end());
      disjoint_pair = disjoint_pair || s.size() == 6;
    }
  EXPECT_TRUE(disjoint_pair);
  EXPECT_EQ(chromatic_number(h).colors_used, 4);
  Graph three_k3 = disjoint_union(disjoint_union(complete_graph(3), complete_graph(3)),
                                  complete_graph(3));
  const Graph m = moser();
  for (const Edge& e : diamond_edges(m)) EXPECT_TRUE(contains_subgraph(three_k3, havel_expand(m, e)));
  EXPECT_THROW(havel_expand(m, Edge(m.at("c"), m.at("d"))), Error);
}

TEST(Patch, Expand) {
  const Graph k4 = complete_graph(4);
  for (Vertex v = 0; v < 4; ++v)
    for (int variant = 0; variant < 6; ++variant) {
      Graph q1 = patch_expand(k4, v, 1, variant);
      EXPECT_EQ(q1.order(), 7);
      EXPECT_TRUE(oracle::isomorphic(q1, mycielskian_triangle()));
      EXPECT_TRUE(is_isomorphic(patch_expand(k4, v, 2, variant), m_double_prime()));
    }
  Graph q3 = patch_expand(k4, 0, 3);
  EXPECT_EQ(q3.order(), 9);
  EXPECT_TRUE(planarity_test(q3));
  EXPECT_EQ(chromatic_number(q3).colors_used, 4);
  try {
    patch_expand(kite(4, 6), 0, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadDegree);
  }
  // The Moser spindle's degree-3 vertex off both diamond edges is d or c.
  const Graph m = moser();
  EXPECT_TRUE(is_isomorphic(patch_expand(m, m.at("d"), 1), moser_patch_expansion(1)) ||
              is_isomorphic(patch_expand(m, m.at("c"), 1), moser_patch_expansion(1)));
}

TEST(Patterns, Detectors) {
  EXPECT_TRUE(contains_triangular_grid(mycielskian_triangle()));
  EXPECT_FALSE(contains_triangular_grid(complete_graph(4)));
  EXPECT_TRUE(contains_triangular_grid(patch_expand(complete_graph(4), 0, 2)));
  EXPECT_FALSE(contains_fan(complete_graph(4)));
  EXPECT_TRUE(contains_fan(join(Graph(1), path_graph(4))));
  EXPECT_TRUE(contains_k2_join_e3(join(complete_graph(2), complement(complete_graph(3)))));
  EXPECT_FALSE(contains_k2_join_e3(moser()));
}

TEST(Cycles, CountsOnKnownGraphs) {
  EXPECT_EQ(count_simple_cycles(complete_graph(4)), 7);
  EXPECT_EQ(count_simple_cycles(complete_graph(5)), 37);
  EXPECT_EQ(count_simple_cycles(cycle_graph(9)), 1);
  EXPECT_EQ(count_simple_cycles(kite(4, 9)), 7);
  EXPECT_EQ(count_simple_cycles(saw(2, 1, 2)), 3);
  try {
    count_simple_cycles(complete_graph(9), 100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CycleBudgetExceeded);
  }
}

TEST(CactusTriple, Examples) {
  auto s = find_cactus_triple(saw(2, 1, 2));
  ASSERT_TRUE(s);
  EXPECT_TRUE(is_valid_cycle_triple(saw(2, 1, 2), *s));
  EXPECT_FALSE(find_cactus_triple(complete_graph(4)));
  auto t = find_cactus_triple(t_graph());
  ASSERT_TRUE(t);
  EXPECT_TRUE(is_valid_cycle_triple(t_graph(), *t));
  EXPECT_FALSE(find_cactus_triple(moser()));
  EXPECT_FALSE(find_cactus_triple(mycielskian_triangle()));
}

TEST(CactusTriple, WitnessesValidateOnRandomGraphs) {
  std::mt19937_64 rng(89);
  int found = 0;
  for (int t = 0; t < 150; ++t) {
    Graph g = oracle::random_connected(6 + rng() % 5, 0.25, rng);
    std::optional<CycleTriple> tr;
    try {
      tr = find_cactus_triple(g);
    } catch (const Error&) {
      continue;
    }
    if (!tr) continue;
    ++found;
    EXPECT_TRUE(is_valid_cycle_triple(g, *tr)) << encode_graph6(g);
  }
  EXPECT_GT(found, 0);
}

TEST(PropertyP, Examples) {
  for (int n = 8; n <= 12; ++n) EXPECT_TRUE(has_property_p(broom(6, n)));
  EXPECT_FALSE(has_property_p(complete_graph(4)));
  EXPECT_TRUE(has_property_p(moser_patch_expansion(1)));
  EXPECT_TRUE(has_property_p(moser_patch_expansion(2)));
  EXPECT_FALSE(has_property_p(moser()));
  EXPECT_FALSE(has_property_p(mycielskian_triangle()));
}

TEST(PropertyP, DegreeBranchIsMonotone) {
  // Adding a fifth edge at a degree-4 vertex always yields property P.
  std::mt19937_64 rng(97);
  for (int t = 0; t < 100; ++t) {
    Graph g = oracle::random_connected(7 + rng() % 4, 0.2, rng);
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.degree(v) != 4) continue;
      for (Vertex w = 0; w < g.order(); ++w) {
        if (w == v || g.has_edge(v, w)) continue;
        EXPECT_TRUE(has_property_p(add_edge(g, {v, w})));
        break;
      }
    }
  }
}

TEST(CorePlusPaths, Decomposes) {
  auto k = core_plus_paths(kite(4, 9));
  ASSERT_TRUE(k);
  EXPECT_TRUE(is_isomorphic(k->core, complete_graph(4)));
  ASSERT_EQ(k->attachments.size(), 1u);
  EXPECT_EQ(k->path_lengths[0], std::vector<int>{5});
  auto g = core_plus_paths(g1(2, 3));
  ASSERT_TRUE(g);
  EXPECT_TRUE(is_isomorphic(g->core, moser()));
  EXPECT_EQ(g->attachments.size(), 2u);
  EXPECT_TRUE(is_independent_set(g1(2, 3), g->attachments));
  EXPECT_FALSE(core_plus_paths(path_graph(5)));
  // A pendant star is not a path.
  EXPECT_FALSE(core_plus_paths(attach_path(attach_path(attach_path(complete_graph(3), 0, 1), 3, 1), 3, 1)));
}
