//
// distex - distance spectral extremal graph toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include "distex/distex.hpp"
#include "oracles.hpp"

using namespace distex;

TEST(Kite, Shape) {
  EXPECT_EQ(kite(4, 4).edges(), complete_graph(4).edges());
  for (int n = 5; n <= 20; ++n) {
    Graph k = kite(4, n);
    EXPECT_EQ(k.order(), n);
    EXPECT_EQ(k.size(), 6 + n - 4);
    int leaves = 0;
    for (Vertex v = 0; v < n; ++v) leaves += k.degree(v) == 1;
    EXPECT_EQ(leaves, 1);
    EXPECT_TRUE(contains_subgraph(complete_graph(4), k));
    EXPECT_FALSE(contains_subgraph(complete_graph(5), k));
    EXPECT_TRUE(is_isomorphic(kite(3, n), saw(1, 0, n - 3)));
  }
  EXPECT_THROW(kite(4, 3), Error);
  EXPECT_THROW(kite(1, 3), Error);
}

TEST(Kite, FigureLabels) {
  Graph k = kite(4, 9);
  EXPECT_EQ(k.label(0), "v2");
  EXPECT_EQ(k.label(1), "v1");
  EXPECT_EQ(k.at("v8"), 2);
  EXPECT_EQ(k.at("v9"), 3);
  EXPECT_TRUE(k.has_edge(k.at("v2"), k.at("v3")));
  EXPECT_TRUE(k.has_edge(k.at("v6"), k.at("v7")));
}

TEST(Saw, OrderSizeAndCactus) {
  for (int p = 0; p <= 5; ++p)
    for (int q = 0; q <= 5; ++q)
      for (int l = 0; l <= 5; ++l) {
        if (p + q == 0) continue;
        Graph s = saw(p, q, l);
        EXPECT_EQ(s.order(), 2 * p + 2 * q + l + 1);
        EXPECT_EQ(s.size(), 3 * p + 3 * q + l);
        EXPECT_TRUE(oracle::cactus(s));
        EXPECT_EQ(cyclomatic_number(s), p + q);
        EXPECT_EQ(oracle::triangles(s), p + q);
        EXPECT_TRUE(is_connected(s));
      }
  EXPECT_THROW(saw(0, 0, 3), Error);
  EXPECT_THROW(saw(-1, 1, 0), Error);
  EXPECT_TRUE(is_isomorphic(saw(1, 0, 4), kite(3, 7)));
}

TEST(Broom, Shape) {
  for (int n = 3; n <= 20; ++n)
    for (int d = 2; d < n; ++d) {
      Graph b = broom(d, n);
      EXPECT_EQ(b.order(), n);
      EXPECT_TRUE(is_tree(b));
      EXPECT_EQ(b.max_degree(), n == 3 && d == 2 ? 2 : d);
    }
  EXPECT_TRUE(is_isomorphic(broom(2, 9), path_graph(9)));
  EXPECT_THROW(broom(5, 5), Error);
  Graph b = broom(5, 10);
  EXPECT_EQ(b.degree(b.at("v3")), 5);
  for (const char* leaf : {"v1", "v2", "v9", "v10"}) EXPECT_EQ(b.degree(b.at(leaf)), 1);
}

TEST(Figures, OrdersAndSizes) {
  struct Row {
    Graph g;
    int order, size;
  };
  const Row rows[] = {{moser(), 7, 11},          {mycielskian_triangle(), 7, 12},
                      {havel_quasi_edge(), 8, 11}, {triangular_grid(), 6, 9},
                      {diamond(), 4, 5},          {tailed_diamond(), 5, 6},
                      {t_graph(), 10, 16},        {m_double_prime(), 8, 14}};
  for (const auto& r : rows) {
    EXPECT_EQ(r.g.order(), r.order) << r.g.name();
    EXPECT_EQ(r.g.size(), r.size) << r.g.name();
  }
}

TEST(Figures, CriticalPlanarCores) {
  for (const Graph& g : {moser(), mycielskian_triangle(), m_double_prime()}) {
    EXPECT_TRUE(planarity_test(g)) << g.name();
    EXPECT_EQ(oracle::chromatic(g), 4) << g.name();
  }
  EXPECT_TRUE(is_k_critical(moser(), 4));
  EXPECT_TRUE(is_k_critical(mycielskian_triangle(), 4));
  // Q2 leaves r with degree 2, so M'' is 4-chromatic but not critical.
  EXPECT_EQ(m_double_prime().degree(m_double_prime().at("r")), 2);
  EXPECT_FALSE(is_k_critical(m_double_prime(), 4));
  // H0 acts as an edge: u and v differ in every 3-colouring, so gluing
  // them together is not 3-colourable.
  Graph h = havel_quasi_edge();
  const Vertex u = h.at("u"), v = h.at("v");
  EXPECT_EQ(oracle::chromatic(h), 3);
  EXPECT_EQ(oracle::chromatic(add_edge(h, {u, v})), 3);
  std::vector<Edge> merged;
  for (const Edge& e : h.edges()) {
    Vertex a = e.u == v ? u : e.u, b = e.v == v ? u : e.v;
    if (a != b) merged.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  EXPECT_EQ(oracle::chromatic(Graph(h.order(), merged)), 4);
}

TEST(Figures, TGraphContainsTwoTrianglesAndSquare) {
  Graph pattern = disjoint_union(disjoint_union(complete_graph(3), complete_graph(3)),
                                 cycle_graph(4));
  EXPECT_TRUE(contains_subgraph(pattern, t_graph()));
}

TEST(Tailed, G1G2) {
  EXPECT_EQ(g1(0, 0).edges(), moser().edges());
  for (int t = 0; t <= 5; ++t)
    for (int k = 0; k <= 5; ++k) {
      Graph a = g1(t, k), b = g2(t, k);
      EXPECT_EQ(a.order(), 7 + t + k);
      EXPECT_EQ(b.order(), 7 + t + k);
      EXPECT_EQ(a.size(), 11 + t + k);
      EXPECT_TRUE(is_isomorphic(induced_subgraph(a, std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6}),
                                moser()));
    }
  Graph a = g1(2, 3);
  EXPECT_TRUE(a.has_edge(a.at("a"), a.at("u1")));
  EXPECT_TRUE(a.has_edge(a.at("c"), a.at("v1")));
  Graph b = g2(1, 1);
  EXPECT_TRUE(b.has_edge(b.at("b"), b.at("v1")));
  Graph m = moser();
  std::vector<Vertex> ac{m.at("a"), m.at("c")};
  std::vector<Vertex> ab{m.at("a"), m.at("b")};
  EXPECT_TRUE(is_independent_set(m, ac));
  EXPECT_TRUE(is_independent_set(m, ab));
}

TEST(Tailed, MPrime) {
  EXPECT_TRUE(is_isomorphic(m1_prime(1, 1, 1), mycielskian_triangle()));
  EXPECT_TRUE(is_isomorphic(m2_prime(7), mycielskian_triangle()));
  for (int n = 7; n <= 20; ++n) {
    EXPECT_EQ(m2_prime(n).order(), n);
    EXPECT_EQ(m2_prime(n).size(), 12 + n - 7);
  }
  for (int r = 1; r <= 4; ++r)
    for (int s = 1; s <= 4; ++s)
      for (int t = 1; t <= 4; ++t) EXPECT_EQ(m1_prime(r, s, t).order(), 4 + r + s + t);
  EXPECT_THROW(m1_prime(0, 1, 1), Error);
  EXPECT_THROW(m2_prime(6), Error);
}

TEST(Tailed, MultiTailAndTwoPaths) {
  for (int n = 4; n <= 12; ++n)
    EXPECT_TRUE(is_isomorphic(multi_tail_kite({n - 4}), kite(4, n)));
  EXPECT_EQ(multi_tail_kite({2, 3}).order(), 9);
  EXPECT_THROW(multi_tail_kite({1, 1, 1, 1}), Error);
  EXPECT_TRUE(is_isomorphic(attach_two_paths(Graph(1), 0, 1, 1), path_graph(3)));
  for (int a = 0; a <= 5; ++a)
    EXPECT_TRUE(is_isomorphic(attach_two_paths(complete_graph(4), 0, a, 0), kite(4, 4 + a)));
  EXPECT_THROW(attach_two_paths(complete_graph(4), 4, 1, 1), Error);
}

TEST(Patterns, Small) {
  EXPECT_TRUE(is_isomorphic(wheel(5), join(Graph(1), cycle_graph(5))));
  EXPECT_EQ(fan_graph().size(), 7);
  EXPECT_EQ(k2_join_e3().order(), 5);
  EXPECT_EQ(k2_join_e3().size(), 7);
  EXPECT_TRUE(is_k_critical(wheel(5), 4));
}

TEST(Patches, Boundary) {
  for (int q = 1; q <= 3; ++q) {
    Graph p = patch_q(q);
    for (Vertex v = 0; v < 6; ++v) EXPECT_TRUE(p.has_edge(v, (v + 1) % 6));
    EXPECT_TRUE(planarity_test(p));
  }
  EXPECT_EQ(patch_q(1).label(0), "x");
  EXPECT_EQ(patch_q(1).label(1), "z'");
  EXPECT_THROW(patch_q(4), Error);
  EXPECT_TRUE(is_k_critical(moser_patch_expansion(1), 4));
  EXPECT_EQ(oracle::chromatic(moser_patch_expansion(2)), 4);
  EXPECT_FALSE(is_k_critical(moser_patch_expansion(2), 4));
}

TEST(Spec, ParseAndBuild) {
  EXPECT_TRUE(is_isomorphic(build_family("kite(4,10)"), kite(4, 10)));
  EXPECT_TRUE(is_isomorphic(build_family(" saw( 2 , 1 , 3 ) "), saw(2, 1, 3)));
  EXPECT_TRUE(is_isomorphic(build_family("moser"), moser()));
  EXPECT_TRUE(is_isomorphic(build_family("multi_tail_kite(1,2)"), multi_tail_kite({1, 2})));
  for (const auto& name : family_names()) EXPECT_FALSE(name.empty());
  auto offset_of = [](std::string_view text) -> std::size_t {
    try {
      parse_family_spec(text);
    } catch (const ParseError& e) {
      return e.offset();
    }
    return std::string_view::npos;
  };
  EXPECT_EQ(offset_of("kite(4,"), 7u);
  EXPECT_EQ(offset_of("kite(4;5)"), 6u);
  EXPECT_EQ(offset_of("nosuch(1)"), 0u);
  EXPECT_EQ(offset_of("kite(4,5)x"), 9u);
  EXPECT_THROW(build_family("kite(4)"), Error);
}
