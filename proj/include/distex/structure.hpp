//
// distex - distance spectral extremal graph toolkit
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "distex/coloring.hpp"
#include "distex/embedding.hpp"
#include "distex/error.hpp"
#include "distex/families.hpp"
#include "distex/graph.hpp"

namespace distex {

inline constexpr int kDefaultCycleCap = 10000;

// ---------------------------------------------------------------------------
// Triangles and diamond edges

inline std::vector<std::array<Vertex, 3>> triangles(const Graph& g) {
  std::vector<std::array<Vertex, 3>> out;
  for (const Edge& e : g.edges())
    for (Vertex w : g.neighbors(e.v))
      if (w > e.v && g.has_edge(e.u, w)) out.push_back({e.u, e.v, w});
  return out;
}

inline int triangle_count(const Graph& g) {
  return static_cast<int>(triangles(g).size());
}

/// Number of triangles through the edge uv.
inline int edge_triangle_count(const Graph& g, Edge e) {
  int c = 0;
  for (Vertex w : g.neighbors(e.u))
    if (w != e.v && g.has_edge(e.v, w)) ++c;
  return c;
}

/// Edges lying in exactly two triangles.
inline std::vector<Edge> diamond_edges(const Graph& g) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges())
    if (edge_triangle_count(g, e) == 2) out.push_back(e);
  return out;
}

// ---------------------------------------------------------------------------
// Expansions

namespace detail {

inline void require_diamond_edge(const Graph& g, Edge e) {
  g.check_vertex(e.u);
  g.check_vertex(e.v);
  if (!g.has_edge(e) || edge_triangle_count(g, e) != 2) {
    throw Error(ErrorKind::NotADiamondEdge,
                std::to_string(e.u) + "-" + std::to_string(e.v) +
                    " is not a diamond edge");
  }
}

// Replaces the edge xy by a copy of `gadget` glued with gadget vertex gx on
// x and gy on y. New vertices keep the gadget's order.
inline Graph glue_on_edge(const Graph& g, Vertex x, Vertex y, const Graph& gadget,
                          Vertex gx, Vertex gy, const std::string& name) {
  std::vector<Vertex> map(gadget.order(), -1);
  map[gx] = x;
  map[gy] = y;
  Vertex next = g.order();
  std::vector<std::string> labels = g.labels();
  const bool labelled = !labels.empty();
  for (Vertex v = 0; v < gadget.order(); ++v) {
    if (map[v] >= 0) continue;
    map[v] = next++;
    if (labelled) labels.push_back(gadget.label(v) + "*");
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (!(e == Edge(x, y))) edges.push_back(e);
  for (const Edge& e : gadget.edges()) edges.emplace_back(map[e.u], map[e.v]);
  Graph out(next, edges, name);
  return labelled ? out.with_labels(labels) : out;
}

}  // namespace detail

/// Deletes the diamond edge xy and glues a tailed diamond with its leaf on
/// x and its degree-2 vertex on y (variant 1 swaps x and y): three new
/// vertices w, p, q with edges xw, wp, wq, pq, py, qy.
inline Graph diamond_expand(const Graph& g, Edge e, int variant = 0) {
  detail::require_diamond_edge(g, e);
  Vertex x = e.u, y = e.v;
  if (variant == 1) std::swap(x, y);
  const Graph td = tailed_diamond();
  return detail::glue_on_edge(g, x, y, td, td.at("t"), td.at("v1"),
                              g.name().empty() ? "" : g.name() + "+diamond");
}

/// Deletes the diamond edge xy and glues Havel's quasi-edge with u on x and
/// v on y (variant 1 swaps x and y).
inline Graph havel_expand(const Graph& g, Edge e, int variant = 0) {
  detail::require_diamond_edge(g, e);
  Vertex x = e.u, y = e.v;
  if (variant == 1) std::swap(x, y);
  const Graph h0 = havel_quasi_edge();
  return detail::glue_on_edge(g, x, y, h0, h0.at("u"), h0.at("v"),
                              g.name().empty() ? "" : g.name() + "+havel");
}

/// Deletes the degree-3 vertex v and glues patch Q_which so that v's
/// neighbours become the boundary vertices x, y, z. `variant` (0..5)
/// selects which permutation of v's sorted neighbours lands on (x, y, z).
inline Graph patch_expand(const Graph& g, Vertex v, int which, int variant = 0) {
  g.check_vertex(v);
  if (g.degree(v) != 3) {
    throw Error(ErrorKind::BadDegree,
                "vertex " + std::to_string(v) + " has degree " +
                    std::to_string(g.degree(v)) + ", expected 3");
  }
  if (variant < 0 || variant > 5) {
    throw Error(ErrorKind::BadParameters, "patch variant must be in 0..5");
  }
  std::array<Vertex, 3> nb{};
  std::copy(g.neighbors(v).begin(), g.neighbors(v).end(), nb.begin());
  for (int i = 0; i < variant; ++i) std::next_permutation(nb.begin(), nb.end());
  const Graph q = patch_q(which);
  // Old vertices keep their order with v removed; patch vertices follow.
  std::vector<Vertex> old_map(g.order(), -1);
  Vertex next = 0;
  std::vector<std::string> labels;
  const bool labelled = !g.labels().empty();
  for (Vertex u = 0; u < g.order(); ++u) {
    if (u == v) continue;
    old_map[u] = next++;
    if (labelled) labels.push_back(g.label(u));
  }
  std::vector<Vertex> map(q.order(), -1);
  map[q.at("x")] = old_map[nb[0]];
  map[q.at("y")] = old_map[nb[1]];
  map[q.at("z")] = old_map[nb[2]];
  for (Vertex p = 0; p < q.order(); ++p) {
    if (map[p] >= 0) continue;
    map[p] = next++;
    if (labelled) labels.push_back(q.label(p) + "*");
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (!e.contains(v)) edges.emplace_back(old_map[e.u], old_map[e.v]);
  for (const Edge& e : q.edges()) edges.emplace_back(map[e.u], map[e.v]);
  Graph out(next, edges,
            g.name().empty() ? "" : g.name() + "+Q" + std::to_string(which));
  return labelled ? out.with_labels(labels) : out;
}

// ---------------------------------------------------------------------------
// Pattern detectors

inline bool contains_triangular_grid(const Graph& g) {
  return contains_subgraph(triangular_grid(), g);
}
inline bool contains_fan(const Graph& g) { return contains_subgraph(fan_graph(), g); }
inline bool contains_k2_join_e3(const Graph& g) {
  return contains_subgraph(k2_join_e3(), g);
}

// ---------------------------------------------------------------------------
// Simple cycles and cactus-type triples

/// Edge subset of a fixed host graph, indexed by position in g.edges().
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(int m) : words_((m + 63) / 64, 0) {}
  void insert(int i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool contains(int i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  bool disjoint(const EdgeSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return false;
    return true;
  }
  bool subset_of(const EdgeSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  EdgeSet operator|(const EdgeSet& o) const {
    EdgeSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= o.words_[i];
    return r;
  }
  std::vector<int> indices() const {
    std::vector<int> out;
    for (std::size_t w = 0; w < words_.size(); ++w)
      for (std::uint64_t m = words_[w]; m; m &= m - 1)
        out.push_back(static_cast<int>(w * 64 + std::countr_zero(m)));
    return out;
  }
  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::vector<std::uint64_t> words_;
};

namespace detail {

inline std::map<std::pair<Vertex, Vertex>, int> edge_index(const Graph& g) {
  std::map<std::pair<Vertex, Vertex>, int> idx;
  const auto& es = g.edges();
  for (std::size_t i = 0; i < es.size(); ++i) idx[{es[i].u, es[i].v}] = static_cast<int>(i);
  return idx;
}

class CycleEnumerator {
 public:
  CycleEnumerator(const Graph& g, int cap) : g_(g), cap_(cap), idx_(edge_index(g)) {}

  std::vector<EdgeSet> run() {
    on_path_.assign(g_.order(), false);
    for (Vertex s = 0; s < g_.order(); ++s) {
      start_ = s;
      path_ = {s};
      on_path_[s] = true;
      dfs(s);
      on_path_[s] = false;
    }
    return std::move(cycles_);
  }

 private:
  int id(Vertex a, Vertex b) const {
    return idx_.at({std::min(a, b), std::max(a, b)});
  }

  void dfs(Vertex v) {
    for (Vertex w : g_.neighbors(v)) {
      if (w == start_ && path_.size() >= 3 && path_[1] < v) {
        EdgeSet c(g_.size());
        for (std::size_t i = 0; i + 1 < path_.size(); ++i) c.insert(id(path_[i], path_[i + 1]));
        c.insert(id(v, start_));
        cycles_.push_back(std::move(c));
        if (static_cast<int>(cycles_.size()) > cap_) {
          throw Error(ErrorKind::CycleBudgetExceeded,
                      "more than " + std::to_string(cap_) + " simple cycles");
        }
        continue;
      }
      if (w <= start_ || on_path_[w]) continue;
      on_path_[w] = true;
      path_.push_back(w);
      dfs(w);
      path_.pop_back();
      on_path_[w] = false;
    }
  }

  const Graph& g_;
  int cap_;
  std::map<std::pair<Vertex, Vertex>, int> idx_;
  Vertex start_ = 0;
  std::vector<Vertex> path_;
  std::vector<bool> on_path_;
  std::vector<EdgeSet> cycles_;
};

}  // namespace detail

/// Every simple cycle of g as an edge set. Throws CycleBudgetExceeded when
/// there are more than `cap`.
inline std::vector<EdgeSet> simple_cycles(const Graph& g, int cap = kDefaultCycleCap) {
  return detail::CycleEnumerator(g, cap).run();
}

inline int count_simple_cycles(const Graph& g, int cap = kDefaultCycleCap) {
  return static_cast<int>(simple_cycles(g, cap).size());
}

/// Three pairwise edge-disjoint cycles whose union has exactly three
/// simple cycles.
struct CycleTriple {
  std::array<std::vector<Edge>, 3> cycles;
};

inline std::vector<Edge> edges_of(const Graph& g, const EdgeSet& s) {
  std::vector<Edge> out;
  for (int i : s.indices()) out.push_back(g.edges()[i]);
  return out;
}

/// Exhaustive search over all simple cycles (at most cycle_cap of them).
inline std::optional<CycleTriple> find_cactus_triple(const Graph& g,
                                                     int cycle_cap = kDefaultCycleCap) {
  if (g.size() < 9) return std::nullopt;
  const auto cycles = simple_cycles(g, cycle_cap);
  const std::size_t c = cycles.size();
  auto cycles_inside = [&](const EdgeSet& u) {
    int count = 0;
    for (const auto& cy : cycles)
      if (cy.subset_of(u) && ++count > 3) break;
    return count;
  };
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = i + 1; j < c; ++j) {
      if (!cycles[i].disjoint(cycles[j])) continue;
      const EdgeSet ij = cycles[i] | cycles[j];
      if (cycles_inside(ij) != 2) continue;
      for (std::size_t k = j + 1; k < c; ++k) {
        if (!cycles[k].disjoint(ij)) continue;
        if (cycles_inside(ij | cycles[k]) == 3) {
          return CycleTriple{{edges_of(g, cycles[i]), edges_of(g, cycles[j]),
                              edges_of(g, cycles[k])}};
        }
      }
    }
  }
  return std::nullopt;
}

/// Checks the CycleTriple invariants against g.
inline bool is_valid_cycle_triple(const Graph& g, const CycleTriple& t) {
  const auto idx = detail::edge_index(g);
  std::array<EdgeSet, 3> sets{EdgeSet(g.size()), EdgeSet(g.size()), EdgeSet(g.size())};
  for (int i = 0; i < 3; ++i) {
    std::vector<Edge> es = t.cycles[i];
    if (es.size() < 3) return false;
    for (const Edge& e : es) {
      auto it = idx.find({e.u, e.v});
      if (it == idx.end()) return false;
      sets[i].insert(it->second);
    }
    // connected, 2-regular edge set
    std::map<Vertex, int> deg;
    for (const Edge& e : es) {
      ++deg[e.u];
      ++deg[e.v];
    }
    for (auto [v, d] : deg)
      if (d != 2) return false;
    std::vector<Vertex> verts;
    for (auto [v, d] : deg) verts.push_back(v);
    std::vector<Edge> local;
    for (const Edge& e : es) {
      auto a = std::lower_bound(verts.begin(), verts.end(), e.u) - verts.begin();
      auto b = std::lower_bound(verts.begin(), verts.end(), e.v) - verts.begin();
      local.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    if (!is_connected(Graph(static_cast<int>(verts.size()), local))) return false;
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!sets[i].disjoint(sets[j])) return false;
  EdgeSet all = sets[0] | sets[1] | sets[2];
  std::vector<Edge> union_edges = edges_of(g, all);
  return count_simple_cycles(Graph(g.order(), union_edges)) == 3;
}

/// Delta >= 5 or three cactus-type cycles.
inline bool has_property_p(const Graph& g, int cycle_cap = kDefaultCycleCap) {
  if (g.max_degree() >= 5) return true;
  return find_cactus_triple(g, cycle_cap).has_value();
}

// ---------------------------------------------------------------------------
// Core plus attached paths

/// g split into its 2-core H and pendant paths, each hanging off one core
/// vertex by an end vertex.
struct CorePlusPaths {
  Graph core;
  /// core vertex i is g-vertex core_vertices[i].
  std::vector<Vertex> core_vertices;
  /// g-vertices of H carrying at least one path.
  std::vector<Vertex> attachments;
  /// Path lengths (new vertices) in attachment order.
  std::vector<std::vector<int>> path_lengths;
};

/// Decomposition of g into its 2-core plus pendant paths, or nothing when g
/// is a tree or some pendant part is not a path attached by an end.
inline std::optional<CorePlusPaths> core_plus_paths(const Graph& g) {
  const int n = g.order();
  std::vector<int> deg(n);
  std::vector<bool> removed(n, false);
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) stack.push_back(v);
  }
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    if (removed[v]) continue;
    removed[v] = true;
    for (Vertex w : g.neighbors(v))
      if (!removed[w] && --deg[w] <= 1) stack.push_back(w);
  }
  CorePlusPaths out;
  std::vector<int> pos(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    if (removed[v]) continue;
    pos[v] = static_cast<int>(out.core_vertices.size());
    out.core_vertices.push_back(v);
  }
  if (out.core_vertices.empty()) return std::nullopt;
  out.core = induced_subgraph(g, out.core_vertices);
  std::map<Vertex, std::vector<int>> paths;
  std::vector<bool> seen(n, false);
  for (Vertex c : out.core_vertices) {
    for (Vertex start : g.neighbors(c)) {
      if (!removed[start] || seen[start]) continue;
      int len = 0;
      Vertex prev = c, cur = start;
      while (true) {
        seen[cur] = true;
        ++len;
        int forward = 0;
        Vertex next = -1;
        for (Vertex w : g.neighbors(cur)) {
          if (w == prev) continue;
          if (!removed[w]) return std::nullopt;
          ++forward;
          next = w;
        }
        if (forward == 0) break;
        if (forward > 1) return std::nullopt;
        prev = cur;
        cur = next;
      }
      paths[c].push_back(len);
    }
  }
  for (auto& [v, lens] : paths) {
    out.attachments.push_back(v);
    out.path_lengths.push_back(lens);
  }
  return out;
}

}  // namespace distex
