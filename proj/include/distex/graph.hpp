//
// distex - distance spectral extremal graph toolkit
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "distex/error.hpp"

namespace distex {

using Vertex = int;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr bool contains(Vertex w) const { return u == w || v == w; }
  constexpr Vertex other(Vertex w) const { return w == u ? v : u; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on the dense label set 0..order-1.
///
/// Values are immutable once built; every editing operation returns a new
/// graph. An optional name and optional per-vertex labels travel with the
/// graph so that constructions transcribed from drawings can be addressed by
/// the names used there. Equality ignores both.
class Graph {
 public:
  Graph() : Graph(1) {}

  explicit Graph(int order, std::span<const Edge> edges = {},
                 std::string name = {})
      : order_(order), name_(std::move(name)) {
    if (order < 1) {
      throw Error(ErrorKind::InvalidGraph, "order must be at least 1");
    }
    edges_.assign(edges.begin(), edges.end());
    for (const Edge& e : edges_) {
      if (e.u == e.v) {
        throw Error(ErrorKind::InvalidGraph,
                    "self-loop at vertex " + std::to_string(e.u));
      }
      if (e.u < 0 || e.v >= order) {
        throw Error(ErrorKind::VertexOutOfRange,
                    "edge {" + std::to_string(e.u) + "," +
                        std::to_string(e.v) + "} outside 0.." +
                        std::to_string(order - 1));
      }
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
      throw Error(ErrorKind::InvalidGraph, "duplicate edge");
    }
    build_adjacency();
  }

  Graph(int order, std::initializer_list<Edge> edges, std::string name = {})
      : Graph(order, std::span<const Edge>(edges.begin(), edges.size()),
              std::move(name)) {}

  int order() const noexcept { return order_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }

  int degree(Vertex v) const {
    check_vertex(v);
    return offsets_[v + 1] - offsets_[v];
  }

  bool has_edge(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= order_ || b >= order_ || a == b) return false;
    auto nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
  }
  bool has_edge(Edge e) const { return has_edge(e.u, e.v); }

  int max_degree() const {
    int best = 0;
    for (Vertex v = 0; v < order_; ++v) best = std::max(best, degree(v));
    return best;
  }

  int min_degree() const {
    int best = order_;
    for (Vertex v = 0; v < order_; ++v) best = std::min(best, degree(v));
    return best;
  }

  const std::string& name() const noexcept { return name_; }
  Graph with_name(std::string name) const {
    Graph g = *this;
    g.name_ = std::move(name);
    return g;
  }

  /// Per-vertex labels; empty when the graph carries none.
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  Graph with_labels(std::vector<std::string> labels) const {
    if (!labels.empty() && static_cast<int>(labels.size()) != order_) {
      throw Error(ErrorKind::BadParameters, "label count must equal order");
    }
    Graph g = *this;
    g.labels_ = std::move(labels);
    return g;
  }
  std::string label(Vertex v) const {
    check_vertex(v);
    return labels_.empty() ? std::string() : labels_[v];
  }
  std::optional<Vertex> vertex_named(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i] == label) return static_cast<Vertex>(i);
    }
    return std::nullopt;
  }
  /// Like vertex_named but throws when the label is missing.
  Vertex at(std::string_view label) const {
    if (auto v = vertex_named(label)) return *v;
    throw Error(ErrorKind::VertexOutOfRange,
                "no vertex labelled '" + std::string(label) + "'");
  }

  void check_vertex(Vertex v) const {
    if (v < 0 || v >= order_) {
      throw Error(ErrorKind::VertexOutOfRange,
                  "vertex " + std::to_string(v) + " outside 0.." +
                      std::to_string(order_ - 1));
    }
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  void build_adjacency() {
    offsets_.assign(order_ + 1, 0);
    for (const Edge& e : edges_) {
      ++offsets_[e.u + 1];
      ++offsets_[e.v + 1];
    }
    std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
    adjacency_.assign(offsets_.back(), 0);
    std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
    for (const Edge& e : edges_) {
      adjacency_[fill[e.u]++] = e.v;
      adjacency_[fill[e.v]++] = e.u;
    }
    for (Vertex v = 0; v < order_; ++v) {
      std::sort(adjacency_.begin() + offsets_[v],
                adjacency_.begin() + offsets_[v + 1]);
    }
  }

  int order_ = 1;
  std::vector<Edge> edges_;
  std::vector<int> offsets_;
  std::vector<Vertex> adjacency_;
  std::string name_;
  std::vector<std::string> labels_;
};

// ---------------------------------------------------------------------------
// Elementary graphs

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges, "P" + std::to_string(n));
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw Error(ErrorKind::BadParameters, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges, "C" + std::to_string(n));
}

inline Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges, "K" + std::to_string(n));
}

inline Graph complete_bipartite_graph(int a, int b) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  return Graph(a + b, edges,
               "K" + std::to_string(a) + "," + std::to_string(b));
}

inline Graph star_graph(int leaves) { return complete_bipartite_graph(1, leaves); }

// ---------------------------------------------------------------------------
// Editing

namespace detail {

inline std::vector<std::string> extend_labels(const Graph& g, int extra,
                                              const std::string& prefix = {}) {
  if (g.labels().empty()) return {};
  std::vector<std::string> labels = g.labels();
  for (int i = 0; i < extra; ++i) {
    labels.push_back(prefix.empty() ? std::string()
                                    : prefix + std::to_string(i + 1));
  }
  return labels;
}

}  // namespace detail

/// Attaches a path of `len` new vertices (and `len` edges) at v; the first
/// new vertex is adjacent to v. New vertices get labels order..order+len-1.
inline Graph attach_path(const Graph& g, Vertex v, int len) {
  g.check_vertex(v);
  if (len < 0) throw Error(ErrorKind::BadParameters, "negative path length");
  std::vector<Edge> edges = g.edges();
  Vertex prev = v;
  for (int i = 0; i < len; ++i) {
    Vertex next = g.order() + i;
    edges.emplace_back(prev, next);
    prev = next;
  }
  return Graph(g.order() + len, edges, g.name())
      .with_labels(detail::extend_labels(g, len));
}

inline Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> edges = g.edges();
  for (const Edge& e : h.edges())
    edges.emplace_back(e.u + g.order(), e.v + g.order());
  return Graph(g.order() + h.order(), edges);
}

/// G ∨ H: disjoint union plus every edge between the two sides.
inline Graph join(const Graph& g, const Graph& h) {
  std::vector<Edge> edges = disjoint_union(g, h).edges();
  for (Vertex i = 0; i < g.order(); ++i)
    for (Vertex j = 0; j < h.order(); ++j) edges.emplace_back(i, g.order() + j);
  return Graph(g.order() + h.order(), edges);
}

inline Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < g.order(); ++i)
    for (Vertex j = i + 1; j < g.order(); ++j)
      if (!g.has_edge(i, j)) edges.emplace_back(i, j);
  return Graph(g.order(), edges).with_labels(g.labels());
}

/// Removes e; the result may be disconnected.
inline Graph delete_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e)) {
    throw Error(ErrorKind::NoSuchEdge, "{" + std::to_string(e.u) + "," +
                                           std::to_string(e.v) + "}");
  }
  std::vector<Edge> edges;
  edges.reserve(g.size() - 1);
  for (const Edge& f : g.edges())
    if (f != e) edges.push_back(f);
  return Graph(g.order(), edges, g.name()).with_labels(g.labels());
}

inline Graph add_edge(const Graph& g, Edge e) {
  std::vector<Edge> edges = g.edges();
  edges.push_back(e);
  return Graph(g.order(), edges, g.name()).with_labels(g.labels());
}

/// Subgraph induced by `keep`; vertex keep[i] becomes i.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    g.check_vertex(keep[i]);
    index[keep[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (index[e.u] >= 0 && index[e.v] >= 0)
      edges.emplace_back(index[e.u], index[e.v]);
  std::vector<std::string> labels;
  if (!g.labels().empty())
    for (Vertex v : keep) labels.push_back(g.labels()[v]);
  return Graph(static_cast<int>(keep.size()), edges).with_labels(labels);
}

/// Relabels vertex v as perm[v].
inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    throw Error(ErrorKind::BadParameters, "permutation size mismatch");
  }
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  std::vector<std::string> labels;
  if (!g.labels().empty()) {
    labels.resize(g.order());
    for (Vertex v = 0; v < g.order(); ++v) labels[perm[v]] = g.labels()[v];
  }
  return Graph(g.order(), edges, g.name()).with_labels(labels);
}

// ---------------------------------------------------------------------------
// Connectivity

/// Component index per vertex, numbered in order of smallest member.
inline std::vector<int> component_ids(const Graph& g) {
  std::vector<int> comp(g.order(), -1);
  int next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (comp[w] < 0) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

inline int component_count(const Graph& g) {
  auto comp = component_ids(g);
  return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

inline bool is_connected(const Graph& g) { return component_count(g) == 1; }

/// Blocks (biconnected components, bridges included) as edge lists, plus
/// the articulation points of g.
struct BlockDecomposition {
  std::vector<std::vector<Edge>> blocks;
  std::vector<bool> is_cut_vertex;
};

inline BlockDecomposition block_decomposition(const Graph& g) {
  const int n = g.order();
  BlockDecomposition out;
  out.is_cut_vertex.assign(n, false);
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> edge_stack;
  int timer = 0;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
    int children;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    std::vector<Frame> stack{{root, -1, 0, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        Vertex w = nb[f.next++];
        if (disc[w] < 0) {
          edge_stack.emplace_back(f.v, w);
          ++f.children;
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.v, 0, 0});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          edge_stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (stack.empty()) {
        if (done.children > 1) out.is_cut_vertex[done.v] = true;
        continue;
      }
      Frame& parent = stack.back();
      low[parent.v] = std::min(low[parent.v], low[done.v]);
      if (low[done.v] >= disc[parent.v]) {
        if (parent.parent >= 0) out.is_cut_vertex[parent.v] = true;
        std::vector<Edge> block;
        const Edge tree_edge(parent.v, done.v);
        while (!edge_stack.empty()) {
          Edge e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e);
          if (e == tree_edge) break;
        }
        std::sort(block.begin(), block.end());
        out.blocks.push_back(std::move(block));
      }
    }
  }
  return out;
}

inline std::vector<Edge> bridges(const Graph& g) {
  std::vector<Edge> out;
  for (const auto& block : block_decomposition(g).blocks)
    if (block.size() == 1) out.push_back(block.front());
  std::sort(out.begin(), out.end());
  return out;
}

/// Connected graph whose every block is a single edge or a cycle
/// (equivalently, two cycles share at most one vertex).
inline bool is_cactus(const Graph& g) {
  if (!is_connected(g)) return false;
  for (const auto& block : block_decomposition(g).blocks) {
    if (block.size() == 1) continue;
    std::vector<Vertex> verts;
    for (const Edge& e : block) {
      verts.push_back(e.u);
      verts.push_back(e.v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (verts.size() != block.size()) return false;
  }
  return true;
}

/// m - n + c.
inline int cyclomatic_number(const Graph& g) {
  return g.size() - g.order() + component_count(g);
}

inline bool is_tree(const Graph& g) {
  return is_connected(g) && g.size() == g.order() - 1;
}

// ---------------------------------------------------------------------------
// Neighbourhoods

/// Unordered pairs {u,v} (u < v) with N(u) = N(v) or N[u] = N[v].
inline std::vector<std::pair<Vertex, Vertex>> twin_pairs(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    auto nu = g.neighbors(u);
    for (Vertex v = u + 1; v < g.order(); ++v) {
      auto nv = g.neighbors(v);
      if (std::equal(nu.begin(), nu.end(), nv.begin(), nv.end())) {
        out.emplace_back(u, v);
        continue;
      }
      if (!g.has_edge(u, v)) continue;
      std::vector<Vertex> cu(nu.begin(), nu.end()), cv(nv.begin(), nv.end());
      cu.insert(std::upper_bound(cu.begin(), cu.end(), u), u);
      cv.insert(std::upper_bound(cv.begin(), cv.end(), v), v);
      if (cu == cv) out.emplace_back(u, v);
    }
  }
  return out;
}

}  // namespace distex
