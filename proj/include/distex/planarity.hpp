//
// distex - distance spectral extremal graph toolkit
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "distex/canonical.hpp"
#include "distex/graph.hpp"

namespace distex {

struct PlanarityVerdict {
  bool planar = true;
  /// Edges of a K5 or K3,3 subdivision inside the graph when nonplanar.
  std::optional<std::vector<Edge>> witness;
};

namespace detail {

// Left-right planarity test (Brandes' formulation of de Fraysseix and
// Rosenstiehl), test phase only. Edges are oriented by a DFS and
// referenced by id; kNone stands for an absent edge.
class LRTest {
 public:
  explicit LRTest(const Graph& g) : g_(g) {}

  bool run() {
    const int n = g_.order();
    if (n > 2 && g_.size() > 3 * n - 6) return false;
    height_.assign(n, kNone);
    parent_edge_.assign(n, kNone);
    out_.assign(n, {});
    oriented_.assign(static_cast<std::size_t>(n) * n, false);
    for (Vertex v = 0; v < n; ++v) {
      if (height_[v] != kNone) continue;
      height_[v] = 0;
      roots_.push_back(v);
      orient(v);
    }
    for (Vertex v = 0; v < n; ++v) {
      std::stable_sort(out_[v].begin(), out_[v].end(), [&](int a, int b) {
        return nesting_[a] < nesting_[b];
      });
    }
    ref_.assign(from_.size(), kNone);
    lowpt_edge_.assign(from_.size(), kNone);
    stack_bottom_.assign(from_.size(), kNone);
    for (Vertex r : roots_)
      if (!test(r)) return false;
    return true;
  }

 private:
  static constexpr int kNone = -1;

  struct Interval {
    int low = kNone, high = kNone;
    bool empty() const { return low == kNone && high == kNone; }
  };
  struct Pair {
    int id = 0;
    Interval left, right;
  };

  bool conflicting(const Interval& i, int b) const {
    return !i.empty() && lowpt_[i.high] > lowpt_[b];
  }
  int lowest(const Pair& p) const {
    if (p.left.empty()) return lowpt_[p.right.low];
    if (p.right.empty()) return lowpt_[p.left.low];
    return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
  }
  int top_id() const { return stack_.empty() ? kNone : stack_.back().id; }

  void orient(Vertex v) {
    const int e = parent_edge_[v];
    const int n = g_.order();
    for (Vertex w : g_.neighbors(v)) {
      if (oriented_[v * n + w]) continue;
      oriented_[v * n + w] = oriented_[w * n + v] = true;
      const int vw = static_cast<int>(from_.size());
      from_.push_back(v);
      to_.push_back(w);
      out_[v].push_back(vw);
      lowpt_.push_back(height_[v]);
      lowpt2_.push_back(height_[v]);
      nesting_.push_back(0);
      if (height_[w] == kNone) {
        parent_edge_[w] = vw;
        height_[w] = height_[v] + 1;
        orient(w);
      } else {
        lowpt_[vw] = height_[w];
      }
      nesting_[vw] = 2 * lowpt_[vw] + (lowpt2_[vw] < height_[v] ? 1 : 0);
      if (e != kNone) {
        if (lowpt_[vw] < lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt_[e], lowpt2_[vw]);
          lowpt_[e] = lowpt_[vw];
        } else if (lowpt_[vw] > lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt_[vw]);
        } else {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[vw]);
        }
      }
    }
  }

  bool test(Vertex v) {
    const int e = parent_edge_[v];
    const auto& adj = out_[v];
    for (std::size_t i = 0; i < adj.size(); ++i) {
      const int ei = adj[i];
      const Vertex w = to_[ei];
      stack_bottom_[ei] = top_id();
      if (ei == parent_edge_[w]) {
        if (!test(w)) return false;
      } else {
        lowpt_edge_[ei] = ei;
        Pair p;
        p.id = next_id_++;
        p.right = {ei, ei};
        stack_.push_back(p);
      }
      if (lowpt_[ei] < height_[v]) {
        if (i == 0) {
          if (e != kNone) lowpt_edge_[e] = lowpt_edge_[ei];
        } else if (!add_constraints(ei, e)) {
          return false;
        }
      }
    }
    if (e != kNone) remove_back_edges(e);
    return true;
  }

  void set_ref(int at, int value) {
    if (at != kNone) ref_[at] = value;
  }

  bool add_constraints(int ei, int e) {
    Pair p;
    p.id = next_id_++;
    do {
      Pair q = stack_.back();
      stack_.pop_back();
      if (!q.left.empty()) std::swap(q.left, q.right);
      if (!q.left.empty()) return false;
      if (lowpt_[q.right.low] > lowpt_[e]) {
        if (p.right.empty()) {
          p.right = q.right;
        } else {
          set_ref(p.right.low, q.right.high);
        }
        p.right.low = q.right.low;
      } else {
        set_ref(q.right.low, lowpt_edge_[e]);
      }
    } while (top_id() != stack_bottom_[ei]);
    while (!stack_.empty() && (conflicting(stack_.back().left, ei) ||
                               conflicting(stack_.back().right, ei))) {
      Pair q = stack_.back();
      stack_.pop_back();
      if (conflicting(q.right, ei)) std::swap(q.left, q.right);
      if (conflicting(q.right, ei)) return false;
      set_ref(p.right.low, q.right.high);
      if (q.right.low != kNone) p.right.low = q.right.low;
      if (p.left.empty()) {
        p.left = q.left;
      } else {
        set_ref(p.left.low, q.left.high);
      }
      p.left.low = q.left.low;
    }
    if (!(p.left.empty() && p.right.empty())) stack_.push_back(p);
    return true;
  }

  void remove_back_edges(int e) {
    const Vertex u = from_[e];
    while (!stack_.empty() && lowest(stack_.back()) == height_[u]) stack_.pop_back();
    if (!stack_.empty()) {
      Pair p = stack_.back();
      stack_.pop_back();
      while (p.left.high != kNone && to_[p.left.high] == u) p.left.high = ref_[p.left.high];
      if (p.left.high == kNone && p.left.low != kNone) {
        ref_[p.left.low] = p.right.low;
        p.left.low = kNone;
      }
      while (p.right.high != kNone && to_[p.right.high] == u)
        p.right.high = ref_[p.right.high];
      if (p.right.high == kNone && p.right.low != kNone) {
        ref_[p.right.low] = p.left.low;
        p.right.low = kNone;
      }
      stack_.push_back(p);
    }
    if (lowpt_[e] < height_[u] && !stack_.empty()) {
      const int hl = stack_.back().left.high;
      const int hr = stack_.back().right.high;
      if (hl != kNone && (hr == kNone || lowpt_[hl] > lowpt_[hr])) {
        ref_[e] = hl;
      } else {
        ref_[e] = hr;
      }
    }
  }

  const Graph& g_;
  std::vector<int> height_, parent_edge_;
  std::vector<Vertex> roots_;
  std::vector<std::vector<int>> out_;
  std::vector<bool> oriented_;
  std::vector<Vertex> from_, to_;
  std::vector<int> lowpt_, lowpt2_, nesting_;
  std::vector<int> ref_, lowpt_edge_, stack_bottom_;
  std::vector<Pair> stack_;
  int next_id_ = 0;
};

}  // namespace detail

inline bool planarity_test(const Graph& g) { return detail::LRTest(g).run(); }

/// True when the edge set is a subdivision of K5 or K3,3 (isolated
/// vertices ignored).
inline bool is_kuratowski_subdivision(int n, const std::vector<Edge>& edges) {
  Graph h(n, edges);
  std::vector<Vertex> branch;
  for (Vertex v = 0; v < n; ++v) {
    int d = h.degree(v);
    if (d == 1 || d > 4) return false;
    if (d >= 3) branch.push_back(v);
  }
  std::vector<int> index(n, -1);
  for (std::size_t i = 0; i < branch.size(); ++i) index[branch[i]] = static_cast<int>(i);
  const int b = static_cast<int>(branch.size());
  std::vector<Edge> contracted;
  for (Vertex s : branch) {
    for (Vertex first : h.neighbors(s)) {
      Vertex prev = s, cur = first;
      while (index[cur] < 0) {
        auto nb = h.neighbors(cur);
        Vertex next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
      }
      if (cur == s) return false;
      if (s < cur) contracted.emplace_back(index[s], index[cur]);
    }
  }
  // Each branch path was seen from both ends; the s < cur filter kept one.
  std::sort(contracted.begin(), contracted.end());
  if (std::adjacent_find(contracted.begin(), contracted.end()) != contracted.end())
    return false;
  // A cycle of degree-2 vertices would form its own component.
  std::vector<int> comp = component_ids(h);
  int nonisolated_comp = -1;
  for (Vertex v = 0; v < n; ++v) {
    if (h.degree(v) == 0) continue;
    if (nonisolated_comp < 0) nonisolated_comp = comp[v];
    if (comp[v] != nonisolated_comp) return false;
  }
  if (b == 0) return false;
  Graph c(b, contracted);
  if (b == 5) return is_isomorphic(c, complete_graph(5));
  if (b == 6) return is_isomorphic(c, complete_bipartite_graph(3, 3));
  return false;
}

/// Exact planarity decision. For nonplanar graphs a Kuratowski subdivision
/// is extracted by deleting edges while the rest stays nonplanar.
inline PlanarityVerdict is_planar(const Graph& g, bool with_witness = true) {
  PlanarityVerdict out;
  out.planar = planarity_test(g);
  if (out.planar || !with_witness) return out;
  std::vector<Edge> keep(g.edges().begin(), g.edges().end());
  for (std::size_t i = 0; i < keep.size();) {
    std::vector<Edge> trial = keep;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (!planarity_test(Graph(g.order(), trial))) {
      keep = std::move(trial);
    } else {
      ++i;
    }
  }
  out.witness = std::move(keep);
  return out;
}

}  // namespace distex
