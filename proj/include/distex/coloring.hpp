//
// distex - distance spectral extremal graph toolkit
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "distex/canonical.hpp"
#include "distex/graph.hpp"

namespace distex {

/// A proper vertex colouring: assignment[v] in 0..colors_used-1.
struct Coloring {
  std::vector<int> assignment;
  int colors_used = 0;
};

inline bool is_proper(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.assignment.size()) != g.order()) return false;
  for (int col : c.assignment)
    if (col < 0 || col >= c.colors_used) return false;
  for (const Edge& e : g.edges())
    if (c.assignment[e.u] == c.assignment[e.v]) return false;
  return true;
}

namespace detail {

// DSATUR branch and bound over bit rows. Colours are tried in increasing
// order; opening a new colour is allowed only while below the bound.
class ColoringSearch {
 public:
  explicit ColoringSearch(const BitGraph& g) : g_(g), color_(g.n, -1) {}

  /// Colouring with at most k colours, if one exists.
  bool solve(int k) {
    k_ = k;
    std::fill(color_.begin(), color_.end(), -1);
    adjacent_colors_.assign(g_.n, 0);
    return extend(0, 0);
  }

  const std::vector<int>& colors() const { return color_; }

 private:
  int pick() const {
    int best = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < g_.n; ++v) {
      if (color_[v] >= 0) continue;
      int sat = std::popcount(adjacent_colors_[v]);
      int deg = 0;
      for (std::uint64_t m = g_.rows[v]; m; m &= m - 1)
        deg += color_[std::countr_zero(m)] < 0 ? 1 : 0;
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  }

  bool extend(int colored, int used) {
    if (colored == g_.n) return true;
    const int v = pick();
    const int limit = std::min(used + 1, k_);
    for (int c = 0; c < limit; ++c) {
      if ((adjacent_colors_[v] >> c) & 1u) continue;
      color_[v] = c;
      std::vector<std::uint64_t> saved;
      saved.reserve(std::popcount(g_.rows[v]));
      for (std::uint64_t m = g_.rows[v]; m; m &= m - 1) {
        int w = std::countr_zero(m);
        saved.push_back(adjacent_colors_[w]);
        adjacent_colors_[w] |= std::uint64_t{1} << c;
      }
      if (extend(colored + 1, std::max(used, c + 1))) return true;
      std::size_t i = 0;
      for (std::uint64_t m = g_.rows[v]; m; m &= m - 1)
        adjacent_colors_[std::countr_zero(m)] = saved[i++];
      color_[v] = -1;
    }
    return false;
  }

  const BitGraph& g_;
  int k_ = 0;
  std::vector<int> color_;
  std::vector<std::uint64_t> adjacent_colors_;
};

inline int greedy_clique_size(const BitGraph& g) {
  int best = g.n > 0 ? 1 : 0;
  for (int start = 0; start < g.n; ++start) {
    std::uint64_t cand = g.rows[start];
    int size = 1;
    while (cand) {
      int pickv = -1, pick_deg = -1;
      for (std::uint64_t m = cand; m; m &= m - 1) {
        int v = std::countr_zero(m);
        int d = std::popcount(g.rows[v] & cand);
        if (d > pick_deg) {
          pick_deg = d;
          pickv = v;
        }
      }
      cand &= g.rows[pickv];
      ++size;
    }
    best = std::max(best, size);
  }
  return best;
}

inline Coloring chromatic_number(const BitGraph& g) {
  ColoringSearch search(g);
  int hi = 1;
  for (int v = 0; v < g.n; ++v) hi = std::max(hi, g.degree(v) + 1);
  int k = std::max(1, greedy_clique_size(g));
  while (k < hi && !search.solve(k)) ++k;
  if (k == hi) search.solve(k);
  return {search.colors(), k};
}

}  // namespace detail

/// Exact chromatic number with a witness colouring.
inline Coloring chromatic_number(const Graph& g) {
  auto c = detail::chromatic_number(detail::BitGraph::from(g));
  int used = 0;
  for (int x : c.assignment) used = std::max(used, x + 1);
  c.colors_used = used;
  return c;
}

inline bool is_colorable(const Graph& g, int k) {
  if (k <= 0) return false;
  auto b = detail::BitGraph::from(g);
  return detail::ColoringSearch(b).solve(k);
}

/// chi(g) = k and chi(g - e) <= k-1 for every edge e. Removing vertices
/// from g - e cannot raise chi, so edge deletions cover every proper
/// subgraph once g has no isolated vertices.
inline bool is_k_critical(const Graph& g, int k) {
  auto b = detail::BitGraph::from(g);
  if (detail::chromatic_number(b).colors_used != k) return false;
  if (g.order() > 1 && g.min_degree() == 0) return false;
  for (const Edge& e : g.edges()) {
    auto h = b;
    h.rows[e.u] &= ~detail::bit(e.v);
    h.rows[e.v] &= ~detail::bit(e.u);
    if (!detail::ColoringSearch(h).solve(k - 1)) return false;
  }
  return true;
}

inline bool is_independent_set(const Graph& g, std::span<const Vertex> s) {
  for (Vertex v : s) g.check_vertex(v);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.has_edge(s[i], s[j])) return false;
  return true;
}

}  // namespace distex
