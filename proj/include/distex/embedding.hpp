//
// distex - distance spectral extremal graph toolkit
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "distex/graph.hpp"

namespace distex {

/// Injective vertex map from a pattern into a host: mapping[p] = host vertex.
using Embedding = std::vector<Vertex>;

namespace detail {

class EmbeddingSearch {
 public:
  EmbeddingSearch(const Graph& pattern, const Graph& host)
      : pattern_(pattern), host_(host) {
    const int n = host.order();
    adj_.assign(static_cast<std::size_t>(n) * n, false);
    for (const Edge& e : host.edges()) {
      adj_[e.u * n + e.v] = true;
      adj_[e.v * n + e.u] = true;
    }
    plan_order();
  }

  std::optional<Embedding> run() {
    if (pattern_.order() > host_.order() || pattern_.size() > host_.size())
      return std::nullopt;
    map_.assign(pattern_.order(), -1);
    used_.assign(host_.order(), false);
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  // Pattern vertices in an order where each vertex (after the first of its
  // component) has an earlier neighbour; higher degree first.
  void plan_order() {
    const int k = pattern_.order();
    std::vector<bool> placed(k, false);
    for (int step = 0; step < k; ++step) {
      int best = -1, best_links = -1, best_deg = -1;
      for (Vertex v = 0; v < k; ++v) {
        if (placed[v]) continue;
        int links = 0;
        for (Vertex w : pattern_.neighbors(v)) links += placed[w] ? 1 : 0;
        int deg = pattern_.degree(v);
        if (links > best_links || (links == best_links && deg > best_deg)) {
          best = v;
          best_links = links;
          best_deg = deg;
        }
      }
      placed[best] = true;
      order_.push_back(best);
    }
  }

  bool adjacent(Vertex a, Vertex b) const {
    return adj_[static_cast<std::size_t>(a) * host_.order() + b];
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex p = order_[depth];
    for (Vertex h = 0; h < host_.order(); ++h) {
      if (used_[h] || host_.degree(h) < pattern_.degree(p)) continue;
      bool ok = true;
      for (Vertex q : pattern_.neighbors(p)) {
        if (map_[q] >= 0 && !adjacent(map_[q], h)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      map_[p] = h;
      used_[h] = true;
      if (extend(depth + 1)) return true;
      map_[p] = -1;
      used_[h] = false;
    }
    return false;
  }

  const Graph& pattern_;
  const Graph& host_;
  std::vector<bool> adj_;
  std::vector<Vertex> order_;
  Embedding map_;
  std::vector<bool> used_;
};

}  // namespace detail

/// Non-induced subgraph containment: an injective map sending every pattern
/// edge onto a host edge, if one exists.
inline std::optional<Embedding> subgraph_embedding(const Graph& pattern,
                                                   const Graph& host) {
  return detail::EmbeddingSearch(pattern, host).run();
}

inline bool contains_subgraph(const Graph& pattern, const Graph& host) {
  return subgraph_embedding(pattern, host).has_value();
}

/// True when `map` is injective and sends pattern edges to host edges.
inline bool is_valid_embedding(const Graph& pattern, const Graph& host,
                               const Embedding& map) {
  if (static_cast<int>(map.size()) != pattern.order()) return false;
  std::vector<bool> seen(host.order(), false);
  for (Vertex h : map) {
    if (h < 0 || h >= host.order() || seen[h]) return false;
    seen[h] = true;
  }
  for (const Edge& e : pattern.edges())
    if (!host.has_edge(map[e.u], map[e.v])) return false;
  return true;
}

}  // namespace distex
