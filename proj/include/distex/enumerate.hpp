//
// distex - distance spectral extremal graph toolkit
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <unordered_set>
#include <vector>

#include "distex/canonical.hpp"
#include "distex/error.hpp"
#include "distex/graph.hpp"
#include "distex/parallel.hpp"
#include "distex/planarity.hpp"

namespace distex {

enum class GraphClass { Connected, ConnectedPlanar, Tree, Cactus };

enum class GenerationMethod {
  /// Canonical construction path: vertex augmentation with canonical
  /// deletion of a least-degree non-cut vertex.
  Augmentation,
  /// All labelled graphs, reduced by canonical form (n <= 7).
  Labeled,
};

struct EnumerateOptions {
  GraphClass graph_class = GraphClass::Connected;
  /// Cactus cycle count (exact at the requested order).
  int cycles = 0;
  int jobs = 1;
  GenerationMethod method = GenerationMethod::Augmentation;
};

inline int enumeration_cap(GraphClass c) {
  switch (c) {
    case GraphClass::Connected:
    case GraphClass::ConnectedPlanar: return 10;
    case GraphClass::Tree:
    case GraphClass::Cactus: return 12;
  }
  return 0;
}

inline constexpr int kLabeledCap = 7;

namespace detail {

using Rows = std::vector<std::uint64_t>;

inline BitGraph bitgraph_from_rows(const Rows& rows) {
  BitGraph b;
  b.n = static_cast<int>(rows.size());
  std::copy(rows.begin(), rows.end(), b.rows.begin());
  return b;
}

inline bool bit_connected(const BitGraph& g, std::uint64_t mask) {
  if (mask == 0) return true;
  std::uint64_t reach = mask & (~mask + 1);
  std::uint64_t frontier = reach;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t m = frontier; m; m &= m - 1) next |= g.rows[std::countr_zero(m)];
    next &= mask & ~reach;
    reach |= next;
    frontier = next;
  }
  return reach == mask;
}

inline std::uint64_t all_mask(int n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

/// Bit set of vertices whose removal keeps g connected.
inline std::uint64_t non_cut_vertices(const BitGraph& g) {
  const std::uint64_t all = all_mask(g.n);
  std::uint64_t out = 0;
  for (int v = 0; v < g.n; ++v)
    if (bit_connected(g, all & ~bit(v))) out |= bit(v);
  return out;
}

inline int edge_count(const BitGraph& g) {
  int s = 0;
  for (int v = 0; v < g.n; ++v) s += std::popcount(g.rows[v]);
  return s / 2;
}

struct ClassFilter {
  GraphClass cls;
  int max_cycles;

  /// Admissible at an intermediate order (hereditary under deleting a
  /// non-cut vertex).
  bool admit(const BitGraph& g) const {
    switch (cls) {
      case GraphClass::Connected:
      case GraphClass::Tree: return true;
      case GraphClass::ConnectedPlanar: return planarity_test(g.to_graph());
      case GraphClass::Cactus: {
        if (edge_count(g) - g.n + 1 > max_cycles) return false;
        return is_cactus(g.to_graph());
      }
    }
    return false;
  }
  bool final_ok(const BitGraph& g) const {
    if (cls == GraphClass::Cactus) return edge_count(g) - g.n + 1 == max_cycles;
    return true;
  }
  int max_subset(int parent_order) const {
    switch (cls) {
      case GraphClass::Tree: return 1;
      case GraphClass::Cactus: return std::min(parent_order, max_cycles + 1);
      default: return parent_order;
    }
  }
};

inline bool same_orbit(const BitGraph& g, int a, int b) {
  std::vector<int> ca(g.n, 0), cb(g.n, 0);
  ca[a] = 1;
  cb[b] = 1;
  return canonical_labeling(g, ca).form == canonical_labeling(g, cb).form;
}

// Children of `parent` accepted by canonical deletion, deduplicated among
// siblings, as canonical rows.
inline std::vector<Rows> augment(const Rows& parent, const ClassFilter& filter,
                                 bool last_level) {
  const int pn = static_cast<int>(parent.size());
  const int w = pn;
  BitGraph base = bitgraph_from_rows(parent);
  base.n = pn + 1;
  std::vector<Rows> out;
  std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
  const int max_s = filter.max_subset(pn);
  const std::uint64_t limit = std::uint64_t{1} << pn;
  for (std::uint64_t s = 1; s < limit; ++s) {
    const int deg_w = std::popcount(s);
    if (deg_w > max_s) continue;
    BitGraph c = base;
    c.rows[w] = s;
    for (std::uint64_t m = s; m; m &= m - 1) c.rows[std::countr_zero(m)] |= bit(w);
    // Canonical vertex: least degree among non-cut vertices, then least
    // canonical position.
    const std::uint64_t nc = non_cut_vertices(c);
    int min_deg = 65;
    for (std::uint64_t m = nc; m; m &= m - 1) min_deg = std::min(min_deg, c.degree(std::countr_zero(m)));
    if (deg_w != min_deg) continue;
    if (!filter.admit(c)) continue;
    if (last_level && !filter.final_ok(c)) continue;
    CanonicalSearch search(c, {});
    const auto& autos = search.automorphisms();
    CanonicalLabeling lab = search.take();
    int m_vertex = -1;
    for (int p = 0; p < c.n; ++p) {
      int v = lab.order[p];
      if ((nc & bit(v)) && c.degree(v) == min_deg) {
        m_vertex = v;
        break;
      }
    }
    if (m_vertex != w) {
      bool joined = false;
      // Orbits of the automorphisms met during the search.
      std::vector<int> parent_of(c.n);
      std::iota(parent_of.begin(), parent_of.end(), 0);
      auto find = [&](int v) {
        while (parent_of[v] != v) v = parent_of[v] = parent_of[parent_of[v]];
        return v;
      };
      for (const auto& gamma : autos)
        for (int v = 0; v < c.n; ++v) {
          int a = find(v), b = find(gamma[v]);
          if (a != b) parent_of[std::max(a, b)] = std::min(a, b);
        }
      joined = find(m_vertex) == find(w);
      if (!joined && !same_orbit(c, m_vertex, w)) continue;
    }
    if (!seen.insert(lab.form).second) continue;
    out.push_back(lab.form.rows);
  }
  return out;
}

inline std::vector<Rows> augmentation_levels(int n, const ClassFilter& filter, int jobs) {
  std::vector<Rows> level{Rows{0}};
  for (int k = 2; k <= n; ++k) {
    std::vector<std::vector<Rows>> per_parent(level.size());
    const bool last = k == n;
    parallel_for(level.size(), jobs, [&](std::size_t i) {
      per_parent[i] = augment(level[i], filter, last);
    });
    std::vector<Rows> next;
    for (auto& v : per_parent)
      for (auto& r : v) next.push_back(std::move(r));
    std::sort(next.begin(), next.end());
    level = std::move(next);
  }
  if (n == 1 && !filter.final_ok(bitgraph_from_rows(level[0]))) level.clear();
  return level;
}

inline std::vector<Rows> labeled_classes(int n, const ClassFilter& filter) {
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
  std::vector<Rows> out;
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    BitGraph g;
    g.n = n;
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if ((mask >> b) & 1u) g.add(pairs[b].first, pairs[b].second);
    if (!bit_connected(g, all_mask(n))) continue;
    if (filter.cls == GraphClass::Tree && edge_count(g) != n - 1) continue;
    if (!filter.admit(g) || !filter.final_ok(g)) continue;
    auto form = canonical_labeling(g).form;
    if (seen.insert(form).second) out.push_back(form.rows);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// One graph per isomorphism class of the requested class and order, in
/// canonical labelling, sorted by canonical form. The result does not
/// depend on the worker count.
inline std::vector<Graph> enumerate_graphs(int n, const EnumerateOptions& opt = {}) {
  if (n < 1) throw Error(ErrorKind::BadParameters, "order must be >= 1");
  const int cap = opt.method == GenerationMethod::Labeled
                      ? kLabeledCap
                      : enumeration_cap(opt.graph_class);
  if (n > cap) {
    throw Error(ErrorKind::OrderTooLarge,
                "enumeration is capped at n = " + std::to_string(cap));
  }
  if (opt.graph_class == GraphClass::Cactus && (opt.cycles < 0 || opt.cycles > 3)) {
    throw Error(ErrorKind::BadParameters, "cactus cycle count must be in 0..3");
  }
  detail::ClassFilter filter{opt.graph_class, opt.cycles};
  auto rows = opt.method == GenerationMethod::Labeled
                  ? detail::labeled_classes(n, filter)
                  : detail::augmentation_levels(n, filter, std::max(1, opt.jobs));
  std::vector<Graph> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(detail::bitgraph_from_rows(r).to_graph());
  return out;
}

inline std::vector<Graph> connected_graphs(int n, int jobs = 1) {
  return enumerate_graphs(n, {GraphClass::Connected, 0, jobs});
}

inline std::vector<Graph> connected_planar_graphs(int n, int jobs = 1) {
  return enumerate_graphs(n, {GraphClass::ConnectedPlanar, 0, jobs});
}

inline std::vector<Graph> trees(int n) { return enumerate_graphs(n, {GraphClass::Tree}); }

/// Cacti of order n with exactly k cycles.
inline std::vector<Graph> cacti(int n, int k) {
  return enumerate_graphs(n, {GraphClass::Cactus, k});
}

}  // namespace distex
