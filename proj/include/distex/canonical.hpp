//
// distex - distance spectral extremal graph toolkit
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <vector>

#include "distex/error.hpp"
#include "distex/graph.hpp"

namespace distex {

/// Largest order accepted by canonical_form. Adjacency rows are single
/// 64-bit words; the search itself is practical well beyond the orders this
/// library enumerates (n <= 12).
inline constexpr int kMaxCanonicalOrder = 64;

namespace detail {

/// Dense bit-row adjacency for graphs with at most 64 vertices.
struct BitGraph {
  int n = 0;
  std::array<std::uint64_t, 64> rows{};

  bool has(int u, int v) const { return (rows[u] >> v) & 1u; }
  void add(int u, int v) {
    rows[u] |= std::uint64_t{1} << v;
    rows[v] |= std::uint64_t{1} << u;
  }
  int degree(int v) const { return std::popcount(rows[v]); }

  static BitGraph from(const Graph& g) {
    if (g.order() > 64) {
      throw Error(ErrorKind::OrderTooLarge,
                  "bit adjacency supports at most 64 vertices");
    }
    BitGraph b;
    b.n = g.order();
    for (const Edge& e : g.edges()) b.add(e.u, e.v);
    return b;
  }

  Graph to_graph() const {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (has(u, v)) edges.emplace_back(u, v);
    return Graph(n, edges);
  }
};

inline std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

}  // namespace detail

/// Isomorphism-invariant key: the adjacency rows of the canonically
/// relabelled graph (plus vertex colours by position, when coloured).
struct CanonicalForm {
  int order = 0;
  std::vector<std::uint64_t> rows;
  std::vector<int> colors;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const noexcept {
    std::size_t h = std::hash<int>{}(f.order);
    for (std::uint64_t r : f.rows) h = h * 0x9E3779B97F4A7C15ull ^ (r + (h >> 7));
    for (int c : f.colors) h = h * 31 + static_cast<std::size_t>(c);
    return h;
  }
};

struct CanonicalLabeling {
  /// order[p] is the vertex placed at canonical position p.
  std::vector<Vertex> order;
  /// position[v] is the canonical position of vertex v.
  std::vector<int> position;
  CanonicalForm form;
};

namespace detail {

/// Individualization-refinement search for the lexicographically least
/// adjacency encoding among refined leaves. Automorphisms found on the way
/// prune sibling subtrees (orbit pruning under the pointwise stabiliser of
/// the current prefix) and whole subtrees (jump back to the divergence node
/// when a leaf reproduces the first or the best leaf).
class CanonicalSearch {
 public:
  CanonicalSearch(const BitGraph& g, std::span<const int> colors) : g_(g) {
    n_ = g.n;
    std::vector<int> color(n_, 0);
    if (!colors.empty()) {
      if (static_cast<int>(colors.size()) != n_) {
        throw Error(ErrorKind::BadParameters, "colour vector size mismatch");
      }
      color.assign(colors.begin(), colors.end());
    }
    std::vector<int> distinct = color;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()),
                   distinct.end());
    Partition p;
    p.count = static_cast<int>(distinct.size());
    for (int v = 0; v < n_; ++v) {
      auto it = std::lower_bound(distinct.begin(), distinct.end(), color[v]);
      p.cells[it - distinct.begin()] |= bit(v);
    }
    refine(p);
    search(p, 0);

    result_.order.assign(best_order_.begin(), best_order_.begin() + n_);
    result_.position.assign(n_, 0);
    for (int i = 0; i < n_; ++i) result_.position[result_.order[i]] = i;
    result_.form.order = n_;
    result_.form.rows.assign(best_rows_.begin(), best_rows_.begin() + n_);
    if (!colors.empty()) {
      result_.form.colors.resize(n_);
      for (int i = 0; i < n_; ++i)
        result_.form.colors[i] = color[result_.order[i]];
    }
  }

  CanonicalLabeling take() { return std::move(result_); }
  const std::vector<std::array<std::int8_t, 64>>& automorphisms() const {
    return autos_;
  }

 private:
  struct Partition {
    int count = 0;
    std::array<std::uint64_t, 64> cells{};
  };
  using Rows = std::array<std::uint64_t, 64>;
  using Order = std::array<std::int8_t, 64>;

  void refine(Partition& p) const {
    bool changed = true;
    std::array<int, 64> count{};
    while (changed) {
      changed = false;
      for (int w = 0; w < p.count && !changed; ++w) {
        const std::uint64_t splitter = p.cells[w];
        for (int x = 0; x < p.count; ++x) {
          const std::uint64_t cell = p.cells[x];
          if (std::has_single_bit(cell)) continue;
          int lo = 64, hi = -1;
          for (std::uint64_t m = cell; m; m &= m - 1) {
            int v = std::countr_zero(m);
            int c = std::popcount(g_.rows[v] & splitter);
            count[v] = c;
            lo = std::min(lo, c);
            hi = std::max(hi, c);
          }
          if (lo == hi) continue;
          std::array<std::uint64_t, 65> parts{};
          int used = 0;
          for (int c = lo; c <= hi; ++c) {
            std::uint64_t part = 0;
            for (std::uint64_t m = cell; m; m &= m - 1) {
              int v = std::countr_zero(m);
              if (count[v] == c) part |= bit(v);
            }
            if (part) parts[used++] = part;
          }
          for (int i = p.count - 1; i > x; --i) p.cells[i + used - 1] = p.cells[i];
          for (int i = 0; i < used; ++i) p.cells[x + i] = parts[i];
          p.count += used - 1;
          x += used - 1;
          changed = true;
        }
      }
    }
  }

  static void individualize(Partition& p, int cell, int v) {
    for (int i = p.count - 1; i > cell; --i) p.cells[i + 1] = p.cells[i];
    p.cells[cell + 1] = p.cells[cell] & ~bit(v);
    p.cells[cell] = bit(v);
    ++p.count;
  }

  int common_prefix(const std::vector<int>& other) const {
    std::size_t d = 0;
    while (d < path_.size() && d < other.size() && path_[d] == other[d]) ++d;
    return static_cast<int>(d);
  }

  void record_automorphism(const Order& from, const Order& to) {
    Order gamma{};
    for (int i = 0; i < n_; ++i) gamma[from[i]] = to[i];
    autos_.push_back(gamma);
  }

  int leaf(const Partition& p, int depth) {
    Order order{};
    std::array<int, 64> pos{};
    for (int i = 0; i < n_; ++i) {
      order[i] = static_cast<std::int8_t>(std::countr_zero(p.cells[i]));
      pos[order[i]] = i;
    }
    Rows rows{};
    for (int i = 0; i < n_; ++i) {
      std::uint64_t r = 0;
      for (std::uint64_t m = g_.rows[order[i]]; m; m &= m - 1)
        r |= bit(pos[std::countr_zero(m)]);
      rows[i] = r;
    }
    if (!have_first_) {
      have_first_ = true;
      first_rows_ = best_rows_ = rows;
      first_order_ = best_order_ = order;
      first_path_ = best_path_ = path_;
      return depth - 1;
    }
    auto same = [&](const Rows& other) {
      return std::equal(rows.begin(), rows.begin() + n_, other.begin());
    };
    if (same(first_rows_)) {
      record_automorphism(first_order_, order);
      return common_prefix(first_path_);
    }
    int cmp = 0;
    for (int i = 0; i < n_ && cmp == 0; ++i) {
      if (rows[i] != best_rows_[i]) cmp = rows[i] < best_rows_[i] ? -1 : 1;
    }
    if (cmp < 0) {
      best_rows_ = rows;
      best_order_ = order;
      best_path_ = path_;
    } else if (cmp == 0) {
      record_automorphism(best_order_, order);
      return common_prefix(best_path_);
    }
    return depth - 1;
  }

  // Orbit representative of v under automorphisms fixing the current prefix.
  struct Orbits {
    std::array<int, 64> parent{};
    int find(int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    }
  };

  Orbits stabiliser_orbits() const {
    Orbits o;
    std::iota(o.parent.begin(), o.parent.begin() + n_, 0);
    for (const Order& gamma : autos_) {
      bool fixes = std::all_of(path_.begin(), path_.end(),
                               [&](int v) { return gamma[v] == v; });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        int a = o.find(v), b = o.find(gamma[v]);
        if (a != b) o.parent[std::max(a, b)] = std::min(a, b);
      }
    }
    return o;
  }

  int search(const Partition& p, int depth) {
    if (p.count == n_) return leaf(p, depth);
    int target = -1, best_size = 65;
    for (int i = 0; i < p.count; ++i) {
      int s = std::popcount(p.cells[i]);
      if (s > 1 && s < best_size) {
        best_size = s;
        target = i;
      }
    }
    const std::uint64_t cell = p.cells[target];
    std::vector<int> explored;
    std::size_t autos_seen = static_cast<std::size_t>(-1);
    Orbits orbits;
    for (std::uint64_t m = cell; m; m &= m - 1) {
      int v = std::countr_zero(m);
      if (!explored.empty()) {
        if (autos_seen != autos_.size()) {
          orbits = stabiliser_orbits();
          autos_seen = autos_.size();
        }
        int rv = orbits.find(v);
        bool pruned = std::any_of(explored.begin(), explored.end(),
                                  [&](int u) { return orbits.find(u) == rv; });
        if (pruned) continue;
      }
      explored.push_back(v);
      Partition child = p;
      individualize(child, target, v);
      refine(child);
      path_.push_back(v);
      int resume = search(child, depth + 1);
      path_.pop_back();
      if (resume < depth) return resume;
    }
    return depth - 1;
  }

  const BitGraph& g_;
  int n_ = 0;
  std::vector<int> path_;
  bool have_first_ = false;
  Rows first_rows_{}, best_rows_{};
  Order first_order_{}, best_order_{};
  std::vector<int> first_path_, best_path_;
  std::vector<Order> autos_;
  CanonicalLabeling result_;
};

inline CanonicalLabeling canonical_labeling(const BitGraph& g,
                                            std::span<const int> colors = {}) {
  return CanonicalSearch(g, colors).take();
}

}  // namespace detail

/// Canonical labelling of g, optionally respecting a vertex colouring
/// (colour classes keep their relative order by colour value).
inline CanonicalLabeling canonical_labeling(const Graph& g,
                                            std::span<const int> colors = {}) {
  if (g.order() > kMaxCanonicalOrder) {
    throw Error(ErrorKind::OrderTooLarge,
                "canonical_form supports order <= " +
                    std::to_string(kMaxCanonicalOrder));
  }
  return detail::canonical_labeling(detail::BitGraph::from(g), colors);
}

inline CanonicalForm canonical_form(const Graph& g) {
  return canonical_labeling(g).form;
}

inline bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

/// g relabelled into canonical position order.
inline Graph canonical_graph(const Graph& g) {
  auto lab = canonical_labeling(g);
  return relabel(g, lab.position);
}

}  // namespace distex
