//
// distex - distance spectral extremal graph toolkit
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

#include "distex/error.hpp"
#include "distex/graph.hpp"

namespace distex {

/// All-pairs hop counts of a connected graph, row-major.
class DistanceMatrix {
 public:
  DistanceMatrix(int n, std::vector<int> entries)
      : n_(n), d_(std::move(entries)) {
    if (n < 1 || static_cast<int>(d_.size()) != n * n) {
      throw Error(ErrorKind::BadParameters, "distance matrix shape");
    }
  }

  int order() const noexcept { return n_; }
  int operator()(int i, int j) const { return d_[i * n_ + j]; }
  const std::vector<int>& entries() const noexcept { return d_; }

  std::int64_t row_sum(int i) const {
    std::int64_t s = 0;
    for (int j = 0; j < n_; ++j) s += (*this)(i, j);
    return s;
  }

  /// Sum over unordered pairs (the Wiener index of the source graph).
  std::int64_t total() const {
    std::int64_t s = 0;
    for (int v : d_) s += v;
    return s / 2;
  }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  int n_;
  std::vector<int> d_;
};

/// BFS from every vertex. Throws DisconnectedGraph when some pair is
/// unreachable.
inline DistanceMatrix distance_matrix(const Graph& g) {
  const int n = g.order();
  std::vector<int> d(static_cast<std::size_t>(n) * n, -1);
  std::vector<Vertex> queue(n);
  for (Vertex s = 0; s < n; ++s) {
    int* row = d.data() + static_cast<std::size_t>(s) * n;
    row[s] = 0;
    std::size_t head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      Vertex v = queue[head++];
      for (Vertex w : g.neighbors(v)) {
        if (row[w] < 0) {
          row[w] = row[v] + 1;
          queue[tail++] = w;
        }
      }
    }
    if (static_cast<int>(tail) != n) {
      throw Error(ErrorKind::DisconnectedGraph,
                  "vertex " + std::to_string(s) + " reaches only " +
                      std::to_string(tail) + " of " + std::to_string(n) +
                      " vertices");
    }
  }
  return DistanceMatrix(n, std::move(d));
}

}  // namespace distex
