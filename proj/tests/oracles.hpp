//
// distex - distance spectral extremal graph toolkit
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

// Slow, independent reference implementations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "distex/graph.hpp"

#ifdef DISTEX_WITH_EIGEN
#include <Eigen/Dense>
#endif

namespace oracle {

using distex::Edge;
using distex::Graph;

inline std::vector<std::vector<int>> adjacency(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (const Edge& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
  return a;
}

/// Floyd-Warshall hop distances; -1 for unreachable pairs.
inline std::vector<std::vector<int>> floyd(const Graph& g) {
  const int n = g.order();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (const Edge& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (int& x : row)
      if (x >= inf) x = -1;
  return d;
}

/// Every permutation of the vertices, for tiny orders.
template <class F>
void for_each_permutation(int n, F&& f) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    f(p);
  } while (std::next_permutation(p.begin(), p.end()));
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  auto degs = [](const Graph& g) {
    std::vector<int> d;
    for (int v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degs(a) != degs(b)) return false;
  bool found = false;
  const auto ab = adjacency(b);
  std::vector<int> p(a.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (const Edge& e : a.edges())
      if (!ab[p[e.u]][p[e.v]]) {
        ok = false;
        break;
      }
    if (ok) found = true;
  } while (!found && std::next_permutation(p.begin(), p.end()));
  return found;
}

inline std::uint64_t automorphism_count(const Graph& g) {
  std::uint64_t count = 0;
  const auto a = adjacency(g);
  for_each_permutation(g.order(), [&](const std::vector<int>& p) {
    for (const Edge& e : g.edges())
      if (!a[p[e.u]][p[e.v]]) return;
    ++count;
  });
  return count;
}

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline std::uint64_t binomial(int n, int k) {
  std::uint64_t b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

/// Labelled connected graphs on n vertices by the standard recursion.
inline std::uint64_t labeled_connected(int n) {
  std::vector<std::uint64_t> c(n + 1, 0);
  auto all = [](int m) { return std::uint64_t{1} << (m * (m - 1) / 2); };
  for (int m = 1; m <= n; ++m) {
    std::uint64_t s = all(m);
    for (int k = 1; k < m; ++k) s -= binomial(m - 1, k - 1) * c[k] * all(m - k);
    c[m] = s;
  }
  return c[n];
}

/// Smallest k admitting a proper k-colouring, by plain backtracking.
inline int chromatic(const Graph& g) {
  const int n = g.order();
  const auto a = adjacency(g);
  std::vector<int> col(n, -1);
  for (int k = 1; k <= n; ++k) {
    auto place = [&](auto&& self, int v) -> bool {
      if (v == n) return true;
      for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (int u = 0; u < v; ++u)
          if (a[u][v] && col[u] == c) ok = false;
        if (!ok) continue;
        col[v] = c;
        if (self(self, v + 1)) return true;
      }
      col[v] = -1;
      return false;
    };
    if (place(place, 0)) return k;
  }
  return n;
}

inline int triangles(const Graph& g) {
  const auto a = adjacency(g);
  const int n = g.order();
  int t = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) t += a[i][j] && a[j][k] && a[i][k];
  return t;
}

/// Number of simple u-v paths avoiding the edge uv itself.
inline int detour_count(const Graph& g, int u, int v) {
  const auto a = adjacency(g);
  std::vector<bool> seen(g.order(), false);
  int count = 0;
  auto dfs = [&](auto&& self, int x, bool first) -> void {
    if (x == v) {
      ++count;
      return;
    }
    seen[x] = true;
    for (int y = 0; y < g.order(); ++y) {
      if (!a[x][y] || seen[y]) continue;
      if (first && y == v) continue;
      self(self, y, false);
    }
    seen[x] = false;
  };
  dfs(dfs, u, true);
  return count;
}

/// Cactus test from the definition: each edge lies on at most one cycle.
inline bool cactus(const Graph& g) {
  for (const Edge& e : g.edges())
    if (detour_count(g, e.u, e.v) > 1) return false;
  return true;
}

inline std::vector<std::vector<int>> distance_rows(const Graph& g) { return floyd(g); }

#ifdef DISTEX_WITH_EIGEN
/// Dense symmetric eigensolve of the distance matrix.
inline double rho(const Graph& g) {
  const auto d = floyd(g);
  const int n = g.order();
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = d[i][j];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

inline Eigen::VectorXd perron_vector(const Graph& g) {
  const auto d = floyd(g);
  const int n = g.order();
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = d[i][j];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  Eigen::VectorXd x = es.eigenvectors().col(n - 1);
  if (x.sum() < 0) x = -x;
  return x / x.norm();
}
#endif

/// Defining sums of the lemma quadratics, valid inside each sum's range.
inline long long broom_kite_sum(long long n, long long j) {
  long long s = -2 * (j - 2);
  for (long long i = 3; i <= n - 2; ++i) s += std::llabs(i - j);
  return s;
}

inline long long saw30_sum(long long n, long long k) {
  long long s = -(k - 2);
  for (long long j = 5; j <= n - 2; ++j) s += std::llabs(k - j);
  return s;
}

inline long long saw21_sum(long long n, long long k) {
  long long s = 3 * (n - 3 - k) - 2 * (k - 1);
  for (long long j = 3; j <= n - 4; ++j) s += std::llabs(k - j);
  return s;
}

// ---------------------------------------------------------------------------
// Random graphs

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

/// A random spanning tree plus extra edges with probability p.
inline Graph random_connected(int n, double p, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    edges.emplace_back(perm[i], perm[pick(rng)]);
  }
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) && std::find(edges.begin(), edges.end(), Edge(u, v)) == edges.end())
        edges.emplace_back(u, v);
  return Graph(n, edges);
}

}  // namespace oracle
