//
// distex - distance spectral extremal graph toolkit
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "distex/distance.hpp"
#include "distex/error.hpp"
#include "distex/graph.hpp"

namespace distex {

inline constexpr double kDefaultTol = 1e-10;
inline constexpr double kTolFloor = 1e-12;
inline constexpr double kNearTie = 1e-9;

/// Dominant eigenpair of a distance matrix with a certified enclosure of
/// the eigenvalue.
struct PerronPair {
  double rho_lo = 0;
  double rho_hi = 0;
  /// Rayleigh quotient of `vector`.
  double rq = 0;
  /// Positive unit eigenvector estimate.
  std::vector<double> vector;
  /// max_i |(D x - rq x)_i|.
  double residual = 0;
  /// ||D x - rq x||_2 plus rounding slack; the enclosure half-width bound.
  double residual_bound = 0;
  int iterations = 0;

  double mid() const { return 0.5 * (rho_lo + rho_hi); }
  double width() const { return rho_hi - rho_lo; }
};

struct PerronOptions {
  double shift = 1.0;
  int max_iterations = 200000;
};

namespace detail {

inline void matvec(const DistanceMatrix& d, const std::vector<double>& x,
                   std::vector<double>& y) {
  const int n = d.order();
  const int* row = d.entries().data();
  for (int i = 0; i < n; ++i, row += n) {
    double s = 0;
    for (int j = 0; j < n; ++j) s += row[j] * x[j];
    y[i] = s;
  }
}

inline void check_distance_matrix(const DistanceMatrix& d) {
  const int n = d.order();
  for (int i = 0; i < n; ++i) {
    if (d(i, i) != 0) {
      throw Error(ErrorKind::ZeroDiagonalViolated,
                  "nonzero diagonal entry at " + std::to_string(i));
    }
    for (int j = i + 1; j < n; ++j) {
      if (d(i, j) != d(j, i)) {
        throw Error(ErrorKind::NotSymmetric,
                    "entries (" + std::to_string(i) + "," + std::to_string(j) +
                        ") differ");
      }
    }
  }
}

struct Enclosure {
  double lo, hi, rq, res_inf, res_bound;
};

// Bounds for the largest eigenvalue of a symmetric nonnegative irreducible
// matrix from a positive unit vector x and y = D x:
//   rq <= rho                               (Rayleigh)
//   rho <= rq + ||y - rq x||_2              (some eigenvalue lies there; it
//                                            is rho once rq exceeds all others)
//   min y_i/x_i <= rho <= max y_i/x_i       (Collatz-Wielandt)
//   min row sum <= rho <= max row sum
inline Enclosure enclose(const DistanceMatrix& d, const std::vector<double>& x,
                         const std::vector<double>& y, double min_row,
                         double max_row) {
  const int n = d.order();
  double rq = 0;
  for (int i = 0; i < n; ++i) rq += x[i] * y[i];
  double r2 = 0, rinf = 0, cw_lo = std::numeric_limits<double>::infinity();
  double cw_hi = 0;
  for (int i = 0; i < n; ++i) {
    double r = y[i] - rq * x[i];
    r2 += r * r;
    rinf = std::max(rinf, std::abs(r));
    double q = y[i] / x[i];
    cw_lo = std::min(cw_lo, q);
    cw_hi = std::max(cw_hi, q);
  }
  const double slack = 4.0 * (n + 2) * std::numeric_limits<double>::epsilon() *
                       std::max(rq, 1.0);
  const double res_bound = std::sqrt(r2) + slack;
  double lo = std::max({rq, cw_lo}) - slack;
  double hi = std::min(rq + std::sqrt(r2), cw_hi) + slack;
  lo = std::max(lo, min_row);
  hi = std::min(hi, max_row);
  if (lo > hi) lo = hi = std::clamp(rq, min_row, max_row);
  return {lo, hi, rq, rinf, res_bound};
}

}  // namespace detail

/// Shifted power iteration on D + shift*I from the all-ones vector until the
/// certified enclosure is at most `tol` wide. Deterministic for fixed input.
inline PerronPair perron(const DistanceMatrix& d, double tol = kDefaultTol,
                         PerronOptions opt = {}) {
  if (!(tol > 0)) throw Error(ErrorKind::BadParameters, "tol must be > 0");
  detail::check_distance_matrix(d);
  const int n = d.order();
  double min_row = std::numeric_limits<double>::infinity(), max_row = 0;
  for (int i = 0; i < n; ++i) {
    double s = static_cast<double>(d.row_sum(i));
    min_row = std::min(min_row, s);
    max_row = std::max(max_row, s);
  }
  PerronPair out;
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n))), y(n);
  double best_width = std::numeric_limits<double>::infinity();
  int since_best = 0;
  for (int it = 1; it <= opt.max_iterations; ++it) {
    detail::matvec(d, x, y);
    auto e = detail::enclose(d, x, y, min_row, max_row);
    if (e.hi - e.lo <= tol) {
      out.rho_lo = e.lo;
      out.rho_hi = e.hi;
      out.rq = e.rq;
      out.residual = e.res_inf;
      out.residual_bound = e.res_bound;
      out.iterations = it;
      out.vector = x;
      return out;
    }
    if (e.hi - e.lo < best_width * (1 - 1e-3)) {
      best_width = e.hi - e.lo;
      since_best = 0;
    } else if (++since_best > 500) {
      throw Error(ErrorKind::NoConvergence,
                  "enclosure stalled at width " + std::to_string(best_width) +
                      " above tol " + std::to_string(tol));
    }
    double norm = 0;
    for (int i = 0; i < n; ++i) {
      y[i] += opt.shift * x[i];
      norm += y[i] * y[i];
    }
    norm = std::sqrt(norm);
    for (int i = 0; i < n; ++i) x[i] = y[i] / norm;
  }
  throw Error(ErrorKind::NoConvergence,
              "iteration cap " + std::to_string(opt.max_iterations) + " reached");
}

inline PerronPair perron(const Graph& g, double tol = kDefaultTol) {
  return perron(distance_matrix(g), tol);
}

enum class Verdict { Less, Greater, Indeterminate };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Less: return "Less";
    case Verdict::Greater: return "Greater";
    case Verdict::Indeterminate: return "Indeterminate";
  }
  return "?";
}

/// Outcome of comparing rho(g) against rho(h).
struct RhoComparison {
  Verdict verdict = Verdict::Indeterminate;
  /// Certified lower bound on |rho(g) - rho(h)|; 0 when indeterminate.
  double gap_lo = 0;
  PerronPair g, h;
};

inline RhoComparison compare_pairs(const PerronPair& a, const PerronPair& b) {
  RhoComparison c{Verdict::Indeterminate, 0, a, b};
  if (a.rho_hi < b.rho_lo) {
    c.verdict = Verdict::Less;
    c.gap_lo = b.rho_lo - a.rho_hi;
  } else if (b.rho_hi < a.rho_lo) {
    c.verdict = Verdict::Greater;
    c.gap_lo = a.rho_lo - b.rho_hi;
  }
  return c;
}

/// Compares certified enclosures, tightening tol by factors of 100 down to
/// `floor` while they overlap.
inline RhoComparison compare_rho(const DistanceMatrix& dg, const DistanceMatrix& dh,
                                 double tol = kDefaultTol, double floor = kTolFloor) {
  RhoComparison last;
  for (double t = tol;; t = std::max(t / 100, floor)) {
    try {
      last = compare_pairs(perron(dg, t), perron(dh, t));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoConvergence || t == tol) throw;
      return last;
    }
    if (last.verdict != Verdict::Indeterminate || t <= floor) return last;
  }
}

inline RhoComparison compare_rho(const Graph& g, const Graph& h,
                                 double tol = kDefaultTol, double floor = kTolFloor) {
  return compare_rho(distance_matrix(g), distance_matrix(h), tol, floor);
}

/// Correspondence from h to g by vertex label: out[i] is the vertex of g
/// carrying h's label of vertex i.
inline std::vector<Vertex> label_correspondence(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) {
    throw Error(ErrorKind::OrderMismatch, "graphs differ in order");
  }
  std::vector<Vertex> corr(h.order());
  for (Vertex i = 0; i < h.order(); ++i) corr[i] = g.at(h.label(i));
  return corr;
}

/// x^T (D(g) - D(h)) x for the unit Perron vector x of h, with h-vertex i
/// matched to g-vertex corr[i]. Positive values certify rho(g) > rho(h)
/// up to the accuracy of x.
inline double quadratic_form_delta(const Graph& g, const Graph& h,
                                   const std::vector<Vertex>& corr,
                                   double tol = kDefaultTol) {
  if (g.order() != h.order() || static_cast<int>(corr.size()) != h.order()) {
    throw Error(ErrorKind::OrderMismatch, "graphs differ in order");
  }
  std::vector<bool> seen(g.order(), false);
  for (Vertex c : corr) {
    g.check_vertex(c);
    if (seen[c]) throw Error(ErrorKind::BadParameters, "correspondence is not a bijection");
    seen[c] = true;
  }
  const DistanceMatrix dg = distance_matrix(g);
  const DistanceMatrix dh = distance_matrix(h);
  const std::vector<double> x = perron(dh, tol).vector;
  const int n = h.order();
  double s = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      s += (dg(corr[i], corr[j]) - dh(i, j)) * x[i] * x[j];
  return s;
}

/// True when every twin pair has Perron coordinates within tol * ||x||_inf.
inline bool twin_perron_check(const Graph& g, double tol = kNearTie) {
  const auto x = perron(g).vector;
  const double scale = *std::max_element(x.begin(), x.end());
  for (auto [u, v] : twin_pairs(g))
    if (std::abs(x[u] - x[v]) > tol * scale) return false;
  return true;
}

}  // namespace distex
