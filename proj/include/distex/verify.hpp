//
// distex - distance spectral extremal graph toolkit
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "distex/canonical.hpp"
#include "distex/coloring.hpp"
#include "distex/enumerate.hpp"
#include "distex/families.hpp"
#include "distex/graph6.hpp"
#include "distex/parallel.hpp"
#include "distex/planarity.hpp"
#include "distex/spectral.hpp"
#include "distex/structure.hpp"

namespace distex {

/// Certified gaps below this are reported as near ties.
inline constexpr double kMinGap = 1e-6;

enum class Status { Pass, Falsified, Indeterminate };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Falsified: return "falsified";
    case Status::Indeterminate: return "indeterminate";
  }
  return "?";
}

/// CLI exit code for a status: 0 pass, 1 falsified, 2 indeterminate.
inline int exit_code(Status s) {
  return s == Status::Pass ? 0 : (s == Status::Falsified ? 1 : 2);
}

inline Status worst(Status a, Status b) {
  auto rank = [](Status s) { return s == Status::Pass ? 0 : (s == Status::Indeterminate ? 1 : 2); };
  return rank(a) >= rank(b) ? a : b;
}

struct VerificationReport {
  std::string statement;
  int n = 0;
  std::vector<int> params;
  std::size_t population = 0;
  std::string expected;
  std::string argmax;
  double argmax_rho_lo = 0, argmax_rho_hi = 0;
  std::optional<std::string> runner_up;
  double runner_up_rho_hi = 0;
  /// argmax lower bound minus the largest competitor upper bound; infinite
  /// for a population of one.
  double gap_lo = std::numeric_limits<double>::infinity();
  double elapsed_ms = 0;
  std::vector<std::string> failures;
  std::vector<std::pair<std::string, std::string>> notes;
  Status status = Status::Pass;

  bool passed() const { return status == Status::Pass; }
  void fail(Status s, std::string why) {
    status = worst(status, s);
    failures.push_back(std::move(why));
  }
};

namespace detail {

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

/// Fills argmax, runner-up and gap fields and checks that the certified
/// argmax is unique and accepted by `is_expected`.
inline void analyse_extremum(VerificationReport& r, const std::vector<Graph>& pop,
                             const std::function<bool(const Graph&)>& is_expected,
                             std::string expected, double tol, int jobs) {
  r.population = pop.size();
  r.expected = std::move(expected);
  if (pop.empty()) {
    r.fail(Status::Falsified, "empty population");
    return;
  }
  std::vector<PerronPair> rho(pop.size());
  parallel_for(pop.size(), jobs, [&](std::size_t i) { rho[i] = perron(pop[i], tol); });
  std::size_t best = 0;
  for (std::size_t i = 1; i < pop.size(); ++i)
    if (rho[i].mid() > rho[best].mid()) best = i;
  // Competitors whose enclosure reaches the argmax are re-compared with
  // tightened tolerance.
  for (std::size_t i = 0; i < pop.size(); ++i) {
    if (i == best || rho[i].rho_hi < rho[best].rho_lo) continue;
    auto c = compare_rho(pop[best], pop[i], tol / 100);
    if (c.verdict == Verdict::Greater) {
      rho[best] = c.g;
      rho[i] = c.h;
    } else if (c.verdict == Verdict::Less) {
      r.fail(Status::Falsified, "argmax selection overturned by tightened comparison");
      return;
    } else {
      r.fail(Status::Indeterminate,
             "near tie between " + encode_graph6(pop[best]) + " and " + encode_graph6(pop[i]));
    }
  }
  r.argmax = encode_graph6(pop[best]);
  r.argmax_rho_lo = rho[best].rho_lo;
  r.argmax_rho_hi = rho[best].rho_hi;
  std::optional<std::size_t> second;
  for (std::size_t i = 0; i < pop.size(); ++i) {
    if (i == best) continue;
    if (!second || rho[i].rho_hi > rho[*second].rho_hi) second = i;
  }
  if (second) {
    r.runner_up = encode_graph6(pop[*second]);
    r.runner_up_rho_hi = rho[*second].rho_hi;
    r.gap_lo = rho[best].rho_lo - rho[*second].rho_hi;
    if (r.gap_lo < kMinGap && r.status == Status::Pass) {
      r.fail(Status::Indeterminate, "certified gap below 1e-6");
    }
  }
  if (!is_expected(pop[best])) {
    r.fail(Status::Falsified, "argmax " + r.argmax + " is not " + r.expected);
  }
}

inline void analyse_extremum(VerificationReport& r, const std::vector<Graph>& pop,
                             const Graph& expected, double tol, int jobs) {
  analyse_extremum(
      r, pop, [&](const Graph& g) { return is_isomorphic(g, expected); },
      encode_graph6(expected), tol, jobs);
}

template <typename Pred>
std::vector<Graph> filter_population(std::vector<Graph> pop, Pred keep, int jobs) {
  std::vector<char> ok(pop.size(), 0);
  parallel_for(pop.size(), jobs, [&](std::size_t i) { ok[i] = keep(pop[i]) ? 1 : 0; });
  std::vector<Graph> out;
  for (std::size_t i = 0; i < pop.size(); ++i)
    if (ok[i]) out.push_back(std::move(pop[i]));
  return out;
}

}  // namespace detail

/// Connected 4-chromatic planar graphs of order n, one per class.
inline std::vector<Graph> four_chromatic_planar_graphs(int n, int jobs = 1) {
  return detail::filter_population(
      connected_planar_graphs(n, jobs),
      [](const Graph& g) { return chromatic_number(g).colors_used == 4; }, jobs);
}

/// The kite K4^(n) is the unique certified maximiser of rho among connected
/// 4-chromatic planar graphs of order n.
inline VerificationReport verify_main_theorem(int n, double tol = kDefaultTol, int jobs = 1) {
  if (n < 4 || n > 9) throw Error(ErrorKind::BadParameters, "main theorem oracle needs 4 <= n <= 9");
  detail::Stopwatch clock;
  VerificationReport r;
  r.statement = "main";
  r.n = n;
  auto pop = four_chromatic_planar_graphs(n, jobs);
  for (const Graph& g : pop)
    if (!planarity_test(g)) r.fail(Status::Falsified, "nonplanar member " + encode_graph6(g));
  detail::analyse_extremum(r, pop, kite(4, n), tol, jobs);
  r.elapsed_ms = clock.ms();
  return r;
}

/// K3^(n) is the unique maximiser among connected 3-chromatic graphs.
inline VerificationReport verify_chromatic3(int n, double tol = kDefaultTol, int jobs = 1) {
  if (n < 3) throw Error(ErrorKind::BadParameters, "chromatic3 oracle needs n >= 3");
  detail::Stopwatch clock;
  VerificationReport r;
  r.statement = "chromatic3";
  r.n = n;
  auto pop = detail::filter_population(
      connected_graphs(n, jobs),
      [](const Graph& g) { return chromatic_number(g).colors_used == 3; }, jobs);
  detail::analyse_extremum(r, pop, kite(3, n), tol, jobs);
  r.elapsed_ms = clock.ms();
  return r;
}

/// P_n is the unique maximiser among connected graphs of order n.
inline VerificationReport verify_path_max(int n, double tol = kDefaultTol, int jobs = 1) {
  detail::Stopwatch clock;
  VerificationReport r;
  r.statement = "path_max";
  r.n = n;
  detail::analyse_extremum(r, connected_graphs(n, jobs), path_graph(n), tol, jobs);
  r.elapsed_ms = clock.ms();
  return r;
}

/// The maximiser over cacti of order n with exactly k cycles is a saw
/// S(p,q;n-2k-1) with p+q = k (the path when k = 0).
inline VerificationReport verify_cacti_extremal(int n, int k, double tol = kDefaultTol,
                                                int jobs = 1) {
  if (k < 0 || k > 3) throw Error(ErrorKind::BadParameters, "cactus cycle count must be in 0..3");
  if (k > 0 && n < 2 * k + 1) {
    throw Error(ErrorKind::BadParameters, "no cactus with k cycles below order 2k+1");
  }
  detail::Stopwatch clock;
  VerificationReport r;
  r.statement = "cacti";
  r.n = n;
  r.params = {k};
  const int l = n - 2 * k - 1;
  std::vector<Graph> shapes;
  std::string names;
  if (k == 0) {
    shapes.push_back(path_graph(n));
    names = "path(" + std::to_string(n) + ")";
  }
  for (int p = k; k > 0 && p >= 0; --p) {
    shapes.push_back(saw(p, k - p, l));
    names += (names.empty() ? "" : "|") + shapes.back().name();
  }
  detail::analyse_extremum(
      r, cacti(n, k),
      [&](const Graph& g) {
        for (const Graph& s : shapes) {
          if (!is_isomorphic(g, s)) continue;
          r.notes.emplace_back("shape", s.name());
          return true;
        }
        return false;
      },
      names, tol, jobs);
  r.elapsed_ms = clock.ms();
  return r;
}

/// Among trees of order n with maximum degree delta, the broom
/// B_delta^(n) strictly dominates every other tree.
inline VerificationReport verify_broom_extremal(int n, int delta, double tol = kDefaultTol,
                                                int jobs = 1) {
  detail::Stopwatch clock;
  VerificationReport r;
  r.statement = "broom";
  r.n = n;
  r.params = {delta};
  auto pop = detail::filter_population(
      trees(n), [&](const Graph& g) { return g.max_degree() == delta; }, jobs);
  detail::analyse_extremum(r, pop, broom(delta, n), tol, jobs);
  r.elapsed_ms = clock.ms();
  return r;
}

/// Every connected 4-chromatic planar graph of order n has at least four
/// triangles.
inline VerificationReport verify_grunbaum_aksenov(int n, int jobs = 1) {
  detail::Stopwatch clock;
  VerificationReport r;
  r.statement = "grunbaum_aksenov";
  r.n = n;
  auto pop = four_chromatic_planar_graphs(n, jobs);
  r.population = pop.size();
  int fewest = std::numeric_limits<int>::max();
  for (const Graph& g : pop) {
    int t = triangle_count(g);
    fewest = std::min(fewest, t);
    if (t < 4) r.fail(Status::Falsified, encode_graph6(g) + " has " + std::to_string(t) + " triangles");
  }
  if (!pop.empty()) r.notes.emplace_back("min_triangles", std::to_string(fewest));
  r.elapsed_ms = clock.ms();
  return r;
}

/// Every planar 4-critical graph of order n other than K4, the Moser
/// spindle and M' satisfies property P.
inline VerificationReport verify_property_p(int n, int cycle_cap = kDefaultCycleCap, int jobs = 1) {
  detail::Stopwatch clock;
  VerificationReport r;
  r.statement = "property_p";
  r.n = n;
  auto critical = detail::filter_population(
      four_chromatic_planar_graphs(n, jobs), [](const Graph& g) { return is_k_critical(g, 4); },
      jobs);
  r.population = critical.size();
  const std::vector<Graph> exempt{complete_graph(4), moser(), mycielskian_triangle()};
  int exempt_seen = 0;
  for (const Graph& g : critical) {
    bool is_exempt = std::any_of(exempt.begin(), exempt.end(),
                                 [&](const Graph& e) { return is_isomorphic(g, e); });
    if (is_exempt) {
      ++exempt_seen;
      continue;
    }
    if (!has_property_p(g, cycle_cap)) r.fail(Status::Falsified, encode_graph6(g) + " lacks property P");
  }
  r.notes.emplace_back("four_critical", std::to_string(critical.size()));
  r.notes.emplace_back("exempt_cores", std::to_string(exempt_seen));
  r.elapsed_ms = clock.ms();
  return r;
}

/// The main-theorem argmax splits into a 4-critical planar core with
/// paths attached by their ends at an independent set of the core.
inline VerificationReport verify_core_plus_paths(int n, double tol = kDefaultTol, int jobs = 1) {
  detail::Stopwatch clock;
  VerificationReport r = verify_main_theorem(n, tol, jobs);
  r.statement = "core_plus_paths";
  if (r.argmax.empty()) {
    r.elapsed_ms = clock.ms();
    return r;
  }
  const Graph g = decode_graph6(r.argmax);
  auto dec = core_plus_paths(g);
  if (!dec) {
    r.fail(Status::Falsified, "argmax has no core-plus-paths decomposition");
  } else {
    if (!is_k_critical(dec->core, 4)) r.fail(Status::Falsified, "core is not 4-critical");
    if (!planarity_test(dec->core)) r.fail(Status::Falsified, "core is not planar");
    if (!is_independent_set(g, dec->attachments)) {
      r.fail(Status::Falsified, "attachment vertices are not independent");
    }
    r.notes.emplace_back("core", encode_graph6(dec->core));
    std::string att;
    for (std::size_t i = 0; i < dec->attachments.size(); ++i) {
      att += (i ? ";" : "") + std::to_string(dec->attachments[i]) + ":";
      for (std::size_t j = 0; j < dec->path_lengths[i].size(); ++j)
        att += (j ? "," : "") + std::to_string(dec->path_lengths[i][j]);
    }
    r.notes.emplace_back("attachments", att);
  }
  r.elapsed_ms = clock.ms();
  return r;
}

}  // namespace distex
