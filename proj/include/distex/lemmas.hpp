//
// distex - distance spectral extremal graph toolkit
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <chrono>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "distex/families.hpp"
#include "distex/parallel.hpp"
#include "distex/spectral.hpp"
#include "distex/verify.hpp"

namespace distex {

/// One strict inequality rho(smaller) < rho(larger).
struct LemmaEntry {
  std::string lemma;
  int n = 0;
  std::vector<int> params;
  Verdict verdict = Verdict::Indeterminate;
  double gap_lo = 0;
  bool near_tie = false;
};

struct LemmaSweep {
  int n_max = 0;
  std::vector<LemmaEntry> entries;
  /// Smallest certified gap per lemma.
  std::map<std::string, double> min_gap;
  double elapsed_ms = 0;
  Status status = Status::Pass;
  std::vector<std::string> failures;
};

namespace detail {

struct LemmaCase {
  std::string lemma;
  int n;
  std::vector<int> params;
  Graph smaller;
  Graph larger;
};

inline std::vector<LemmaCase> lemma_cases(int n_max) {
  std::vector<LemmaCase> cases;
  for (int n = 7; n <= n_max; ++n) {
    const Graph k4 = kite(4, n);
    cases.push_back({"B5", n, {}, broom(5, n), k4});
    cases.push_back({"S30", n, {n - 7}, saw(3, 0, n - 7), k4});
    cases.push_back({"S21", n, {n - 7}, saw(2, 1, n - 7), k4});
    for (int t = 0; t <= n - 7; ++t) {
      cases.push_back({"G1", n, {t, n - 7 - t}, g1(t, n - 7 - t), k4});
      cases.push_back({"G2", n, {t, n - 7 - t}, g2(t, n - 7 - t), k4});
    }
    for (int r = 1; r <= n - 6; ++r)
      for (int s = 1; r + s <= n - 5; ++s) {
        const int t = n - 4 - r - s;
        cases.push_back({"M1'", n, {r, s, t}, m1_prime(r, s, t), k4});
      }
    cases.push_back({"M2'", n, {}, m2_prime(n), k4});
    for (int d = 3; d <= n - 1; ++d)
      cases.push_back({"broom_chain", n, {d}, broom(d, n), broom(d - 1, n)});
  }
  return cases;
}

}  // namespace detail

inline const std::vector<std::string>& lemma_names() {
  static const std::vector<std::string> names{"B5", "S30", "S21", "G1", "G2",
                                              "M1'", "M2'", "broom_chain"};
  return names;
}

/// Every rho inequality of the lemma families for orders 7..n_max and all
/// tail splits, as certified strict verdicts.
inline LemmaSweep sweep_rho_lemmas(int n_max, double tol = kDefaultTol, int jobs = 1) {
  if (n_max < 7) throw Error(ErrorKind::BadParameters, "n_max must be >= 7");
  detail::Stopwatch clock;
  LemmaSweep out;
  out.n_max = n_max;
  const auto cases = detail::lemma_cases(n_max);
  out.entries.resize(cases.size());
  parallel_for(cases.size(), jobs, [&](std::size_t i) {
    const auto& c = cases[i];
    auto cmp = compare_rho(c.smaller, c.larger, tol);
    out.entries[i] = {c.lemma, c.n, c.params, cmp.verdict, cmp.gap_lo,
                      cmp.verdict == Verdict::Less && cmp.gap_lo < kMinGap};
  });
  for (const auto& name : lemma_names()) out.min_gap[name] = std::numeric_limits<double>::infinity();
  for (const auto& e : out.entries) {
    auto& m = out.min_gap[e.lemma];
    m = std::min(m, e.verdict == Verdict::Less ? e.gap_lo : 0.0);
    std::string where = e.lemma + " n=" + std::to_string(e.n);
    for (int p : e.params) where += " " + std::to_string(p);
    if (e.verdict == Verdict::Greater) {
      out.status = worst(out.status, Status::Falsified);
      out.failures.push_back(where + ": reversed inequality");
    } else if (e.verdict == Verdict::Indeterminate) {
      out.status = worst(out.status, Status::Indeterminate);
      out.failures.push_back(where + ": indeterminate");
    } else if (e.near_tie) {
      out.status = worst(out.status, Status::Indeterminate);
      out.failures.push_back(where + ": gap below 1e-6");
    }
  }
  out.elapsed_ms = clock.ms();
  return out;
}

// ---------------------------------------------------------------------------
// Reference table: rho of S(3,0;n-7), S(2,1;n-7), B5^(n), K4^(n), n = 6..12,
// given to three decimals.

struct TableCell {
  int n;
  std::string column;
  double reference;
};

inline const std::vector<TableCell>& table1_reference() {
  static const std::vector<TableCell> cells = [] {
    const double v[7][4] = {
        {-1, -1, 8.582, 8.627},          {10.830, 10.830, 11.828, 12.727},
        {14.462, 15.404, 16.090, 17.599}, {19.177, 20.784, 21.238, 23.219},
        {24.808, 26.940, 27.206, 29.575}, {31.279, 33.850, 33.959, 36.657},
        {38.550, 41.503, 41.475, 44.460},
    };
    const char* cols[4] = {"S30", "S21", "B5", "K4"};
    std::vector<TableCell> out;
    for (int r = 0; r < 7; ++r)
      for (int c = 0; c < 4; ++c)
        if (v[r][c] > 0) out.push_back({6 + r, cols[c], v[r][c]});
    return out;
  }();
  return cells;
}

inline Graph table1_graph(const TableCell& c) {
  if (c.column == "S30") return saw(3, 0, c.n - 7);
  if (c.column == "S21") return saw(2, 1, c.n - 7);
  if (c.column == "B5") return broom(5, c.n);
  return kite(4, c.n);
}

struct TableRow {
  TableCell cell;
  PerronPair rho;
  double delta;
};

inline constexpr double kTableTolerance = 1.5e-3;

inline std::vector<TableRow> compute_table1(double tol = kDefaultTol) {
  std::vector<TableRow> rows;
  for (const auto& c : table1_reference()) {
    auto p = perron(table1_graph(c), tol);
    rows.push_back({c, p, p.mid() - c.reference});
  }
  return rows;
}

}  // namespace distex
