//
// distex - distance spectral extremal graph toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "distex/distex.hpp"
#include "distex/report_json.hpp"

using namespace distex;

namespace {

constexpr int kExitUsage = 3;

struct RunConfig {
  double tol = kDefaultTol;
  int cycle_cap = kDefaultCycleCap;
  int jobs = 0;
  std::string format = "text";
  std::string out;
  int n = 0;
  int n_max = 20;
  bool timing = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A graph argument: graph6, family:<spec>, or "-" for graph6 lines on stdin.
std::vector<Graph> load_graphs(const std::string& input) {
  constexpr std::string_view prefix = "family:";
  std::vector<Graph> out;
  if (input == "-") {
    std::string line;
    while (std::getline(std::cin, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      auto more = load_graphs(line);
      out.insert(out.end(), more.begin(), more.end());
    }
    if (out.empty()) throw UsageError("no graphs on stdin");
    return out;
  }
  if (input.starts_with(prefix)) {
    try {
      out.push_back(build_family(std::string_view(input).substr(prefix.size())));
    } catch (const ParseError& e) {
      throw ParseError(e.offset() + prefix.size(), e.reason());
    }
    return out;
  }
  out.push_back(decode_graph6(input));
  return out;
}

std::string fixed(double v, int digits) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

std::string display_name(const Graph& g) {
  return g.name().empty() ? encode_graph6(g) : g.name();
}

class Cli {
 public:
  explicit Cli(RunConfig cfg) : cfg_(std::move(cfg)) {}

  std::ostream& out() { return cfg_.out.empty() ? std::cout : file_; }
  void open() {
    if (!cfg_.out.empty()) {
      file_.open(cfg_.out);
      if (!file_) throw UsageError("cannot open output file " + cfg_.out);
    }
  }
  bool json() const { return cfg_.format == "json"; }
  bool csv() const { return cfg_.format == "csv"; }

  int table1() {
    auto rows = compute_table1(cfg_.tol);
    bool ok = true;
    Json cells = Json::array();
    if (csv()) out() << "n,column,computed,reference,delta,within\n";
    if (!json() && !csv()) {
      out() << std::setw(4) << "n" << std::setw(12) << "S(3,0)" << std::setw(12) << "S(2,1)"
            << std::setw(12) << "B5" << std::setw(12) << "K4" << "   max|delta|\n";
    }
    for (int n = 6; n <= 12; ++n) {
      std::string line = (n < 10 ? "   " : "  ") + std::to_string(n);
      double worst_delta = 0;
      for (const char* col : {"S30", "S21", "B5", "K4"}) {
        const TableRow* row = nullptr;
        for (const auto& r : rows)
          if (r.cell.n == n && r.cell.column == col) row = &r;
        if (!row) {
          line += std::string(11, ' ') + "-";
          continue;
        }
        const bool within = std::abs(row->delta) <= kTableTolerance;
        ok = ok && within;
        worst_delta = std::max(worst_delta, std::abs(row->delta));
        line += std::string(12 - 6, ' ') + fixed(row->rho.mid(), 3);
        if (csv()) {
          out() << n << "," << col << "," << fixed(row->rho.mid(), 9) << ","
                << fixed(row->cell.reference, 3) << "," << fixed(row->delta, 9) << ","
                << (within ? "true" : "false") << "\n";
        }
        cells.push_back({{"n", n},
                         {"column", col},
                         {"rho_lo", row->rho.rho_lo},
                         {"rho_hi", row->rho.rho_hi},
                         {"reference", row->cell.reference},
                         {"delta", row->delta},
                         {"within", within}});
      }
      if (!json() && !csv()) out() << line << "   " << fixed(worst_delta, 6) << "\n";
    }
    if (json()) {
      out() << Json{{"tolerance", kTableTolerance}, {"pass", ok}, {"cells", cells}}.dump(2)
            << "\n";
    } else if (!csv()) {
      out() << (ok ? "all cells within " : "cells outside ") << kTableTolerance << "\n";
    }
    return ok ? 0 : 1;
  }

  int rho(const std::string& input) {
    if (csv()) out() << "graph,rho_lo,rho_hi,residual,iterations\n";
    for (const Graph& g : load_graphs(input)) {
      auto p = perron(g, cfg_.tol);
      if (json()) {
        Json j = to_json(p);
        j["graph"] = encode_graph6(g);
        j["name"] = g.name();
        out() << j.dump() << "\n";
      } else if (csv()) {
        out() << encode_graph6(g) << "," << fixed(p.rho_lo, 12) << "," << fixed(p.rho_hi, 12)
              << "," << p.residual << "," << p.iterations << "\n";
      } else {
        out() << display_name(g) << "  rho in [" << fixed(p.rho_lo, 12) << ", "
              << fixed(p.rho_hi, 12) << "]  residual " << p.residual << "  iterations "
              << p.iterations << "\n";
      }
    }
    return 0;
  }

  int family(const std::string& spec, bool list) {
    if (list) {
      if (json()) {
        out() << Json(family_names()).dump() << "\n";
      } else {
        for (const auto& name : family_names()) out() << name << "\n";
      }
      return 0;
    }
    Graph g = build_family(spec);
    if (cfg_.format == "dot") {
      out() << to_dot(g);
    } else if (json()) {
      out() << graph_json(g).dump(2) << "\n";
    } else {
      out() << encode_graph6(g) << "\n";
    }
    return 0;
  }

  int report(const VerificationReport& r) {
    if (json()) {
      out() << to_json(r, cfg_.timing).dump(2) << "\n";
    } else if (csv()) {
      std::string params;
      for (std::size_t i = 0; i < r.params.size(); ++i)
        params += (i ? " " : "") + std::to_string(r.params[i]);
      out() << "statement,n,params,status,population,argmax,argmax_rho_lo,argmax_rho_hi,"
               "runner_up,runner_up_rho_hi,gap_lo\n"
            << r.statement << "," << r.n << "," << params << "," << to_string(r.status) << ","
            << r.population << "," << r.argmax << "," << fixed(r.argmax_rho_lo, 12) << ","
            << fixed(r.argmax_rho_hi, 12) << "," << r.runner_up.value_or("") << ","
            << (r.runner_up ? fixed(r.runner_up_rho_hi, 12) : "") << ","
            << (r.runner_up ? fixed(r.gap_lo, 12) : "") << "\n";
    } else {
      out() << r.statement << " n=" << r.n;
      for (int p : r.params) out() << " " << p;
      out() << ": " << to_string(r.status) << "\n  population " << r.population;
      if (!r.argmax.empty()) {
        out() << "\n  argmax " << r.argmax << " rho in [" << fixed(r.argmax_rho_lo, 9) << ", "
              << fixed(r.argmax_rho_hi, 9) << "]";
      }
      if (r.runner_up) {
        out() << "\n  runner-up " << *r.runner_up << " rho <= " << fixed(r.runner_up_rho_hi, 9)
              << "\n  certified gap " << r.gap_lo;
      }
      for (const auto& [k, v] : r.notes) out() << "\n  " << k << " " << v;
      for (const auto& f : r.failures) out() << "\n  FAIL " << f;
      if (cfg_.timing) out() << "\n  elapsed " << fixed(r.elapsed_ms, 1) << " ms";
      out() << "\n";
    }
    return exit_code(r.status);
  }

  int verify(const std::string& statement, int k, int delta) {
    const int n = cfg_.n;
    if (statement == "lemmas") return lemmas();
    if (n <= 0) throw UsageError("--n is required");
    if (statement == "main") return report(verify_main_theorem(n, cfg_.tol, cfg_.jobs));
    if (statement == "chromatic3") return report(verify_chromatic3(n, cfg_.tol, cfg_.jobs));
    if (statement == "path_max") return report(verify_path_max(n, cfg_.tol, cfg_.jobs));
    if (statement == "cacti") return report(verify_cacti_extremal(n, k, cfg_.tol, cfg_.jobs));
    if (statement == "broom") {
      if (delta < 2) throw UsageError("--delta is required for broom");
      return report(verify_broom_extremal(n, delta, cfg_.tol, cfg_.jobs));
    }
    if (statement == "grunbaum_aksenov") return report(verify_grunbaum_aksenov(n, cfg_.jobs));
    if (statement == "property_p") return report(verify_property_p(n, cfg_.cycle_cap, cfg_.jobs));
    if (statement == "core_plus_paths") {
      return report(verify_core_plus_paths(n, cfg_.tol, cfg_.jobs));
    }
    throw UsageError("unknown statement " + statement);
  }

  int lemmas() {
    auto s = sweep_rho_lemmas(cfg_.n_max, cfg_.tol, cfg_.jobs);
    if (json()) {
      out() << to_json(s, cfg_.timing).dump(2) << "\n";
    } else if (csv()) {
      out() << "lemma,n,params,verdict,gap_lo\n";
      for (const auto& e : s.entries) {
        std::string params;
        for (std::size_t i = 0; i < e.params.size(); ++i)
          params += (i ? " " : "") + std::to_string(e.params[i]);
        out() << e.lemma << "," << e.n << "," << params << "," << to_string(e.verdict) << ","
              << e.gap_lo << "\n";
      }
    } else {
      out() << "lemma sweep 7 <= n <= " << s.n_max << ": " << to_string(s.status) << ", "
            << s.entries.size() << " comparisons\n";
      for (const auto& [name, gap] : s.min_gap)
        out() << "  " << std::left << std::setw(12) << name << std::right << " min gap "
              << gap << "\n";
      for (const auto& f : s.failures) out() << "  FAIL " << f << "\n";
    }
    return exit_code(s.status);
  }

  int certify(const std::string& target) {
    if (target == "lemmas") return lemmas();
    if (target != "quadratics") throw UsageError("certify target must be quadratics or lemmas");
    struct Row {
      LemmaFamily f;
      std::int64_t lo, n0;
    };
    const Row rows[] = {{LemmaFamily::BroomKite, 3, 13},
                        {LemmaFamily::Saw30, 5, 11},
                        {LemmaFamily::Saw21, 2, 13}};
    bool ok = true;
    Json all = Json::array();
    for (const Row& r : rows) {
      auto fc = certify_lemma_family(r.f, r.lo, r.n0);
      ok = ok && fc.all_positive;
      if (json()) {
        all.push_back(to_json(fc));
        continue;
      }
      out() << to_string(r.f) << " param >= " << r.lo << ", n >= " << r.n0 << ": "
            << (fc.all_positive ? "PositiveOnRay" : "COUNTEREXAMPLE") << "\n";
      out() << "  discriminant " << fc.discriminant.str("p") << " < 0 for p >= "
            << fc.tail_start << " (" << to_string(fc.tail.reason) << ")\n";
      for (const auto& [p, c] : fc.head) {
        out() << "  p = " << p << ": " << to_string(c.verdict) << " via "
              << to_string(c.reason);
        if (c.root_hi) out() << ", largest root in [" << c.root_lo->str() << ", " << c.root_hi->str() << "]";
        if (c.counterexample) out() << ", fails at n = " << *c.counterexample;
        out() << "\n";
      }
    }
    if (json()) out() << Json{{"pass", ok}, {"families", all}}.dump(2) << "\n";
    return ok ? 0 : 1;
  }

  int chi(const std::string& input) {
    for (const Graph& g : load_graphs(input)) {
      auto c = chromatic_number(g);
      if (json()) {
        Json j = to_json(c);
        j["graph"] = encode_graph6(g);
        out() << j.dump() << "\n";
      } else {
        out() << display_name(g) << "  chi " << c.colors_used << "  coloring";
        for (int x : c.assignment) out() << " " << x;
        out() << "\n";
      }
    }
    return 0;
  }

  int planar(const std::string& input) {
    int code = 0;
    for (const Graph& g : load_graphs(input)) {
      auto v = is_planar(g);
      if (!v.planar) code = 1;
      if (json()) {
        Json j = to_json(v);
        j["graph"] = encode_graph6(g);
        out() << j.dump() << "\n";
      } else {
        out() << display_name(g) << "  " << (v.planar ? "planar" : "nonplanar");
        if (v.witness) {
          out() << "  witness";
          for (const Edge& e : *v.witness) out() << " " << e.u << "-" << e.v;
        }
        out() << "\n";
      }
    }
    return code;
  }

  int check(const std::string& predicate, const std::string& input) {
    int code = 0;
    for (const Graph& g : load_graphs(input)) {
      Json detail = Json::object();
      bool holds = false;
      if (predicate == "property_p") {
        holds = has_property_p(g, cfg_.cycle_cap);
      } else if (predicate == "cactus_triple") {
        auto t = find_cactus_triple(g, cfg_.cycle_cap);
        holds = t.has_value();
        if (t) {
          Json cycles = Json::array();
          for (const auto& c : t->cycles) cycles.push_back(detail::edges_json(c));
          detail["cycles"] = cycles;
        }
      } else if (predicate == "triangular_grid") {
        holds = contains_triangular_grid(g);
      } else if (predicate == "fan") {
        holds = contains_fan(g);
      } else if (predicate == "k2_join_e3") {
        holds = contains_k2_join_e3(g);
      } else if (predicate == "cactus") {
        holds = is_cactus(g);
      } else if (predicate == "tree") {
        holds = is_tree(g);
      } else if (predicate == "connected") {
        holds = is_connected(g);
      } else if (predicate == "planar") {
        holds = planarity_test(g);
      } else if (predicate == "critical") {
        int k = chromatic_number(g).colors_used;
        holds = is_k_critical(g, k);
        detail["chi"] = k;
      } else if (predicate == "twins") {
        holds = twin_perron_check(g);
        Json pairs = Json::array();
        for (auto [u, v] : twin_pairs(g)) pairs.push_back({u, v});
        detail["twin_pairs"] = pairs;
      } else if (predicate == "diamond_edges") {
        auto d = diamond_edges(g);
        holds = !d.empty();
        detail["edges"] = detail::edges_json(d);
      } else if (predicate == "four_triangles") {
        holds = triangle_count(g) >= 4;
        detail["triangles"] = triangle_count(g);
      } else {
        throw UsageError("unknown predicate " + predicate);
      }
      if (!holds) code = 1;
      if (json()) {
        Json j{{"predicate", predicate}, {"graph", encode_graph6(g)}, {"holds", holds}};
        if (!detail.empty()) j["detail"] = detail;
        out() << j.dump() << "\n";
      } else {
        out() << display_name(g) << "  " << predicate << " " << (holds ? "true" : "false");
        if (!detail.empty()) out() << "  " << detail.dump();
        out() << "\n";
      }
    }
    return code;
  }

  int enumerate(const std::string& cls, int cycles, int chi_filter, bool planar_only,
                bool critical_only) {
    if (cfg_.n <= 0) throw UsageError("--n is required");
    EnumerateOptions opt;
    opt.jobs = cfg_.jobs;
    opt.cycles = cycles;
    if (cls == "connected") {
      opt.graph_class = planar_only ? GraphClass::ConnectedPlanar : GraphClass::Connected;
    } else if (cls == "planar") {
      opt.graph_class = GraphClass::ConnectedPlanar;
    } else if (cls == "trees") {
      opt.graph_class = GraphClass::Tree;
    } else if (cls == "cacti") {
      opt.graph_class = GraphClass::Cactus;
    } else {
      throw UsageError("class must be connected, planar, trees or cacti");
    }
    std::size_t count = 0;
    Json graphs = Json::array();
    for (const Graph& g : enumerate_graphs(cfg_.n, opt)) {
      if (planar_only && !planarity_test(g)) continue;
      if (chi_filter > 0 && chromatic_number(g).colors_used != chi_filter) continue;
      if (critical_only && !is_k_critical(g, chromatic_number(g).colors_used)) continue;
      ++count;
      if (json()) {
        graphs.push_back(encode_graph6(g));
      } else {
        out() << encode_graph6(g) << "\n";
      }
    }
    if (json()) {
      out() << Json{{"class", cls}, {"n", cfg_.n}, {"count", count}, {"graphs", graphs}}.dump()
            << "\n";
    }
    return 0;
  }

 private:
  RunConfig cfg_;
  std::ofstream file_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"distex: distance spectral radius toolkit for 4-chromatic planar extremal graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--tol", cfg.tol, "enclosure width for eigenvalue intervals")->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "worker threads (default: DISTEX_JOBS or 1)");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv", "graph6", "dot"}))
      ->capture_default_str();
  app.add_option("--out", cfg.out, "write output to this file");
  app.add_option("--n", cfg.n, "graph order");
  app.add_option("--cycle-cap", cfg.cycle_cap, "simple-cycle budget for cycle searches")
      ->capture_default_str();
  app.add_flag("--timing", cfg.timing, "include timings in reports");

  std::string input, spec, statement, target, predicate, cls;
  int k = 0, delta = 0, chi_filter = 0;
  bool list = false, planar_only = false, critical_only = false;

  auto* table1 = app.add_subcommand("table1", "recompute the reference rho table");
  auto* rho = app.add_subcommand("rho", "certified distance spectral radius");
  rho->add_option("graph", input, "graph6, family:<spec> or - for stdin")->required();
  auto* family = app.add_subcommand("family", "build a named family member");
  family->add_option("spec", spec, "name(p1,...)");
  family->add_flag("--list", list, "list family names");
  auto* verify = app.add_subcommand("verify", "run a verification harness");
  verify->add_option("statement", statement,
                     "main|chromatic3|path_max|cacti|broom|grunbaum_aksenov|property_p|"
                     "core_plus_paths|lemmas")
      ->required();
  verify->add_option("--k", k, "cactus cycle count");
  verify->add_option("--delta", delta, "broom maximum degree");
  verify->add_option("--n-max", cfg.n_max, "largest order for lemmas");
  auto* enumerate = app.add_subcommand("enumerate", "one graph per isomorphism class");
  enumerate->add_option("class", cls, "connected|planar|trees|cacti")->required();
  enumerate->add_option("--cycles", k, "cactus cycle count");
  enumerate->add_option("--chi", chi_filter, "keep graphs with this chromatic number");
  enumerate->add_flag("--planar", planar_only, "keep planar graphs");
  enumerate->add_flag("--critical", critical_only, "keep chromatic-critical graphs");
  auto* certify = app.add_subcommand("certify", "exact quadratic certificates or lemma sweeps");
  certify->add_option("target", target, "quadratics|lemmas")->required();
  certify->add_option("--n-max", cfg.n_max, "largest order for lemmas")->capture_default_str();
  auto* chi = app.add_subcommand("chi", "chromatic number with a witness colouring");
  chi->add_option("graph", input, "graph6, family:<spec> or -")->required();
  auto* planar = app.add_subcommand("planar", "planarity with a Kuratowski witness");
  planar->add_option("graph", input, "graph6, family:<spec> or -")->required();
  auto* check = app.add_subcommand("check", "structural predicate");
  check->add_option("predicate", predicate,
                    "property_p|cactus_triple|triangular_grid|fan|k2_join_e3|cactus|tree|"
                    "connected|planar|critical|twins|diamond_edges|four_triangles")
      ->required();
  check->add_option("graph", input, "graph6, family:<spec> or -")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  if (cfg.jobs == 0) cfg.jobs = jobs_from_env();
  if (!(cfg.tol > 0) || cfg.jobs < 1 || cfg.cycle_cap < 1) {
    std::cerr << "error: --tol must be > 0, --jobs >= 1, --cycle-cap >= 1\n";
    return kExitUsage;
  }

  Cli cli(cfg);
  try {
    cli.open();
    if (*table1) return cli.table1();
    if (*rho) return cli.rho(input);
    if (*family) {
      if (!list && spec.empty()) throw UsageError("family spec required");
      return cli.family(spec, list);
    }
    if (*verify) return cli.verify(statement, k, delta);
    if (*enumerate) return cli.enumerate(cls, k, chi_filter, planar_only, critical_only);
    if (*certify) return cli.certify(target);
    if (*chi) return cli.chi(input);
    if (*planar) return cli.planar(input);
    if (*check) return cli.check(predicate, input);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
