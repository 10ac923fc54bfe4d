//
// distex - distance spectral extremal graph toolkit
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cmath>
#include <string>

#include <json.hpp>

#include "distex/certify.hpp"
#include "distex/coloring.hpp"
#include "distex/graph.hpp"
#include "distex/graph6.hpp"
#include "distex/lemmas.hpp"
#include "distex/planarity.hpp"
#include "distex/spectral.hpp"
#include "distex/verify.hpp"

// JSON views of result objects. Timings are included only on request so
// that the default output is identical across runs.

namespace distex {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json finite_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

inline Json edges_json(const std::vector<Edge>& edges) {
  Json a = Json::array();
  for (const Edge& e : edges) a.push_back({e.u, e.v});
  return a;
}

}  // namespace detail

inline Json to_json(const PerronPair& p, bool with_vector = true) {
  Json j{{"rho_lo", p.rho_lo},       {"rho_hi", p.rho_hi},
         {"rq", p.rq},               {"residual", p.residual},
         {"residual_bound", p.residual_bound}, {"iterations", p.iterations}};
  if (with_vector) j["vector"] = p.vector;
  return j;
}

inline Json to_json(const VerificationReport& r, bool timing = false) {
  Json j{{"statement", r.statement},
         {"n", r.n},
         {"params", r.params},
         {"status", to_string(r.status)},
         {"population", r.population},
         {"expected", r.expected},
         {"argmax", r.argmax},
         {"argmax_rho", {r.argmax_rho_lo, r.argmax_rho_hi}},
         {"runner_up", r.runner_up ? Json(*r.runner_up) : Json(nullptr)},
         {"runner_up_rho_hi", r.runner_up ? Json(r.runner_up_rho_hi) : Json(nullptr)},
         {"gap_lo", detail::finite_or_null(r.gap_lo)},
         {"failures", r.failures}};
  Json notes = Json::object();
  for (const auto& [k, v] : r.notes) notes[k] = v;
  j["notes"] = notes;
  if (timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

inline Json to_json(const LemmaSweep& s, bool timing = false) {
  Json entries = Json::array();
  for (const auto& e : s.entries) {
    entries.push_back({{"lemma", e.lemma},
                       {"n", e.n},
                       {"params", e.params},
                       {"verdict", to_string(e.verdict)},
                       {"gap_lo", e.gap_lo}});
  }
  Json gaps = Json::object();
  for (const auto& [k, v] : s.min_gap) gaps[k] = detail::finite_or_null(v);
  Json j{{"n_max", s.n_max},
         {"status", to_string(s.status)},
         {"min_gap", gaps},
         {"failures", s.failures},
         {"entries", entries}};
  if (timing) j["elapsed_ms"] = s.elapsed_ms;
  return j;
}

inline Json to_json(const RationalQuadratic& q) {
  return {{"a2", q.a2.str()}, {"a1", q.a1.str()}, {"a0", q.a0.str()}};
}

inline Json to_json(const QuadraticCertificate& c) {
  Json j{{"quadratic", to_json(c.quadratic)},
         {"n0", c.n0},
         {"verdict", to_string(c.verdict)},
         {"reason", to_string(c.reason)},
         {"discriminant", c.discriminant.str()},
         {"root_lo", c.root_lo ? Json(c.root_lo->str()) : Json(nullptr)},
         {"root_hi", c.root_hi ? Json(c.root_hi->str()) : Json(nullptr)},
         {"counterexample", c.counterexample ? Json(*c.counterexample) : Json(nullptr)}};
  return j;
}

inline Json to_json(const FamilyCertificate& f) {
  Json head = Json::array();
  for (const auto& [p, c] : f.head) {
    Json h = to_json(c);
    h["param"] = p;
    head.push_back(h);
  }
  return {{"family", to_string(f.family)},
          {"param_lo", f.param_lo},
          {"n0", f.n0},
          {"all_positive", f.all_positive},
          {"discriminant_in_param", to_json(f.discriminant)},
          {"tail_start", f.tail_start},
          {"tail", to_json(f.tail)},
          {"head", head}};
}

inline Json to_json(const Coloring& c) {
  return {{"chi", c.colors_used}, {"coloring", c.assignment}};
}

inline Json to_json(const PlanarityVerdict& v) {
  return {{"planar", v.planar},
          {"witness", v.witness ? detail::edges_json(*v.witness) : Json(nullptr)}};
}

inline Json graph_json(const Graph& g) {
  Json j{{"name", g.name()},
         {"order", g.order()},
         {"size", g.size()},
         {"graph6", encode_graph6(g)},
         {"edges", detail::edges_json(g.edges())}};
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j;
}

}  // namespace distex
