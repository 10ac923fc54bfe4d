//
// distex - distance spectral extremal graph toolkit
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <array>
#include <cctype>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "distex/error.hpp"
#include "distex/graph.hpp"

// Named graph families. Constructions that come from a drawing carry the
// drawing's vertex names as labels (Graph::labels), so coordinates of
// eigenvectors can be addressed by name. Primes are written with an ASCII
// apostrophe and Greek letters are spelled out ("alpha'").
//
// Tail convention: every tail parameter counts NEW vertices (= new edges).

namespace distex {

namespace detail {

/// Small helper that builds a graph from named vertices.
class NamedBuilder {
 public:
  Vertex add(std::string name) {
    index_.emplace(name, static_cast<Vertex>(names_.size()));
    names_.push_back(std::move(name));
    return static_cast<Vertex>(names_.size() - 1);
  }
  void add_all(std::initializer_list<std::string_view> names) {
    for (auto n : names) add(std::string(n));
  }
  Vertex operator[](const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) {
      throw Error(ErrorKind::VertexOutOfRange, "unknown vertex " + name);
    }
    return it->second;
  }
  void edge(const std::string& a, const std::string& b) {
    edges_.emplace_back((*this)[a], (*this)[b]);
  }
  void edges(std::initializer_list<std::pair<std::string_view, std::string_view>> list) {
    for (auto [a, b] : list) edge(std::string(a), std::string(b));
  }
  void edge(Vertex a, Vertex b) { edges_.emplace_back(a, b); }

  /// Tail of `len` new vertices named prefix<first>.. hanging off `at`.
  void tail(const std::string& at, int len, const std::string& prefix,
            int first = 1) {
    Vertex prev = (*this)[at];
    for (int i = 0; i < len; ++i) {
      Vertex next = add(prefix + std::to_string(first + i));
      edge(prev, next);
      prev = next;
    }
  }

  Graph build(std::string name) const {
    return Graph(static_cast<int>(names_.size()), edges_, std::move(name))
        .with_labels(names_);
  }

 private:
  std::vector<std::string> names_;
  std::map<std::string, Vertex> index_;
  std::vector<Edge> edges_;
};

inline std::string v_name(int i) { return "v" + std::to_string(i); }

inline void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::BadParameters, what);
}

}  // namespace detail

/// K_k^(n): k-clique on 0..k-1 with a path of n-k new vertices at vertex 0.
/// For k = 4 the vertices carry the kite drawing's names: the clique is
/// {v1, v2, v_{n-1}, v_n} and the tail v3..v_{n-2} hangs off v2.
inline Graph kite(int k, int n) {
  detail::require(k >= 2 && n >= k, "kite needs n >= k >= 2");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < k; ++i)
    for (Vertex j = i + 1; j < k; ++j) edges.emplace_back(i, j);
  Graph g = attach_path(Graph(k, edges), 0, n - k)
                .with_name("kite(" + std::to_string(k) + "," +
                           std::to_string(n) + ")");
  if (k != 4) return g;
  std::vector<std::string> labels(n);
  labels[0] = "v2";
  labels[1] = "v1";
  labels[2] = detail::v_name(n - 1);
  labels[3] = detail::v_name(n);
  for (int i = 4; i < n; ++i) labels[i] = detail::v_name(i - 1);
  return g.with_labels(labels);
}

/// S(p,q;l): spine path s0..s_m with m = p+q+l edges; the first p and the
/// last q spine edges each get a triangle apex. Spine vertices come first
/// (0..m), then the apexes in spine order. Order 2p+2q+l+1, size 3p+3q+l.
/// S(3,0;l) and S(2,1;l) carry the saw drawing's names v1..v_n.
inline Graph saw(int p, int q, int l) {
  detail::require(p >= 0 && q >= 0 && l >= 0, "saw parameters must be >= 0");
  detail::require(p + q >= 1, "saw needs p + q >= 1");
  const int m = p + q + l;
  const int n = 2 * p + 2 * q + l + 1;
  detail::require(n >= 3, "saw needs order >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < m; ++i) edges.emplace_back(i, i + 1);
  Vertex apex = m + 1;
  std::vector<int> apex_edge;
  for (int i = 0; i < p; ++i) {
    edges.emplace_back(i, apex);
    edges.emplace_back(i + 1, apex);
    apex_edge.push_back(i);
    ++apex;
  }
  for (int i = m - q; i < m; ++i) {
    edges.emplace_back(i, apex);
    edges.emplace_back(i + 1, apex);
    apex_edge.push_back(i);
    ++apex;
  }
  Graph g(n, edges,
          "saw(" + std::to_string(p) + "," + std::to_string(q) + "," +
              std::to_string(l) + ")");
  std::vector<std::string> labels;
  if (p == 3 && q == 0) {
    labels.resize(n);
    for (int i = 0; i <= m; ++i)
      labels[i] = detail::v_name(i <= 2 ? i + 1 : i + 2);
    labels[m + 1] = detail::v_name(n - 1);
    labels[m + 2] = detail::v_name(n);
    labels[m + 3] = "v4";
  } else if (p == 2 && q == 1) {
    labels.resize(n);
    for (int i = 0; i <= m; ++i) labels[i] = detail::v_name(i + 1);
    labels[m + 1] = detail::v_name(n - 1);
    labels[m + 2] = detail::v_name(n);
    labels[m + 3] = detail::v_name(n - 2);
  }
  return g.with_labels(labels);
}

/// B_Δ^(n): path p0..p_{n-Δ} with Δ-1 pendant vertices at p0. The path
/// comes first, then the pendants. B_5^(n) carries the broom drawing's
/// names: centre v3, pendants v1, v2, v_{n-1}, v_n, handle v4..v_{n-2}.
inline Graph broom(int delta, int n) {
  detail::require(delta >= 2 && n >= delta + 1, "broom needs n >= delta+1, delta >= 2");
  const int path_len = n - delta + 1;
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < path_len; ++i) edges.emplace_back(i, i + 1);
  for (int j = 0; j < delta - 1; ++j) edges.emplace_back(0, path_len + j);
  Graph g(n, edges,
          "broom(" + std::to_string(delta) + "," + std::to_string(n) + ")");
  if (delta != 5) return g;
  std::vector<std::string> labels(n);
  for (int i = 0; i < path_len; ++i) labels[i] = detail::v_name(i + 3);
  labels[path_len + 0] = "v1";
  labels[path_len + 1] = "v2";
  labels[path_len + 2] = detail::v_name(n - 1);
  labels[path_len + 3] = detail::v_name(n);
  return g.with_labels(labels);
}

/// G(v,k,l): tails of k and of l new vertices both joined to v.
inline Graph attach_two_paths(const Graph& g, Vertex v, int k, int l) {
  g.check_vertex(v);
  detail::require(k >= 0 && l >= 0, "tail lengths must be >= 0");
  return attach_path(attach_path(g, v, k), v, l);
}

/// K4 with tails of lengths[i] new vertices at clique vertex i (i < 3).
inline Graph multi_tail_kite(const std::vector<int>& lengths) {
  detail::require(lengths.size() <= 3, "at most three tails");
  Graph g = complete_graph(4);
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    detail::require(lengths[i] >= 0, "tail lengths must be >= 0");
    g = attach_path(g, static_cast<Vertex>(i), lengths[i]);
  }
  std::string name = "multi_tail_kite(";
  for (std::size_t i = 0; i < lengths.size(); ++i)
    name += (i ? "," : "") + std::to_string(lengths[i]);
  return g.with_name(name + ")");
}

// ---------------------------------------------------------------------------
// Transcribed drawings

inline Graph diamond() {
  detail::NamedBuilder b;
  b.add_all({"u1", "u2", "v1", "v2"});
  b.edges({{"u1", "v2"}, {"u1", "v1"}, {"u2", "v2"}, {"u2", "v1"}, {"u1", "u2"}});
  return b.build("diamond");
}

/// Diamond plus a leaf t on v2; the leaf is t, the degree-2 vertex is v1.
inline Graph tailed_diamond() {
  detail::NamedBuilder b;
  b.add_all({"u1", "u2", "v1", "v2", "t"});
  b.edges({{"u1", "v2"}, {"u1", "v1"}, {"u2", "v2"}, {"u2", "v1"}, {"u1", "u2"},
           {"v2", "t"}});
  return b.build("tailed_diamond");
}

/// Havel's quasi-edge H0; its degree-2 vertices are u and v.
inline Graph havel_quasi_edge() {
  detail::NamedBuilder b;
  b.add_all({"u", "b", "c", "d", "e", "f", "g", "v"});
  b.edges({{"u", "b"}, {"u", "f"}, {"b", "c"}, {"f", "g"}, {"b", "d"}, {"d", "c"},
           {"e", "f"}, {"e", "g"}, {"d", "e"}, {"c", "v"}, {"v", "g"}});
  return b.build("havel_quasi_edge");
}

/// Moser spindle: apex e, diamond edges aa' and bb'.
inline Graph moser() {
  detail::NamedBuilder b;
  b.add_all({"e", "a", "a'", "b", "b'", "d", "c"});
  b.edges({{"e", "a"}, {"e", "a'"}, {"e", "b"}, {"e", "b'"}, {"a", "a'"},
           {"b", "b'"}, {"a", "d"}, {"a'", "d"}, {"b", "c"}, {"b'", "c"},
           {"c", "d"}});
  return b.build("moser");
}

/// The diamond expansion T of the Moser spindle; diamond edges alpha-alpha'
/// and beta-beta'.
inline Graph t_graph() {
  detail::NamedBuilder b;
  b.add_all({"e", "a", "a'", "beta", "beta'", "d", "c", "alpha", "alpha'", "z"});
  b.edges({{"e", "beta"}, {"e", "beta'"}, {"c", "d"}, {"a", "alpha"},
           {"a", "alpha'"}, {"z", "a'"}, {"a'", "e"}, {"d", "a'"}, {"e", "a"},
           {"d", "a"}, {"alpha", "alpha'"}, {"alpha", "z"}, {"alpha'", "z"},
           {"beta", "beta'"}, {"beta'", "c"}, {"beta", "c"}});
  return b.build("t_graph");
}

/// M': triangle xyz, shadows x' ~ {y,z}, y' ~ {x,z}, z' ~ {x,y}, apex r on
/// the shadows.
inline Graph mycielskian_triangle() {
  detail::NamedBuilder b;
  b.add_all({"x", "y", "z", "x'", "y'", "z'", "r"});
  b.edges({{"x", "y"}, {"x", "z"}, {"y", "z"}, {"x", "z'"}, {"x", "y'"},
           {"z'", "y"}, {"y'", "z"}, {"z", "x'"}, {"y", "x'"}, {"r", "z'"},
           {"r", "x'"}, {"r", "y'"}});
  return b.build("mycielskian_triangle");
}

/// M'': the Q2 patch expansion of K4.
inline Graph m_double_prime() {
  detail::NamedBuilder b;
  b.add_all({"x", "y", "z", "x'", "y'", "z'", "r", "s"});
  b.edges({{"x", "y"}, {"x", "z"}, {"y", "z"}, {"x", "z'"}, {"x", "y'"},
           {"z'", "y"}, {"y'", "z"}, {"z", "x'"}, {"y", "x'"}, {"r", "y'"},
           {"r", "z'"}, {"s", "z'"}, {"s", "x'"}, {"y'", "s"}});
  return b.build("m_double_prime");
}

/// T*: four triangles u1v2v3, v1u2v3, v1v2u3 and v1v2v3.
inline Graph triangular_grid() {
  detail::NamedBuilder b;
  b.add_all({"u1", "u2", "u3", "v1", "v2", "v3"});
  b.edges({{"u1", "v2"}, {"u1", "v3"}, {"v2", "v3"}, {"v2", "u3"}, {"v1", "u3"},
           {"v1", "u2"}, {"u2", "v3"}, {"v3", "v1"}, {"v1", "v2"}});
  return b.build("triangular_grid");
}

/// Quadrangulations Q1..Q3 of a hexagon x z' y x' z y'. Vertices 0..5 are
/// the boundary in that cyclic order; interior vertices follow.
inline Graph patch_q(int which) {
  detail::require(which >= 1 && which <= 3, "patch index must be 1, 2 or 3");
  detail::NamedBuilder b;
  b.add_all({"x", "z'", "y", "x'", "z", "y'"});
  b.edges({{"x", "z'"}, {"z'", "y"}, {"y", "x'"}, {"x'", "z"}, {"z", "y'"},
           {"y'", "x"}});
  if (which == 1) {
    b.add("r");
    b.edges({{"r", "z'"}, {"r", "x'"}, {"r", "y'"}});
  } else if (which == 2) {
    b.add_all({"r", "s"});
    b.edges({{"r", "y'"}, {"r", "z'"}, {"s", "x'"}, {"s", "z'"}, {"y'", "s"}});
  } else {
    b.add_all({"r", "s", "t"});
    b.edges({{"t", "y'"}, {"r", "z'"}, {"r", "s"}, {"t", "s"}, {"t", "x'"},
             {"s", "y"}, {"r", "y'"}});
  }
  return b.build("Q" + std::to_string(which));
}

/// Patch expansions M1 (Q1) and M2 (Q2) of the Moser spindle at
/// its degree-3 vertex v off both diamond edges (apex a, diamond
/// edges xy and bc, glue vertices x, y, z).
inline Graph moser_patch_expansion(int which) {
  detail::require(which == 1 || which == 2, "expansion index must be 1 or 2");
  detail::NamedBuilder b;
  b.add_all({"a", "y", "x", "b", "c", "z", "x'", "y'", "z'", "u"});
  b.edges({{"a", "y"}, {"a", "x"}, {"a", "b"}, {"a", "c"}, {"x", "y"},
           {"b", "c"}, {"b", "z"}, {"c", "z"}, {"x", "z'"}, {"z'", "y"},
           {"y", "x'"}, {"x'", "z"}, {"z", "y'"}, {"y'", "x"}});
  if (which == 1) {
    b.edges({{"u", "z'"}, {"u", "y'"}, {"u", "x'"}});
    return b.build("M1");
  }
  b.add("v");
  b.edges({{"u", "x'"}, {"u", "z'"}, {"v", "z'"}, {"v", "y'"}, {"v", "x'"}});
  return b.build("M2");
}

/// Moser spindle with t new vertices u1..ut hanging off a and k new
/// vertices v1..vk hanging off c (order 7+t+k).
inline Graph g1(int t, int k) {
  detail::require(t >= 0 && k >= 0, "tail lengths must be >= 0");
  Graph m = moser();
  detail::NamedBuilder b;
  for (const auto& name : m.labels()) b.add(name);
  for (const Edge& e : m.edges()) b.edge(e.u, e.v);
  b.tail("a", t, "u");
  b.tail("c", k, "v");
  return b.build("g1(" + std::to_string(t) + "," + std::to_string(k) + ")");
}

/// As g1 but the second tail hangs off b.
inline Graph g2(int t, int k) {
  detail::require(t >= 0 && k >= 0, "tail lengths must be >= 0");
  Graph m = moser();
  detail::NamedBuilder b;
  for (const auto& name : m.labels()) b.add(name);
  for (const Edge& e : m.edges()) b.edge(e.u, e.v);
  b.tail("a", t, "u");
  b.tail("b", k, "v");
  return b.build("g2(" + std::to_string(t) + "," + std::to_string(k) + ")");
}

/// M1': the M' core (triangle abc, shadows v1 ~ {a,b}, u1 ~ {a,c},
/// w1 ~ {b,c}, apex d) with the shadow paths continued to v_r, u_s, w_t.
/// Parameters count the whole path including the core shadow vertex, so
/// m1_prime(1,1,1) is M' and the order is 4+r+s+t.
inline Graph m1_prime(int r, int s, int t) {
  detail::require(r >= 1 && s >= 1 && t >= 1, "m1_prime needs r,s,t >= 1");
  detail::NamedBuilder b;
  b.add_all({"a", "b", "c", "d", "v1", "u1", "w1"});
  b.edges({{"a", "b"}, {"a", "v1"}, {"b", "v1"}, {"a", "c"}, {"b", "c"},
           {"d", "v1"}, {"d", "u1"}, {"a", "u1"}, {"c", "u1"}, {"c", "w1"},
           {"b", "w1"}, {"d", "w1"}});
  b.tail("v1", r - 1, "v", 2);
  b.tail("u1", s - 1, "u", 2);
  b.tail("w1", t - 1, "w", 2);
  return b.build("m1_prime(" + std::to_string(r) + "," + std::to_string(s) +
                 "," + std::to_string(t) + ")");
}

/// M2': the M' core (triangle abc, shadows v ~ {a,b}, w ~ {b,c},
/// u ~ {a,c}, apex d1) with the apex path d1..d_{n-6}.
inline Graph m2_prime(int n) {
  detail::require(n >= 7, "m2_prime needs n >= 7");
  detail::NamedBuilder b;
  b.add_all({"b", "v", "w", "a", "c", "u", "d1"});
  b.edges({{"b", "v"}, {"b", "w"}, {"v", "a"}, {"b", "c"}, {"b", "a"},
           {"w", "c"}, {"a", "c"}, {"u", "a"}, {"u", "c"}, {"u", "d1"},
           {"v", "d1"}, {"w", "d1"}});
  b.tail("d1", n - 7, "d", 2);
  return b.build("m2_prime(" + std::to_string(n) + ")");
}

inline Graph wheel(int rim) {
  return join(Graph(1), cycle_graph(rim)).with_name("wheel(" + std::to_string(rim) + ")");
}

inline Graph fan_graph() { return join(Graph(1), path_graph(4)).with_name("fan"); }

inline Graph k2_join_e3() {
  return join(complete_graph(2), empty_graph(3)).with_name("k2_join_e3");
}

// ---------------------------------------------------------------------------
// Family specs: name(p1,p2,...)

enum class FamilyId {
  Kite, Saw, Broom, Path, Cycle, Complete, Star, Wheel, Fan, K2JoinE3,
  Moser, TGraph, MycielskianTriangle, MDoublePrime, HavelQuasiEdge, Diamond,
  TailedDiamond, TriangularGrid, PatchQ, MoserPatch, G1, G2, M1Prime, M2Prime,
  MultiTailKite,
};

struct FamilySpec {
  FamilyId id;
  std::vector<int> params;
};

namespace detail {

struct FamilyEntry {
  std::string_view name;
  FamilyId id;
  int min_args;
  int max_args;
};

inline constexpr std::array<FamilyEntry, 26> kFamilies{{
    {"kite", FamilyId::Kite, 2, 2},
    {"saw", FamilyId::Saw, 3, 3},
    {"broom", FamilyId::Broom, 2, 2},
    {"path", FamilyId::Path, 1, 1},
    {"cycle", FamilyId::Cycle, 1, 1},
    {"complete", FamilyId::Complete, 1, 1},
    {"star", FamilyId::Star, 1, 1},
    {"wheel", FamilyId::Wheel, 1, 1},
    {"fan", FamilyId::Fan, 0, 0},
    {"k2_join_e3", FamilyId::K2JoinE3, 0, 0},
    {"moser", FamilyId::Moser, 0, 0},
    {"t_graph", FamilyId::TGraph, 0, 0},
    {"mycielskian_triangle", FamilyId::MycielskianTriangle, 0, 0},
    {"m_prime", FamilyId::MycielskianTriangle, 0, 0},
    {"m_double_prime", FamilyId::MDoublePrime, 0, 0},
    {"havel_quasi_edge", FamilyId::HavelQuasiEdge, 0, 0},
    {"diamond", FamilyId::Diamond, 0, 0},
    {"tailed_diamond", FamilyId::TailedDiamond, 0, 0},
    {"triangular_grid", FamilyId::TriangularGrid, 0, 0},
    {"patch_q", FamilyId::PatchQ, 1, 1},
    {"moser_patch", FamilyId::MoserPatch, 1, 1},
    {"g1", FamilyId::G1, 2, 2},
    {"g2", FamilyId::G2, 2, 2},
    {"m1_prime", FamilyId::M1Prime, 3, 3},
    {"m2_prime", FamilyId::M2Prime, 1, 1},
    {"multi_tail_kite", FamilyId::MultiTailKite, 0, 3},
}};

}  // namespace detail

inline std::string family_name(FamilyId id) {
  for (const auto& e : detail::kFamilies)
    if (e.id == id) return std::string(e.name);
  return "unknown";
}

inline std::vector<std::string> family_names() {
  std::vector<std::string> out;
  for (const auto& e : detail::kFamilies) out.emplace_back(e.name);
  return out;
}

/// Parses `name`, `name()` or `name(p1,...,pk)` with integer arguments.
/// Errors report byte offsets into `text`.
inline FamilySpec parse_family_spec(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  const std::size_t name_start = pos;
  while (pos < text.size() &&
         (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
    ++pos;
  std::string_view name = text.substr(name_start, pos - name_start);
  if (name.empty()) throw ParseError(name_start, "expected a family name");
  const detail::FamilyEntry* entry = nullptr;
  for (const auto& e : detail::kFamilies)
    if (e.name == name) entry = &e;
  if (!entry) {
    throw ParseError(name_start, "unknown family '" + std::string(name) + "'");
  }
  std::vector<int> params;
  skip_ws();
  if (pos < text.size() && text[pos] == '(') {
    ++pos;
    skip_ws();
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
    } else {
      while (true) {
        skip_ws();
        const std::size_t num_start = pos;
        bool negative = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
          negative = text[pos] == '-';
          ++pos;
        }
        long long value = 0;
        std::size_t digits = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          value = value * 10 + (text[pos] - '0');
          if (value > 1'000'000) throw ParseError(num_start, "integer too large");
          ++pos;
          ++digits;
        }
        if (digits == 0) throw ParseError(num_start, "expected an integer");
        params.push_back(static_cast<int>(negative ? -value : value));
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        if (pos < text.size() && text[pos] == ')') {
          ++pos;
          break;
        }
        throw ParseError(pos, "expected ',' or ')'");
      }
    }
  }
  skip_ws();
  if (pos != text.size()) throw ParseError(pos, "unexpected trailing input");
  const int count = static_cast<int>(params.size());
  if (count < entry->min_args || count > entry->max_args) {
    throw ParseError(name_start, std::string(name) + " takes " +
                                     std::to_string(entry->min_args) +
                                     (entry->min_args == entry->max_args
                                          ? ""
                                          : ".." + std::to_string(entry->max_args)) +
                                     " argument(s), got " + std::to_string(count));
  }
  return {entry->id, params};
}

inline Graph build_family(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.id) {
    case FamilyId::Kite: return kite(p[0], p[1]);
    case FamilyId::Saw: return saw(p[0], p[1], p[2]);
    case FamilyId::Broom: return broom(p[0], p[1]);
    case FamilyId::Path:
      detail::require(p[0] >= 1, "path needs n >= 1");
      return path_graph(p[0]);
    case FamilyId::Cycle: return cycle_graph(p[0]);
    case FamilyId::Complete:
      detail::require(p[0] >= 1, "complete needs n >= 1");
      return complete_graph(p[0]);
    case FamilyId::Star:
      detail::require(p[0] >= 1, "star needs >= 1 leaf");
      return star_graph(p[0]);
    case FamilyId::Wheel: return wheel(p[0]);
    case FamilyId::Fan: return fan_graph();
    case FamilyId::K2JoinE3: return k2_join_e3();
    case FamilyId::Moser: return moser();
    case FamilyId::TGraph: return t_graph();
    case FamilyId::MycielskianTriangle: return mycielskian_triangle();
    case FamilyId::MDoublePrime: return m_double_prime();
    case FamilyId::HavelQuasiEdge: return havel_quasi_edge();
    case FamilyId::Diamond: return diamond();
    case FamilyId::TailedDiamond: return tailed_diamond();
    case FamilyId::TriangularGrid: return triangular_grid();
    case FamilyId::PatchQ: return patch_q(p[0]);
    case FamilyId::MoserPatch: return moser_patch_expansion(p[0]);
    case FamilyId::G1: return g1(p[0], p[1]);
    case FamilyId::G2: return g2(p[0], p[1]);
    case FamilyId::M1Prime: return m1_prime(p[0], p[1], p[2]);
    case FamilyId::M2Prime: return m2_prime(p[0]);
    case FamilyId::MultiTailKite: return multi_tail_kite(p);
  }
  throw Error(ErrorKind::BadParameters, "unhandled family");
}

inline Graph build_family(std::string_view text) {
  return build_family(parse_family_spec(text));
}

}  // namespace distex
