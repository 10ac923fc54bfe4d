//
// distex - distance spectral extremal graph toolkit
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "distex/error.hpp"
#include "distex/graph.hpp"

namespace distex {

// graph6: N(n) followed by the upper triangle x(0,1) x(0,2) x(1,2) x(0,3) ...
// (column by column), packed six bits per byte, each byte offset by 63.

inline std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    throw Error(ErrorKind::OrderTooLarge, "graph6 order above 258047");
  }
  int acc = 0, bits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

inline Graph decode_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  std::size_t pos = 0;
  if (text.substr(0, header.size()) == header) pos = header.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);

  auto byte_at = [&](std::size_t i) -> int {
    if (i >= text.size()) throw ParseError(i, "graph6 string truncated");
    int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) {
      throw ParseError(i, "byte outside graph6 range 63..126");
    }
    return c - 63;
  };

  int n = byte_at(pos);
  ++pos;
  if (n == 63) {
    if (pos < text.size() && byte_at(pos) == 63) {
      throw ParseError(pos, "graph6 orders above 258047 are not supported");
    }
    n = 0;
    for (int k = 0; k < 3; ++k) n = (n << 6) | byte_at(pos++);
  }
  if (n < 1) throw ParseError(0, "graph6 order must be at least 1");

  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t need = (pairs + 5) / 6;
  if (text.size() - pos != need) {
    throw ParseError(text.size() < pos + need ? text.size() : pos + need,
                     "expected " + std::to_string(need) + " data bytes, got " +
                         std::to_string(text.size() - pos));
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      int chunk = byte_at(pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

/// DOT rendering; labelled vertices show their labels.
inline std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph " << (g.name().empty() ? "G" : "\"" + g.name() + "\"")
      << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (!g.label(v).empty()) out << " [label=\"" << g.label(v) << "\"]";
    out << ";\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace distex
