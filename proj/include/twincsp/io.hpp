// Copyright 2026 The twincsp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TWINCSP_IO_HPP_
#define TWINCSP_IO_HPP_

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "twincsp/csp.hpp"
#include "twincsp/error.hpp"
#include "twincsp/graph.hpp"

namespace twincsp {

// Text formats are line based. '#' starts a comment, blank lines are
// skipped, and fields are tab separated so names may contain spaces. Lines
// without a tab fall back to whitespace splitting.

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

/// Non-empty, comment-stripped lines split into trimmed fields, with their
/// 1-based line numbers.
inline std::vector<std::pair<std::size_t, std::vector<std::string>>> split_records(
    std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> out;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;
    std::vector<std::string> fields;
    if (line.find('\t') != std::string_view::npos) {
      std::size_t p = 0;
      while (p <= line.size()) {
        std::size_t q = line.find('\t', p);
        if (q == std::string_view::npos) q = line.size();
        if (std::string f = trim(line.substr(p, q - p)); !f.empty()) fields.push_back(f);
        p = q + 1;
      }
    } else {
      std::istringstream words{std::string(line)};
      for (std::string w; words >> w;) fields.push_back(w);
    }
    out.emplace_back(lineno, std::move(fields));
  }
  return out;
}

inline std::string line_error(std::size_t lineno, const std::string& what) {
  return "line " + std::to_string(lineno) + ": " + what;
}

/// Edge list: `u<TAB>v[<TAB>weight]` per line, or a lone vertex name for
/// isolated vertices. Weights are ignored here. Vertices are named and
/// ordered by first appearance.
inline Graph parse_edge_list(std::string_view text) {
  std::vector<std::string> names;
  std::map<std::string, Vertex> index;
  std::vector<Edge> edges;
  auto vertex = [&](const std::string& name) {
    auto [it, fresh] = index.emplace(name, names.size());
    if (fresh) names.push_back(name);
    return it->second;
  };
  for (const auto& [lineno, f] : split_records(text)) {
    if (f.size() == 1) {
      vertex(f[0]);
    } else if (f.size() == 2 || f.size() == 3) {
      if (f[0] == f[1]) throw InputError(line_error(lineno, "self-loop on " + f[0]));
      const Vertex u = vertex(f[0]);
      const Vertex v = vertex(f[1]);
      edges.emplace_back(u, v);
    } else {
      throw InputError(line_error(lineno, "expected u, v and an optional weight"));
    }
  }
  if (names.size() > kMaxOrder) throw InputError("more than 64 vertices");
  return Graph(names.size(), edges).with_names(names);
}

/// Class labels: `vertex<TAB>class`, class given as core/semiperiphery/
/// periphery (or c/s/p) or as a non-negative integer. Every vertex needs
/// exactly one line.
inline std::vector<int> parse_partition(std::string_view text, const Graph& g) {
  std::vector<std::optional<int>> labels(g.order());
  for (const auto& [lineno, f] : split_records(text)) {
    if (f.size() != 2) throw InputError(line_error(lineno, "expected vertex and class"));
    auto v = g.find(f[0]);
    if (!v) throw InputError(line_error(lineno, "unknown vertex " + f[0]));
    int label = 0;
    if (auto c = parse_csp_class(f[1])) {
      label = static_cast<int>(*c);
    } else {
      auto [p, ec] = std::from_chars(f[1].data(), f[1].data() + f[1].size(), label);
      if (ec != std::errc() || p != f[1].data() + f[1].size() || label < 0) {
        throw InputError(line_error(lineno, "bad class " + f[1]));
      }
    }
    if (labels[*v]) throw InputError(line_error(lineno, "vertex " + f[0] + " labelled twice"));
    labels[*v] = label;
  }
  std::vector<int> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!labels[v]) throw InputError("no class for vertex " + g.name(v));
    out.push_back(*labels[v]);
  }
  return out;
}

/// Trade volume in thousands of USD. Accepts plain numbers and the suffixes
/// k (thousand USD, the unit), M (million) and B (billion): "75M" = 75000.
inline long long parse_volume(const std::string& text) {
  std::string s = trim(text);
  double scale = 1;
  if (!s.empty()) {
    switch (s.back()) {
      case 'k': case 'K': scale = 1; s.pop_back(); break;
      case 'm': case 'M': scale = 1e3; s.pop_back(); break;
      case 'b': case 'B': scale = 1e6; s.pop_back(); break;
      default: break;
    }
  }
  double value = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size() || value < 0) {
    throw InputError("bad volume " + text);
  }
  return std::llround(value * scale);
}

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

/// Graphviz rendering. With CSP labels, cores are filled black, the
/// semiperiphery grey and the periphery white.
inline std::string to_dot(const Graph& g, const std::vector<int>& classes = {},
                          const std::string& name = "G") {
  auto label = [&](Vertex v) { return g.named() ? g.name(v) : std::to_string(v); };
  std::ostringstream out;
  out << "graph " << dot_quote(name) << " {\n";
  out << "  node [shape=circle, style=filled, fillcolor=white];\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << dot_quote(label(v));
    if (!classes.empty()) {
      switch (classes.at(v)) {
        case kCore: out << " [fillcolor=black, fontcolor=white]"; break;
        case kSemiperiphery: out << " [fillcolor=grey]"; break;
        case kPeriphery: out << " [fillcolor=white]"; break;
        default: break;
      }
    }
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) {
    out << "  " << dot_quote(label(u)) << " -- " << dot_quote(label(v)) << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace twincsp

#endif  // TWINCSP_IO_HPP_
