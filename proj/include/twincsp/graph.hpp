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

#ifndef TWINCSP_GRAPH_HPP_
#define TWINCSP_GRAPH_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "twincsp/error.hpp"
#include "twincsp/vertex_set.hpp"

namespace twincsp {

using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph on vertices 0..order()-1.
///
/// Adjacency is one bit set per vertex. Vertices optionally carry names
/// (country names in the trade pipeline); unnamed graphs report the decimal
/// index. Graphs are immutable once built.
class Graph {
 public:
  Graph() = default;

  explicit Graph(std::size_t order) : adjacency_(order) {
    if (order > kMaxOrder) {
      throw Error("graph order " + std::to_string(order) + " exceeds " +
                  std::to_string(kMaxOrder));
    }
  }

  Graph(std::size_t order, std::span<const Edge> edges) : Graph(order) {
    for (auto [u, v] : edges) {
      if (u >= order || v >= order) throw Error("edge endpoint out of range");
      if (u == v) throw Error("self-loops are not allowed");
      adjacency_[u].insert(v);
      adjacency_[v].insert(u);
    }
  }

  Graph(std::size_t order, std::initializer_list<Edge> edges)
      : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Builds a graph from per-vertex neighbor sets; the relation is
  /// symmetrized and the diagonal cleared.
  static Graph from_adjacency(std::vector<VertexSet> adjacency) {
    Graph g(adjacency.size());
    for (Vertex u = 0; u < adjacency.size(); ++u) {
      adjacency[u] &= VertexSet::range(adjacency.size());
      adjacency[u].erase(u);
    }
    for (Vertex u = 0; u < adjacency.size(); ++u) {
      for (Vertex v : adjacency[u]) adjacency[v].insert(u);
    }
    g.adjacency_ = std::move(adjacency);
    return g;
  }

  Graph with_names(std::vector<std::string> names) const {
    if (names.size() != order()) throw Error("name count does not match order");
    std::map<std::string, Vertex> seen;
    for (Vertex v = 0; v < names.size(); ++v) {
      if (!seen.emplace(names[v], v).second) {
        throw Error("duplicate vertex name '" + names[v] + "'");
      }
    }
    Graph g = *this;
    g.names_ = std::move(names);
    return g;
  }

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const {
    std::size_t twice = 0;
    for (auto n : adjacency_) twice += n.size();
    return twice / 2;
  }
  VertexSet vertices() const { return VertexSet::range(order()); }

  bool contains(Vertex v) const { return v < order(); }
  bool contains(VertexSet s) const { return s.subset_of(vertices()); }

  bool adjacent(Vertex u, Vertex v) const {
    check(u);
    check(v);
    return adjacency_[u].contains(v);
  }
  VertexSet neighbors(Vertex u) const {
    check(u);
    return adjacency_[u];
  }
  VertexSet closed_neighbors(Vertex u) const {
    return neighbors(u) | VertexSet::single(u);
  }
  std::size_t degree(Vertex u) const { return neighbors(u).size(); }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < order(); ++u) {
      for (Vertex v : adjacency_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  bool named() const { return !names_.empty(); }
  std::string name(Vertex v) const {
    check(v);
    return named() ? names_[v] : std::to_string(v);
  }
  std::vector<std::string> names() const {
    std::vector<std::string> out;
    out.reserve(order());
    for (Vertex v = 0; v < order(); ++v) out.push_back(name(v));
    return out;
  }
  std::optional<Vertex> find(const std::string& name) const {
    for (Vertex v = 0; v < order(); ++v) {
      if (this->name(v) == name) return v;
    }
    return std::nullopt;
  }
  Vertex at(const std::string& name) const {
    auto v = find(name);
    if (!v) throw Error("unknown vertex '" + name + "'");
    return *v;
  }

  /// The subgraph induced by `keep`, relabeled to 0..|keep|-1 in increasing
  /// order of the original indices. Names carry over.
  Graph induced(VertexSet keep) const {
    if (!contains(keep)) throw Error("vertex set is not contained in the graph");
    std::vector<Vertex> old = keep.to_vector();
    std::vector<Vertex> fresh(order(), 0);
    for (Vertex i = 0; i < old.size(); ++i) fresh[old[i]] = i;
    std::vector<VertexSet> adj(old.size());
    for (Vertex i = 0; i < old.size(); ++i) {
      for (Vertex w : adjacency_[old[i]] & keep) adj[i].insert(fresh[w]);
    }
    Graph g = from_adjacency(std::move(adj));
    if (named()) {
      std::vector<std::string> n;
      for (Vertex v : old) n.push_back(names_[v]);
      g.names_ = std::move(n);
    }
    return g;
  }

  /// Graph with vertex `v` moved to position `perm[v]`.
  Graph permuted(std::span<const Vertex> perm) const {
    if (perm.size() != order()) throw Error("permutation size mismatch");
    std::vector<VertexSet> adj(order());
    for (Vertex u = 0; u < order(); ++u) {
      for (Vertex v : adjacency_[u]) adj[perm[u]].insert(perm[v]);
    }
    Graph g = from_adjacency(std::move(adj));
    if (named()) {
      std::vector<std::string> n(order());
      for (Vertex u = 0; u < order(); ++u) n[perm[u]] = names_[u];
      g.names_ = std::move(n);
    }
    return g;
  }

  /// Structural equality (names ignored).
  bool same_edges(const Graph& other) const {
    return adjacency_ == other.adjacency_;
  }

  friend bool operator==(const Graph& a, const Graph& b) = default;

 private:
  void check(Vertex v) const {
    if (v >= order()) throw Error("unknown vertex " + std::to_string(v));
  }

  std::vector<VertexSet> adjacency_;
  std::vector<std::string> names_;
};

/// A graph together with a class label for every vertex.
struct PartitionedGraph {
  Graph graph;
  std::vector<int> classes;

  PartitionedGraph() = default;
  PartitionedGraph(Graph g, std::vector<int> labels)
      : graph(std::move(g)), classes(std::move(labels)) {
    if (classes.size() != graph.order()) {
      throw Error("every vertex needs exactly one class label");
    }
  }

  int label(Vertex v) const { return classes.at(v); }

  /// Distinct labels in increasing order.
  std::vector<int> labels() const {
    std::vector<int> out = classes;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  std::size_t class_count() const { return labels().size(); }

  VertexSet members(int label) const {
    VertexSet s;
    for (Vertex v = 0; v < classes.size(); ++v) {
      if (classes[v] == label) s.insert(v);
    }
    return s;
  }

  PartitionedGraph induced(VertexSet keep) const {
    std::vector<int> labels;
    for (Vertex v : keep) labels.push_back(classes.at(v));
    return {graph.induced(keep), std::move(labels)};
  }

  friend bool operator==(const PartitionedGraph&, const PartitionedGraph&) = default;
};

// ---------------------------------------------------------------------------
// Metrics

/// Shortest-path length; std::nullopt means the vertices are in different
/// connected components.
using Distance = std::optional<std::size_t>;

/// Breadth-first distances from `source` to every vertex.
inline std::vector<Distance> distances_from(const Graph& g, Vertex source) {
  std::vector<Distance> dist(g.order());
  g.neighbors(source);  // validates
  dist[source] = 0;
  VertexSet seen = VertexSet::single(source);
  VertexSet frontier = seen;
  std::size_t level = 0;
  while (!frontier.empty()) {
    ++level;
    VertexSet next;
    for (Vertex u : frontier) next |= g.neighbors(u);
    next -= seen;
    for (Vertex v : next) dist[v] = level;
    seen |= next;
    frontier = next;
  }
  return dist;
}

inline Distance distance(const Graph& g, Vertex u, Vertex v) {
  g.neighbors(v);
  return distances_from(g, u)[v];
}

inline VertexSet component_of(const Graph& g, Vertex v) {
  VertexSet seen = VertexSet::single(v);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex u : frontier) next |= g.neighbors(u);
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

/// Maximal connected vertex sets ordered by smallest member.
inline std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet left = g.vertices();
  while (!left.empty()) {
    VertexSet c = component_of(g, left.front());
    out.push_back(c);
    left -= c;
  }
  return out;
}

inline bool is_connected(const Graph& g) {
  return g.order() == 0 || component_of(g, 0) == g.vertices();
}

/// Connected components of the subgraph induced by `within`, as vertex sets
/// of the host graph.
inline std::vector<VertexSet> components_within(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet left = within;
  while (!left.empty()) {
    VertexSet seen = VertexSet::single(left.front());
    VertexSet frontier = seen;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex u : frontier) next |= g.neighbors(u) & within;
      next -= seen;
      seen |= next;
      frontier = next;
    }
    out.push_back(seen);
    left -= seen;
  }
  return out;
}

/// Minimum distance between two disjoint vertex sets lying in the same
/// connected component.
inline std::size_t subgraph_distance(const Graph& g, VertexSet a, VertexSet b) {
  if (!g.contains(a) || !g.contains(b)) throw Error("vertex set not in graph");
  if (a.empty() || b.empty()) throw Error("subgraph distance needs non-empty sets");
  if (a.intersects(b)) throw Error("subgraph distance needs disjoint sets");
  std::optional<std::size_t> best;
  for (Vertex u : a) {
    auto dist = distances_from(g, u);
    for (Vertex v : b) {
      if (!dist[v]) throw Error("subgraphs lie in different components");
      if (!best || *dist[v] < *best) best = dist[v];
    }
  }
  return *best;
}

inline std::size_t eccentricity(const Graph& g, Vertex u) {
  std::size_t ecc = 0;
  for (const Distance& d : distances_from(g, u)) {
    if (!d) throw Error("eccentricity is undefined on a disconnected graph");
    ecc = std::max(ecc, *d);
  }
  return ecc;
}

// ---------------------------------------------------------------------------
// Constructions

inline Graph complement(const Graph& g) {
  std::vector<VertexSet> adj(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    adj[u] = g.vertices() - g.closed_neighbors(u);
  }
  Graph out = Graph::from_adjacency(std::move(adj));
  return g.named() ? out.with_names(g.names()) : out;
}

inline Graph disjoint_union(const Graph& a, const Graph& b, bool join_all) {
  const std::size_t n = a.order() + b.order();
  if (n > kMaxOrder) throw Error("union exceeds maximum order");
  std::vector<VertexSet> adj(n);
  VertexSet a_side = VertexSet::range(a.order());
  VertexSet b_side = VertexSet::range(n) - a_side;
  for (Vertex u = 0; u < a.order(); ++u) {
    adj[u] = a.neighbors(u);
    if (join_all) adj[u] |= b_side;
  }
  for (Vertex u = 0; u < b.order(); ++u) {
    adj[a.order() + u] = VertexSet(b.neighbors(u).bits() << a.order());
    if (join_all) adj[a.order() + u] |= a_side;
  }
  Graph out = Graph::from_adjacency(std::move(adj));
  if (a.named() && b.named()) {
    std::vector<std::string> names = a.names();
    for (const auto& nm : b.names()) {
      if (std::find(names.begin(), names.end(), nm) != names.end()) {
        throw Error("vertex sets overlap on '" + nm + "'");
      }
      names.push_back(nm);
    }
    out = out.with_names(std::move(names));
  }
  return out;
}

/// G1 + G2: the disjoint union plus every cross edge. The second graph's
/// vertices are shifted by order(g1). Named graphs must not share names.
inline Graph join(const Graph& g1, const Graph& g2) {
  return disjoint_union(g1, g2, true);
}

inline Graph graph_union(const Graph& g1, const Graph& g2) {
  return disjoint_union(g1, g2, false);
}

enum class GraphKind { kComplete, kEmpty, kPath, kCycle, kStar, kNull };

inline Graph standard_graph(GraphKind kind, std::size_t n) {
  std::vector<Edge> edges;
  switch (kind) {
    case GraphKind::kNull:
      if (n != 0) throw Error("the null graph has no vertices");
      break;
    case GraphKind::kComplete:
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      break;
    case GraphKind::kEmpty:
      if (n < 1) throw Error("empty graphs E_n need n >= 1");
      break;
    case GraphKind::kPath:
      if (n < 1) throw Error("paths need n >= 1");
      for (Vertex u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
      break;
    case GraphKind::kCycle:
      if (n < 3) throw Error("cycles need n >= 3");
      for (Vertex u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
      break;
    case GraphKind::kStar:
      if (n < 1) throw Error("stars need n >= 1");
      for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
      break;
  }
  return Graph(n, edges);
}

inline Graph complete_graph(std::size_t n) { return standard_graph(GraphKind::kComplete, n); }
inline Graph empty_graph(std::size_t n) { return standard_graph(GraphKind::kEmpty, n); }
inline Graph path_graph(std::size_t n) { return standard_graph(GraphKind::kPath, n); }
inline Graph cycle_graph(std::size_t n) { return standard_graph(GraphKind::kCycle, n); }
inline Graph star_graph(std::size_t n) { return standard_graph(GraphKind::kStar, n); }

/// One vertex per non-empty class (in increasing label order); two classes
/// are adjacent iff some edge crosses between them. Vertices are named
/// after their labels.
inline Graph quotient(const PartitionedGraph& pg) {
  const std::vector<int> labels = pg.labels();
  std::map<int, Vertex> index;
  for (Vertex i = 0; i < labels.size(); ++i) index[labels[i]] = i;
  std::vector<VertexSet> adj(labels.size());
  for (auto [u, v] : pg.graph.edges()) {
    Vertex a = index[pg.classes[u]];
    Vertex b = index[pg.classes[v]];
    if (a != b) {
      adj[a].insert(b);
      adj[b].insert(a);
    }
  }
  std::vector<std::string> names;
  for (int l : labels) names.push_back(std::to_string(l));
  return Graph::from_adjacency(std::move(adj)).with_names(std::move(names));
}

}  // namespace twincsp

#endif  // TWINCSP_GRAPH_HPP_
