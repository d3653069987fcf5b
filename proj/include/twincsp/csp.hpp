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

#ifndef TWINCSP_CSP_HPP_
#define TWINCSP_CSP_HPP_

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twincsp/error.hpp"
#include "twincsp/graph.hpp"
#include "twincsp/twin.hpp"

namespace twincsp {

// Core-semiperiphery-periphery (CSP) networks are connected 3-partitioned
// graphs where
//   (i)   every core vertex has eccentricity at most two,
//   (ii)  every semiperiphery vertex is adjacent to a core and a periphery
//         vertex that are not adjacent to each other,
//   (iii) every periphery vertex has degree one.
// A CSP structure additionally has no true-twin core pair and no proper,
// class-preserving F-twin pair of subgraphs inside semiperiphery+periphery.

enum class CspClass : int { kCore = 0, kSemiperiphery = 1, kPeriphery = 2 };

inline constexpr int kCore = static_cast<int>(CspClass::kCore);
inline constexpr int kSemiperiphery = static_cast<int>(CspClass::kSemiperiphery);
inline constexpr int kPeriphery = static_cast<int>(CspClass::kPeriphery);

inline std::string to_string(CspClass c) {
  switch (c) {
    case CspClass::kCore: return "core";
    case CspClass::kSemiperiphery: return "semiperiphery";
    case CspClass::kPeriphery: return "periphery";
  }
  return "?";
}

inline std::string class_name(int label) { return to_string(static_cast<CspClass>(label)); }

inline std::optional<CspClass> parse_csp_class(const std::string& s) {
  if (s == "core" || s == "c") return CspClass::kCore;
  if (s == "semiperiphery" || s == "semi" || s == "s") return CspClass::kSemiperiphery;
  if (s == "periphery" || s == "p") return CspClass::kPeriphery;
  return std::nullopt;
}

struct CspViolation {
  VertexSet subject;
  std::string condition;
};

struct CspValidationReport {
  bool is_csp_network = false;
  bool is_csp_structure = false;
  std::vector<CspViolation> violations;
};

inline void require_csp_labels(const PartitionedGraph& pg) {
  for (int c : pg.classes) {
    if (c < kCore || c > kPeriphery) {
      throw Error("CSP labels must be core, semiperiphery or periphery");
    }
  }
}

inline CspValidationReport validate(const PartitionedGraph& pg) {
  require_csp_labels(pg);
  const Graph& g = pg.graph;
  CspValidationReport report;
  auto& out = report.violations;
  const VertexSet core = pg.members(kCore);
  const VertexSet semi = pg.members(kSemiperiphery);
  const VertexSet peri = pg.members(kPeriphery);

  const bool connected = g.order() > 0 && is_connected(g);
  if (!connected) out.push_back({g.vertices(), "graph is connected"});
  if (core.empty()) out.push_back({{}, "core class is non-empty"});
  if (semi.empty()) out.push_back({{}, "semiperiphery class is non-empty"});
  if (peri.empty()) out.push_back({{}, "periphery class is non-empty"});

  if (connected) {
    for (Vertex c : core) {
      if (eccentricity(g, c) > 2) out.push_back({VertexSet::single(c), "core eccentricity <= 2"});
    }
  }
  for (Vertex s : semi) {
    bool bridged = false;
    for (Vertex c : g.neighbors(s) & core) {
      if (!(g.neighbors(s) & (peri - g.neighbors(c))).empty()) bridged = true;
    }
    if (!bridged) {
      out.push_back({VertexSet::single(s),
                     "semiperiphery adjacent to a non-adjacent core/periphery pair"});
    }
  }
  for (Vertex p : peri) {
    if (g.degree(p) != 1) out.push_back({VertexSet::single(p), "periphery degree == 1"});
  }
  report.is_csp_network = out.empty();

  const std::size_t before = out.size();
  for (const TwinClass& tc : detail::vertex_twin_classes(g, TwinKind::kT, core, pg.classes)) {
    VertexSet all;
    for (VertexSet m : tc.members) all |= m;
    out.push_back({all, "no proper T-twin core vertices"});
  }
  if (auto w = find_connected_f_twin(g, semi | peri, pg.classes)) {
    out.push_back({w->v1 | w->v2, "no proper F-twin semiperiphery-periphery subgraphs"});
  }
  report.is_csp_structure = report.is_csp_network && out.size() == before;
  return report;
}

// ---------------------------------------------------------------------------
// Reduction

struct ReduceResult {
  PartitionedGraph structure;
  /// origin[v] = index in the input of the vertex now at v.
  std::vector<Vertex> origin;
  /// absorbed_by[u] = input index of the surviving vertex that represents u
  /// (u itself when it survives).
  std::vector<Vertex> absorbed_by;
};

namespace detail {

class Reducer {
 public:
  Reducer(const PartitionedGraph& pg, VertexSet preferred)
      : current_(pg), preferred_(preferred) {
    origin_.resize(pg.graph.order());
    absorbed_by_.resize(pg.graph.order());
    for (Vertex v = 0; v < origin_.size(); ++v) origin_[v] = absorbed_by_[v] = v;
  }

  ReduceResult run() {
    while (collapse_core_twins() || collapse_fringe_vertices() || collapse_fringe_components() ||
           collapse_fringe_subgraphs()) {
    }
    for (Vertex& a : absorbed_by_) {
      while (absorbed_by_[a] != a) a = absorbed_by_[a];
    }
    return {current_, origin_, absorbed_by_};
  }

 private:
  VertexSet fringe() const {
    return current_.members(kSemiperiphery) | current_.members(kPeriphery);
  }

  std::size_t preference(VertexSet s) const {
    std::size_t score = 0;
    for (Vertex v : s) score += preferred_.contains(origin_[v]) ? 1 : 0;
    return score;
  }

  // Preferred members win; ties fall back to the smallest sorted vertex list
  // (current indices are monotone in input indices).
  VertexSet choose(const std::vector<VertexSet>& members) const {
    VertexSet best = members.front();
    for (VertexSet m : members) {
      const std::size_t pm = preference(m);
      const std::size_t pb = preference(best);
      if (pm > pb || (pm == pb && lex_less(m, best))) best = m;
    }
    return best;
  }

  // Removes every member of `tc` except the chosen representative, mapping
  // each removed vertex onto its image in the representative.
  void absorb(const TwinClass& tc) {
    const VertexSet keep = choose(tc.members);
    VertexSet drop;
    for (VertexSet m : tc.members) {
      if (m == keep) continue;
      auto w = check_twin(current_.graph, tc.kind, keep, m, current_.classes);
      if (!w) throw ConsistencyError("twin class member lost its witness");
      for (auto [from, to] : w->pairs()) absorbed_by_[origin_[to]] = origin_[from];
      drop |= m;
    }
    pending_ |= drop;
  }

  bool commit() {
    if (pending_.empty()) return false;
    const VertexSet keep = current_.graph.vertices() - pending_;
    std::vector<Vertex> origin;
    for (Vertex v : keep) origin.push_back(origin_[v]);
    current_ = current_.induced(keep);
    origin_ = std::move(origin);
    pending_ = VertexSet();
    return true;
  }

  bool collapse_core_twins() {
    for (const auto& tc : vertex_twin_classes(current_.graph, TwinKind::kT,
                                              current_.members(kCore), current_.classes)) {
      absorb(tc);
    }
    return commit();
  }

  bool collapse_fringe_vertices() {
    for (const auto& tc :
         vertex_twin_classes(current_.graph, TwinKind::kF, fringe(), current_.classes)) {
      absorb(tc);
    }
    return commit();
  }

  bool collapse_fringe_components() {
    const auto comps = components_within(current_.graph, fringe());
    for (const auto& tc : classify(current_.graph, TwinKind::kF, comps, current_.classes)) {
      if (tc.members.size() > 1) absorb(tc);
    }
    return commit();
  }

  bool collapse_fringe_subgraphs() {
    const auto classes = connected_f_twin_classes(current_.graph, fringe(), current_.classes);
    if (classes.empty()) return false;
    absorb(classes.front());
    return commit();
  }

  PartitionedGraph current_;
  VertexSet preferred_;
  VertexSet pending_;
  std::vector<Vertex> origin_;
  std::vector<Vertex> absorbed_by_;
};

}  // namespace detail

/// Collapses twins until the network is a CSP structure: true-twin cores,
/// then twin fringe (semiperiphery/periphery) vertices, then twin fringe
/// components, then any remaining connected twin fringe subgraphs, repeated
/// to a fixpoint. `preferred` (input indices) biases which twin survives.
inline ReduceResult reduce(const PartitionedGraph& pg, VertexSet preferred = {}) {
  if (!validate(pg).is_csp_network) throw Error("input is not a CSP network");
  ReduceResult r = detail::Reducer(pg, preferred).run();
  if (!validate(r.structure).is_csp_structure) {
    throw ConsistencyError("reduction did not reach a CSP structure");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Decomposition

/// Cores split into C0 (carrying a periphery leaf) and C1 (the rest);
/// semiperiphery S; periphery P. `attach` pairs each C0 or S vertex with its
/// unique periphery leaf.
struct CspDecomposition {
  VertexSet c0;
  VertexSet c1;
  VertexSet s;
  VertexSet p;
  std::vector<std::pair<Vertex, Vertex>> attach;

  std::size_t n0() const { return c0.size(); }
  std::size_t n1() const { return c1.size(); }
  std::size_t nc() const { return c0.size() + c1.size(); }
  std::size_t ns() const { return s.size(); }
  std::size_t np() const { return p.size(); }
};

inline CspDecomposition decompose(const PartitionedGraph& pg) {
  if (!validate(pg).is_csp_structure) throw Error("input is not a CSP structure");
  const Graph& g = pg.graph;
  CspDecomposition d;
  d.s = pg.members(kSemiperiphery);
  d.p = pg.members(kPeriphery);
  const VertexSet core = pg.members(kCore);
  for (Vertex c : core) {
    if ((g.neighbors(c) & d.p).empty()) d.c1.insert(c); else d.c0.insert(c);
  }
  auto fail = [](const std::string& what) {
    throw ConsistencyError("CSP decomposition clause violated: " + what);
  };

  for (Vertex a : d.c0) {
    if (!(core - VertexSet::single(a)).subset_of(g.neighbors(a))) {
      fail("C0 is complete and joined to C1");
    }
  }
  for (Vertex c : core) {
    if (!d.s.subset_of(g.neighbors(c))) fail("core is joined to the semiperiphery");
  }
  VertexSet owners;
  for (Vertex x : d.p) {
    const VertexSet n = g.neighbors(x);
    if (n.size() != 1 || !n.subset_of(d.c0 | d.s)) fail("peripheries are leaves on C0 or S");
    const Vertex owner = n.front();
    if (owners.contains(owner)) fail("periphery attachment is one-to-one");
    owners.insert(owner);
    d.attach.emplace_back(owner, x);
  }
  std::sort(d.attach.begin(), d.attach.end());
  if (owners != (d.c0 | d.s)) fail("every C0 and S vertex carries a periphery");
  if (d.np() != d.n0() + d.ns()) fail("np = n0 + ns");
  if (!true_twin_vertices(g.induced(d.c1)).empty()) fail("C1 has no true twin vertices");
  if (has_proper_twin(g.induced(d.s), TwinKind::kF)) fail("S has no proper F-twin subgraphs");
  if (d.nc() == 0 || d.ns() == 0 || d.np() == 0) fail("nc, ns, np are non-zero");
  return d;
}

/// Builds the structure (K_n0 + c1) + s with one periphery leaf on every
/// C0 and S vertex. Vertex layout: C0, C1, S, C0 leaves, S leaves.
inline PartitionedGraph compose(const Graph& c1, const Graph& s, std::size_t n0) {
  if (!true_twin_vertices(c1).empty()) throw Error("C1 must not have true twin vertices");
  if (has_proper_twin(s, TwinKind::kF)) throw Error("S must not have proper F-twin subgraphs");
  if (c1.order() + n0 < 1) throw Error("a CSP structure needs at least one core");
  if (s.order() < 1) throw Error("a CSP structure needs at least one semiperiphery vertex");
  const std::size_t n1 = c1.order();
  const std::size_t ns = s.order();
  const std::size_t n = 2 * n0 + n1 + 2 * ns;
  if (n > kMaxOrder) throw Error("composed structure exceeds maximum order");

  const Graph core = join(complete_graph(n0), c1);
  const Graph inner = join(core, s);
  std::vector<Edge> edges = inner.edges();
  for (Vertex i = 0; i < n0; ++i) edges.emplace_back(i, n0 + n1 + ns + i);
  for (Vertex i = 0; i < ns; ++i) edges.emplace_back(n0 + n1 + i, 2 * n0 + n1 + ns + i);
  std::vector<int> labels;
  labels.insert(labels.end(), n0 + n1, kCore);
  labels.insert(labels.end(), ns, kSemiperiphery);
  labels.insert(labels.end(), n0 + ns, kPeriphery);
  return {Graph(n, edges), std::move(labels)};
}

/// compose() applied to the parts of a decomposition.
inline PartitionedGraph recompose(const PartitionedGraph& pg, const CspDecomposition& d) {
  return compose(pg.graph.induced(d.c1), pg.graph.induced(d.s), d.n0());
}

}  // namespace twincsp

#endif  // TWINCSP_CSP_HPP_
