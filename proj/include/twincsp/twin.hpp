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

#ifndef TWINCSP_TWIN_HPP_
#define TWINCSP_TWIN_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "twincsp/canonical.hpp"
#include "twincsp/error.hpp"
#include "twincsp/graph.hpp"

namespace twincsp {

/// F-twins share open external neighborhoods, N(u) - V1 = N(phi(u)) - V2.
/// T-twins share N(u) + V1 = N(phi(u)) + V2.
enum class TwinKind { kF, kT };

inline const char* to_string(TwinKind k) { return k == TwinKind::kF ? "f" : "t"; }

/// Optional class labels restricting twin maps to class-preserving ones.
using ClassLabels = std::span<const int>;

/// A certified twin pair: phi maps the i-th smallest vertex of v1 to image[i].
struct TwinWitness {
  TwinKind kind = TwinKind::kF;
  VertexSet v1;
  VertexSet v2;
  std::vector<Vertex> image;

  Vertex apply(Vertex u) const {
    std::size_t i = 0;
    for (Vertex w : v1) {
      if (w == u) return image[i];
      ++i;
    }
    throw Error("vertex not in the witness domain");
  }
  Vertex inverse(Vertex x) const {
    std::size_t i = 0;
    for (Vertex w : v1) {
      if (image[i] == x) return w;
      ++i;
    }
    throw Error("vertex not in the witness image");
  }
  std::vector<std::pair<Vertex, Vertex>> pairs() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    std::size_t i = 0;
    for (Vertex w : v1) out.emplace_back(w, image[i++]);
    return out;
  }
  bool proper() const { return v1 != v2; }
};

/// Pairwise twins; `representative` is the member with the lexicographically
/// smallest sorted vertex list. Members are sorted the same way.
struct TwinClass {
  TwinKind kind = TwinKind::kF;
  std::vector<VertexSet> members;
  VertexSet representative;
};

namespace detail {

inline VertexSet twin_signature(const Graph& g, TwinKind kind, Vertex u, VertexSet own) {
  return kind == TwinKind::kF ? g.neighbors(u) - own : g.neighbors(u) | own;
}

inline int class_of(ClassLabels classes, Vertex v) {
  return classes.empty() ? 0 : classes[v];
}

// Invariant key: multiset of (class, internal degree, signature) over the set.
inline std::vector<std::uint64_t> twin_key(const Graph& g, TwinKind kind, VertexSet s,
                                           ClassLabels classes) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> rows;
  for (Vertex u : s) {
    const std::uint64_t meta =
        (static_cast<std::uint64_t>(static_cast<std::uint32_t>(class_of(classes, u))) << 8) |
        (g.neighbors(u) & s).size();
    rows.emplace_back(meta, twin_signature(g, kind, u, s).bits());
  }
  std::sort(rows.begin(), rows.end());
  std::vector<std::uint64_t> key;
  key.reserve(rows.size() * 2);
  for (auto [a, b] : rows) {
    key.push_back(a);
    key.push_back(b);
  }
  return key;
}

inline void require_subset(const Graph& g, VertexSet s) {
  if (!g.contains(s)) throw Error("vertex set is not a subset of the graph");
}

}  // namespace detail

/// Checks every clause of the twin definition for a candidate witness.
/// Independent of the search in check_twin.
inline bool is_valid_witness(const Graph& g, const TwinWitness& w, ClassLabels classes = {}) {
  if (!g.contains(w.v1) || !g.contains(w.v2)) return false;
  if (w.v1.size() != w.v2.size() || w.image.size() != w.v1.size()) return false;
  VertexSet hit;
  for (Vertex x : w.image) {
    if (!w.v2.contains(x) || hit.contains(x)) return false;
    hit.insert(x);
  }
  for (auto [u, x] : w.pairs()) {
    if (!classes.empty() && classes[u] != classes[x]) return false;
    for (auto [v, y] : w.pairs()) {
      if (g.adjacent(u, v) != g.adjacent(x, y)) return false;
    }
    if (w.kind == TwinKind::kF) {
      if (g.neighbors(u) - w.v1 != g.neighbors(x) - w.v2) return false;
    } else {
      if ((g.neighbors(u) | w.v1) != (g.neighbors(x) | w.v2)) return false;
    }
  }
  return true;
}

/// Searches for a twin witness between the subgraphs induced by v1 and v2.
/// Vertices are bucketed by external signature (and class, when labels are
/// given); backtracking then enforces adjacency preservation. Candidates are
/// tried in increasing vertex order, so results are deterministic.
inline std::optional<TwinWitness> check_twin(const Graph& g, TwinKind kind, VertexSet v1,
                                             VertexSet v2, ClassLabels classes = {}) {
  detail::require_subset(g, v1);
  detail::require_subset(g, v2);
  if (!classes.empty() && classes.size() != g.order()) throw Error("class vector size mismatch");
  if (v1.size() != v2.size()) return std::nullopt;
  TwinWitness w{kind, v1, v2, {}};
  if (v1 == v2) {
    w.image = v1.to_vector();
    return w;
  }

  const std::vector<Vertex> dom = v1.to_vector();
  std::vector<std::vector<Vertex>> cand(dom.size());
  for (std::size_t i = 0; i < dom.size(); ++i) {
    const Vertex u = dom[i];
    const VertexSet su = detail::twin_signature(g, kind, u, v1);
    const std::size_t du = (g.neighbors(u) & v1).size();
    for (Vertex x : v2) {
      if (detail::class_of(classes, u) != detail::class_of(classes, x)) continue;
      if ((g.neighbors(x) & v2).size() != du) continue;
      if (detail::twin_signature(g, kind, x, v2) != su) continue;
      cand[i].push_back(x);
    }
    if (cand[i].empty()) return std::nullopt;
  }

  std::vector<std::size_t> order(dom.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return cand[a].size() < cand[b].size();
  });

  std::vector<Vertex> image(dom.size());
  std::vector<bool> assigned(dom.size(), false);
  VertexSet used;
  std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
    if (depth == order.size()) return true;
    const std::size_t i = order[depth];
    for (Vertex x : cand[i]) {
      if (used.contains(x)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < dom.size() && ok; ++j) {
        if (assigned[j] && g.adjacent(dom[i], dom[j]) != g.adjacent(x, image[j])) ok = false;
      }
      if (!ok) continue;
      image[i] = x;
      assigned[i] = true;
      used.insert(x);
      if (extend(depth + 1)) return true;
      assigned[i] = false;
      used.erase(x);
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  w.image = std::move(image);
  return w;
}

inline std::optional<TwinWitness> check_f_twin(const Graph& g, VertexSet v1, VertexSet v2,
                                               ClassLabels classes = {}) {
  return check_twin(g, TwinKind::kF, v1, v2, classes);
}

inline std::optional<TwinWitness> check_t_twin(const Graph& g, VertexSet v1, VertexSet v2,
                                               ClassLabels classes = {}) {
  return check_twin(g, TwinKind::kT, v1, v2, classes);
}

// ---------------------------------------------------------------------------
// Twin vertices

namespace detail {

inline std::vector<TwinClass> vertex_twin_classes(const Graph& g, TwinKind kind,
                                                  VertexSet within, ClassLabels classes) {
  std::map<std::pair<int, std::uint64_t>, VertexSet> groups;
  for (Vertex u : within) {
    const VertexSet n = kind == TwinKind::kF ? g.neighbors(u) : g.closed_neighbors(u);
    groups[{class_of(classes, u), n.bits()}].insert(u);
  }
  std::vector<TwinClass> out;
  for (const auto& [key, members] : groups) {
    if (members.size() < 2) continue;
    TwinClass c{kind, {}, VertexSet::single(members.front())};
    for (Vertex v : members) c.members.push_back(VertexSet::single(v));
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const TwinClass& a, const TwinClass& b) {
    return a.representative.front() < b.representative.front();
  });
  return out;
}

}  // namespace detail

/// Classes of vertices with equal open neighborhoods; singletons omitted.
inline std::vector<TwinClass> false_twin_vertices(const Graph& g) {
  return detail::vertex_twin_classes(g, TwinKind::kF, g.vertices(), {});
}

/// Classes of vertices with equal closed neighborhoods; singletons omitted.
inline std::vector<TwinClass> true_twin_vertices(const Graph& g) {
  return detail::vertex_twin_classes(g, TwinKind::kT, g.vertices(), {});
}

// ---------------------------------------------------------------------------
// Subset enumeration helpers

/// Calls `fn(s)` for every k-subset of `from`, in increasing bit order.
template <class Fn>
void for_each_subset_of_size(VertexSet from, std::size_t k, Fn&& fn) {
  const std::vector<Vertex> pool = from.to_vector();
  const std::size_t m = pool.size();
  if (k > m) return;
  if (k == 0) {
    fn(VertexSet());
    return;
  }
  std::uint64_t pick = (k == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = m == 64 ? 0 : std::uint64_t{1} << m;
  while (true) {
    VertexSet s;
    for (std::uint64_t b = pick; b; b &= b - 1) s.insert(pool[std::countr_zero(b)]);
    fn(s);
    // Gosper's hack.
    const std::uint64_t low = pick & (~pick + 1);
    const std::uint64_t ripple = pick + low;
    if (ripple == 0) break;
    pick = (((ripple ^ pick) >> 2) / low) | ripple;
    if (limit != 0 && pick >= limit) break;
  }
}

/// Calls `fn(s)` once for every non-empty subset of `within` that induces a
/// connected subgraph, up to `max_size` vertices.
template <class Fn>
void for_each_connected_subset(const Graph& g, VertexSet within, std::size_t max_size, Fn&& fn) {
  std::function<void(VertexSet, VertexSet, VertexSet)> grow =
      [&](VertexSet current, VertexSet allowed, VertexSet forbidden) {
        fn(current);
        if (current.size() >= max_size) return;
        VertexSet frontier;
        for (Vertex u : current) frontier |= g.neighbors(u);
        frontier = (frontier & allowed) - current - forbidden;
        VertexSet blocked = forbidden;
        for (Vertex w : frontier) {
          VertexSet next = current;
          next.insert(w);
          grow(next, allowed, blocked);
          blocked.insert(w);
        }
      };
  for (Vertex v : within) {
    VertexSet allowed = within - VertexSet::range(v);
    grow(VertexSet::single(v), allowed, VertexSet());
  }
}

// ---------------------------------------------------------------------------
// Twin classes of induced copies

namespace detail {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Groups `sets` into twin classes. Only sets with equal invariant keys are
// compared, then union-find closes the relation.
inline std::vector<TwinClass> classify(const Graph& g, TwinKind kind,
                                       const std::vector<VertexSet>& sets, ClassLabels classes) {
  std::map<std::vector<std::uint64_t>, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    buckets[twin_key(g, kind, sets[i], classes)].push_back(i);
  }
  UnionFind uf(sets.size());
  for (const auto& [key, idx] : buckets) {
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        if (uf.find(idx[a]) == uf.find(idx[b])) continue;
        if (check_twin(g, kind, sets[idx[a]], sets[idx[b]], classes)) uf.unite(idx[a], idx[b]);
      }
    }
  }
  std::map<std::size_t, std::vector<VertexSet>> grouped;
  for (std::size_t i = 0; i < sets.size(); ++i) grouped[uf.find(i)].push_back(sets[i]);
  std::vector<TwinClass> out;
  for (auto& [root, members] : grouped) {
    std::sort(members.begin(), members.end(), lex_less);
    out.push_back({kind, members, members.front()});
  }
  std::sort(out.begin(), out.end(), [](const TwinClass& a, const TwinClass& b) {
    return lex_less(a.representative, b.representative);
  });
  return out;
}

}  // namespace detail

/// Every induced copy of `pattern` in `g`, as vertex sets.
inline std::vector<VertexSet> induced_copies(const Graph& g, const Graph& pattern) {
  std::vector<VertexSet> copies;
  if (pattern.order() > g.order()) return copies;
  const CanonicalForm want = canonical_form(pattern, std::nullopt, kCanonicalHardLimit);
  for_each_subset_of_size(g.vertices(), pattern.order(), [&](VertexSet s) {
    const Graph h = g.induced(s);
    if (h.size() != pattern.size()) return;
    if (canonical_form(h, std::nullopt, kCanonicalHardLimit) == want) copies.push_back(s);
  });
  return copies;
}

/// Partitions the induced copies of `pattern` into twin classes (singleton
/// classes included).
inline std::vector<TwinClass> twin_classes(const Graph& g, TwinKind kind, const Graph& pattern,
                                           ClassLabels classes = {}) {
  return detail::classify(g, kind, induced_copies(g, pattern), classes);
}

/// Finds a pair of distinct twin induced subgraphs of order at most
/// `max_order` (all orders when unset), drawn from subsets of `within`.
/// Overlapping pairs are included. Subsets are bucketed by invariant key so
/// only plausible pairs reach the witness search.
inline std::optional<TwinWitness> find_proper_twin(const Graph& g, TwinKind kind,
                                                   std::optional<std::size_t> max_order = {},
                                                   ClassLabels classes = {},
                                                   std::optional<VertexSet> within = {}) {
  const VertexSet pool = within.value_or(g.vertices());
  detail::require_subset(g, pool);
  if (pool.size() > 24) throw Error("exhaustive twin scan limited to 24 vertices");
  const std::size_t top = std::min(max_order.value_or(pool.size()), pool.size());
  for (std::size_t k = 1; k <= top; ++k) {
    std::map<std::vector<std::uint64_t>, std::vector<VertexSet>> buckets;
    for_each_subset_of_size(pool, k, [&](VertexSet s) {
      buckets[detail::twin_key(g, kind, s, classes)].push_back(s);
    });
    for (const auto& [key, sets] : buckets) {
      for (std::size_t a = 0; a < sets.size(); ++a) {
        for (std::size_t b = a + 1; b < sets.size(); ++b) {
          if (auto w = check_twin(g, kind, sets[a], sets[b], classes)) return w;
        }
      }
    }
  }
  return std::nullopt;
}

inline bool has_proper_twin(const Graph& g, TwinKind kind,
                            std::optional<std::size_t> max_order = {}) {
  return find_proper_twin(g, kind, max_order).has_value();
}

/// Like find_proper_twin restricted to F-twins, but only scans connected
/// induced subgraphs of `within`. Any proper F-twin pair contains a pair of
/// matched, disjoint connected components that are themselves proper
/// F-twins, so the answer agrees with the exhaustive scan while staying
/// cheap on sparse vertex sets. Among all connected twin pairs found, the
/// one of smallest order is returned.
inline std::optional<TwinWitness> find_connected_f_twin(const Graph& g, VertexSet within,
                                                        ClassLabels classes = {}) {
  detail::require_subset(g, within);
  std::map<std::pair<std::size_t, std::vector<std::uint64_t>>, std::vector<VertexSet>> buckets;
  for_each_connected_subset(g, within, within.size(), [&](VertexSet s) {
    buckets[{s.size(), detail::twin_key(g, TwinKind::kF, s, classes)}].push_back(s);
  });
  for (auto& [key, sets] : buckets) {
    std::sort(sets.begin(), sets.end(), lex_less);
    for (std::size_t a = 0; a < sets.size(); ++a) {
      for (std::size_t b = a + 1; b < sets.size(); ++b) {
        if (sets[a].intersects(sets[b])) continue;
        if (auto w = check_twin(g, TwinKind::kF, sets[a], sets[b], classes)) return w;
      }
    }
  }
  return std::nullopt;
}

/// Twin classes among the connected induced subgraphs of `within` (only
/// classes with at least two members), smallest order first.
inline std::vector<TwinClass> connected_f_twin_classes(const Graph& g, VertexSet within,
                                                       ClassLabels classes = {}) {
  std::vector<VertexSet> sets;
  for_each_connected_subset(g, within, within.size(), [&](VertexSet s) { sets.push_back(s); });
  std::vector<TwinClass> out;
  for (auto& c : detail::classify(g, TwinKind::kF, sets, classes)) {
    if (c.members.size() > 1) out.push_back(std::move(c));
  }
  std::stable_sort(out.begin(), out.end(), [](const TwinClass& a, const TwinClass& b) {
    return a.representative.size() < b.representative.size();
  });
  return out;
}

/// Given F-twin edge pairs (e1, e2) and (f1, f2) from different twin classes
/// with e1 and f1 sharing a vertex, returns the six vertices
/// {u, v, w, phi(v), phi(u), psi(v)} that induce a 6-cycle, where v is the
/// shared vertex, u and w the other ends of e1 and f1.
inline VertexSet find_c6_witness(const Graph& g, VertexSet e1, VertexSet e2, VertexSet f1,
                                 VertexSet f2) {
  for (VertexSet e : {e1, e2, f1, f2}) {
    detail::require_subset(g, e);
    if (e.size() != 2 || !g.adjacent(e.front(), *++e.begin())) {
      throw Error("c6 witness needs four edges");
    }
  }
  if (e1 == e2 || f1 == f2) throw Error("c6 witness needs proper twin pairs");
  if (e1 == f1) throw Error("c6 witness needs edges from different classes");
  const VertexSet shared = e1 & f1;
  if (shared.size() != 1) throw Error("first edges of both pairs must share exactly one vertex");
  auto phi = check_f_twin(g, e1, e2);
  auto psi = check_f_twin(g, f1, f2);
  if (!phi || !psi) throw Error("edge pairs are not F-twins");
  if (check_f_twin(g, e1, f1)) throw Error("edge pairs belong to the same twin class");
  const Vertex v = shared.front();
  const Vertex u = (e1 - shared).front();
  const Vertex w = (f1 - shared).front();
  VertexSet cycle{u, v, w, phi->apply(v), phi->apply(u), psi->apply(v)};
  if (psi->apply(w) != phi->apply(u) || cycle.size() != 6) {
    throw ConsistencyError("twin edge maps do not close a 6-cycle");
  }
  const Graph h = g.induced(cycle);
  if (!isomorphic(h, cycle_graph(6))) {
    throw ConsistencyError("c6 witness vertices do not induce a 6-cycle");
  }
  return cycle;
}

}  // namespace twincsp

#endif  // TWINCSP_TWIN_HPP_
