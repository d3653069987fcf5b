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

// Structural facts about twin subgraphs, checked over every graph of order
// at most 5, 500 seeded random graphs of order at most 8, and 150 graphs
// with a planted twin pair (random G(n, 1/2) graphs rarely contain larger
// connected twins). Every pair of equal-size vertex subsets is examined,
// overlapping pairs included.

#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "twincsp/enumeration.hpp"

namespace twincsp {
namespace {

constexpr std::size_t kRandomGraphs = 500;
constexpr std::size_t kPlantedGraphs = 150;
constexpr std::uint64_t kSeed = 19940611;

struct Sample {
  Graph g;
  std::vector<std::vector<int>> dist;  // Floyd-Warshall, oracle::kInf when apart
  std::vector<TwinWitness> f;          // proper F-twin pairs, v1 < v2
  std::vector<TwinWitness> t;          // proper T-twin pairs, v1 < v2
  std::size_t duality_mismatches = 0;
};

std::vector<VertexSet> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<VertexSet> out;
  for_each_subset_of_size(VertexSet::range(n), k, [&](VertexSet s) { out.push_back(s); });
  return out;
}

Sample analyse(const Graph& g) {
  Sample s{g, oracle::floyd_warshall(oracle::matrix(g)), {}, {}, 0};
  const Graph gc = complement(g);
  for (std::size_t k = 1; k <= g.order(); ++k) {
    const auto subs = subsets_of_size(g.order(), k);
    for (std::size_t i = 0; i < subs.size(); ++i) {
      for (std::size_t j = i + 1; j < subs.size(); ++j) {
        auto f = check_f_twin(g, subs[i], subs[j]);
        auto t = check_t_twin(g, subs[i], subs[j]);
        if (f.has_value() != check_t_twin(gc, subs[i], subs[j]).has_value()) ++s.duality_mismatches;
        if (t.has_value() != check_f_twin(gc, subs[i], subs[j]).has_value()) ++s.duality_mismatches;
        if (f) s.f.push_back(*f);
        if (t) s.t.push_back(*t);
      }
    }
  }
  return s;
}

// Two copies of a random graph on k vertices, each vertex and its copy
// wired to the same random subset of up to 8 - 2k outside vertices.
Graph planted_twins(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick_k(1, 3);
  std::bernoulli_distribution coin(0.5);
  const std::size_t k = pick_k(rng);
  std::uniform_int_distribution<std::size_t> pick_m(0, 8 - 2 * k);
  const std::size_t m = pick_m(rng);
  const Graph h = oracle::random_graph(k, 0.5, rng);
  const Graph x = oracle::random_graph(m, 0.5, rng);
  std::vector<Edge> edges;
  for (auto [u, v] : h.edges()) {
    edges.emplace_back(u, v);
    edges.emplace_back(u + k, v + k);
  }
  for (auto [u, v] : x.edges()) edges.emplace_back(u + 2 * k, v + 2 * k);
  for (Vertex u = 0; u < k; ++u) {
    for (Vertex y = 0; y < m; ++y) {
      if (!coin(rng)) continue;
      edges.emplace_back(u, y + 2 * k);
      edges.emplace_back(u + k, y + 2 * k);
    }
  }
  return Graph(2 * k + m, edges);
}

const std::vector<Sample>& corpus() {
  static const std::vector<Sample> all = [] {
    std::vector<Sample> out;
    for (std::size_t n = 1; n <= 5; ++n) {
      for (const auto& f : enumerate_graphs(n)) out.push_back(analyse(to_graph(f)));
    }
    std::mt19937_64 rng(kSeed);
    std::uniform_int_distribution<std::size_t> order(1, 8);
    for (std::size_t i = 0; i < kRandomGraphs; ++i) {
      out.push_back(analyse(oracle::random_graph(order(rng), 0.5, rng)));
    }
    for (std::size_t i = 0; i < kPlantedGraphs; ++i) out.push_back(analyse(planted_twins(rng)));
    // Overlapping twin-edge classes.
    out.push_back(analyse(cycle_graph(6)));
    out.push_back(analyse(join(cycle_graph(6), complete_graph(1))));
    out.push_back(analyse(disjoint_union(cycle_graph(6), complete_graph(2), false)));
    return out;
  }();
  return all;
}

std::string describe(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.order() << " edges:";
  for (auto [u, v] : g.edges()) out << ' ' << u << '-' << v;
  return out.str();
}

// Collects counterexamples; the test asserts there are none and prints the
// first few.
struct Tally {
  std::size_t checked = 0;
  std::vector<std::string> bad;
  void expect(bool ok, const Graph& g, const std::string& what) {
    ++checked;
    if (!ok && bad.size() < 5) bad.push_back(what + " in " + describe(g));
    if (!ok && bad.size() >= 5) bad.back() += " (and more)";
  }
  void verify() const {
    EXPECT_GT(checked, 0u);
    ::testing::Test::RecordProperty("cases", static_cast<int>(checked));
    for (const auto& b : bad) ADD_FAILURE() << b;
  }
};

std::string sets(const TwinWitness& w) {
  return "{" + std::to_string(w.v1.bits()) + "," + std::to_string(w.v2.bits()) + "}";
}

bool fully_connected(const Graph& g, VertexSet a, VertexSet b) {
  for (Vertex u : a) {
    for (Vertex v : b) {
      if (u == v || !g.adjacent(u, v)) return false;
    }
  }
  return true;
}

VertexSet image(const TwinWitness& w, VertexSet s) {
  VertexSet out;
  for (Vertex u : s) out.insert(w.apply(u));
  return out;
}

int set_distance(const Sample& s, VertexSet a, VertexSet b) {
  int best = oracle::kInf;
  for (Vertex u : a) {
    for (Vertex v : b) best = std::min(best, s.dist[u][v]);
  }
  return best;
}

bool is_component_of_graph(const Graph& g, VertexSet s) {
  return component_of(g, *s.begin()) == s;
}

// Components of a and b can be paired off so that every pair is an F-twin.
bool components_match(const Graph& g, VertexSet a, VertexSet b) {
  const auto ca = components_within(g, a);
  const auto cb = components_within(g, b);
  if (ca.size() != cb.size()) return false;
  std::vector<bool> used(cb.size(), false);
  std::function<bool(std::size_t)> match = [&](std::size_t i) {
    if (i == ca.size()) return true;
    for (std::size_t j = 0; j < cb.size(); ++j) {
      if (used[j] || !check_f_twin(g, ca[i], cb[j])) continue;
      used[j] = true;
      if (match(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  return match(0);
}

bool has_induced_c6(const Graph& g) {
  bool found = false;
  for_each_subset_of_size(g.vertices(), 6, [&](VertexSet s) {
    if (found) return;
    const Graph h = g.induced(s);
    bool cycle = h.size() == 6 && is_connected(h);
    for (Vertex v = 0; v < 6 && cycle; ++v) cycle = h.degree(v) == 2;
    found = cycle;
  });
  return found;
}

TEST(PropertyTest, CorpusSize) {
  // 1 + 2 + 4 + 11 + 34 census graphs of orders 1..5.
  EXPECT_EQ(corpus().size(), 52 + kRandomGraphs + kPlantedGraphs + 3);
}

TEST(PropertyTest, ComponentMatching) {
  Tally tally;
  for (const auto& s : corpus()) {
    const Graph& g = s.g;
    for (const auto& w : s.f) {
      // Forward: the witness carries components onto twin components.
      const auto targets = components_within(g, w.v2);
      for (VertexSet k : components_within(g, w.v1)) {
        const VertexSet l = image(w, k);
        const bool is_component = std::find(targets.begin(), targets.end(), l) != targets.end();
        tally.expect(is_component && check_f_twin(g, k, l).has_value(), g,
                     "component image " + sets(w));
      }
    }
    if (g.order() > 6) continue;
    // Converse over every subset pair of the smaller graphs.
    for (std::size_t k = 1; k <= g.order(); ++k) {
      const auto subs = subsets_of_size(g.order(), k);
      for (std::size_t i = 0; i < subs.size(); ++i) {
        for (std::size_t j = i + 1; j < subs.size(); ++j) {
          tally.expect(check_f_twin(g, subs[i], subs[j]).has_value() ==
                           components_match(g, subs[i], subs[j]),
                       g, "component matching iff");
        }
      }
    }
  }
  tally.verify();
}

TEST(PropertyTest, IntersectionIsUnionOfComponents) {
  Tally tally;
  for (const auto& s : corpus()) {
    for (const auto& w : s.f) {
      const VertexSet common = w.v1 & w.v2;
      if (common.empty()) continue;
      for (VertexSet side : {w.v1, w.v2}) {
        for (VertexSet k : components_within(s.g, side)) {
          tally.expect(k.subset_of(common) || (k & common).empty(), s.g, "intersection " + sets(w));
        }
      }
    }
  }
  tally.verify();
}

TEST(PropertyTest, ConnectedTwinsAreDisjointAtDistanceTwo) {
  Tally tally;
  for (const auto& s : corpus()) {
    const Graph& g = s.g;
    for (const auto& w : s.f) {
      if (components_within(g, w.v1).size() != 1) continue;
      tally.expect((w.v1 & w.v2).empty(), g, "connected twins overlap " + sets(w));
      bool touching = false;
      for (Vertex u : w.v1) touching |= !(g.neighbors(u) & w.v2).empty();
      tally.expect(!touching, g, "connected twins adjacent " + sets(w));
      const bool both_components = is_component_of_graph(g, w.v1) && is_component_of_graph(g, w.v2);
      tally.expect(both_components || set_distance(s, w.v1, w.v2) == 2, g,
                   "connected twins distance " + sets(w));
    }
    // Disjoint twins in general: matched components are components of the
    // graph or lie at distance two inside one component.
    for (const auto& w : s.f) {
      if (!(w.v1 & w.v2).empty()) continue;
      for (VertexSet k : components_within(g, w.v1)) {
        const VertexSet l = image(w, k);
        const bool apart = is_component_of_graph(g, k) && is_component_of_graph(g, l);
        const bool together = component_of(g, *k.begin()) == component_of(g, *l.begin()) &&
                              set_distance(s, k, l) == 2;
        tally.expect(apart || together, g, "disjoint twin components " + sets(w));
      }
    }
  }
  tally.verify();
}

TEST(PropertyTest, MirrorPaths) {
  Tally tally;
  for (const auto& s : corpus()) {
    const Graph& g = s.g;
    for (const auto& w : s.f) {
      if (!(w.v1 & w.v2).empty()) continue;
      auto mirror = [&](Vertex u) {
        if (w.v1.contains(u)) return w.apply(u);
        if (w.v2.contains(u)) return w.inverse(u);
        return u;
      };
      // Every simple path with up to four edges.
      std::vector<Vertex> path;
      std::function<void()> extend = [&]() {
        if (path.size() >= 2) {
          VertexSet seen;
          bool ok = true;
          for (std::size_t i = 0; i < path.size() && ok; ++i) {
            const Vertex m = mirror(path[i]);
            ok = !seen.contains(m);
            seen.insert(m);
            if (i > 0) ok = ok && g.adjacent(mirror(path[i - 1]), m);
          }
          tally.expect(ok, g, "mirror path " + sets(w));
        }
        if (path.size() == 5) return;
        for (Vertex v : g.neighbors(path.back())) {
          if (std::find(path.begin(), path.end(), v) != path.end()) continue;
          path.push_back(v);
          extend();
          path.pop_back();
        }
      };
      for (Vertex u = 0; u < g.order(); ++u) {
        path = {u};
        extend();
      }
    }
  }
  tally.verify();
}

TEST(PropertyTest, DistancesAndHomometry) {
  Tally tally;
  for (const auto& s : corpus()) {
    const Graph& g = s.g;
    if (!is_connected(g)) continue;
    for (const auto& w : s.f) {
      if (!(w.v1 & w.v2).empty()) continue;
      std::multiset<int> d1;
      std::multiset<int> d2;
      for (Vertex u : w.v1) {
        for (Vertex x : w.v1) {
          if (u < x) d1.insert(s.dist[u][x]);
        }
      }
      for (Vertex u : w.v2) {
        for (Vertex x : w.v2) {
          if (u < x) d2.insert(s.dist[u][x]);
        }
      }
      tally.expect(d1 == d2, g, "homometric " + sets(w));
      for (Vertex u : w.v1) {
        const Vertex pu = w.apply(u);
        for (Vertex x = 0; x < g.order(); ++x) {
          if (x == u) continue;
          Vertex partner = x;
          if (w.v1.contains(x)) partner = w.apply(x);
          if (w.v2.contains(x)) partner = w.inverse(x);
          tally.expect(s.dist[u][x] == s.dist[pu][partner], g, "distance transfer " + sets(w));
        }
      }
    }
  }
  tally.verify();
}

TEST(PropertyTest, TwinRelationIsAnEquivalence) {
  Tally tally;
  for (const auto& s : corpus()) {
    const Graph& g = s.g;
    for (std::size_t k = 1; k <= std::min<std::size_t>(3, g.order()); ++k) {
      std::map<CanonicalForm, std::vector<VertexSet>> copies;
      for (VertexSet v : subsets_of_size(g.order(), k)) copies[canonical_form(g.induced(v))].push_back(v);
      for (TwinKind kind : {TwinKind::kF, TwinKind::kT}) {
        for (const auto& [form, members] : copies) {
          const std::size_t m = members.size();
          std::vector<std::vector<bool>> r(m, std::vector<bool>(m));
          for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) r[i][j] = check_twin(g, kind, members[i], members[j]).has_value();
          }
          for (std::size_t i = 0; i < m; ++i) {
            tally.expect(r[i][i], g, "reflexive");
            for (std::size_t j = 0; j < m; ++j) {
              tally.expect(r[i][j] == r[j][i], g, "symmetric");
              for (std::size_t l = 0; l < m; ++l) {
                if (r[i][j] && r[j][l]) tally.expect(r[i][l], g, "transitive");
              }
            }
          }
          // The library's classes are exactly the equivalence classes.
          const Graph pattern = to_graph(form);
          for (const auto& c : twin_classes(g, kind, pattern)) {
            for (VertexSet a : c.members) {
              const std::size_t ia = std::find(members.begin(), members.end(), a) - members.begin();
              std::size_t related = 0;
              for (std::size_t j = 0; j < m; ++j) related += r[ia][j];
              tally.expect(related == c.members.size(), g, "class size");
            }
          }
        }
      }
    }
  }
  tally.verify();
}

TEST(PropertyTest, TwinVerticesInsideConnectedTwins) {
  Tally tally;
  for (const auto& s : corpus()) {
    for (const auto& vw : s.f) {
      if (vw.v1.size() != 1) continue;
      const Vertex u = *vw.v1.begin();
      const Vertex u2 = *vw.v2.begin();
      for (const auto& w : s.f) {
        if (w.v1.size() < 2 || components_within(s.g, w.v1).size() != 1) continue;
        for (VertexSet h : {w.v1, w.v2}) {
          if (h.contains(u)) tally.expect(h.contains(u2), s.g, "vertex twin containment " + sets(w));
          if (h.contains(u2)) tally.expect(h.contains(u), s.g, "vertex twin containment " + sets(w));
        }
      }
    }
  }
  tally.verify();
}

TEST(PropertyTest, VertexAndEdgeTwinsAreDisjoint) {
  Tally tally;
  for (const auto& s : corpus()) {
    VertexSet vertex_twins;
    VertexSet edge_twins;
    for (const auto& w : s.f) {
      if (w.v1.size() == 1) vertex_twins |= w.v1 | w.v2;
      if (w.v1.size() == 2 && s.g.adjacent(*w.v1.begin(), *std::next(w.v1.begin()))) {
        edge_twins |= w.v1 | w.v2;
      }
    }
    tally.expect((vertex_twins & edge_twins).empty(), s.g, "vertex/edge twins overlap");
    if (s.g.order() <= 5) {
      tally.expect(vertex_twins.empty() || edge_twins.empty(), s.g, "small graph with both kinds");
    }
  }
  tally.verify();
}

TEST(PropertyTest, OverlappingEdgeClassesNeedAnInducedSixCycle) {
  Tally tally;
  std::size_t overlaps = 0;
  for (const auto& s : corpus()) {
    const Graph& g = s.g;
    std::vector<TwinWitness> edges;
    for (const auto& w : s.f) {
      if (w.v1.size() == 2 && g.adjacent(*w.v1.begin(), *std::next(w.v1.begin()))) edges.push_back(w);
    }
    bool overlap = false;
    for (const auto& a : edges) {
      for (const auto& b : edges) {
        for (VertexSet e : {a.v1, a.v2}) {
          for (VertexSet f : {b.v1, b.v2}) {
            if (e != f && !(e & f).empty() && !check_f_twin(g, e, f)) overlap = true;
          }
        }
      }
    }
    tally.expect(!overlap || has_induced_c6(g), g, "overlapping edge classes without C6");
    overlaps += overlap;
  }
  EXPECT_GE(overlaps, 3u);
  tally.verify();
}

TEST(PropertyTest, TrueTwinsAreFullyConnected) {
  Tally tally;
  for (const auto& s : corpus()) {
    for (const auto& w : s.t) {
      const VertexSet common = w.v1 & w.v2;
      const VertexSet only1 = w.v1 - w.v2;
      const VertexSet only2 = w.v2 - w.v1;
      tally.expect(fully_connected(s.g, common, only1) && fully_connected(s.g, common, only2) &&
                       fully_connected(s.g, only1, only2),
                   s.g, "T-twin parts " + sets(w));
    }
  }
  tally.verify();
}

TEST(PropertyTest, ComplementSwapsKinds) {
  Tally tally;
  for (const auto& s : corpus()) tally.expect(s.duality_mismatches == 0, s.g, "duality");
  tally.verify();
}

TEST(PropertyTest, DisjointTwinSwapIsAnAutomorphism) {
  Tally tally;
  for (const auto& s : corpus()) {
    const Graph& g = s.g;
    for (const auto* list : {&s.f, &s.t}) {
      for (const auto& w : *list) {
        if (!(w.v1 & w.v2).empty()) continue;
        std::vector<Vertex> sigma(g.order());
        for (Vertex v = 0; v < g.order(); ++v) sigma[v] = v;
        for (auto [a, b] : w.pairs()) {
          sigma[a] = b;
          sigma[b] = a;
        }
        bool ok = true;
        for (Vertex u = 0; u < g.order() && ok; ++u) {
          for (Vertex v = u + 1; v < g.order() && ok; ++v) ok = g.adjacent(u, v) == g.adjacent(sigma[u], sigma[v]);
        }
        tally.expect(ok, g, "swap automorphism " + sets(w));
      }
    }
  }
  tally.verify();
}

TEST(PropertyTest, CspComposeRoundTrip) {
  Tally tally;
  std::vector<Graph> cores;
  std::vector<Graph> semis;
  cores.push_back(Graph());
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& f : enumerate_graphs(n)) {
      const Graph g = to_graph(f);
      if (true_twin_vertices(g).empty()) cores.push_back(g);
      if (n <= 3 && !has_proper_twin(g, TwinKind::kF)) semis.push_back(g);
    }
  }
  for (const Graph& c1 : cores) {
    for (const Graph& sg : semis) {
      for (std::size_t n0 = 0; n0 <= 2; ++n0) {
        const std::size_t order = c1.order() + 2 * n0 + 2 * sg.order();
        if (c1.order() + n0 == 0 || order > kDefaultCanonicalBound) continue;
        const PartitionedGraph pg = compose(c1, sg, n0);
        const auto report = validate(pg);
        tally.expect(report.is_csp_structure, pg.graph, "composed structure invalid");
        if (!report.is_csp_structure) continue;
        const auto d = decompose(pg);
        tally.expect(d.n0() == n0 && d.n1() == c1.order() && d.ns() == sg.order() &&
                         d.np() == n0 + sg.order(),
                     pg.graph, "decomposition sizes");
        tally.expect(isomorphic(recompose(pg, d), pg), pg.graph, "recompose");
        tally.expect(isomorphic(pg.induced(d.c1).graph, c1) && isomorphic(pg.induced(d.s).graph, sg),
                     pg.graph, "decomposition parts");
      }
    }
  }
  tally.verify();
}

}  // namespace
}  // namespace twincsp
