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

#ifndef TWINCSP_TRADE_HPP_
#define TWINCSP_TRADE_HPP_

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "twincsp/csp.hpp"
#include "twincsp/error.hpp"
#include "twincsp/graph.hpp"
#include "twincsp/io.hpp"
#include "twincsp/trade_data.hpp"

namespace twincsp {

/// Trade volumes are integers in thousands of USD.
using Volume = long long;

struct TradeRow {
  std::string a;
  std::string b;
  Volume weight = 0;
};

/// Undirected weighted network over named countries. Vertices are sorted by
/// name; weights are keyed by (smaller index, larger index).
struct WeightedNetwork {
  Graph graph;
  std::map<Edge, Volume> weights;

  static Edge key(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

  Volume weight(Vertex u, Vertex v) const {
    auto it = weights.find(key(u, v));
    return it == weights.end() ? 0 : it->second;
  }
  Volume weight(const std::string& a, const std::string& b) const {
    return weight(graph.at(a), graph.at(b));
  }
  /// Total trade of a country.
  Volume strength(Vertex v) const {
    Volume s = 0;
    for (Vertex w : graph.neighbors(v)) s += weight(v, w);
    return s;
  }
  Volume total() const {
    Volume s = 0;
    for (const auto& [e, w] : weights) s += w;
    return s;
  }
  /// Trade on edges with both ends in `s`.
  Volume internal(VertexSet s) const {
    Volume t = 0;
    for (const auto& [e, w] : weights) {
      if (s.contains(e.first) && s.contains(e.second)) t += w;
    }
    return t;
  }
  /// Trade on edges with one end in `a` and the other in `b`.
  Volume between(VertexSet a, VertexSet b) const {
    Volume t = 0;
    for (const auto& [e, w] : weights) {
      if ((a.contains(e.first) && b.contains(e.second)) ||
          (b.contains(e.first) && a.contains(e.second))) {
        t += w;
      }
    }
    return t;
  }
  VertexSet members(const std::vector<std::string>& names) const {
    VertexSet s;
    for (const auto& n : names) s.insert(graph.at(n));
    return s;
  }
};

inline WeightedNetwork make_network(const std::vector<TradeRow>& rows) {
  std::set<std::string> names;
  for (const auto& r : rows) {
    if (r.a == r.b) throw InputError("self-trade row for " + r.a);
    if (r.weight <= 0) throw InputError("non-positive trade between " + r.a + " and " + r.b);
    names.insert(r.a);
    names.insert(r.b);
  }
  if (names.size() > kMaxOrder) throw InputError("more than 64 countries");
  std::vector<std::string> sorted(names.begin(), names.end());
  std::map<std::string, Vertex> index;
  for (Vertex v = 0; v < sorted.size(); ++v) index[sorted[v]] = v;
  WeightedNetwork net;
  std::vector<Edge> edges;
  for (const auto& r : rows) {
    const Edge e = WeightedNetwork::key(index[r.a], index[r.b]);
    if (!net.weights.emplace(e, r.weight).second) {
      throw InputError("duplicate row for " + r.a + " and " + r.b);
    }
    edges.push_back(e);
  }
  net.graph = Graph(sorted.size(), edges).with_names(sorted);
  return net;
}

/// Rows `country<TAB>country<TAB>volume`.
inline std::vector<TradeRow> parse_trade_rows(std::string_view text) {
  std::vector<TradeRow> rows;
  for (const auto& [lineno, f] : split_records(text)) {
    if (f.size() != 3) throw InputError(line_error(lineno, "expected two countries and a volume"));
    Volume w = 0;
    auto [p, ec] = std::from_chars(f[2].data(), f[2].data() + f[2].size(), w);
    if (ec != std::errc() || p != f[2].data() + f[2].size()) {
      throw InputError(line_error(lineno, "bad volume " + f[2]));
    }
    rows.push_back({f[0], f[1], w});
  }
  return rows;
}

inline WeightedNetwork parse_trade_network(std::string_view text) {
  return make_network(parse_trade_rows(text));
}

inline std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// The 1994 Asia-Africa-Oceania metal manufactures network (29 countries,
/// 69 edges) shipped with the library.
inline WeightedNetwork load_embedded_dataset() {
  if (fnv1a(data::kAsiaAfricaOceania1994) != data::kAsiaAfricaOceania1994Checksum) {
    throw ConsistencyError("embedded trade dataset failed its checksum");
  }
  return parse_trade_network(data::kAsiaAfricaOceania1994);
}

// ---------------------------------------------------------------------------
// Clustering

struct ClusteringConfig {
  /// Edges lighter than this are dropped by the prefilter.
  Volume edge_min = 10'000;
  /// Countries trading less than this in total lose their edges.
  Volume vertex_min = 25'000;
  /// Clusters are the components of the edges at or above this volume.
  Volume cluster_threshold = 75'000;
  /// Merge countries whose pairwise dissimilarities all fall below this.
  std::optional<double> dissimilarity_threshold;
  /// Dissimilarity merges stay inside one cluster of this (coarser)
  /// threshold clustering; std::nullopt lifts the restriction.
  std::optional<Volume> refine_from = 75'000;
  /// Quotient edges to remove, each given by two cluster or country names.
  std::vector<std::pair<std::string, std::string>> dropped_edges;

  void check() const {
    if (edge_min < 0 || vertex_min < 0 || cluster_threshold < 0) {
      throw Error("trade thresholds must be non-negative");
    }
    if (dissimilarity_threshold &&
        (*dissimilarity_threshold < 0 || *dissimilarity_threshold > 2)) {
      throw Error("dissimilarity threshold must lie in [0, 2]");
    }
    if (refine_from && *refine_from < 0) throw Error("refine-from volume must be non-negative");
  }
};

namespace detail {

// Relabels so that classes are numbered by their smallest member.
inline std::vector<int> normalize_labels(const std::vector<int>& labels) {
  std::map<int, int> fresh;
  std::vector<int> out;
  for (int l : labels) {
    auto [it, added] = fresh.emplace(l, static_cast<int>(fresh.size()));
    out.push_back(it->second);
  }
  return out;
}

inline WeightedNetwork with_edges(const WeightedNetwork& net, const std::set<Edge>& keep) {
  WeightedNetwork out;
  std::vector<Edge> edges(keep.begin(), keep.end());
  out.graph = Graph(net.graph.order(), edges).with_names(net.graph.names());
  for (const Edge& e : keep) out.weights[e] = net.weights.at(e);
  return out;
}

inline std::optional<Edge> heaviest_edge(const WeightedNetwork& net, VertexSet from) {
  std::optional<Edge> best;
  Volume best_w = -1;
  for (const auto& [e, w] : net.weights) {
    const bool a = from.contains(e.first);
    const bool b = from.contains(e.second);
    if (a != b && w > best_w) {
      best = e;
      best_w = w;
    }
  }
  return best;
}

}  // namespace detail

/// Drops light edges and edges of low-volume countries. A country left
/// without edges keeps its heaviest raw edge, and any component split from
/// the rest gets its heaviest outgoing raw edge back until the network is
/// connected again.
inline WeightedNetwork prefilter(const WeightedNetwork& raw, const ClusteringConfig& cfg) {
  cfg.check();
  if (!is_connected(raw.graph)) throw Error("prefilter needs a connected network");
  const std::size_t n = raw.graph.order();
  std::vector<Volume> strength(n);
  for (Vertex v = 0; v < n; ++v) strength[v] = raw.strength(v);

  std::set<Edge> keep;
  for (const auto& [e, w] : raw.weights) {
    if (w >= cfg.edge_min && strength[e.first] >= cfg.vertex_min &&
        strength[e.second] >= cfg.vertex_min) {
      keep.insert(e);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    const bool isolated = std::none_of(keep.begin(), keep.end(), [&](const Edge& e) {
      return e.first == v || e.second == v;
    });
    if (isolated) {
      if (auto e = detail::heaviest_edge(raw, VertexSet::single(v))) keep.insert(*e);
    }
  }
  for (;;) {
    WeightedNetwork cur = detail::with_edges(raw, keep);
    auto comps = connected_components(cur.graph);
    if (comps.size() <= 1) return cur;
    auto main = std::max_element(comps.begin(), comps.end(), [&](VertexSet a, VertexSet b) {
      return cur.internal(a) < cur.internal(b);
    });
    for (auto it = comps.begin(); it != comps.end(); ++it) {
      if (it == main) continue;
      if (auto e = detail::heaviest_edge(raw, *it)) keep.insert(*e);
    }
  }
}

/// Countries partitioned by the connected components of the edges carrying
/// at least `threshold`. Class labels follow the smallest member.
inline PartitionedGraph threshold_clusters(const WeightedNetwork& net, Volume threshold) {
  std::vector<Edge> heavy;
  for (const auto& [e, w] : net.weights) {
    if (w >= threshold) heavy.push_back(e);
  }
  const Graph h(net.graph.order(), heavy);
  std::vector<int> labels(net.graph.order());
  const auto comps = connected_components(h);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (Vertex v : comps[i]) labels[v] = static_cast<int>(i);
  }
  return {net.graph, labels};
}

/// Sum over third countries k of |w_ik - w_jk|, where w_ik is the share of
/// i's total trade carried by the edge ik (zero when absent). Lies in
/// [0, 2]; equals 2 exactly when i and j are non-adjacent with no common
/// neighbor.
inline double dissimilarity(const WeightedNetwork& net, Vertex i, Vertex j) {
  if (!net.graph.contains(i) || !net.graph.contains(j)) throw Error("unknown country");
  if (i == j) throw Error("dissimilarity needs two distinct countries");
  const double si = static_cast<double>(net.strength(i));
  const double sj = static_cast<double>(net.strength(j));
  double d = 0;
  for (Vertex k = 0; k < net.graph.order(); ++k) {
    if (k == i || k == j) continue;
    const double wi = si > 0 ? static_cast<double>(net.weight(i, k)) / si : 0;
    const double wj = sj > 0 ? static_cast<double>(net.weight(j, k)) / sj : 0;
    d += std::abs(wi - wj);
  }
  return d;
}

inline double dissimilarity(const WeightedNetwork& net, const std::string& a,
                            const std::string& b) {
  return dissimilarity(net, net.graph.at(a), net.graph.at(b));
}

/// The class with the most internal trade.
inline int main_cluster(const WeightedNetwork& net, const PartitionedGraph& clusters) {
  int best = -1;
  Volume best_trade = -1;
  for (int l : clusters.labels()) {
    const Volume t = net.internal(clusters.members(l));
    if (t > best_trade) {
      best = l;
      best_trade = t;
    }
  }
  return best;
}

/// Merges countries with similar trade patterns. Candidates are countries
/// alone in their base class, outside the main cluster and not of degree
/// one in the base quotient. Starting from the closest pair below
/// `threshold`, a group grows by the candidate whose largest dissimilarity
/// to the group is smallest, as long as every pair stays below the
/// threshold; then the next group starts. With `scope`, a group never spans
/// two classes of `scope`. Ties go to the alphabetically first names.
inline PartitionedGraph dissimilarity_clusters(const WeightedNetwork& net,
                                               const PartitionedGraph& base, double threshold,
                                               const PartitionedGraph* scope = nullptr) {
  if (threshold < 0 || threshold > 2) throw Error("dissimilarity threshold must lie in [0, 2]");
  const int main = main_cluster(net, base);
  const Graph q = quotient(base);
  const std::vector<int> qlabels = base.labels();
  auto qdegree = [&](int label) {
    auto pos = std::lower_bound(qlabels.begin(), qlabels.end(), label) - qlabels.begin();
    return q.degree(static_cast<Vertex>(pos));
  };
  std::vector<Vertex> cand;
  for (Vertex v = 0; v < net.graph.order(); ++v) {
    const int l = base.label(v);
    if (l != main && base.members(l).size() == 1 && qdegree(l) != 1) cand.push_back(v);
  }
  auto same_scope = [&](Vertex a, Vertex b) { return !scope || scope->label(a) == scope->label(b); };

  std::vector<int> labels = base.classes;
  std::set<Vertex> free(cand.begin(), cand.end());
  for (;;) {
    std::optional<std::tuple<double, Vertex, Vertex>> seed;
    for (Vertex a : free) {
      for (Vertex b : free) {
        if (b <= a || !same_scope(a, b)) continue;
        const double d = dissimilarity(net, a, b);
        if (d < threshold && (!seed || std::tie(d, a, b) < *seed)) seed = std::tuple{d, a, b};
      }
    }
    if (!seed) break;
    std::vector<Vertex> group{std::get<1>(*seed), std::get<2>(*seed)};
    free.erase(group[0]);
    free.erase(group[1]);
    for (;;) {
      std::optional<std::pair<double, Vertex>> next;
      for (Vertex c : free) {
        if (!same_scope(c, group[0])) continue;
        double worst = 0;
        bool fits = true;
        for (Vertex g : group) {
          const double d = dissimilarity(net, c, g);
          if (d >= threshold) {
            fits = false;
            break;
          }
          worst = std::max(worst, d);
        }
        if (fits && (!next || std::pair{worst, c} < *next)) next = std::pair{worst, c};
      }
      if (!next) break;
      group.push_back(next->second);
      free.erase(next->second);
    }
    for (Vertex g : group) labels[g] = labels[group[0]];
  }
  return {net.graph, detail::normalize_labels(labels)};
}

// ---------------------------------------------------------------------------
// Quotient

/// Display names for the clusters that recur in the 1994 study.
inline std::string cluster_name(const std::vector<std::string>& sorted_members) {
  static const std::map<std::vector<std::string>, std::string> aliases = {
      {{"Australia", "China", "Hong Kong", "Indonesia", "Japan", "Korea", "Malaysia",
        "New Zealand", "Philippines", "Singapore", "Thailand"},
       "Asia-Oceania"},
      {{"China", "Hong Kong", "Indonesia", "Japan", "Korea", "Malaysia", "Philippines",
        "Singapore", "Thailand"},
       "East/Southeast Asia"},
      {{"China", "Hong Kong", "Japan", "Korea", "Thailand"}, "East Asia"},
      {{"Indonesia", "Malaysia", "Philippines", "Singapore"}, "Southeast Asia"},
      {{"Australia", "New Zealand"}, "Australasia"},
  };
  if (sorted_members.size() == 1) return sorted_members.front();
  if (auto it = aliases.find(sorted_members); it != aliases.end()) return it->second;
  std::string out;
  for (const auto& m : sorted_members) out += (out.empty() ? "" : "+") + m;
  return out;
}

/// Quotient of a clustered network. Vertex i stands for `members[i]`
/// (network indices) and carries the summed trade of the clusters.
struct WeightedQuotient {
  Graph graph;
  std::vector<VertexSet> members;
  std::map<Edge, Volume> weights;
  /// Trade inside each cluster.
  std::vector<Volume> internal;

  Volume weight(Vertex a, Vertex b) const {
    auto it = weights.find(WeightedNetwork::key(a, b));
    return it == weights.end() ? 0 : it->second;
  }
  Volume external() const {
    Volume s = 0;
    for (const auto& [e, w] : weights) s += w;
    return s;
  }

  /// The quotient vertex named `name`, or the one containing country `name`.
  std::optional<Vertex> resolve(const std::string& name, const WeightedNetwork& net) const {
    if (auto v = graph.find(name)) return v;
    if (auto c = net.graph.find(name)) {
      for (Vertex i = 0; i < members.size(); ++i) {
        if (members[i].contains(*c)) return i;
      }
    }
    return std::nullopt;
  }
};

inline WeightedQuotient weighted_quotient(const WeightedNetwork& net,
                                          const PartitionedGraph& clusters) {
  WeightedQuotient wq;
  const std::vector<int> labels = clusters.labels();
  std::map<int, Vertex> index;
  std::vector<std::string> names;
  for (Vertex i = 0; i < labels.size(); ++i) {
    index[labels[i]] = i;
    wq.members.push_back(clusters.members(labels[i]));
    std::vector<std::string> m;
    for (Vertex v : wq.members.back()) m.push_back(net.graph.name(v));
    std::sort(m.begin(), m.end());
    names.push_back(cluster_name(m));
    wq.internal.push_back(net.internal(wq.members.back()));
  }
  std::vector<Edge> edges;
  for (const auto& [e, w] : net.weights) {
    const Vertex a = index[clusters.label(e.first)];
    const Vertex b = index[clusters.label(e.second)];
    if (a == b) continue;
    const Edge k = WeightedNetwork::key(a, b);
    if (wq.weights.emplace(k, 0).second) edges.push_back(k);
    wq.weights[k] += w;
  }
  wq.graph = Graph(labels.size(), edges).with_names(names);
  return wq;
}

struct DroppedEdge {
  std::string a;
  std::string b;
  Volume weight = 0;
};

/// Removes a quotient edge between the clusters named (or containing) `a`
/// and `b`.
inline DroppedEdge drop_quotient_edge(WeightedQuotient& wq, const WeightedNetwork& net,
                                      const std::string& a, const std::string& b) {
  auto u = wq.resolve(a, net);
  auto v = wq.resolve(b, net);
  if (!u || !v) throw Error("cannot drop edge: unknown cluster " + (u ? b : a));
  if (!wq.graph.adjacent(*u, *v)) {
    throw Error("cannot drop edge: " + a + " and " + b + " are not adjacent");
  }
  const Edge k = WeightedNetwork::key(*u, *v);
  DroppedEdge d{wq.graph.name(*u), wq.graph.name(*v), wq.weights.at(k)};
  wq.weights.erase(k);
  std::vector<Edge> edges;
  for (const auto& [e, w] : wq.weights) edges.push_back(e);
  wq.graph = Graph(wq.graph.order(), edges).with_names(wq.graph.names());
  return d;
}

// ---------------------------------------------------------------------------
// CSP labels

/// One line of a label file: `vertex<TAB>class[<TAB>rep]`. The vertex is a
/// cluster name, a member country, or `*` for every vertex not otherwise
/// named. `rep` marks a preferred twin representative.
struct LabelRule {
  std::string vertex;
  int label = kPeriphery;
  bool preferred = false;
};

inline std::vector<LabelRule> parse_label_rules(std::string_view text) {
  std::vector<LabelRule> rules;
  for (const auto& [lineno, f] : split_records(text)) {
    if (f.size() < 2 || f.size() > 3) {
      throw InputError(line_error(lineno, "expected vertex, class and optional rep"));
    }
    auto c = parse_csp_class(f[1]);
    if (!c) throw InputError(line_error(lineno, "bad class " + f[1]));
    if (f.size() == 3 && f[2] != "rep") throw InputError(line_error(lineno, "bad flag " + f[2]));
    rules.push_back({f[0], static_cast<int>(*c), f.size() == 3});
  }
  return rules;
}

struct QuotientLabels {
  std::vector<int> classes;
  VertexSet preferred;
};

inline QuotientLabels apply_label_rules(const WeightedQuotient& wq, const WeightedNetwork& net,
                                        const std::vector<LabelRule>& rules) {
  std::vector<std::optional<int>> labels(wq.graph.order());
  std::optional<int> fallback;
  QuotientLabels out;
  for (const auto& r : rules) {
    if (r.vertex == "*") {
      fallback = r.label;
      continue;
    }
    auto v = wq.resolve(r.vertex, net);
    if (!v) throw InputError("label for unknown vertex " + r.vertex);
    if (labels[*v] && *labels[*v] != r.label) {
      throw InputError("conflicting labels for " + wq.graph.name(*v));
    }
    labels[*v] = r.label;
    if (r.preferred) out.preferred.insert(*v);
  }
  for (Vertex v = 0; v < labels.size(); ++v) {
    if (!labels[v] && !fallback) throw InputError("no class for " + wq.graph.name(v));
    out.classes.push_back(labels[v].value_or(fallback.value_or(kPeriphery)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pipeline

struct PipelineReport {
  ClusteringConfig config;
  WeightedNetwork network;
  PartitionedGraph clusters;
  int main = -1;
  WeightedQuotient quotient;
  std::vector<DroppedEdge> dropped;
  PartitionedGraph labeled;
  VertexSet preferred;
  bool labels_applied = false;
  CspValidationReport validation;
  /// Present when the labeled quotient is a CSP network.
  std::optional<ReduceResult> reduction;

  bool ok() const { return reduction.has_value(); }
  const PartitionedGraph& structure() const {
    if (!reduction) throw Error("labeling is not a CSP network");
    return reduction->structure;
  }
};

/// prefilter -> threshold clusters -> optional dissimilarity merges ->
/// quotient -> optional edge drops. Labels are applied separately.
inline PipelineReport cluster_network(const WeightedNetwork& raw, const ClusteringConfig& cfg) {
  cfg.check();
  PipelineReport r;
  r.config = cfg;
  r.network = prefilter(raw, cfg);
  r.clusters = threshold_clusters(r.network, cfg.cluster_threshold);
  if (cfg.dissimilarity_threshold) {
    std::optional<PartitionedGraph> scope;
    if (cfg.refine_from) {
      if (*cfg.refine_from > cfg.cluster_threshold) {
        throw Error("refine-from volume must not exceed the cluster threshold");
      }
      scope = threshold_clusters(r.network, *cfg.refine_from);
    }
    r.clusters = dissimilarity_clusters(r.network, r.clusters, *cfg.dissimilarity_threshold,
                                        scope ? &*scope : nullptr);
  }
  r.main = main_cluster(r.network, r.clusters);
  r.quotient = weighted_quotient(r.network, r.clusters);
  for (const auto& [a, b] : cfg.dropped_edges) {
    r.dropped.push_back(drop_quotient_edge(r.quotient, r.network, a, b));
  }
  r.labeled = PartitionedGraph(r.quotient.graph, std::vector<int>(r.quotient.graph.order(), 0));
  return r;
}

/// Labels the quotient, validates, and reduces when the labeling is a CSP
/// network. An invalid labeling is reported through `validation` rather
/// than thrown.
inline void label_quotient(PipelineReport& r, const std::vector<LabelRule>& rules) {
  QuotientLabels ql = apply_label_rules(r.quotient, r.network, rules);
  r.labeled = PartitionedGraph(r.quotient.graph, ql.classes);
  r.preferred = ql.preferred;
  r.validation = validate(r.labeled);
  r.labels_applied = true;
  r.reduction.reset();
  if (r.validation.is_csp_network) r.reduction = reduce(r.labeled, r.preferred);
}

inline PipelineReport run_pipeline(const WeightedNetwork& raw, const ClusteringConfig& cfg,
                                   const std::vector<LabelRule>& rules) {
  PipelineReport r = cluster_network(raw, cfg);
  label_quotient(r, rules);
  return r;
}

inline PipelineReport run_pipeline(const WeightedNetwork& raw, const ClusteringConfig& cfg,
                                   std::string_view label_text) {
  return run_pipeline(raw, cfg, parse_label_rules(label_text));
}

/// The four worked scenarios of the 1994 study, with their label files.
struct Scenario {
  std::string name;
  ClusteringConfig config;
  std::string_view labels;
};

inline std::vector<Scenario> scenarios() {
  ClusteringConfig c75;
  ClusteringConfig c125;
  c125.cluster_threshold = 125'000;
  ClusteringConfig c500;
  c500.cluster_threshold = 500'000;
  c500.dissimilarity_threshold = 1.0;
  ClusteringConfig drop = c500;
  drop.dropped_edges = {{"Australasia", "India"}};
  return {{"fig5", c75, data::kScenarioFig5},
          {"fig6", c125, data::kScenarioFig6},
          {"fig7", c500, data::kScenarioFig7},
          {"fig8", drop, data::kScenarioFig8}};
}

inline Scenario scenario(const std::string& name) {
  for (auto& s : scenarios()) {
    if (s.name == name) return s;
  }
  throw Error("unknown scenario " + name);
}

}  // namespace twincsp

#endif  // TWINCSP_TRADE_HPP_
