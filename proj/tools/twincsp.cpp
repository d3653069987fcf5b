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

// twincsp: command-line front end.
//
//   twincsp graph info EDGES
//   twincsp twins --kind f|t (--pattern-order K | --pattern FILE) EDGES
//   twincsp csp validate|reduce|decompose EDGES PARTITION
//   twincsp enumerate --order N [--what graphs|t|s|z|csp] [--brute-force]
//   twincsp trade [--scenario figN] [--cluster-threshold 75M] ...
//
// Exit status: 0 success, 1 validation failure (the report is still
// printed), 2 usage or input error.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "twincsp.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace twincsp;

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json names_of(const Graph& g, VertexSet s) {
  json out = json::array();
  for (Vertex v : s) out.push_back(g.name(v));
  return out;
}

json graph_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({g.name(u), g.name(v)});
  return {{"order", g.order()}, {"size", g.size()}, {"vertices", g.names()}, {"edges", edges}};
}

json partitioned_json(const PartitionedGraph& pg) {
  json j = graph_json(pg.graph);
  json classes = json::object();
  for (Vertex v = 0; v < pg.graph.order(); ++v) classes[pg.graph.name(v)] = class_name(pg.label(v));
  j["classes"] = classes;
  return j;
}

json validation_json(const Graph& g, const CspValidationReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"vertices", names_of(g, v.subject)}, {"condition", v.condition}});
  }
  return {{"is_csp_network", r.is_csp_network},
          {"is_csp_structure", r.is_csp_structure},
          {"violations", violations}};
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

Graph load_graph(const std::string& path) { return parse_edge_list(read_file(path)); }

PartitionedGraph load_partitioned(const std::string& edges, const std::string& partition) {
  Graph g = load_graph(edges);
  std::vector<int> labels = parse_partition(read_file(partition), g);
  return {std::move(g), std::move(labels)};
}

TwinKind parse_kind(const std::string& s) {
  if (s == "f" || s == "F") return TwinKind::kF;
  if (s == "t" || s == "T") return TwinKind::kT;
  throw UsageError("--kind must be f or t");
}

// ---------------------------------------------------------------------------
// graph info

int graph_info(const std::string& path, const std::string& emit) {
  const Graph g = load_graph(path);
  if (emit == "dot") {
    std::cout << to_dot(g);
    return kOk;
  }
  json comps = json::array();
  for (VertexSet c : connected_components(g)) comps.push_back(names_of(g, c));
  json degrees = json::object();
  for (Vertex v = 0; v < g.order(); ++v) degrees[g.name(v)] = g.degree(v);
  auto twin_groups = [&](const std::vector<TwinClass>& classes) {
    json out = json::array();
    for (const auto& tc : classes) {
      VertexSet all;
      for (VertexSet m : tc.members) all |= m;
      out.push_back(names_of(g, all));
    }
    return out;
  };
  json j = {{"order", g.order()}, {"size", g.size()}, {"connected", g.order() > 0 && is_connected(g)}};
  j["components"] = comps;
  if (g.order() > 0 && is_connected(g)) {
    std::size_t diameter = 0;
    for (Vertex v = 0; v < g.order(); ++v) diameter = std::max(diameter, eccentricity(g, v));
    j["diameter"] = diameter;
  }
  j["degrees"] = degrees;
  j["false_twin_vertices"] = twin_groups(false_twin_vertices(g));
  j["true_twin_vertices"] = twin_groups(true_twin_vertices(g));
  if (g.order() <= kDefaultCanonicalBound) j["canonical_form"] = canonical_form(g).to_string();
  if (emit == "text") {
    std::cout << "order " << g.order() << ", size " << g.size() << ", "
              << (j["connected"].get<bool>() ? "connected" : "disconnected") << "\n";
    std::cout << "false twin vertex classes: " << j["false_twin_vertices"].dump() << "\n";
    std::cout << "true twin vertex classes: " << j["true_twin_vertices"].dump() << "\n";
    return kOk;
  }
  print(j);
  return kOk;
}

// ---------------------------------------------------------------------------
// twins

struct TwinsOptions {
  std::string kind;
  std::size_t pattern_order = 0;
  std::string pattern;
  std::string partition;
  std::string edges;
  std::string emit = "json";
};

int twins(const TwinsOptions& o) {
  const TwinKind kind = parse_kind(o.kind);
  const Graph g = load_graph(o.edges);
  std::vector<int> labels;
  if (!o.partition.empty()) labels = parse_partition(read_file(o.partition), g);

  std::vector<Graph> patterns;
  if (!o.pattern.empty()) {
    patterns.push_back(load_graph(o.pattern));
  } else {
    if (o.pattern_order < 1) throw UsageError("give --pattern-order K >= 1 or --pattern FILE");
    if (o.pattern_order > kMaxCensusOrder) throw UsageError("--pattern-order is at most 7");
    for (const auto& f : enumerate_graphs(o.pattern_order)) patterns.push_back(to_graph(f));
  }

  json results = json::array();
  for (const Graph& p : patterns) {
    json classes = json::array();
    for (const auto& tc : twin_classes(g, kind, p, labels)) {
      if (tc.members.size() < 2) continue;
      json members = json::array();
      for (VertexSet m : tc.members) members.push_back(names_of(g, m));
      classes.push_back(members);
    }
    if (classes.empty()) continue;
    results.push_back({{"pattern", canonical_form(p, std::nullopt, kCanonicalHardLimit).to_string()},
                       {"classes", classes}});
  }
  if (o.emit == "text") {
    for (const auto& r : results) {
      std::cout << r["pattern"].get<std::string>() << "\n";
      for (const auto& c : r["classes"]) std::cout << "  " << c.dump() << "\n";
    }
    return kOk;
  }
  json j = {{"kind", to_string(kind)}};
  if (!o.pattern.empty()) {
    j["pattern"] = results.empty() ? json(nullptr) : results.front()["pattern"];
    j["classes"] = results.empty() ? json::array() : results.front()["classes"];
  } else {
    j["pattern_order"] = o.pattern_order;
    j["patterns"] = results;
  }
  print(j);
  return kOk;
}

// ---------------------------------------------------------------------------
// csp

struct CspOptions {
  std::string edges;
  std::string partition;
  std::string emit = "json";
  std::vector<std::string> prefer;
};

int csp_validate(const CspOptions& o) {
  const PartitionedGraph pg = load_partitioned(o.edges, o.partition);
  const CspValidationReport r = validate(pg);
  if (o.emit == "dot") {
    std::cout << to_dot(pg.graph, pg.classes);
  } else if (o.emit == "text") {
    std::cout << (r.is_csp_structure ? "CSP structure"
                  : r.is_csp_network ? "CSP network (not reduced)"
                                     : "not a CSP network")
              << "\n";
    for (const auto& v : r.violations) {
      std::cout << "  violates: " << v.condition << " " << names_of(pg.graph, v.subject).dump()
                << "\n";
    }
  } else {
    print(validation_json(pg.graph, r));
  }
  return r.is_csp_network ? kOk : kInvalid;
}

int csp_reduce(const CspOptions& o) {
  const PartitionedGraph pg = load_partitioned(o.edges, o.partition);
  const CspValidationReport r = validate(pg);
  if (!r.is_csp_network) {
    print({{"validation", validation_json(pg.graph, r)}});
    return kInvalid;
  }
  VertexSet preferred;
  for (const auto& name : o.prefer) {
    auto v = pg.graph.find(name);
    if (!v) throw InputError("unknown vertex " + name);
    preferred.insert(*v);
  }
  const ReduceResult red = reduce(pg, preferred);
  if (o.emit == "dot") {
    std::cout << to_dot(red.structure.graph, red.structure.classes);
    return kOk;
  }
  json absorption = json::object();
  for (Vertex v = 0; v < pg.graph.order(); ++v) {
    absorption[pg.graph.name(v)] = pg.graph.name(red.absorbed_by[v]);
  }
  if (o.emit == "text") {
    std::cout << "reduced " << pg.graph.order() << " -> " << red.structure.graph.order()
              << " vertices\n";
    for (const auto& [k, v] : absorption.items()) {
      if (k != v.get<std::string>()) std::cout << "  " << k << " -> " << v.get<std::string>() << "\n";
    }
    return kOk;
  }
  print({{"structure", partitioned_json(red.structure)}, {"absorption", absorption}});
  return kOk;
}

int csp_decompose(const CspOptions& o) {
  const PartitionedGraph pg = load_partitioned(o.edges, o.partition);
  const CspValidationReport r = validate(pg);
  if (!r.is_csp_structure) {
    print({{"validation", validation_json(pg.graph, r)}});
    return kInvalid;
  }
  const CspDecomposition d = decompose(pg);
  if (o.emit == "dot") {
    std::cout << to_dot(pg.graph, pg.classes);
    return kOk;
  }
  json attach = json::array();
  for (auto [x, leaf] : d.attach) attach.push_back({pg.graph.name(x), pg.graph.name(leaf)});
  json j = {{"n0", d.n0()}, {"n1", d.n1()}, {"ns", d.ns()}, {"np", d.np()},
            {"c0", names_of(pg.graph, d.c0)}, {"c1", names_of(pg.graph, d.c1)},
            {"s", names_of(pg.graph, d.s)}, {"p", names_of(pg.graph, d.p)},
            {"attach", attach}};
  if (o.emit == "text") {
    std::cout << "n0=" << d.n0() << " n1=" << d.n1() << " ns=" << d.ns() << " np=" << d.np()
              << "\n";
    return kOk;
  }
  print(j);
  return kOk;
}

// ---------------------------------------------------------------------------
// enumerate

struct EnumerateOptions {
  std::size_t order = 0;
  std::string what = "z";
  bool brute_force = false;
  bool witnesses = false;
  std::string emit = "json";
};

int enumerate(const EnumerateOptions& o) {
  const std::size_t n = o.order;
  json j = {{"order", n}, {"what", o.what}, {"counts", json::object()}};
  json counts = json::object();
  json witnesses = json::array();
  auto check = [](std::size_t n, std::size_t bound, const char* what) {
    if (n > bound) {
      throw UsageError(std::string(what) + " is computed up to order " + std::to_string(bound));
    }
  };
  if (o.what == "graphs" || o.what == "t" || o.what == "s") {
    const std::size_t bound = o.what == "s" ? kMaxTwinFreeOrder : kMaxCensusOrder;
    check(n, bound, o.what.c_str());
    long long c = 0;
    for (const auto& f : enumerate_graphs(n)) {
      const Graph g = to_graph(f);
      const bool keep = o.what == "graphs" || (o.what == "t" && !has_true_twin_vertices(g)) ||
                        (o.what == "s" && !has_proper_twin(g, TwinKind::kF));
      if (!keep) continue;
      ++c;
      if (o.witnesses) witnesses.push_back(f.to_string());
    }
    counts[o.what == "graphs" ? "all_graphs" : o.what] = c;
  } else if (o.what == "z") {
    check(n, 8, "z");
    if (n < 3) throw UsageError("CSP structures have order >= 3");
    const CensusResult r = csp_counts(n);
    for (const auto& [k, v] : r.counts) counts[k] = v;
    json by_core = json::object();
    for (const auto& [nc, v] : r.z_by_core) by_core[std::to_string(nc)] = v;
    j["z_by_core"] = by_core;
    if (o.brute_force) {
      check(n, kMaxStructureOrder, "the structure census");
      counts["census"] = enumerate_csp_structures(n, StructureRoute::kBruteForce).size();
    }
  } else if (o.what == "csp") {
    check(n, kMaxStructureOrder, "the structure census");
    const auto route = o.brute_force ? StructureRoute::kBruteForce : StructureRoute::kConstructive;
    const auto forms = enumerate_csp_structures(n, route);
    counts["csp"] = forms.size();
    j["route"] = o.brute_force ? "brute-force" : "constructive";
    if (o.witnesses) {
      for (const auto& f : forms) witnesses.push_back(f.to_string());
    }
  } else {
    throw UsageError("--what must be graphs, t, s, z or csp");
  }
  j["counts"] = counts;
  if (o.witnesses) j["witnesses"] = witnesses;
  if (o.emit == "text") {
    for (const auto& [k, v] : counts.items()) std::cout << k << " " << v.dump() << "\n";
    for (const auto& w : witnesses) std::cout << w.get<std::string>() << "\n";
    return kOk;
  }
  print(j);
  return kOk;
}

// ---------------------------------------------------------------------------
// trade

struct TradeOptions {
  std::string scenario;
  std::string edges;
  std::string labels;
  std::string edge_min;
  std::string vertex_min;
  std::string cluster_threshold;
  std::string dissimilarity;
  std::string refine_from;
  std::vector<std::string> drop_edges;
  std::string graph = "structure";
  std::string emit = "json";
};

json stage(const std::string& name, const Graph& g, std::size_t classes) {
  return {{"name", name}, {"vertices", g.order()}, {"edges", g.size()}, {"classes", classes}};
}

int trade(const TradeOptions& o) {
  ClusteringConfig cfg;
  std::string label_text;
  if (!o.scenario.empty()) {
    Scenario s = scenario(o.scenario);
    cfg = s.config;
    label_text = std::string(s.labels);
  }
  if (!o.edge_min.empty()) cfg.edge_min = parse_volume(o.edge_min);
  if (!o.vertex_min.empty()) cfg.vertex_min = parse_volume(o.vertex_min);
  if (!o.cluster_threshold.empty()) cfg.cluster_threshold = parse_volume(o.cluster_threshold);
  if (!o.dissimilarity.empty()) {
    if (o.dissimilarity == "none") {
      cfg.dissimilarity_threshold.reset();
    } else {
      try {
        std::size_t used = 0;
        cfg.dissimilarity_threshold = std::stod(o.dissimilarity, &used);
        if (used != o.dissimilarity.size()) throw std::invalid_argument("trailing text");
      } catch (const std::exception&) {
        throw UsageError("bad --dissimilarity value " + o.dissimilarity);
      }
    }
  }
  if (!o.refine_from.empty()) {
    if (o.refine_from == "none") {
      cfg.refine_from.reset();
    } else {
      cfg.refine_from = parse_volume(o.refine_from);
    }
  }
  if (!o.drop_edges.empty()) cfg.dropped_edges.clear();
  for (const auto& d : o.drop_edges) {
    const auto comma = d.find(',');
    if (comma == std::string::npos) throw UsageError("--drop-edge expects A,B");
    cfg.dropped_edges.emplace_back(trim(d.substr(0, comma)), trim(d.substr(comma + 1)));
  }
  if (!o.labels.empty()) label_text = read_file(o.labels);

  const WeightedNetwork raw =
      o.edges.empty() ? load_embedded_dataset() : parse_trade_network(read_file(o.edges));
  PipelineReport r = cluster_network(raw, cfg);
  const bool labeled = !label_text.empty();
  if (labeled) label_quotient(r, parse_label_rules(label_text));

  const WeightedQuotient& q = r.quotient;
  if (o.emit == "dot") {
    if (o.graph == "structure" && r.ok()) {
      std::cout << to_dot(r.structure().graph, r.structure().classes, "structure");
    } else if (labeled) {
      std::cout << to_dot(r.labeled.graph, r.labeled.classes, "quotient");
    } else {
      std::cout << to_dot(q.graph, {}, "quotient");
    }
    return labeled && !r.ok() ? kInvalid : kOk;
  }

  json stages = json::array();
  stages.push_back(stage("raw", raw.graph, raw.graph.order()));
  stages.push_back(stage("prefiltered", r.network.graph, r.network.graph.order()));
  stages.push_back(stage("clusters", r.network.graph, r.clusters.class_count()));
  stages.push_back(stage("quotient", q.graph, q.graph.order()));
  if (r.ok()) {
    stages.push_back(stage("structure", r.structure().graph, r.structure().class_count()));
  }

  json clusters = json::array();
  for (Vertex v = 0; v < q.graph.order(); ++v) {
    json c = {{"name", q.graph.name(v)},
              {"members", names_of(r.network.graph, q.members[v])},
              {"internal_trade", q.internal[v]}};
    if (labeled) c["class"] = class_name(r.labeled.label(v));
    clusters.push_back(c);
  }
  json quotient_edges = json::array();
  for (const auto& [e, w] : q.weights) {
    quotient_edges.push_back({q.graph.name(e.first), q.graph.name(e.second), w});
  }
  json dropped = json::array();
  for (const auto& d : r.dropped) dropped.push_back({d.a, d.b, d.weight});

  json config = {{"edge_min", cfg.edge_min},
                 {"vertex_min", cfg.vertex_min},
                 {"cluster_threshold", cfg.cluster_threshold}};
  config["dissimilarity_threshold"] =
      cfg.dissimilarity_threshold ? json(*cfg.dissimilarity_threshold) : json(nullptr);
  config["refine_from"] = cfg.refine_from ? json(*cfg.refine_from) : json(nullptr);

  const Vertex main_q = *q.resolve(r.network.graph.name(r.clusters.members(r.main).front()),
                                   r.network);
  json j = {{"config", config},
            {"total_trade", r.network.total()},
            {"main_cluster", q.graph.name(main_q)},
            {"stages", stages},
            {"clusters", clusters},
            {"quotient_edges", quotient_edges},
            {"dropped_edges", dropped}};
  if (labeled) j["validation"] = validation_json(r.labeled.graph, r.validation);
  if (r.ok()) {
    const auto& red = *r.reduction;
    json s = partitioned_json(red.structure);
    json absorption = json::object();
    for (Vertex v = 0; v < q.graph.order(); ++v) {
      absorption[q.graph.name(v)] = q.graph.name(red.absorbed_by[v]);
    }
    j["structure"] = s;
    j["absorption"] = absorption;
  }

  if (o.emit == "text") {
    std::cout << "total trade " << r.network.total() << "\n";
    std::cout << "quotient: " << q.graph.order() << " vertices, " << q.graph.size() << " edges\n";
    for (const auto& c : clusters) {
      std::cout << "  " << c["name"].get<std::string>();
      if (c.contains("class")) std::cout << " [" << c["class"].get<std::string>() << "]";
      std::cout << " internal " << c["internal_trade"].dump() << "\n";
    }
    for (const auto& d : r.dropped) {
      std::cout << "dropped " << d.a << " - " << d.b << " (" << d.weight << ")\n";
    }
    if (r.ok()) {
      const auto& s = r.structure();
      std::cout << "structure: " << s.graph.order() << " vertices\n";
      for (auto [u, v] : s.graph.edges()) {
        std::cout << "  " << s.graph.name(u) << " -- " << s.graph.name(v) << "\n";
      }
    } else if (labeled) {
      std::cout << "labeling is not a CSP network\n";
    }
  } else {
    print(j);
  }
  return labeled && !r.ok() ? kInvalid : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twin subgraphs and core-semiperiphery-periphery structures"};
  app.require_subcommand(1);
  int status = kOk;

  const std::vector<std::string> formats = {"json", "dot", "text"};

  auto* graph = app.add_subcommand("graph", "Graph utilities");
  graph->require_subcommand(1);
  std::string info_path;
  std::string info_emit = "json";
  auto* info = graph->add_subcommand("info", "Order, size, components and twin vertices");
  info->add_option("edges", info_path, "Edge-list file")->required();
  info->add_option("--emit", info_emit)->check(CLI::IsMember(formats));
  info->callback([&] { status = graph_info(info_path, info_emit); });

  TwinsOptions to;
  auto* tw = app.add_subcommand("twins", "Twin classes of induced subgraphs");
  tw->add_option("--kind", to.kind, "f or t")->required()->check(CLI::IsMember({"f", "t", "F", "T"}));
  tw->add_option("--pattern-order", to.pattern_order, "Scan every pattern of this order");
  tw->add_option("--pattern", to.pattern, "Edge-list file holding one pattern");
  tw->add_option("--partition", to.partition, "Only partition-preserving twins");
  tw->add_option("edges", to.edges, "Edge-list file")->required();
  tw->add_option("--emit", to.emit)->check(CLI::IsMember({"json", "text"}));
  tw->callback([&] { status = twins(to); });

  CspOptions co;
  auto* csp = app.add_subcommand("csp", "Core-semiperiphery-periphery structures");
  csp->require_subcommand(1);
  auto add_csp = [&](const std::string& name, const std::string& help, int (*fn)(const CspOptions&)) {
    auto* sub = csp->add_subcommand(name, help);
    sub->add_option("edges", co.edges, "Edge-list file")->required();
    sub->add_option("partition", co.partition, "Partition file")->required();
    sub->add_option("--emit", co.emit)->check(CLI::IsMember(formats));
    sub->callback([&, fn] { status = fn(co); });
    return sub;
  };
  add_csp("validate", "Check the CSP conditions", csp_validate);
  add_csp("reduce", "Collapse twins into a CSP structure", csp_reduce)
      ->add_option("--prefer", co.prefer, "Preferred twin representative (repeatable)");
  add_csp("decompose", "Split a structure into C0, C1, S and P", csp_decompose);

  EnumerateOptions eo;
  auto* en = app.add_subcommand("enumerate", "Census of small graphs and CSP structures");
  en->add_option("--order", eo.order, "Order n")->required();
  en->add_option("--what", eo.what, "graphs, t, s, z or csp")
      ->check(CLI::IsMember({"graphs", "t", "s", "z", "csp"}));
  en->add_flag("--brute-force", eo.brute_force, "Label every census graph and validate");
  en->add_flag("--witnesses", eo.witnesses, "List canonical forms");
  en->add_option("--emit", eo.emit)->check(CLI::IsMember({"json", "text"}));
  en->callback([&] { status = enumerate(eo); });

  TradeOptions tro;
  auto* tr = app.add_subcommand("trade", "1994 trade network case study");
  tr->add_option("--scenario", tro.scenario, "fig5, fig6, fig7 or fig8")
      ->check(CLI::IsMember({"fig5", "fig6", "fig7", "fig8"}));
  tr->add_option("--edges", tro.edges, "Trade rows instead of the embedded dataset");
  tr->add_option("--labels", tro.labels, "Label file for the quotient");
  tr->add_option("--edge-min", tro.edge_min, "Prefilter edge volume (default 10M)");
  tr->add_option("--vertex-min", tro.vertex_min, "Prefilter country volume (default 25M)");
  tr->add_option("--cluster-threshold", tro.cluster_threshold, "Cluster edge volume, e.g. 75M");
  tr->add_option("--dissimilarity", tro.dissimilarity, "Dissimilarity merge threshold or none");
  tr->add_option("--refine-from", tro.refine_from, "Scope of dissimilarity merges or none");
  tr->add_option("--drop-edge", tro.drop_edges, "Quotient edge A,B to remove (repeatable)");
  tr->add_option("--graph", tro.graph, "DOT output: structure or quotient")
      ->check(CLI::IsMember({"structure", "quotient"}));
  tr->add_option("--emit", tro.emit)->check(CLI::IsMember(formats));
  tr->callback([&] { status = trade(tro); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return status;
}
