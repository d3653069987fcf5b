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

#ifndef TWINCSP_ENUMERATION_HPP_
#define TWINCSP_ENUMERATION_HPP_

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "twincsp/canonical.hpp"
#include "twincsp/csp.hpp"
#include "twincsp/error.hpp"
#include "twincsp/graph.hpp"
#include "twincsp/twin.hpp"

namespace twincsp {

inline constexpr std::size_t kMaxCensusOrder = 7;
inline constexpr std::size_t kMaxTwinFreeOrder = 6;
inline constexpr std::size_t kMaxStructureOrder = 6;

/// Worker threads for census runs: TWINCSP_WORKERS if set, else the
/// hardware concurrency.
inline unsigned worker_count() {
  if (const char* env = std::getenv("TWINCSP_WORKERS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

namespace detail {

inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<VertexSet> adj(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      if ((mask >> k) & 1U) {
        adj[i].insert(j);
        adj[j].insert(i);
      }
    }
  }
  return Graph::from_adjacency(std::move(adj));
}

inline std::vector<CanonicalForm> labeled_census(std::size_t n) {
  const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t total = std::uint64_t{1} << pairs;
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(worker_count(), total));
  std::vector<std::set<std::uint64_t>> found(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint64_t m = w; m < total; m += workers) {
          found[w].insert(canonical_form(graph_from_mask(n, m), std::nullopt, n).bits);
        }
      });
    }
  }
  std::set<std::uint64_t> merged;
  for (auto& f : found) merged.insert(f.begin(), f.end());
  std::vector<CanonicalForm> out;
  for (std::uint64_t bits : merged) out.push_back({n, bits, {}});
  return out;
}

}  // namespace detail

/// All non-isomorphic simple graphs of order n, from labeled enumeration
/// deduplicated by canonical form. Results are memoized per order.
inline const std::vector<CanonicalForm>& enumerate_graphs(std::size_t n,
                                                          std::size_t bound = kMaxCensusOrder) {
  if (n > bound || n > kMaxCensusOrder) {
    throw Error("graph census limited to order " + std::to_string(std::min(bound, kMaxCensusOrder)));
  }
  static std::mutex mu;
  static std::map<std::size_t, std::vector<CanonicalForm>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, detail::labeled_census(n)).first;
  return it->second;
}

inline bool has_true_twin_vertices(const Graph& g) { return !true_twin_vertices(g).empty(); }

/// Graphs of order n without true twin vertices (t_n). t_0 = 1 counts the
/// null graph.
inline long long count_t(std::size_t n) {
  if (n > kMaxCensusOrder) throw Error("t_n is only computed up to order 7");
  long long count = 0;
  for (const auto& f : enumerate_graphs(n)) {
    if (!has_true_twin_vertices(to_graph(f))) ++count;
  }
  return count;
}

/// Graphs of order n without proper F-twin subgraphs of any order (s_n).
inline long long count_s(std::size_t n) {
  if (n > kMaxTwinFreeOrder) throw Error("s_n is only computed up to order 6");
  long long count = 0;
  for (const auto& f : enumerate_graphs(n)) {
    if (!has_proper_twin(to_graph(f), TwinKind::kF)) ++count;
  }
  return count;
}

/// Known values of a sequence indexed by order.
using Sequence = std::map<std::size_t, long long>;

struct CensusResult {
  std::size_t n = 0;
  /// Any of all_graphs, t, s, x, y, z, z_sum that could be computed.
  std::map<std::string, long long> counts;
  /// z_{n,nc} for nc = 1..n-2.
  std::map<std::size_t, long long> z_by_core;
  std::vector<CanonicalForm> witnesses;
};

namespace detail {

inline long long lookup(const Sequence& seq, std::size_t k, const char* name) {
  if (k == 0) return 1;
  auto it = seq.find(k);
  if (it == seq.end()) {
    throw Error(std::string("missing ") + name + "_" + std::to_string(k) + " input");
  }
  return it->second;
}

// Structures with no periphery on a core: joins C1 + S with n = nc + 2 ns.
inline long long x_count(std::size_t n, const Sequence& t, const Sequence& s) {
  long long x = 0;
  if (n % 2 == 1) {
    for (std::size_t k = 1; k <= (n - 1) / 2; ++k) {
      x += lookup(t, 2 * k - 1, "t") * lookup(s, (n + 1) / 2 - k, "s");
    }
  } else {
    for (std::size_t k = 1; k <= (n - 2) / 2; ++k) {
      x += lookup(t, 2 * k, "t") * lookup(s, n / 2 - k, "s");
    }
  }
  return x;
}

inline long long z_count(std::size_t n, const Sequence& t, const Sequence& s);

// Structures with at least one core-periphery pair: add such a pair to a
// structure of order n - 2, plus (n even) the single-core structures.
inline long long y_count(std::size_t n, const Sequence& t, const Sequence& s) {
  long long y = z_count(n - 2, t, s);
  if (n % 2 == 0) y += lookup(s, n / 2 - 1, "s");
  return y;
}

inline long long z_count(std::size_t n, const Sequence& t, const Sequence& s) {
  if (n < 3) return 0;
  return x_count(n, t, s) + y_count(n, t, s);
}

}  // namespace detail

/// Structures of order n with nc cores, summing over n0 = nc - n1 of the
/// parity fixed by n - nc. The n1 = 0 term uses t_0 = 1.
inline long long z_by_core_count(std::size_t n, std::size_t nc, const Sequence& t,
                                 const Sequence& s) {
  if (nc < 1 || nc + 2 > n) return 0;
  const std::size_t rest = n - nc;
  long long z = 0;
  if (rest % 2 == 1) {
    if (rest < 3) return 0;
    const std::size_t top = std::min((nc - 1) / 2, (rest - 3) / 2);
    for (std::size_t k = 0; k <= top; ++k) {
      z += detail::lookup(t, nc - 2 * k - 1, "t") * detail::lookup(s, (rest - 1) / 2 - k, "s");
    }
  } else {
    const std::size_t top = std::min(nc / 2, rest / 2 - 1);
    for (std::size_t k = 0; k <= top; ++k) {
      z += detail::lookup(t, nc - 2 * k, "t") * detail::lookup(s, rest / 2 - k, "s");
    }
  }
  return z;
}

/// x_n, y_n, z_n and z_{n,nc} from the given t and s values.
inline CensusResult csp_counts(std::size_t n, const Sequence& t, const Sequence& s) {
  if (n < 3) throw Error("CSP structures have order >= 3");
  CensusResult r;
  r.n = n;
  r.counts["x"] = detail::x_count(n, t, s);
  r.counts["y"] = detail::y_count(n, t, s);
  r.counts["z"] = r.counts["x"] + r.counts["y"];
  long long sum = 0;
  for (std::size_t nc = 1; nc + 2 <= n; ++nc) {
    r.z_by_core[nc] = z_by_core_count(n, nc, t, s);
    sum += r.z_by_core[nc];
  }
  r.counts["z_sum"] = sum;
  return r;
}

/// t_k for k = 1..up_to (capped at order 7) and s_k for k = 1..min(up_to, 3),
/// the only s values the formulas need through order 8.
inline std::pair<Sequence, Sequence> census_inputs(std::size_t n) {
  Sequence t;
  Sequence s;
  for (std::size_t k = 1; k + 2 <= n && k <= kMaxCensusOrder; ++k) t[k] = count_t(k);
  for (std::size_t k = 1; 2 * k + 1 <= n && k <= kMaxTwinFreeOrder; ++k) s[k] = count_s(k);
  return {t, s};
}

/// csp_counts with t and s taken from the graph census. For n <= 6 the
/// census counts of order n itself (all_graphs, t, s) are reported too.
inline CensusResult csp_counts(std::size_t n) {
  auto [t, s] = census_inputs(n);
  CensusResult r = csp_counts(n, t, s);
  if (n <= kMaxTwinFreeOrder) {
    r.counts["all_graphs"] = static_cast<long long>(enumerate_graphs(n).size());
    r.counts["t"] = count_t(n);
    r.counts["s"] = count_s(n);
  }
  return r;
}

enum class StructureRoute { kBruteForce, kConstructive };

namespace detail {

inline std::vector<CanonicalForm> structures_brute_force(std::size_t n) {
  std::set<CanonicalForm> found;
  for (const auto& f : enumerate_graphs(n)) {
    const Graph g = to_graph(f);
    if (!is_connected(g)) continue;
    std::vector<int> labels(n, 0);
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      for (std::size_t i = 0; i < n; ++i, c /= 3) labels[i] = static_cast<int>(c % 3);
      bool plausible = true;
      for (Vertex v = 0; v < n && plausible; ++v) {
        if (labels[v] == kPeriphery && g.degree(v) != 1) plausible = false;
      }
      if (!plausible) continue;
      PartitionedGraph pg(g, labels);
      if (validate(pg).is_csp_structure) found.insert(canonical_form(pg));
    }
  }
  return {found.begin(), found.end()};
}

inline std::vector<Graph> census_graphs(std::size_t n) {
  if (n == 0) return {Graph()};
  std::vector<Graph> out;
  for (const auto& f : enumerate_graphs(n)) out.push_back(to_graph(f));
  return out;
}

inline std::vector<CanonicalForm> structures_constructive(std::size_t n) {
  std::set<CanonicalForm> found;
  for (std::size_t n0 = 0; 2 * n0 + 2 <= n; ++n0) {
    for (std::size_t ns = 1; 2 * n0 + 2 * ns <= n; ++ns) {
      const std::size_t n1 = n - 2 * n0 - 2 * ns;
      if (n0 + n1 < 1) continue;
      for (const Graph& c1 : census_graphs(n1)) {
        if (has_true_twin_vertices(c1)) continue;
        for (const Graph& s : census_graphs(ns)) {
          if (has_proper_twin(s, TwinKind::kF)) continue;
          found.insert(canonical_form(compose(c1, s, n0)));
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace detail

/// All CSP structures of order n up to partitioned isomorphism, as sorted
/// partitioned canonical forms. The brute-force route labels every census
/// graph every possible way and validates; the constructive route composes
/// (C1, S, n0) triples.
inline std::vector<CanonicalForm> enumerate_csp_structures(
    std::size_t n, StructureRoute route = StructureRoute::kBruteForce) {
  if (n > kMaxStructureOrder) throw Error("CSP structure census limited to order 6");
  if (n < 3) return {};
  return route == StructureRoute::kBruteForce ? detail::structures_brute_force(n)
                                              : detail::structures_constructive(n);
}

}  // namespace twincsp

#endif  // TWINCSP_ENUMERATION_HPP_
