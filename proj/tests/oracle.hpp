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

// Slow reference implementations for cross-checking the library. They work
// on plain adjacency matrices and std::set, share no code with the library
// beyond reading adjacency, and try every permutation where the library
// prunes.

#ifndef TWINCSP_TESTS_ORACLE_HPP_
#define TWINCSP_TESTS_ORACLE_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "twincsp/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;
using Set = std::set<std::size_t>;

inline constexpr int kInf = 1 << 20;

inline Matrix matrix(const twincsp::Graph& g) {
  Matrix m(g.order(), std::vector<bool>(g.order(), false));
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t v = 0; v < g.order(); ++v) m[u][v] = u != v && g.adjacent(u, v);
  }
  return m;
}

inline Set to_set(twincsp::VertexSet s) {
  Set out;
  for (auto v : s) out.insert(v);
  return out;
}

inline Set neighbors(const Matrix& m, std::size_t u) {
  Set out;
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (m[u][v]) out.insert(v);
  }
  return out;
}

inline std::vector<std::vector<int>> floyd_warshall(const Matrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i][j]) d[i][j] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  return d;
}

inline Set set_minus(const Set& a, const Set& b) {
  Set out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

inline Set set_union(const Set& a, const Set& b) {
  Set out = a;
  out.insert(b.begin(), b.end());
  return out;
}

enum class Kind { kF, kT };

/// Every bijection v1 -> v2 (as a vector aligned with sorted v1) that
/// preserves adjacency, classes and the twin neighbourhood condition.
inline std::vector<std::vector<std::size_t>> twin_maps(const Matrix& m, Kind kind, const Set& v1,
                                                      const Set& v2,
                                                      const std::vector<int>& classes = {}) {
  std::vector<std::vector<std::size_t>> out;
  if (v1.size() != v2.size()) return out;
  std::vector<std::size_t> a(v1.begin(), v1.end());
  std::vector<std::size_t> b(v2.begin(), v2.end());
  do {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) {
      if (!classes.empty() && classes[a[i]] != classes[b[i]]) ok = false;
      for (std::size_t j = 0; j < a.size() && ok; ++j) {
        if (m[a[i]][a[j]] != m[b[i]][b[j]]) ok = false;
      }
      if (!ok) break;
      const Set na = neighbors(m, a[i]);
      const Set nb = neighbors(m, b[i]);
      if (kind == Kind::kF) {
        ok = set_minus(na, v1) == set_minus(nb, v2);
      } else {
        ok = set_union(na, v1) == set_union(nb, v2);
      }
    }
    if (ok) out.push_back(b);
  } while (std::next_permutation(b.begin(), b.end()));
  return out;
}

inline bool is_twin(const Matrix& m, Kind kind, const Set& v1, const Set& v2,
                    const std::vector<int>& classes = {}) {
  return !twin_maps(m, kind, v1, v2, classes).empty();
}

inline std::vector<Set> all_subsets(const Set& pool) {
  std::vector<std::size_t> items(pool.begin(), pool.end());
  std::vector<Set> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << items.size()); ++mask) {
    Set s;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if ((mask >> i) & 1U) s.insert(items[i]);
    }
    out.push_back(s);
  }
  return out;
}

/// Any pair of distinct equal-size subsets of `pool` that are twins.
inline bool has_proper_twin(const Matrix& m, Kind kind, const Set& pool,
                            const std::vector<int>& classes = {}) {
  const auto subsets = all_subsets(pool);
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t j = i + 1; j < subsets.size(); ++j) {
      if (subsets[i].size() == subsets[j].size() &&
          is_twin(m, kind, subsets[i], subsets[j], classes)) {
        return true;
      }
    }
  }
  return false;
}

inline bool has_proper_twin(const Matrix& m, Kind kind) {
  Set all;
  for (std::size_t v = 0; v < m.size(); ++v) all.insert(v);
  return has_proper_twin(m, kind, all);
}

/// Lexicographically smallest row-major adjacency string over all n!
/// relabelings, class labels prepended.
inline std::vector<int> brute_canonical(const Matrix& m, const std::vector<int>& classes = {}) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  do {
    std::vector<int> code;
    for (std::size_t i = 0; i < n; ++i) code.push_back(classes.empty() ? 0 : classes[perm[i]]);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) code.push_back(m[perm[i]][perm[j]] ? 1 : 0);
    }
    if (best.empty() || code < best) best = code;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool isomorphic(const Matrix& a, const Matrix& b, const std::vector<int>& ca = {},
                       const std::vector<int>& cb = {}) {
  return a.size() == b.size() && brute_canonical(a, ca) == brute_canonical(b, cb);
}

/// Number of isomorphism classes of graphs of order n (n <= 6).
inline std::size_t count_graphs(std::size_t n) {
  std::set<std::vector<int>> seen;
  const std::size_t pairs = n * (n > 0 ? n - 1 : 0) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    Matrix m(n, std::vector<bool>(n, false));
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j, ++k) m[i][j] = m[j][i] = (mask >> k) & 1U;
    }
    seen.insert(brute_canonical(m));
  }
  return seen.size();
}

inline twincsp::Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<twincsp::Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return twincsp::Graph(n, edges);
}

}  // namespace oracle

#endif  // TWINCSP_TESTS_ORACLE_HPP_
