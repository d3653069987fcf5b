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

#ifndef TWINCSP_CANONICAL_HPP_
#define TWINCSP_CANONICAL_HPP_

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twincsp/error.hpp"
#include "twincsp/graph.hpp"

namespace twincsp {

/// Largest order the 64-bit adjacency code can hold (11 * 10 / 2 = 55 bits).
inline constexpr std::size_t kCanonicalHardLimit = 11;
inline constexpr std::size_t kDefaultCanonicalBound = 10;

/// Isomorphism-invariant code of a (possibly partitioned) graph.
///
/// `bits` is the upper triangle of the adjacency matrix read column by
/// column ((0,1), (0,2), (1,2), (0,3), ...), first pair in the most
/// significant position, minimized over all admissible vertex orders.
/// `classes` lists the class label at each canonical position and is empty
/// for unpartitioned forms.
struct CanonicalForm {
  std::size_t order = 0;
  std::uint64_t bits = 0;
  std::vector<int> classes;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;

  std::string to_string() const {
    std::string s = std::to_string(order) + ":";
    const std::size_t len = order * (order - (order > 0 ? 1 : 0)) / 2;
    for (std::size_t k = 0; k < len; ++k) {
      s += ((bits >> (len - 1 - k)) & 1U) ? '1' : '0';
    }
    if (!classes.empty()) {
      s += ":";
      for (std::size_t i = 0; i < classes.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(classes[i]);
      }
    }
    return s;
  }
};

namespace detail {

inline std::size_t code_length(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

// Colour refinement seeded with (class, degree). Colours are ranks of
// invariant signatures, so isomorphic inputs receive matching colourings.
inline std::vector<int> refine_colours(const Graph& g, std::span<const int> classes) {
  const std::size_t n = g.order();
  std::vector<std::vector<long>> sig(n);
  for (Vertex v = 0; v < n; ++v) {
    sig[v] = {classes.empty() ? 0L : static_cast<long>(classes[v]),
              static_cast<long>(g.degree(v))};
  }
  std::vector<int> colour(n, 0);
  std::size_t distinct = 0;
  for (;;) {
    std::vector<std::vector<long>> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v = 0; v < n; ++v) {
      colour[v] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    }
    if (sorted.size() == distinct) break;
    distinct = sorted.size();
    for (Vertex v = 0; v < n; ++v) {
      std::vector<long> next{colour[v]};
      std::vector<long> around;
      for (Vertex w : g.neighbors(v)) around.push_back(colour[w]);
      std::sort(around.begin(), around.end());
      next.insert(next.end(), around.begin(), around.end());
      sig[v] = std::move(next);
    }
  }
  return colour;
}

class CanonicalSearch {
 public:
  CanonicalSearch(const Graph& g, std::vector<int> colour)
      : g_(g), n_(g.order()), colour_(std::move(colour)), len_(code_length(n_)) {
    slot_colour_ = colour_;
    std::sort(slot_colour_.begin(), slot_colour_.end());
    best_ = len_ == 0 ? 0 : (len_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << len_) - 1);
    placed_.assign(n_, 0);
    best_perm_.assign(n_, 0);
  }

  void run() {
    if (n_ > 0) place(0, 0, 0, VertexSet());
  }

  std::uint64_t best() const { return best_; }
  /// best_perm()[position] = original vertex.
  const std::vector<Vertex>& best_perm() const { return best_perm_; }

 private:
  void place(std::size_t pos, std::uint64_t code, std::size_t used_bits, VertexSet used) {
    if (pos == n_) {
      if (!found_ || code < best_) {
        best_ = code;
        best_perm_ = placed_;
        found_ = true;
      }
      return;
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (used.contains(v) || colour_[v] != slot_colour_[pos]) continue;
      std::uint64_t c = code;
      for (std::size_t i = 0; i < pos; ++i) {
        c = (c << 1) | (g_.adjacent(placed_[i], v) ? 1U : 0U);
      }
      const std::size_t bits = used_bits + pos;
      if (found_ && bits > 0) {
        const std::uint64_t best_prefix = best_ >> (len_ - bits);
        if (c > best_prefix) continue;
      }
      placed_[pos] = v;
      VertexSet next = used;
      next.insert(v);
      place(pos + 1, c, bits, next);
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<int> colour_;
  std::vector<int> slot_colour_;
  std::size_t len_;
  std::uint64_t best_ = 0;
  bool found_ = false;
  std::vector<Vertex> placed_;
  std::vector<Vertex> best_perm_;
};

}  // namespace detail

/// Canonical form by exhaustive minimization over the vertex orders that
/// respect refined (class, degree) colours. Equal forms hold exactly for
/// isomorphic graphs, or partition-preserving isomorphic graphs when
/// `classes` is given.
inline CanonicalForm canonical_form(const Graph& g,
                                    std::optional<std::span<const int>> classes = std::nullopt,
                                    std::size_t bound = kDefaultCanonicalBound) {
  bound = std::min(bound, kCanonicalHardLimit);
  if (g.order() > bound) {
    throw Error("canonical form limited to order " + std::to_string(bound) +
                ", got " + std::to_string(g.order()));
  }
  std::span<const int> cls = classes.value_or(std::span<const int>());
  if (classes && cls.size() != g.order()) throw Error("class vector size mismatch");
  detail::CanonicalSearch search(g, detail::refine_colours(g, cls));
  search.run();
  CanonicalForm form;
  form.order = g.order();
  form.bits = search.best();
  if (classes) {
    for (Vertex v : search.best_perm()) form.classes.push_back(cls[v]);
  }
  return form;
}

inline CanonicalForm canonical_form(const PartitionedGraph& pg,
                                    std::size_t bound = kDefaultCanonicalBound) {
  return canonical_form(pg.graph, std::span<const int>(pg.classes), bound);
}

/// Rebuilds a representative graph from a canonical form.
inline Graph to_graph(const CanonicalForm& form) {
  std::vector<Edge> edges;
  const std::size_t len = detail::code_length(form.order);
  std::size_t k = 0;
  for (Vertex j = 1; j < form.order; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      if ((form.bits >> (len - 1 - k)) & 1U) edges.emplace_back(i, j);
    }
  }
  return Graph(form.order, edges);
}

inline PartitionedGraph to_partitioned(const CanonicalForm& form) {
  return {to_graph(form), form.classes};
}

inline bool isomorphic(const Graph& a, const Graph& b,
                       std::size_t bound = kDefaultCanonicalBound) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a, std::nullopt, bound) == canonical_form(b, std::nullopt, bound);
}

inline bool isomorphic(const PartitionedGraph& a, const PartitionedGraph& b,
                       std::size_t bound = kDefaultCanonicalBound) {
  if (a.graph.order() != b.graph.order() || a.graph.size() != b.graph.size()) return false;
  return canonical_form(a, bound) == canonical_form(b, bound);
}

}  // namespace twincsp

#endif  // TWINCSP_CANONICAL_HPP_
