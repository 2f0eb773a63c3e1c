// Copyright 2026 The atomlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <vector>

#include "atomlab/errors.hpp"
#include "atomlab/relation.hpp"

namespace atomlab {

/// A bijection of the vertex set [0, n). Used to represent
/// automorphisms; composable and invertible.
class VertexBijection {
 public:
  explicit VertexBijection(std::vector<int> forward)
      : forward_(std::move(forward)) {
    const int n = static_cast<int>(forward_.size());
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (int img : forward_) {
      if (img < 0 || img >= n || hit[static_cast<std::size_t>(img)]) {
        throw domain_error("VertexBijection: mapping is not a permutation");
      }
      hit[static_cast<std::size_t>(img)] = true;
    }
  }

  static VertexBijection identity(int n) {
    std::vector<int> f(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) f[static_cast<std::size_t>(v)] = v;
    return VertexBijection(std::move(f));
  }

  int size() const { return static_cast<int>(forward_.size()); }

  int operator()(int v) const {
    if (v < 0 || v >= size()) {
      throw domain_error("VertexBijection: vertex out of range");
    }
    return forward_[static_cast<std::size_t>(v)];
  }

  VertexBijection inverse() const {
    std::vector<int> inv(forward_.size());
    for (int v = 0; v < size(); ++v) {
      inv[static_cast<std::size_t>(forward_[static_cast<std::size_t>(v)])] = v;
    }
    return VertexBijection(std::move(inv));
  }

  /// Composition x -> g(f(x)); f is applied first.
  static VertexBijection compose(const VertexBijection& f,
                                 const VertexBijection& g) {
    if (f.size() != g.size()) {
      throw domain_error("VertexBijection: size mismatch in composition");
    }
    std::vector<int> h(f.forward_.size());
    for (int v = 0; v < f.size(); ++v) {
      h[static_cast<std::size_t>(v)] = g(f(v));
    }
    return VertexBijection(std::move(h));
  }

  const std::vector<int>& mapping() const { return forward_; }

  bool operator==(const VertexBijection& o) const {
    return forward_ == o.forward_;
  }

 private:
  std::vector<int> forward_;
};

/// True iff (x,y) in E <=> (f(x),f(y)) in E for all pairs. For a finite
/// relation this single condition makes both f and its inverse
/// homomorphisms.
inline bool is_automorphism(const Relation& rel, const VertexBijection& f) {
  if (f.size() != rel.vertex_count()) {
    throw domain_error("is_automorphism: bijection size does not match relation");
  }
  const int n = rel.vertex_count();
  for (int u = 0; u < n; ++u) {
    VertexSet mapped(n);
    rel.row(u).for_each([&](int v) { mapped.insert(f(v)); });
    if (mapped != rel.row(f(u))) return false;
  }
  return true;
}

/// Default cap on the backtracking searches below.
inline constexpr int kDefaultSymmetryThreshold = 64;

namespace detail {

// Vertex signatures used to prune the transporter search: the
// (out-degree, in-degree) pair refined once by the sorted multiset of
// neighbor pairs, hashed to a single word.
inline std::vector<std::uint64_t> vertex_signatures(const Relation& rel,
                                                    const Relation& rev) {
  const int n = rel.vertex_count();
  std::vector<std::uint64_t> base(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    base[static_cast<std::size_t>(v)] =
        (static_cast<std::uint64_t>(rel.row(v).count()) << 32) |
        static_cast<std::uint64_t>(rev.row(v).count());
  }
  auto hash_mix = [](std::uint64_t h, std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  };
  std::vector<std::uint64_t> refined(static_cast<std::size_t>(n));
  std::vector<std::uint64_t> bucket;
  for (int v = 0; v < n; ++v) {
    std::uint64_t h = base[static_cast<std::size_t>(v)];
    for (const Relation* side : {&rel, &rev}) {
      bucket.clear();
      side->row(v).for_each(
          [&](int u) { bucket.push_back(base[static_cast<std::size_t>(u)]); });
      std::sort(bucket.begin(), bucket.end());
      for (std::uint64_t x : bucket) h = hash_mix(h, x);
      h = hash_mix(h, 0xabcdefull);  // separator between the two sides
    }
    refined[static_cast<std::size_t>(v)] = h;
  }
  return refined;
}

// Assignment order for the backtracking search: start at x, walk the
// underlying undirected adjacency breadth-first so each new vertex is
// constrained by already-assigned neighbors, then append any vertices
// in other components.
inline std::vector<int> search_order(const Relation& rel, const Relation& rev,
                                     int x) {
  const int n = rel.vertex_count();
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::queue<int> queue;
  auto visit = [&](int v) {
    if (!seen[static_cast<std::size_t>(v)]) {
      seen[static_cast<std::size_t>(v)] = true;
      order.push_back(v);
      queue.push(v);
    }
  };
  visit(x);
  while (true) {
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      rel.row(u).for_each(visit);
      rev.row(u).for_each(visit);
    }
    auto next = std::find(seen.begin(), seen.end(), false);
    if (next == seen.end()) break;
    visit(static_cast<int>(next - seen.begin()));
  }
  return order;
}

struct TransporterSearch {
  const Relation& rel;
  std::vector<std::uint64_t> sig;
  std::vector<int> order;
  std::vector<int> forward;   // partial map, -1 = unassigned
  std::vector<bool> used;     // image already taken
  std::vector<int> assigned;  // domain vertices assigned so far

  bool consistent(int v, int w) const {
    if (rel.has_edge(v, v) != rel.has_edge(w, w)) return false;
    for (int u : assigned) {
      int fu = forward[static_cast<std::size_t>(u)];
      if (rel.has_edge(u, v) != rel.has_edge(fu, w)) return false;
      if (rel.has_edge(v, u) != rel.has_edge(w, fu)) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const int v = order[depth];
    for (int w = 0; w < rel.vertex_count(); ++w) {
      if (used[static_cast<std::size_t>(w)]) continue;
      if (sig[static_cast<std::size_t>(v)] != sig[static_cast<std::size_t>(w)]) {
        continue;
      }
      if (!consistent(v, w)) continue;
      forward[static_cast<std::size_t>(v)] = w;
      used[static_cast<std::size_t>(w)] = true;
      assigned.push_back(v);
      if (extend(depth + 1)) return true;
      assigned.pop_back();
      used[static_cast<std::size_t>(w)] = false;
      forward[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  }
};

}  // namespace detail

/// Searches for an automorphism mapping x to y. Returns nullopt when no
/// such automorphism exists. Backtracking over signature-compatible
/// assignments; capped by the symmetry threshold.
inline std::optional<VertexBijection> transporter(
    const Relation& rel, int x, int y,
    int threshold = kDefaultSymmetryThreshold) {
  const int n = rel.vertex_count();
  if (x < 0 || x >= n || y < 0 || y >= n) {
    throw domain_error("transporter: vertex out of range");
  }
  if (n > threshold) {
    throw size_error("transporter: relation size " + std::to_string(n) +
                     " exceeds the symmetry threshold " +
                     std::to_string(threshold));
  }
  const Relation rev = reverse(rel);
  detail::TransporterSearch search{
      rel,
      detail::vertex_signatures(rel, rev),
      detail::search_order(rel, rev, x),
      std::vector<int>(static_cast<std::size_t>(n), -1),
      std::vector<bool>(static_cast<std::size_t>(n), false),
      {}};
  if (search.sig[static_cast<std::size_t>(x)] !=
      search.sig[static_cast<std::size_t>(y)]) {
    return std::nullopt;
  }
  if (!search.consistent(x, y)) return std::nullopt;
  search.forward[static_cast<std::size_t>(x)] = y;
  search.used[static_cast<std::size_t>(y)] = true;
  search.assigned.push_back(x);
  if (!search.extend(1)) return std::nullopt;
  return VertexBijection(std::move(search.forward));
}

/// Point-symmetry (vertex-transitivity): for every pair x, y some
/// automorphism maps x to y. Certified by n-1 transporters from vertex
/// 0; a regular-degree fast path rejects most asymmetric inputs first.
inline bool is_point_symmetric(const Relation& rel,
                               int threshold = kDefaultSymmetryThreshold) {
  const int n = rel.vertex_count();
  if (n > threshold) {
    throw size_error("is_point_symmetric: relation size " + std::to_string(n) +
                     " exceeds the symmetry threshold " +
                     std::to_string(threshold));
  }
  if (n <= 1) return true;
  // A point-symmetric relation is regular; checking degrees is cheap.
  const Relation rev = reverse(rel);
  const int out0 = rel.row(0).count();
  const int in0 = rev.row(0).count();
  for (int v = 1; v < n; ++v) {
    if (rel.row(v).count() != out0 || rev.row(v).count() != in0) return false;
  }
  for (int y = 1; y < n; ++y) {
    if (!transporter(rel, 0, y, threshold)) return false;
  }
  return true;
}

/// Checks that every power Gamma^i for 0 <= i <= imax is
/// point-symmetric. Always true when the input is point-symmetric (an
/// automorphism of Gamma is one of Gamma^i); a false return indicates
/// an implementation bug, not a mathematical discovery.
inline bool check_power_symmetry(const Relation& rel, int imax,
                                 int threshold = kDefaultSymmetryThreshold) {
  if (imax < 0) {
    throw domain_error("check_power_symmetry: imax must be nonnegative");
  }
  Relation acc = Relation::identity(rel.vertex_count());
  for (int i = 0; i <= imax; ++i) {
    if (!is_point_symmetric(acc, threshold)) return false;
    if (i < imax) acc = compose({acc, rel});
  }
  return true;
}

}  // namespace atomlab
