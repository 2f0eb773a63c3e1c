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

#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "atomlab/errors.hpp"
#include "atomlab/vertex_set.hpp"

namespace atomlab {

/// A finite binary relation on vertices 0..n-1.
///
/// Stored as one image row per vertex: row(u) = { x : (u,x) in E }.
/// Digraphs are the loopless special case; reflexive relations contain
/// the full diagonal. Values are cheap to copy at desk scale and all
/// operations below are pure functions.
class Relation {
 public:
  Relation() = default;

  /// Relation on n vertices with no edges.
  explicit Relation(int n) : n_(n) {
    if (n < 0) throw domain_error("Relation: vertex count must be nonnegative");
    rows_.assign(static_cast<std::size_t>(n), VertexSet(n));
  }

  /// The identity relation I_V = (V, diagonal).
  static Relation identity(int n) {
    Relation r(n);
    for (int v = 0; v < n; ++v) r.add_edge(v, v);
    return r;
  }

  /// The complete relation E = V x V (loops included).
  static Relation complete(int n) {
    Relation r(n);
    for (int u = 0; u < n; ++u) r.rows_[static_cast<std::size_t>(u)] = VertexSet::full(n);
    return r;
  }

  static Relation from_edges(int n,
                             const std::vector<std::pair<int, int>>& edges) {
    Relation r(n);
    for (auto [u, v] : edges) r.add_edge(u, v);
    return r;
  }

  int vertex_count() const { return n_; }

  std::int64_t edge_count() const {
    std::int64_t m = 0;
    for (const VertexSet& row : rows_) m += row.count();
    return m;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    row_mutable(u).insert(v);  // insert checks v
  }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    return rows_[static_cast<std::size_t>(u)].contains(v);
  }

  /// Image row of u; same object as image(*this, u) without the copy.
  const VertexSet& row(int u) const {
    check_vertex(u);
    return rows_[static_cast<std::size_t>(u)];
  }

  bool is_reflexive() const {
    for (int v = 0; v < n_; ++v) {
      if (!rows_[static_cast<std::size_t>(v)].contains(v)) return false;
    }
    return true;
  }

  bool is_loopless() const {
    for (int v = 0; v < n_; ++v) {
      if (rows_[static_cast<std::size_t>(v)].contains(v)) return false;
    }
    return true;
  }

  bool is_complete() const {
    return edge_count() == static_cast<std::int64_t>(n_) * n_;
  }

  bool operator==(const Relation& o) const {
    return n_ == o.n_ && rows_ == o.rows_;
  }
  bool operator!=(const Relation& o) const { return !(*this == o); }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count()));
    for (int u = 0; u < n_; ++u) {
      rows_[static_cast<std::size_t>(u)].for_each(
          [&](int v) { out.emplace_back(u, v); });
    }
    return out;
  }

 private:
  VertexSet& row_mutable(int u) { return rows_[static_cast<std::size_t>(u)]; }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_) {
      throw domain_error("Relation: vertex " + std::to_string(v) +
                         " outside [0, " + std::to_string(n_) + ")");
    }
  }

  int n_ = 0;
  std::vector<VertexSet> rows_;
};

/// Image of a single vertex: Gamma(a) = { x : (a,x) in E }.
inline VertexSet image(const Relation& rel, int a) { return rel.row(a); }

/// Degree d(a) = |Gamma(a)| (the out-degree, in graph terms).
inline int degree(const Relation& rel, int a) { return rel.row(a).count(); }

/// Image of a set: Gamma(A), the union of the rows of A's members.
inline VertexSet image_set(const Relation& rel, const VertexSet& a) {
  if (a.universe_size() != rel.vertex_count()) {
    throw domain_error("image_set: set universe " +
                       std::to_string(a.universe_size()) +
                       " does not match relation size " +
                       std::to_string(rel.vertex_count()));
  }
  VertexSet out(rel.vertex_count());
  a.for_each([&](int v) { out |= rel.row(v); });
  return out;
}

/// Boundary of X: Gamma(X) \ X.
inline VertexSet boundary(const Relation& rel, const VertexSet& x) {
  return image_set(rel, x) - x;
}

/// Reverse relation: (u,v) in result iff (v,u) in rel.
inline Relation reverse(const Relation& rel) {
  Relation out(rel.vertex_count());
  for (int u = 0; u < rel.vertex_count(); ++u) {
    rel.row(u).for_each([&](int v) { out.add_edge(v, u); });
  }
  return out;
}

/// Composition of a nonempty list of relations on a common vertex set:
/// (u,v) is an edge iff there is a chain u = x0, x1, ..., xk = v with
/// (x_{i-1}, x_i) an edge of rels[i-1].
inline Relation compose(const std::vector<Relation>& rels) {
  if (rels.empty()) {
    throw domain_error(
        "compose: empty relation list (use Relation::identity instead)");
  }
  const int n = rels.front().vertex_count();
  for (const Relation& r : rels) {
    if (r.vertex_count() != n) {
      throw domain_error("compose: relations have different vertex counts");
    }
  }
  Relation acc = rels.front();
  for (std::size_t i = 1; i < rels.size(); ++i) {
    Relation next(n);
    for (int u = 0; u < n; ++u) {
      VertexSet row(n);
      acc.row(u).for_each([&](int w) { row |= rels[i].row(w); });
      row.for_each([&](int v) { next.add_edge(u, v); });
    }
    acc = std::move(next);
  }
  return acc;
}

/// k-th power. k = 0 yields the identity relation; negative k follows
/// the convention Gamma^{-j} = (Gamma^-)^j.
inline Relation power(const Relation& rel, int k) {
  if (k < 0) return power(reverse(rel), -k);
  Relation acc = Relation::identity(rel.vertex_count());
  for (int i = 0; i < k; ++i) acc = compose({acc, rel});
  return acc;
}

/// E union the diagonal.
inline Relation reflexive_closure(const Relation& rel) {
  Relation out = rel;
  for (int v = 0; v < rel.vertex_count(); ++v) out.add_edge(v, v);
  return out;
}

/// E minus the diagonal.
inline Relation without_loops(const Relation& rel) {
  Relation out(rel.vertex_count());
  for (int u = 0; u < rel.vertex_count(); ++u) {
    rel.row(u).for_each([&](int v) {
      if (u != v) out.add_edge(u, v);
    });
  }
  return out;
}

/// The sets Gamma^0(v), Gamma^1(v), ..., Gamma^jmax(v), computed by
/// frontier expansion. Requires a reflexive relation so that the chain
/// is nondecreasing and Gamma^j(v) really is the j-th iterated image.
inline std::vector<VertexSet> iterated_image(const Relation& rel, int v,
                                             int jmax) {
  if (!rel.is_reflexive()) {
    throw contract_error(
        "iterated_image: relation must be reflexive (contain the diagonal); "
        "apply reflexive_closure first");
  }
  if (jmax < 0) throw domain_error("iterated_image: jmax must be nonnegative");
  const int n = rel.vertex_count();
  VertexSet current(n);
  current.insert(v);  // throws domain_error when v is out of range
  std::vector<VertexSet> out;
  out.reserve(static_cast<std::size_t>(jmax) + 1);
  out.push_back(current);
  VertexSet frontier = current;
  for (int j = 1; j <= jmax; ++j) {
    VertexSet grown = current;
    frontier.for_each([&](int u) { grown |= rel.row(u); });
    frontier = grown - current;
    current = grown;
    out.push_back(current);
  }
  return out;
}

/// Result of restricting a relation to a vertex subset: the induced
/// relation on W, re-indexed densely, plus the map back to the original
/// vertex numbers (original_vertex[new] = old).
struct Restriction {
  Relation relation;
  std::vector<int> original_vertex;
};

/// Gamma[W] = (W, E intersect (W x W)), re-indexed to 0..|W|-1 in the
/// order of the original indices.
inline Restriction restrict(const Relation& rel, const VertexSet& w) {
  if (w.universe_size() != rel.vertex_count()) {
    throw domain_error("restrict: set universe does not match relation size");
  }
  const std::vector<int> original = w.members();
  std::vector<int> new_index(static_cast<std::size_t>(rel.vertex_count()), -1);
  for (std::size_t i = 0; i < original.size(); ++i) {
    new_index[static_cast<std::size_t>(original[i])] = static_cast<int>(i);
  }
  Relation out(static_cast<int>(original.size()));
  for (std::size_t i = 0; i < original.size(); ++i) {
    rel.row(original[i]).for_each([&](int v) {
      if (new_index[static_cast<std::size_t>(v)] >= 0) {
        out.add_edge(static_cast<int>(i), new_index[static_cast<std::size_t>(v)]);
      }
    });
  }
  return Restriction{std::move(out), original};
}

/// Length of a shortest directed cycle, or nullopt when the digraph is
/// acyclic. Defined for loopless relations only.
inline std::optional<int> girth(const Relation& rel) {
  if (!rel.is_loopless()) {
    throw contract_error(
        "girth: relation must be loopless (girth is defined for digraphs)");
  }
  const int n = rel.vertex_count();
  const Relation rev = reverse(rel);
  std::optional<int> best;
  std::vector<int> dist(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    // BFS from s; a shortest cycle through s closes along an arc u -> s.
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(s)] = 0;
    std::queue<int> queue;
    queue.push(s);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      if (best && dist[static_cast<std::size_t>(u)] + 1 >= *best) break;
      rel.row(u).for_each([&](int x) {
        if (dist[static_cast<std::size_t>(x)] < 0) {
          dist[static_cast<std::size_t>(x)] = dist[static_cast<std::size_t>(u)] + 1;
          queue.push(x);
        }
      });
    }
    rev.row(s).for_each([&](int u) {
      if (dist[static_cast<std::size_t>(u)] >= 0) {
        int cycle_len = dist[static_cast<std::size_t>(u)] + 1;
        if (!best || cycle_len < *best) best = cycle_len;
      }
    });
  }
  return best;
}

/// Cheap instance identity for reports: size, edge count, FNV-1a hash
/// of the row bits.
struct Fingerprint {
  int n = 0;
  std::int64_t edges = 0;
  std::uint64_t hash = 0;

  bool operator==(const Fingerprint&) const = default;
};

inline Fingerprint fingerprint(const Relation& rel) {
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&h](std::uint64_t x) {
    for (int b = 0; b < 8; ++b) {
      h ^= (x >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<std::uint64_t>(rel.vertex_count()));
  for (int u = 0; u < rel.vertex_count(); ++u) {
    for (std::uint64_t w : rel.row(u).words()) mix(w);
  }
  return Fingerprint{rel.vertex_count(), rel.edge_count(), h};
}

}  // namespace atomlab
