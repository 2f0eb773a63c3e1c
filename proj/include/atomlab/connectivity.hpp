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

#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <vector>

#include "atomlab/errors.hpp"
#include "atomlab/relation.hpp"

namespace atomlab {

// Connectivity of a reflexive relation:
//   kappa = |V| - 1                                   when E = V x V,
//   kappa = min{ |boundary(X)| : X nonempty, Gamma(X) != V }  otherwise.
// A set achieving the minimum is a fragment; a fragment of minimum
// cardinality is an atom.

struct ConnectivityReport {
  int kappa = 0;
  bool complete = false;
  /// A fragment achieving kappa; absent exactly in the complete case.
  std::optional<VertexSet> witness_fragment;
  /// Minimum fragment cardinality a(Gamma), when the algorithm
  /// enumerated enough to know it.
  std::optional<int> atom_size;
};

struct Fragment {
  VertexSet members;
};

struct AtomsReport {
  int kappa = 0;
  int atom_size = 0;
  /// All atoms, sorted lexicographically by member list.
  std::vector<Fragment> atoms;
};

inline constexpr int kDefaultBruteforceThreshold = 22;

namespace detail {

inline void require_reflexive(const Relation& rel, const char* op) {
  if (!rel.is_reflexive()) {
    throw contract_error(std::string(op) +
                         ": relation must be reflexive (contain the diagonal); "
                         "apply reflexive_closure first");
  }
}

// Lexicographic order on sorted member lists, for subsets encoded as
// bit masks.
inline bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
  while (a != 0 || b != 0) {
    if (a == 0) return true;
    if (b == 0) return false;
    int la = std::countr_zero(a);
    int lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

struct SubsetScan {
  int kappa = std::numeric_limits<int>::max();
  std::uint64_t best_mask = 0;  // lexicographically least minimizer
  int atom_size = 0;            // smallest |X| among minimizers

  // Visits every nonempty X with Gamma(X) != V.
  static SubsetScan run(const Relation& rel) {
    const int n = rel.vertex_count();
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      rows[static_cast<std::size_t>(v)] = rel.row(v).words()[0];
    }
    const std::uint64_t full =
        (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    SubsetScan out;
    for (std::uint64_t mask = 1; mask <= full; ++mask) {
      std::uint64_t gamma = 0;
      for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
        gamma |= rows[static_cast<std::size_t>(std::countr_zero(rest))];
      }
      if (gamma == full) continue;
      const int bd = std::popcount(gamma & ~mask);
      if (bd < out.kappa) {
        out.kappa = bd;
        out.best_mask = mask;
        out.atom_size = std::popcount(mask);
      } else if (bd == out.kappa) {
        if (mask_lex_less(mask, out.best_mask)) out.best_mask = mask;
        out.atom_size = std::min(out.atom_size, std::popcount(mask));
      }
    }
    return out;
  }
};

inline VertexSet mask_to_set(int n, std::uint64_t mask) {
  VertexSet s(n);
  for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
    s.insert(std::countr_zero(rest));
  }
  return s;
}

inline void check_bruteforce_size(const Relation& rel, int threshold,
                                  const char* op) {
  const int n = rel.vertex_count();
  if (n > threshold) {
    throw size_error(std::string(op) + ": relation size " + std::to_string(n) +
                     " exceeds the brute-force threshold " +
                     std::to_string(threshold) + "; use kappa_maxflow");
  }
  if (n > 62) {
    throw size_error(std::string(op) +
                     ": subset enumeration supports at most 62 vertices");
  }
}

// Dinic max-flow on the vertex-split network for one (u, w) pair.
class VertexCutNetwork {
 public:
  VertexCutNetwork(const Relation& rel, int u, int w) : n_(rel.vertex_count()) {
    head_.assign(static_cast<std::size_t>(2 * n_), {});
    for (int v = 0; v < n_; ++v) {
      if (v != u && v != w) add_edge(in(v), out(v), 1);
    }
    for (int x = 0; x < n_; ++x) {
      rel.row(x).for_each([&](int y) {
        if (x != y) add_edge(out(x), in(y), kInf);  // loops never separate
      });
    }
    source_ = out(u);
    sink_ = in(w);
  }

  int max_flow() {
    int total = 0;
    while (build_levels()) {
      iter_.assign(head_.size(), 0);
      while (int pushed = augment(source_, kInf)) total += pushed;
    }
    return total;
  }

  /// After max_flow: vertices whose out-node the residual network still
  /// reaches from the source. This is a fragment with boundary equal to
  /// the minimum cut.
  VertexSet reachable_fragment() {
    build_levels();  // recompute residual reachability
    VertexSet frag(n_);
    for (int v = 0; v < n_; ++v) {
      if (level_[static_cast<std::size_t>(out(v))] >= 0) frag.insert(v);
    }
    return frag;
  }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max() / 2;

  struct Edge {
    int to;
    int cap;
  };

  int in(int v) const { return 2 * v; }
  int out(int v) const { return 2 * v + 1; }

  void add_edge(int from, int to, int cap) {
    head_[static_cast<std::size_t>(from)].push_back(
        static_cast<int>(edges_.size()));
    edges_.push_back({to, cap});
    head_[static_cast<std::size_t>(to)].push_back(
        static_cast<int>(edges_.size()));
    edges_.push_back({from, 0});
  }

  bool build_levels() {
    level_.assign(head_.size(), -1);
    std::queue<int> queue;
    level_[static_cast<std::size_t>(source_)] = 0;
    queue.push(source_);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int id : head_[static_cast<std::size_t>(v)]) {
        const Edge& e = edges_[static_cast<std::size_t>(id)];
        if (e.cap > 0 && level_[static_cast<std::size_t>(e.to)] < 0) {
          level_[static_cast<std::size_t>(e.to)] =
              level_[static_cast<std::size_t>(v)] + 1;
          queue.push(e.to);
        }
      }
    }
    return level_[static_cast<std::size_t>(sink_)] >= 0;
  }

  int augment(int v, int limit) {
    if (v == sink_) return limit;
    for (std::size_t& i = iter_[static_cast<std::size_t>(v)];
         i < head_[static_cast<std::size_t>(v)].size(); ++i) {
      int id = head_[static_cast<std::size_t>(v)][i];
      Edge& e = edges_[static_cast<std::size_t>(id)];
      if (e.cap <= 0 || level_[static_cast<std::size_t>(e.to)] !=
                            level_[static_cast<std::size_t>(v)] + 1) {
        continue;
      }
      if (int pushed = augment(e.to, std::min(limit, e.cap))) {
        e.cap -= pushed;
        edges_[static_cast<std::size_t>(id ^ 1)].cap += pushed;
        return pushed;
      }
    }
    return 0;
  }

  int n_;
  int source_ = 0;
  int sink_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> head_;
  std::vector<int> level_;
  std::vector<std::size_t> iter_;
};

}  // namespace detail

/// Exact kappa by scanning every nonempty subset; the authoritative
/// (definitional) semantics. The witness is the lexicographically least
/// minimizer; atom_size is filled as a byproduct of the scan.
inline ConnectivityReport kappa_bruteforce(
    const Relation& rel, int threshold = kDefaultBruteforceThreshold) {
  detail::require_reflexive(rel, "kappa_bruteforce");
  const int n = rel.vertex_count();
  if (n < 1) throw domain_error("kappa_bruteforce: relation must be nonempty");
  detail::check_bruteforce_size(rel, threshold, "kappa_bruteforce");
  if (rel.is_complete()) {
    return ConnectivityReport{n - 1, true, std::nullopt, std::nullopt};
  }
  const detail::SubsetScan scan = detail::SubsetScan::run(rel);
  return ConnectivityReport{scan.kappa, false,
                            detail::mask_to_set(n, scan.best_mask),
                            scan.atom_size};
}

/// Kappa via Menger: minimum over ordered pairs (u, w) with w outside
/// Gamma(u) of the max-flow in the vertex-split network. The witness is
/// the residual source side of a minimizing pair; atom_size is unknown.
inline ConnectivityReport kappa_maxflow(const Relation& rel) {
  detail::require_reflexive(rel, "kappa_maxflow");
  const int n = rel.vertex_count();
  if (n < 1) throw domain_error("kappa_maxflow: relation must be nonempty");
  if (rel.is_complete()) {
    throw contract_error(
        "kappa_maxflow: complete relation has no pair (u, w) with w outside "
        "Gamma(u); kappa is |V| - 1 by definition");
  }
  int best = std::numeric_limits<int>::max();
  std::optional<VertexSet> witness;
  for (int u = 0; u < n && best > 0; ++u) {
    for (int w = 0; w < n && best > 0; ++w) {
      if (rel.has_edge(u, w)) continue;
      detail::VertexCutNetwork network(rel, u, w);
      const int flow = network.max_flow();
      if (flow < best) {
        best = flow;
        witness = network.reachable_fragment();
      }
    }
  }
  return ConnectivityReport{best, false, std::move(witness), std::nullopt};
}

/// All atoms (minimum-cardinality fragments), enumerated exhaustively.
inline AtomsReport atoms(const Relation& rel,
                         int threshold = kDefaultBruteforceThreshold) {
  detail::require_reflexive(rel, "atoms");
  const int n = rel.vertex_count();
  if (n < 1) throw domain_error("atoms: relation must be nonempty");
  detail::check_bruteforce_size(rel, threshold, "atoms");
  if (rel.is_complete()) {
    throw contract_error(
        "atoms: complete relation has no fragments (E = V x V)");
  }
  const detail::SubsetScan scan = detail::SubsetScan::run(rel);

  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    rows[static_cast<std::size_t>(v)] = rel.row(v).words()[0];
  }
  const std::uint64_t full =
      (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  std::vector<std::uint64_t> atom_masks;
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    if (std::popcount(mask) != scan.atom_size) continue;
    std::uint64_t gamma = 0;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      gamma |= rows[static_cast<std::size_t>(std::countr_zero(rest))];
    }
    if (gamma == full) continue;
    if (std::popcount(gamma & ~mask) == scan.kappa) atom_masks.push_back(mask);
  }
  std::sort(atom_masks.begin(), atom_masks.end(), detail::mask_lex_less);
  AtomsReport out{scan.kappa, scan.atom_size, {}};
  out.atoms.reserve(atom_masks.size());
  for (std::uint64_t mask : atom_masks) {
    out.atoms.push_back(Fragment{detail::mask_to_set(n, mask)});
  }
  return out;
}

/// The lexicographically least atom containing v, if any.
inline std::optional<Fragment> atom_containing(
    const Relation& rel, int v, int threshold = kDefaultBruteforceThreshold) {
  if (v < 0 || v >= rel.vertex_count()) {
    throw domain_error("atom_containing: vertex " + std::to_string(v) +
                       " outside [0, " + std::to_string(rel.vertex_count()) +
                       ")");
  }
  for (const Fragment& atom : atoms(rel, threshold).atoms) {
    if (atom.members.contains(v)) return atom;
  }
  return std::nullopt;
}

}  // namespace atomlab
