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

#include <random>
#include <string>
#include <vector>

#include "atomlab/atomlab.hpp"

namespace testutil {

using atomlab::Relation;
using atomlab::VertexSet;

// Builders independent of the group module, so relation-level tests do
// not lean on cayley_graph.

inline Relation directed_cycle(int n, bool reflexive) {
  Relation rel(n);
  for (int v = 0; v < n; ++v) {
    rel.add_edge(v, (v + 1) % n);
    if (reflexive) rel.add_edge(v, v);
  }
  return rel;
}

inline Relation circulant(int n, const std::vector<int>& offsets,
                          bool reflexive) {
  Relation rel(n);
  for (int v = 0; v < n; ++v) {
    if (reflexive) rel.add_edge(v, v);
    for (int d : offsets) rel.add_edge(v, (v + d) % n);
  }
  return rel;
}

inline Relation random_reflexive(std::mt19937_64& rng, int n, double p) {
  Relation rel = Relation::identity(n);
  std::bernoulli_distribution arc(p);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && arc(rng)) rel.add_edge(u, v);
    }
  }
  return rel;
}

inline Relation random_loopless(std::mt19937_64& rng, int n, double p) {
  Relation rel(n);
  std::bernoulli_distribution arc(p);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && arc(rng)) rel.add_edge(u, v);
    }
  }
  return rel;
}

// --- Independent oracles -------------------------------------------------

// Composition by chain enumeration.
inline Relation compose_oracle(const Relation& a, const Relation& b) {
  const int n = a.vertex_count();
  Relation out(n);
  for (int u = 0; u < n; ++u) {
    for (int w = 0; w < n; ++w) {
      if (!a.has_edge(u, w)) continue;
      for (int v = 0; v < n; ++v) {
        if (b.has_edge(w, v)) out.add_edge(u, v);
      }
    }
  }
  return out;
}

// Iterated images by repeated application of image_set, no frontier
// shortcut.
inline std::vector<VertexSet> iterated_oracle(const Relation& rel, int v,
                                              int jmax) {
  std::vector<VertexSet> out;
  VertexSet current(rel.vertex_count());
  current.insert(v);
  out.push_back(current);
  for (int j = 1; j <= jmax; ++j) {
    current = atomlab::image_set(rel, current);
    out.push_back(current);
  }
  return out;
}

// Shortest directed cycle via boolean matrix powers: the first k >= 1
// whose exact-k-step reachability matrix has a true diagonal entry.
inline std::optional<int> girth_oracle(const Relation& rel) {
  const int n = rel.vertex_count();
  std::vector<std::vector<bool>> step(
      static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) step[u][v] = rel.has_edge(u, v);
  }
  auto walk = step;  // exact k-step reachability
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      std::vector<std::vector<bool>> next(
          static_cast<std::size_t>(n),
          std::vector<bool>(static_cast<std::size_t>(n), false));
      for (int u = 0; u < n; ++u) {
        for (int w = 0; w < n; ++w) {
          if (!walk[u][w]) continue;
          for (int v = 0; v < n; ++v) {
            if (step[w][v]) next[u][v] = true;
          }
        }
      }
      walk = next;
    }
    for (int v = 0; v < n; ++v) {
      if (walk[v][v]) return k;
    }
  }
  return std::nullopt;
}

// Every automorphism, by filtering all n! permutations (n <= 7).
inline std::vector<atomlab::VertexBijection> all_automorphisms_bruteforce(
    const Relation& rel) {
  const int n = rel.vertex_count();
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::vector<atomlab::VertexBijection> out;
  do {
    atomlab::VertexBijection f(perm);
    if (atomlab::is_automorphism(rel, f)) out.push_back(f);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// --- Point-symmetric corpus ----------------------------------------------

struct CorpusInstance {
  std::string name;
  Relation rel;  // reflexive
};

// Twenty strongly connected point-symmetric reflexive instances with
// n <= 12 and E != V x V.
inline std::vector<CorpusInstance> point_symmetric_corpus() {
  using atomlab::FiniteGroup;
  using atomlab::cayley_graph;
  using atomlab::make_generator_set;
  std::vector<CorpusInstance> out;
  auto add_circulant = [&out](int n, const std::vector<int>& offsets) {
    std::string name = "Z" + std::to_string(n) + "{";
    for (std::size_t i = 0; i < offsets.size(); ++i) {
      name += (i ? "," : "") + std::to_string(offsets[i]);
    }
    name += "}";
    out.push_back({name, circulant(n, offsets, true)});
  };
  for (int n : {3, 4, 5, 6, 7, 8}) add_circulant(n, {1});
  add_circulant(7, {1, 2});
  add_circulant(6, {2, 3});
  add_circulant(12, {1, 2, 3});
  add_circulant(10, {1, 3});
  add_circulant(8, {1, 4});
  add_circulant(9, {1, 3});
  add_circulant(5, {1, 4});
  add_circulant(12, {2, 3});
  add_circulant(11, {1, 2});

  const FiniteGroup klein =
      FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  out.push_back({"Z2xZ2{01,10}",
                 cayley_graph(klein, make_generator_set(klein, {1, 2}), true)});
  const FiniteGroup z2xz4 =
      FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(4));
  out.push_back(
      {"Z2xZ4{(1,0),(0,1)}",
       cayley_graph(z2xz4, make_generator_set(z2xz4, {4, 1}), true)});
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  out.push_back(
      {"S3{(12),(123)}",
       cayley_graph(s3,
                    make_generator_set(
                        s3, {s3.element_index("(12)").value(),
                             s3.element_index("(123)").value()}),
                    true)});
  const FiniteGroup d4 = FiniteGroup::dihedral(4);
  out.push_back(
      {"D4{r,f}",
       cayley_graph(d4,
                    make_generator_set(d4, {d4.element_index("r").value(),
                                            d4.element_index("f").value()}),
                    true)});
  const FiniteGroup q8 = FiniteGroup::quaternion8();
  out.push_back(
      {"Q8{i,j}",
       cayley_graph(q8,
                    make_generator_set(q8, {q8.element_index("i").value(),
                                            q8.element_index("j").value()}),
                    true)});
  return out;
}

// Disconnected point-symmetric instances: kappa = 0 territory.
inline std::vector<CorpusInstance> disconnected_corpus() {
  return {
      {"Z6{3}", circulant(6, {3}, true)},
      {"Z9{3}", circulant(9, {3}, true)},
      {"Z8{2}", circulant(8, {2}, true)},
  };
}

}  // namespace testutil
