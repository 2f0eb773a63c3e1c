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

#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "atomlab/connectivity.hpp"
#include "atomlab/symmetry.hpp"
#include "helpers.hpp"

using namespace atomlab;
using testutil::circulant;
using testutil::directed_cycle;

namespace {

Relation two_disjoint_3cycles() {
  Relation rel(6);
  for (int v = 0; v < 3; ++v) {
    rel.add_edge(v, (v + 1) % 3);
    rel.add_edge(3 + v, 3 + (v + 1) % 3);
  }
  return reflexive_closure(rel);
}

void check_fragment_invariants(const Relation& rel, const VertexSet& fragment,
                               int kappa) {
  CHECK_FALSE(fragment.empty());
  CHECK_FALSE(image_set(rel, fragment).is_full());
  CHECK(boundary(rel, fragment).count() == kappa);
}

}  // namespace

TEST_CASE("kappa_bruteforce") {
  SECTION("complete relation: kappa = n - 1") {
    const ConnectivityReport report = kappa_bruteforce(Relation::complete(3));
    CHECK(report.kappa == 2);
    CHECK(report.complete);
    CHECK_FALSE(report.witness_fragment.has_value());
  }

  SECTION("the one-vertex reflexive relation is complete") {
    const ConnectivityReport report = kappa_bruteforce(Relation::identity(1));
    CHECK(report.kappa == 0);
    CHECK(report.complete);
  }

  SECTION("reflexive directed cycle") {
    const ConnectivityReport report = kappa_bruteforce(directed_cycle(5, true));
    CHECK(report.kappa == 1);
    REQUIRE(report.witness_fragment.has_value());
    CHECK(*report.witness_fragment == VertexSet::of(5, {0}));
    CHECK(report.atom_size == 1);
    check_fragment_invariants(directed_cycle(5, true),
                              *report.witness_fragment, 1);
  }

  SECTION("circulant of degree 3") {
    const ConnectivityReport report =
        kappa_bruteforce(circulant(7, {1, 2}, true));
    CHECK(report.kappa == 2);
    CHECK_FALSE(report.complete);
  }

  CHECK_THROWS_AS(kappa_bruteforce(directed_cycle(4, false)), contract_error);
  CHECK_THROWS_AS(kappa_bruteforce(Relation(0)), domain_error);
  CHECK_THROWS_AS(kappa_bruteforce(Relation::identity(23)), size_error);
}

TEST_CASE("kappa_maxflow") {
  SECTION("reflexive directed cycle") {
    const ConnectivityReport report = kappa_maxflow(directed_cycle(5, true));
    CHECK(report.kappa == 1);
    REQUIRE(report.witness_fragment.has_value());
    check_fragment_invariants(directed_cycle(5, true),
                              *report.witness_fragment, 1);
  }

  SECTION("4-cycle with one chord pair") {
    // 0->1->2->3->0 with 0->2 and 2->0, loops added. Vertex 1 has
    // boundary {2} alone, so kappa is 1 (oracle: the exhaustive scan).
    Relation rel = reflexive_closure(Relation::from_edges(
        4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {2, 0}}));
    CHECK(kappa_bruteforce(rel).kappa == 1);
    CHECK(kappa_maxflow(rel).kappa == 1);
  }

  SECTION("4-cycle with both diagonals") {
    Relation rel = reflexive_closure(Relation::from_edges(
        4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {2, 0}, {1, 3}, {3, 1}}));
    CHECK(kappa_bruteforce(rel).kappa == 2);
    CHECK(kappa_maxflow(rel).kappa == 2);
  }

  SECTION("disconnected input: kappa 0 with a component witness") {
    const Relation rel = two_disjoint_3cycles();
    const ConnectivityReport report = kappa_maxflow(rel);
    CHECK(report.kappa == 0);
    REQUIRE(report.witness_fragment.has_value());
    CHECK(*report.witness_fragment == VertexSet::of(6, {0, 1, 2}));
    check_fragment_invariants(rel, *report.witness_fragment, 0);
  }

  CHECK_THROWS_AS(kappa_maxflow(Relation::complete(3)), contract_error);
  CHECK_THROWS_AS(kappa_maxflow(directed_cycle(4, false)), contract_error);
}

TEST_CASE("kappa oracle equivalence on random instances") {
  std::mt19937_64 rng(31);
  int compared = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);  // 2..8
    const double p = 0.1 + 0.1 * static_cast<double>(rng() % 9);
    const Relation rel = testutil::random_reflexive(rng, n, p);
    if (rel.is_complete()) continue;
    const ConnectivityReport brute = kappa_bruteforce(rel);
    const ConnectivityReport flow = kappa_maxflow(rel);
    INFO(write_edge_list(rel));
    REQUIRE(brute.kappa == flow.kappa);
    check_fragment_invariants(rel, *brute.witness_fragment, brute.kappa);
    check_fragment_invariants(rel, *flow.witness_fragment, flow.kappa);
    ++compared;
  }
  CHECK(compared > 300);
}

TEST_CASE("atoms") {
  SECTION("reflexive cycle: all singletons") {
    const AtomsReport report = atoms(directed_cycle(5, true));
    CHECK(report.kappa == 1);
    CHECK(report.atom_size == 1);
    REQUIRE(report.atoms.size() == 5);
    for (int v = 0; v < 5; ++v) {
      CHECK(report.atoms[static_cast<std::size_t>(v)].members ==
            VertexSet::of(5, {v}));
    }
  }

  SECTION("two disjoint cycles: the components") {
    const AtomsReport report = atoms(two_disjoint_3cycles());
    CHECK(report.kappa == 0);
    CHECK(report.atom_size == 3);
    REQUIRE(report.atoms.size() == 2);
    CHECK(report.atoms[0].members == VertexSet::of(6, {0, 1, 2}));
    CHECK(report.atoms[1].members == VertexSet::of(6, {3, 4, 5}));
  }

  SECTION("Cayley graph on Z4 x Z2: atoms pairwise disjoint") {
    const FiniteGroup g = FiniteGroup::direct_product(FiniteGroup::cyclic(4),
                                                      FiniteGroup::cyclic(2));
    const Relation rel =
        cayley_graph(g, make_generator_set(g, {2, 1}), true);  // (1,0), (0,1)
    const AtomsReport report = atoms(rel);
    REQUIRE(!report.atoms.empty());
    for (std::size_t i = 0; i < report.atoms.size(); ++i) {
      for (std::size_t k = i + 1; k < report.atoms.size(); ++k) {
        CHECK_FALSE(report.atoms[i].members.intersects(report.atoms[k].members));
      }
    }
  }

  CHECK_THROWS_AS(atoms(Relation::complete(3)), contract_error);
}

TEST_CASE("atom_containing") {
  const auto atom = atom_containing(directed_cycle(5, true), 3);
  REQUIRE(atom.has_value());
  CHECK(atom->members == VertexSet::of(5, {3}));

  CHECK_THROWS_AS(atom_containing(Relation::complete(3), 0), contract_error);
  CHECK_THROWS_AS(atom_containing(directed_cycle(5, true), 7), domain_error);
}

TEST_CASE("atoms disjointness disjunction") {
  auto disjoint = [](const std::vector<Fragment>& list) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t k = i + 1; k < list.size(); ++k) {
        if (list[i].members.intersects(list[k].members)) return false;
      }
    }
    return true;
  };
  auto check_disjunction = [&](const Relation& rel) {
    if (rel.is_complete()) return;
    const bool forward = disjoint(atoms(rel).atoms);
    const bool backward = disjoint(atoms(reverse(rel)).atoms);
    INFO(write_edge_list(rel));
    CHECK((forward || backward));
  };

  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);  // 2..7
    const double p = 0.1 + 0.1 * static_cast<double>(rng() % 9);
    check_disjunction(testutil::random_reflexive(rng, n, p));
  }
  for (const auto& [name, rel] : testutil::disconnected_corpus()) {
    INFO(name);
    check_disjunction(rel);
  }
}

TEST_CASE("induced atom structure on point-symmetric instances") {
  // On the connected corpus: when a(rel) <= a(reverse), every atom has
  // at most kappa vertices and induces a point-symmetric subrelation.
  for (const auto& [name, rel] : testutil::point_symmetric_corpus()) {
    INFO(name);
    const AtomsReport forward = atoms(rel);
    const AtomsReport backward = atoms(reverse(rel));
    if (forward.atom_size > backward.atom_size) continue;
    for (const Fragment& atom : forward.atoms) {
      CHECK(atom.members.count() <= forward.kappa);
      CHECK(is_point_symmetric(restrict(rel, atom.members).relation));
    }
  }
}

TEST_CASE("disconnected point-symmetric instances have component atoms") {
  const Relation rel = circulant(6, {3}, true);
  const AtomsReport report = atoms(rel);
  CHECK(report.kappa == 0);
  CHECK(report.atom_size == 2);
  REQUIRE(report.atoms.size() == 3);
  CHECK(report.atoms[0].members == VertexSet::of(6, {0, 3}));
  CHECK(report.atoms[1].members == VertexSet::of(6, {1, 4}));
  CHECK(report.atoms[2].members == VertexSet::of(6, {2, 5}));
}
