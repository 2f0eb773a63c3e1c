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

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "atomlab/errors.hpp"
#include "atomlab/io.hpp"
#include "atomlab/relation.hpp"
#include "atomlab/symmetry.hpp"
#include "atomlab/version.hpp"

namespace atomlab {

// Executable checks for the growth inequalities of point-symmetric
// reflexive relations, the girth bound they imply, and a counterexample
// scanner for the general (symmetry-free) conjecture. The checks never
// prove anything: a violation on a valid input is an implementation
// bug, except in the scanner, where it would be a mathematical find and
// is preserved accordingly.

/// Per-vertex growth record: the sizes |Gamma^j(v)| and, for each j,
/// whether the hypothesis Gamma^j(v) intersect Gamma^-(v) = {v} holds.
struct GrowthProfile {
  int vertex = 0;
  int degree = 0;            // r = |Gamma(v)|, loop included
  std::vector<int> sizes;    // sizes[j] = |Gamma^j(v)|, j = 0..jmax
  std::vector<bool> eligible;
};

struct Violation {
  int vertex = 0;
  int j = 0;
  std::int64_t observed = 0;
  std::int64_t required = 0;
};

struct CheckResult {
  bool holds = true;
  std::vector<Violation> violations;
  Fingerprint instance;
};

/// Builds the growth profile of v. jmax < 0 defaults to the vertex
/// count, by which point the sizes have stabilized. Eligibility is
/// computed literally from the intersection equation, never via girth.
inline GrowthProfile growth_profile(const Relation& rel, int v, int jmax = -1) {
  if (!rel.is_reflexive()) {
    throw contract_error(
        "growth_profile: relation must be reflexive (contain the diagonal)");
  }
  if (jmax < 0) jmax = rel.vertex_count();
  const std::vector<VertexSet> iterates = iterated_image(rel, v, jmax);
  VertexSet reverse_image(rel.vertex_count());
  for (int u = 0; u < rel.vertex_count(); ++u) {
    if (rel.has_edge(u, v)) reverse_image.insert(u);
  }
  VertexSet just_v(rel.vertex_count());
  just_v.insert(v);
  GrowthProfile profile;
  profile.vertex = v;
  profile.degree = rel.row(v).count();
  profile.sizes.reserve(iterates.size());
  profile.eligible.reserve(iterates.size());
  for (const VertexSet& gamma_j : iterates) {
    profile.sizes.push_back(gamma_j.count());
    profile.eligible.push_back((gamma_j & reverse_image) == just_v);
  }
  return profile;
}

namespace detail {

inline void require_point_symmetric(const Relation& rel, int threshold,
                                    const char* op) {
  if (!is_point_symmetric(rel, threshold)) {
    throw contract_error(std::string(op) +
                         ": hypothesis failed: relation is not "
                         "point-symmetric");
  }
}

// Applies the per-step growth inequality of one profile.
inline void theorem_step_violations(const GrowthProfile& p,
                                    std::vector<Violation>& out) {
  for (std::size_t j = 1; j < p.sizes.size(); ++j) {
    if (!p.eligible[j]) continue;
    const std::int64_t required = p.sizes[j - 1] + p.degree - 1;
    if (p.sizes[j] < required) {
      out.push_back(Violation{p.vertex, static_cast<int>(j), p.sizes[j],
                              required});
    }
  }
}

// Applies the cumulative growth bound of one profile.
inline void cumulative_violations(const GrowthProfile& p,
                                  std::vector<Violation>& out) {
  for (std::size_t j = 1; j < p.sizes.size(); ++j) {
    if (!p.eligible[j]) continue;
    const std::int64_t required =
        1 + static_cast<std::int64_t>(p.degree - 1) * static_cast<std::int64_t>(j);
    if (p.sizes[j] < required) {
      out.push_back(Violation{p.vertex, static_cast<int>(j), p.sizes[j],
                              required});
    }
  }
}

}  // namespace detail

/// Checks, at one vertex, the per-step inequality
///   |Gamma^j(v)| >= |Gamma^{j-1}(v)| + r - 1
/// for every eligible j >= 1. Requires a point-symmetric reflexive
/// relation; the hypothesis is verified, not assumed.
inline CheckResult check_theorem_main(const Relation& rel, int v,
                                      int jmax = -1,
                                      int threshold = kDefaultSymmetryThreshold) {
  detail::require_point_symmetric(rel, threshold, "check_theorem_main");
  CheckResult result;
  result.instance = fingerprint(rel);
  detail::theorem_step_violations(growth_profile(rel, v, jmax), result.violations);
  result.holds = result.violations.empty();
  return result;
}

/// check_theorem_main over every vertex, verifying point-symmetry once.
inline CheckResult check_theorem_main_all(
    const Relation& rel, int jmax = -1,
    int threshold = kDefaultSymmetryThreshold) {
  detail::require_point_symmetric(rel, threshold, "check_theorem_main");
  CheckResult result;
  result.instance = fingerprint(rel);
  for (int v = 0; v < rel.vertex_count(); ++v) {
    detail::theorem_step_violations(growth_profile(rel, v, jmax),
                                    result.violations);
  }
  result.holds = result.violations.empty();
  return result;
}

/// Checks the cumulative bound |Gamma^j(v)| >= 1 + (r-1) j at every
/// eligible j; the iterated form of the per-step inequality.
inline CheckResult check_corollary_growth(
    const Relation& rel, int v, int jmax = -1,
    int threshold = kDefaultSymmetryThreshold) {
  detail::require_point_symmetric(rel, threshold, "check_corollary_growth");
  CheckResult result;
  result.instance = fingerprint(rel);
  detail::cumulative_violations(growth_profile(rel, v, jmax), result.violations);
  result.holds = result.violations.empty();
  return result;
}

inline CheckResult check_corollary_growth_all(
    const Relation& rel, int jmax = -1,
    int threshold = kDefaultSymmetryThreshold) {
  detail::require_point_symmetric(rel, threshold, "check_corollary_growth");
  CheckResult result;
  result.instance = fingerprint(rel);
  for (int v = 0; v < rel.vertex_count(); ++v) {
    detail::cumulative_violations(growth_profile(rel, v, jmax),
                                  result.violations);
  }
  result.holds = result.violations.empty();
  return result;
}

struct GirthBoundResult {
  CheckResult check;
  int girth_value = 0;
  int degree = 0;  // out-degree r of the loopless input
};

/// Checks |V| >= 1 + r (g - 1) for a loopless point-symmetric digraph
/// of degree r >= 1, following the proof recipe: close the diagonal,
/// verify Phi^{g-2}(v) intersect Phi^-(v) = {v}, and apply the
/// cumulative growth bound before asserting the final inequality.
inline GirthBoundResult check_girth_bound(
    const Relation& rel, int threshold = kDefaultSymmetryThreshold) {
  if (!rel.is_loopless()) {
    throw contract_error("check_girth_bound: hypothesis failed: relation must "
                         "be loopless");
  }
  detail::require_point_symmetric(rel, threshold, "check_girth_bound");
  const int n = rel.vertex_count();
  if (n < 1) throw domain_error("check_girth_bound: relation must be nonempty");
  const int r = rel.row(0).count();  // regular by point-symmetry
  if (r < 1) {
    throw contract_error(
        "check_girth_bound: hypothesis failed: degree must be at least 1");
  }
  const std::optional<int> g = girth(rel);
  if (!g) {
    // r >= 1 forces a cycle in a finite digraph; unreachable.
    throw contract_error("check_girth_bound: input is acyclic");
  }
  GirthBoundResult out;
  out.girth_value = *g;
  out.degree = r;
  out.check.instance = fingerprint(rel);

  const Relation closure = reflexive_closure(rel);
  const int v = 0;  // any vertex works, by point-symmetry
  const GrowthProfile profile = growth_profile(closure, v, std::max(*g - 2, 0));
  const int j = *g - 2;
  if (j >= 1) {
    if (!profile.eligible[static_cast<std::size_t>(j)]) {
      // Would contradict g being the girth; recorded as a violation.
      out.check.violations.push_back(Violation{v, j, 0, 1});
    }
    const std::int64_t required =
        1 + static_cast<std::int64_t>(profile.degree - 1) * j;
    if (profile.sizes[static_cast<std::size_t>(j)] < required) {
      out.check.violations.push_back(
          Violation{v, j, profile.sizes[static_cast<std::size_t>(j)], required});
    }
  }
  const std::int64_t bound = 1 + static_cast<std::int64_t>(r) * (*g - 1);
  if (n < bound) {
    out.check.violations.push_back(Violation{v, *g - 1, n, bound});
  }
  out.check.holds = out.check.violations.empty();
  return out;
}

/// Result of the general conjecture check at one exponent: per-vertex
/// disjunct diagnostics (bit 0: growth bound, bit 1: intersection
/// condition) plus the overall existential verdict.
struct ConjectureResult {
  CheckResult check;
  std::vector<std::uint8_t> vertex_disjuncts;
};

/// The general conjecture at exponent j for a finite reflexive relation
/// (no symmetry assumed): some x satisfies
///   |Gamma^j(x)| >= 1 + j (|Gamma(x)| - 1)   or
///   Gamma^{-1}(x) intersect Gamma^j(x) != {x}.
/// When the check fails the instance is a counterexample and the
/// violations list one row per vertex.
inline ConjectureResult check_conjecture_seymour(const Relation& rel, int j) {
  if (!rel.is_reflexive()) {
    throw contract_error(
        "check_conjecture_seymour: relation must be reflexive");
  }
  if (j < 0) {
    throw domain_error("check_conjecture_seymour: j must be nonnegative");
  }
  const int n = rel.vertex_count();
  const Relation rev = reverse(rel);
  ConjectureResult result;
  result.check.instance = fingerprint(rel);
  result.vertex_disjuncts.assign(static_cast<std::size_t>(n), 0);
  VertexSet just_x(n);
  for (int x = 0; x < n; ++x) {
    const std::vector<VertexSet> iterates = iterated_image(rel, x, j);
    const VertexSet& gamma_j = iterates.back();
    const int r = rel.row(x).count();
    std::uint8_t mask = 0;
    const std::int64_t required =
        1 + static_cast<std::int64_t>(j) * static_cast<std::int64_t>(r - 1);
    if (gamma_j.count() >= required) mask |= 1;
    just_x = VertexSet(n);
    just_x.insert(x);
    if ((rev.row(x) & gamma_j) != just_x) mask |= 2;
    result.vertex_disjuncts[static_cast<std::size_t>(x)] = mask;
    if (mask == 0) {
      result.check.violations.push_back(
          Violation{x, j, gamma_j.count(), required});
    }
  }
  result.check.holds =
      std::any_of(result.vertex_disjuncts.begin(), result.vertex_disjuncts.end(),
                  [](std::uint8_t m) { return m != 0; });
  if (result.check.holds) result.check.violations.clear();
  return result;
}

enum class ScanMode { kExhaustive, kRandom };

struct ScanOptions {
  int n = 4;
  ScanMode mode = ScanMode::kExhaustive;
  std::int64_t samples = 0;     // random mode only
  std::uint64_t seed = 0;       // random mode only
  std::vector<int> j_policy;    // empty: all 1 <= j <= n
  int threads = 0;              // 0: ATOMLAB_THREADS or hardware
  std::string dump_dir = ".";   // where counterexamples are written; "" skips
};

struct ScanReport {
  std::string mode;
  int n = 0;
  std::vector<int> j_policy;
  std::int64_t checked = 0;
  std::vector<std::string> counterexamples;  // canonical edge-list strings
  std::uint64_t seed = 0;
  std::int64_t elapsed_ms = 0;
  std::string version;

  /// Content identity: everything except the timing.
  bool same_content(const ScanReport& o) const {
    return mode == o.mode && n == o.n && j_policy == o.j_policy &&
           checked == o.checked && counterexamples == o.counterexamples &&
           seed == o.seed && version == o.version;
  }
};

inline constexpr int kMaxExhaustiveScanSize = 5;
inline constexpr int kMaxRandomScanSize = 10;

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Per-instance stream: worker-count independent, so reports are
// bit-identical however the index range is split.
inline std::uint64_t instance_stream(std::uint64_t seed, std::int64_t index) {
  std::uint64_t state = seed;
  std::uint64_t salt = static_cast<std::uint64_t>(index) + 1;
  state ^= splitmix64(salt);
  return state;
}

inline std::vector<std::pair<int, int>> off_diagonal_cells(int n) {
  std::vector<std::pair<int, int>> cells;
  cells.reserve(static_cast<std::size_t>(n) * (n - 1));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v) cells.emplace_back(u, v);
    }
  }
  return cells;
}

// Reflexive relation from an off-diagonal bit pattern (exhaustive mode).
inline Relation relation_from_pattern(
    int n, std::uint64_t pattern, const std::vector<std::pair<int, int>>& cells) {
  Relation rel = Relation::identity(n);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if ((pattern >> i) & 1) rel.add_edge(cells[i].first, cells[i].second);
  }
  return rel;
}

// Random reflexive relation: the arc probability is itself drawn per
// instance from {0.1, ..., 0.9} so the scan covers all densities.
inline Relation random_relation(int n, std::uint64_t seed, std::int64_t index,
                                const std::vector<std::pair<int, int>>& cells) {
  std::uint64_t state = instance_stream(seed, index);
  const int level = static_cast<int>(splitmix64(state) % 9);  // p = (level+1)/10
  Relation rel = Relation::identity(n);
  for (const auto& [u, v] : cells) {
    if (static_cast<int>(splitmix64(state) % 10) <= level) rel.add_edge(u, v);
  }
  return rel;
}

// True iff the conjecture holds at every j in the policy. Shares the
// iterated images across the j values.
inline bool conjecture_holds_all(const Relation& rel, const Relation& rev,
                                 const std::vector<int>& js, int jmax) {
  const int n = rel.vertex_count();
  std::vector<bool> satisfied(js.size(), false);
  VertexSet just_x(n);
  for (int x = 0; x < n; ++x) {
    const std::vector<VertexSet> iterates = iterated_image(rel, x, jmax);
    const int r = rel.row(x).count();
    just_x = VertexSet(n);
    just_x.insert(x);
    bool all_done = true;
    for (std::size_t i = 0; i < js.size(); ++i) {
      if (satisfied[i]) continue;
      const int j = js[i];
      const VertexSet& gamma_j = iterates[static_cast<std::size_t>(j)];
      const std::int64_t required =
          1 + static_cast<std::int64_t>(j) * static_cast<std::int64_t>(r - 1);
      if (gamma_j.count() >= required || (rev.row(x) & gamma_j) != just_x) {
        satisfied[i] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) return true;
  }
  return std::all_of(satisfied.begin(), satisfied.end(),
                     [](bool b) { return b; });
}

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("ATOMLAB_THREADS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::clamp(hw, 1u, 16u));
}

}  // namespace detail

/// Scans reflexive relations on n labeled vertices for counterexamples
/// to the general conjecture. Exhaustive mode enumerates every
/// off-diagonal bit pattern exactly once; random mode draws seeded
/// instances. Any counterexample is written to dump_dir as an edge-list
/// file the moment it is found, then collected into the report. The
/// report content is reproducible: same (n, mode, seed) gives identical
/// results regardless of the worker count.
inline ScanReport scan(const ScanOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const int n = options.n;
  if (n < 1) throw domain_error("scan: n must be positive");
  std::int64_t total = 0;
  if (options.mode == ScanMode::kExhaustive) {
    if (n > kMaxExhaustiveScanSize) {
      throw size_error("scan: exhaustive mode supports n <= " +
                       std::to_string(kMaxExhaustiveScanSize) + " (2^(n(n-1)) " +
                       "relations); use random mode");
    }
    total = std::int64_t{1} << (n * (n - 1));
  } else {
    if (n > kMaxRandomScanSize) {
      throw size_error("scan: random mode supports n <= " +
                       std::to_string(kMaxRandomScanSize));
    }
    if (options.samples < 1) {
      throw domain_error("scan: random mode needs samples >= 1");
    }
    total = options.samples;
  }
  std::vector<int> js = options.j_policy;
  if (js.empty()) {
    for (int j = 1; j <= n; ++j) js.push_back(j);
  }
  int jmax = 0;
  for (int j : js) {
    if (j < 0) throw domain_error("scan: j policy entries must be nonnegative");
    jmax = std::max(jmax, j);
  }
  const std::vector<std::pair<int, int>> cells = detail::off_diagonal_cells(n);

  const int threads =
      static_cast<int>(std::min<std::int64_t>(detail::resolve_threads(options.threads),
                                              std::max<std::int64_t>(total, 1)));
  std::vector<std::vector<std::string>> found(
      static_cast<std::size_t>(threads));
  auto worker = [&](int id, std::int64_t lo, std::int64_t hi) {
    for (std::int64_t index = lo; index < hi; ++index) {
      const Relation rel =
          options.mode == ScanMode::kExhaustive
              ? detail::relation_from_pattern(
                    n, static_cast<std::uint64_t>(index), cells)
              : detail::random_relation(n, options.seed, index, cells);
      const Relation rev = reverse(rel);
      if (!detail::conjecture_holds_all(rel, rev, js, jmax)) {
        const std::string encoded = write_edge_list(rel);
        if (!options.dump_dir.empty()) {
          // Preserve the instance before anything else can go wrong.
          const std::string path = options.dump_dir + "/counterexample_n" +
                                   std::to_string(n) + "_" +
                                   std::to_string(index) + ".rel";
          write_edge_list_file(rel, path);
        }
        found[static_cast<std::size_t>(id)].push_back(encoded);
      }
    }
  };

  if (threads <= 1) {
    worker(0, 0, total);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    const std::int64_t chunk = (total + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const std::int64_t lo = std::min<std::int64_t>(t * chunk, total);
      const std::int64_t hi = std::min(total, lo + chunk);
      pool.emplace_back(worker, t, lo, hi);
    }
    for (std::thread& th : pool) th.join();
  }

  ScanReport report;
  report.mode =
      options.mode == ScanMode::kExhaustive ? "exhaustive" : "random";
  report.n = n;
  report.j_policy = js;
  report.checked = total;
  for (const auto& part : found) {
    report.counterexamples.insert(report.counterexamples.end(), part.begin(),
                                  part.end());
  }
  std::sort(report.counterexamples.begin(), report.counterexamples.end());
  report.seed = options.mode == ScanMode::kRandom ? options.seed : 0;
  report.version = kVersion;
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace atomlab
