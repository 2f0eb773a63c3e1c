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
#include <cctype>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <string>
#include <unordered_map>
#include <vector>

#include "atomlab/errors.hpp"
#include "atomlab/relation.hpp"

namespace atomlab {

/// A finite group given by its multiplication table over element
/// indices 0..n-1. Construction validates the table: Latin square,
/// two-sided identity, inverses, associativity (full check up to order
/// 128, sampled above that).
class FiniteGroup {
 public:
  static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                std::vector<std::string> names = {}) {
    return FiniteGroup(std::move(table), std::move(names));
  }

  /// Z_m under addition; element names are the residues.
  static FiniteGroup cyclic(int m) {
    if (m < 1) throw domain_error("cyclic: order must be positive");
    std::vector<std::vector<int>> table(
        static_cast<std::size_t>(m),
        std::vector<int>(static_cast<std::size_t>(m)));
    std::vector<std::string> names(static_cast<std::size_t>(m));
    for (int a = 0; a < m; ++a) {
      names[static_cast<std::size_t>(a)] = std::to_string(a);
      for (int b = 0; b < m; ++b) {
        table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
            (a + b) % m;
      }
    }
    return FiniteGroup(std::move(table), std::move(names));
  }

  /// Dihedral group of order 2m. Indices 0..m-1 are the rotations r^k,
  /// indices m..2m-1 the reflections f r^k; names "e", "r", "r2", ...,
  /// "f", "fr", "fr2", ...
  static FiniteGroup dihedral(int m) {
    if (m < 1) throw domain_error("dihedral: parameter must be positive");
    const int n = 2 * m;
    auto flip = [m](int e) { return e >= m; };
    auto rot = [m](int e) { return e % m; };
    std::vector<std::vector<int>> table(
        static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        // (f^e1 r^k1)(f^e2 r^k2) = f^(e1 xor e2) r^(k2 + k1*(-1)^e2)
        const bool e = flip(a) != flip(b);
        const int k =
            ((rot(b) + (flip(b) ? m - rot(a) : rot(a))) % m + m) % m;
        table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
            (e ? m : 0) + k;
      }
    }
    std::vector<std::string> names(static_cast<std::size_t>(n));
    for (int k = 0; k < m; ++k) {
      names[static_cast<std::size_t>(k)] =
          k == 0 ? "e" : (k == 1 ? "r" : "r" + std::to_string(k));
      names[static_cast<std::size_t>(m + k)] =
          k == 0 ? "f" : (k == 1 ? "fr" : "fr" + std::to_string(k));
    }
    return FiniteGroup(std::move(table), std::move(names));
  }

  /// The quaternion group {1, -1, i, -i, j, -j, k, -k}.
  static FiniteGroup quaternion8() {
    // Basis products over (1, i, j, k): result basis and sign.
    static constexpr int basis[4][4] = {
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static constexpr int sign[4][4] = {
        {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    auto index = [](int b, int s) { return 2 * b + s; };
    std::vector<std::vector<int>> table(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a) {
      for (int b = 0; b < 8; ++b) {
        const int ba = a / 2, sa = a % 2;
        const int bb = b / 2, sb = b % 2;
        table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
            index(basis[ba][bb], sa ^ sb ^ sign[ba][bb]);
      }
    }
    std::vector<std::string> names = {"1", "-1", "i", "-i",
                                      "j", "-j", "k", "-k"};
    return FiniteGroup(std::move(table), std::move(names));
  }

  /// Symmetric group S_m, m <= 5. Elements are the permutations of
  /// {0..m-1} in lexicographic order; the product applies the left
  /// factor first. Names use cycle notation on symbols 1..m ("e" for
  /// the identity).
  static FiniteGroup symmetric(int m) {
    if (m < 1 || m > 5) {
      throw domain_error("symmetric: parameter must be in [1, 5]");
    }
    std::vector<std::vector<int>> perms;
    std::vector<int> p(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) p[static_cast<std::size_t>(i)] = i;
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const int n = static_cast<int>(perms.size());
    std::unordered_map<std::string, int> lookup;
    auto key = [](const std::vector<int>& q) {
      std::string k;
      for (int x : q) k += static_cast<char>('0' + x);
      return k;
    };
    for (int i = 0; i < n; ++i) {
      lookup[key(perms[static_cast<std::size_t>(i)])] = i;
    }
    std::vector<std::vector<int>> table(
        static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        std::vector<int> prod(static_cast<std::size_t>(m));
        for (int x = 0; x < m; ++x) {
          // apply a first, then b
          prod[static_cast<std::size_t>(x)] =
              perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(
                  perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)])];
        }
        table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
            lookup.at(key(prod));
      }
    }
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (const auto& q : perms) names.push_back(cycle_notation(q));
    return FiniteGroup(std::move(table), std::move(names));
  }

  static FiniteGroup direct_product(const FiniteGroup& a,
                                    const FiniteGroup& b) {
    const int na = a.order(), nb = b.order();
    const int n = na * nb;
    std::vector<std::vector<int>> table(
        static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    std::vector<std::string> names(static_cast<std::size_t>(n));
    for (int ax = 0; ax < na; ++ax) {
      for (int bx = 0; bx < nb; ++bx) {
        const int x = ax * nb + bx;
        names[static_cast<std::size_t>(x)] =
            "(" + a.name(ax) + "," + b.name(bx) + ")";
        for (int ay = 0; ay < na; ++ay) {
          for (int by = 0; by < nb; ++by) {
            const int y = ay * nb + by;
            table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
                a.multiply(ax, ay) * nb + b.multiply(bx, by);
          }
        }
      }
    }
    return FiniteGroup(std::move(table), std::move(names));
  }

  int order() const { return n_; }

  int multiply(int a, int b) const {
    check_element(a);
    check_element(b);
    return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }

  int identity() const { return identity_; }

  int inverse(int a) const {
    check_element(a);
    return inverse_[static_cast<std::size_t>(a)];
  }

  const std::string& name(int a) const {
    check_element(a);
    return names_[static_cast<std::size_t>(a)];
  }

  /// Resolves an element token: an exact element name, cycle notation
  /// like "(123)" for symmetric groups, or a decimal index.
  std::optional<int> element_index(const std::string& token) const {
    for (int i = 0; i < n_; ++i) {
      if (names_[static_cast<std::size_t>(i)] == token) return i;
    }
    if (!token.empty() && token.front() == '(') {
      if (auto perm = parse_cycles(token)) {
        const std::string name = cycle_notation(*perm);
        for (int i = 0; i < n_; ++i) {
          if (names_[static_cast<std::size_t>(i)] == name) return i;
        }
      }
      return std::nullopt;
    }
    if (!token.empty() &&
        std::all_of(token.begin(), token.end(),
                    [](unsigned char c) { return std::isdigit(c); })) {
      const long idx = std::stol(token);
      if (idx >= 0 && idx < n_) return static_cast<int>(idx);
    }
    return std::nullopt;
  }

 private:
  FiniteGroup(std::vector<std::vector<int>> table,
              std::vector<std::string> names)
      : table_(std::move(table)), names_(std::move(names)) {
    n_ = static_cast<int>(table_.size());
    if (n_ < 1) throw validation_error("group table must be nonempty");
    validate_latin();
    find_identity();
    find_inverses();
    validate_associativity();
    if (names_.empty()) {
      names_.resize(static_cast<std::size_t>(n_));
      for (int i = 0; i < n_; ++i) {
        names_[static_cast<std::size_t>(i)] = std::to_string(i);
      }
    }
    if (static_cast<int>(names_.size()) != n_) {
      throw validation_error("group name list does not match the order");
    }
  }

  void check_element(int a) const {
    if (a < 0 || a >= n_) {
      throw domain_error("group element " + std::to_string(a) +
                         " outside [0, " + std::to_string(n_) + ")");
    }
  }

  void validate_latin() const {
    std::vector<bool> seen(static_cast<std::size_t>(n_));
    for (int a = 0; a < n_; ++a) {
      if (static_cast<int>(table_[static_cast<std::size_t>(a)].size()) != n_) {
        throw validation_error("group table is not square");
      }
      std::fill(seen.begin(), seen.end(), false);
      for (int b = 0; b < n_; ++b) {
        const int x =
            table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        if (x < 0 || x >= n_ || seen[static_cast<std::size_t>(x)]) {
          throw validation_error("group table row " + std::to_string(a) +
                                 " is not a permutation (not a Latin square)");
        }
        seen[static_cast<std::size_t>(x)] = true;
      }
    }
    for (int b = 0; b < n_; ++b) {
      std::fill(seen.begin(), seen.end(), false);
      for (int a = 0; a < n_; ++a) {
        const int x =
            table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        if (seen[static_cast<std::size_t>(x)]) {
          throw validation_error("group table column " + std::to_string(b) +
                                 " is not a permutation (not a Latin square)");
        }
        seen[static_cast<std::size_t>(x)] = true;
      }
    }
  }

  void find_identity() {
    identity_ = -1;
    for (int e = 0; e < n_; ++e) {
      bool ok = true;
      for (int x = 0; x < n_ && ok; ++x) {
        ok = table_[static_cast<std::size_t>(e)][static_cast<std::size_t>(x)] ==
                 x &&
             table_[static_cast<std::size_t>(x)][static_cast<std::size_t>(e)] ==
                 x;
      }
      if (ok) {
        identity_ = e;
        return;
      }
    }
    throw validation_error("group table has no two-sided identity");
  }

  void find_inverses() {
    inverse_.assign(static_cast<std::size_t>(n_), -1);
    for (int a = 0; a < n_; ++a) {
      for (int b = 0; b < n_; ++b) {
        if (table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] ==
                identity_ &&
            table_[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] ==
                identity_) {
          inverse_[static_cast<std::size_t>(a)] = b;
          break;
        }
      }
      if (inverse_[static_cast<std::size_t>(a)] < 0) {
        throw validation_error("group element " + std::to_string(a) +
                               " has no two-sided inverse");
      }
    }
  }

  void validate_associativity() const {
    auto check = [this](int a, int b, int c) {
      const int ab =
          table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      const int bc =
          table_[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)];
      if (table_[static_cast<std::size_t>(ab)][static_cast<std::size_t>(c)] !=
          table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(bc)]) {
        throw validation_error(
            "group table is not associative: (a*b)*c != a*(b*c) for a=" +
            std::to_string(a) + " b=" + std::to_string(b) +
            " c=" + std::to_string(c));
      }
    };
    if (n_ <= 128) {
      for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b) {
          for (int c = 0; c < n_; ++c) check(a, b, c);
        }
      }
    } else {
      std::uint64_t state = 0x853c49e6748fea9bull;
      auto next = [&state] {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 16;
      };
      for (int t = 0; t < 100000; ++t) {
        check(static_cast<int>(next() % static_cast<std::uint64_t>(n_)),
              static_cast<int>(next() % static_cast<std::uint64_t>(n_)),
              static_cast<int>(next() % static_cast<std::uint64_t>(n_)));
      }
    }
  }

  /// Cycle notation over symbols 1..m, fixed points omitted, "e" for
  /// the identity.
  static std::string cycle_notation(const std::vector<int>& perm) {
    const int m = static_cast<int>(perm.size());
    std::string out;
    std::vector<bool> done(static_cast<std::size_t>(m), false);
    for (int start = 0; start < m; ++start) {
      if (done[static_cast<std::size_t>(start)] ||
          perm[static_cast<std::size_t>(start)] == start) {
        done[static_cast<std::size_t>(start)] = true;
        continue;
      }
      out += '(';
      int x = start;
      while (!done[static_cast<std::size_t>(x)]) {
        done[static_cast<std::size_t>(x)] = true;
        out += std::to_string(x + 1);
        x = perm[static_cast<std::size_t>(x)];
      }
      out += ')';
    }
    return out.empty() ? "e" : out;
  }

  /// Parses "(12)(345)"-style tokens into a permutation of {0..4}; the
  /// symbol range is inferred from the largest symbol used.
  static std::optional<std::vector<int>> parse_cycles(
      const std::string& token) {
    std::vector<std::vector<int>> cycles;
    std::vector<int> current;
    bool open = false;
    int max_symbol = 0;
    for (char c : token) {
      if (c == '(') {
        if (open) return std::nullopt;
        open = true;
        current.clear();
      } else if (c == ')') {
        if (!open) return std::nullopt;
        open = false;
        if (!current.empty()) cycles.push_back(current);
      } else if (c >= '1' && c <= '9') {
        if (!open) return std::nullopt;
        current.push_back(c - '1');
        max_symbol = std::max(max_symbol, c - '0');
      } else {
        return std::nullopt;
      }
    }
    if (open) return std::nullopt;
    const int m = std::max(max_symbol, 1);
    std::vector<int> perm(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::vector<bool> moved(static_cast<std::size_t>(m), false);
    for (const auto& cycle : cycles) {
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        const int from = cycle[i];
        const int to = cycle[(i + 1) % cycle.size()];
        if (moved[static_cast<std::size_t>(from)]) return std::nullopt;
        moved[static_cast<std::size_t>(from)] = true;
        perm[static_cast<std::size_t>(from)] = to;
      }
    }
    return perm;
  }

  int n_ = 0;
  int identity_ = 0;
  std::vector<std::vector<int>> table_;
  std::vector<std::string> names_;
  std::vector<int> inverse_;
};

/// A generating set S with 1 not in S; stored sorted.
struct GeneratorSet {
  std::vector<int> members;
};

inline GeneratorSet make_generator_set(const FiniteGroup& group,
                                       std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  if (elements.empty()) {
    throw contract_error("generator set must be nonempty");
  }
  for (int s : elements) {
    if (s < 0 || s >= group.order()) {
      throw domain_error("generator " + std::to_string(s) +
                         " outside the group of order " +
                         std::to_string(group.order()));
    }
    if (s == group.identity()) {
      throw contract_error(
          "generator set must not contain the identity (S subset of G \\ {1})");
    }
  }
  return GeneratorSet{std::move(elements)};
}

/// Cayley graph on G with arcs g -> g*s for s in S (right translation).
/// Loops are added iff reflexive is set. Point-symmetric by
/// construction: left translations are automorphisms.
inline Relation cayley_graph(const FiniteGroup& group, const GeneratorSet& s,
                             bool reflexive) {
  if (s.members.empty()) throw contract_error("generator set must be nonempty");
  for (int x : s.members) {
    if (x < 0 || x >= group.order()) {
      throw domain_error("generator outside the group");
    }
    if (x == group.identity()) {
      throw contract_error(
          "generator set must not contain the identity (S subset of G \\ {1})");
    }
  }
  Relation rel(group.order());
  for (int g = 0; g < group.order(); ++g) {
    if (reflexive) rel.add_edge(g, g);
    for (int x : s.members) rel.add_edge(g, group.multiply(g, x));
  }
  return rel;
}

/// A zero-sum sequence: elements of S whose ordered product is 1.
struct ZeroSumWitness {
  std::vector<int> sequence;
  int k = 0;
};

/// Shortest sequence s_1, ..., s_k in S with s_1 * ... * s_k = 1,
/// lexicographically least (by element index) among the shortest ones.
/// BFS over the loopless Cayley graph; a shortest zero-sum sequence
/// always exists since powers of any generator cycle back to 1.
inline ZeroSumWitness zero_sum(const FiniteGroup& group,
                               const GeneratorSet& s) {
  if (s.members.empty()) throw contract_error("generator set must be nonempty");
  const int n = group.order();
  const int identity = group.identity();
  // dist[g] = fewest right-multiplications by members of S taking g to 1.
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  dist[static_cast<std::size_t>(identity)] = 0;
  std::queue<int> queue;
  queue.push(identity);
  while (!queue.empty()) {
    const int h = queue.front();
    queue.pop();
    for (int x : s.members) {
      const int g = group.multiply(h, group.inverse(x));  // g * x == h
      if (dist[static_cast<std::size_t>(g)] < 0) {
        dist[static_cast<std::size_t>(g)] = dist[static_cast<std::size_t>(h)] + 1;
        queue.push(g);
      }
    }
  }
  int k = std::numeric_limits<int>::max();
  for (int x : s.members) {
    const int d = dist[static_cast<std::size_t>(x)];
    if (d >= 0) k = std::min(k, 1 + d);
  }
  // Greedy lexicographic reconstruction along shortest-path edges.
  ZeroSumWitness out;
  out.k = k;
  out.sequence.reserve(static_cast<std::size_t>(k));
  int v = identity;
  for (int remaining = k; remaining > 0; --remaining) {
    for (int x : s.members) {
      const int next = group.multiply(v, x);
      if (dist[static_cast<std::size_t>(next)] == remaining - 1) {
        out.sequence.push_back(x);
        v = next;
        break;
      }
    }
  }
  if (v != identity || static_cast<int>(out.sequence.size()) != k) {
    throw error("zero_sum: internal reconstruction failure");
  }
  return out;
}

/// Parses the group descriptor mini-language: "Z6", "Z2xZ4", "D4",
/// "Q8", "S3", and x-products of those.
inline FiniteGroup parse_group_descriptor(const std::string& descriptor) {
  std::vector<std::string> factors;
  std::string current;
  for (char c : descriptor) {
    if (c == ' ' || c == '\t') continue;
    if (c == 'x' || c == 'X') {
      factors.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  factors.push_back(current);
  auto parse_factor = [](const std::string& f) -> FiniteGroup {
    if (f.size() < 2) {
      throw domain_error("bad group descriptor '" + f + "'");
    }
    const char kind = static_cast<char>(std::toupper(f[0]));
    const std::string digits = f.substr(1);
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(),
                     [](unsigned char c) { return std::isdigit(c); })) {
      throw domain_error("bad group descriptor '" + f + "'");
    }
    const int m = static_cast<int>(std::stol(digits));
    switch (kind) {
      case 'Z':
        return FiniteGroup::cyclic(m);
      case 'D':
        return FiniteGroup::dihedral(m);
      case 'S':
        return FiniteGroup::symmetric(m);
      case 'Q':
        if (m == 8) return FiniteGroup::quaternion8();
        throw domain_error("only Q8 is supported");
      default:
        throw domain_error("bad group descriptor '" + f + "'");
    }
  };
  FiniteGroup group = parse_factor(factors.front());
  for (std::size_t i = 1; i < factors.size(); ++i) {
    group = FiniteGroup::direct_product(group, parse_factor(factors[i]));
  }
  return group;
}

/// Splits a comma-separated generator list (commas inside parentheses
/// do not split, so product-group names like "(1,0)" work) and resolves
/// each token against the group.
inline GeneratorSet parse_generators(const FiniteGroup& group,
                                     const std::string& text) {
  std::vector<std::string> tokens;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      tokens.push_back(current);
      current.clear();
    } else if (c != ' ') {
      current += c;
    }
  }
  tokens.push_back(current);
  std::vector<int> elements;
  for (const std::string& token : tokens) {
    if (token.empty()) continue;
    const auto idx = group.element_index(token);
    if (!idx) {
      throw domain_error("unknown group element '" + token + "'");
    }
    elements.push_back(*idx);
  }
  return make_generator_set(group, std::move(elements));
}

}  // namespace atomlab
