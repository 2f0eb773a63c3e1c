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

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "atomlab/errors.hpp"
#include "atomlab/relation.hpp"

namespace atomlab {

// Edge-list text format:
//   first data line:  n m
//   then m lines:     u v        (0-based ASCII decimals)
// '#' starts a comment that runs to the end of the line. Blank lines
// are ignored. Loops are allowed; duplicate edges collapse (set
// semantics).

namespace detail {

inline bool parse_two_ints(const std::string& line, long& a, long& b) {
  std::istringstream in(line);
  std::string extra;
  if (!(in >> a >> b)) return false;
  if (in >> extra) return false;
  return true;
}

}  // namespace detail

/// Parses the edge-list format. Throws parse_error with a 1-based line
/// number on malformed input.
inline Relation parse_edge_list(std::istream& in) {
  std::string raw;
  int line_no = 0;
  int header_line = 0;
  long n = -1, m = -1;
  Relation rel;
  long seen = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    if (std::size_t hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
    if (blank) continue;
    long a = 0, b = 0;
    if (!detail::parse_two_ints(line, a, b)) {
      throw parse_error(line_no, "expected two integers, got '" + raw + "'");
    }
    if (n < 0) {
      if (a < 0 || b < 0) {
        throw parse_error(line_no, "header 'n m' must be nonnegative");
      }
      n = a;
      m = b;
      header_line = line_no;
      rel = Relation(static_cast<int>(n));
      continue;
    }
    if (seen == m) {
      throw parse_error(line_no, "more than the declared " +
                                     std::to_string(m) + " edges");
    }
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw parse_error(line_no, "edge (" + std::to_string(a) + ", " +
                                     std::to_string(b) +
                                     ") outside vertex range [0, " +
                                     std::to_string(n) + ")");
    }
    rel.add_edge(static_cast<int>(a), static_cast<int>(b));
    ++seen;
  }
  if (n < 0) throw parse_error(line_no + 1, "missing 'n m' header");
  if (seen < m) {
    throw parse_error(line_no + 1, "declared " + std::to_string(m) +
                                       " edges but found " +
                                       std::to_string(seen) +
                                       " (header at line " +
                                       std::to_string(header_line) + ")");
  }
  return rel;
}

inline Relation parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

inline Relation read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open '" + path + "' for reading");
  return parse_edge_list(in);
}

/// Canonical edge-list encoding: header, then edges sorted by (u, v).
inline std::string write_edge_list(const Relation& rel) {
  std::ostringstream out;
  out << rel.vertex_count() << ' ' << rel.edge_count() << '\n';
  for (auto [u, v] : rel.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

inline void write_edge_list_file(const Relation& rel, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw error("cannot open '" + path + "' for writing");
  out << write_edge_list(rel);
}

/// Graphviz export. Loops are drawn; the layout is left to dot.
inline std::string write_dot(const Relation& rel) {
  std::ostringstream out;
  out << "digraph relation {\n";
  for (int v = 0; v < rel.vertex_count(); ++v) {
    out << "  " << v << ";\n";
  }
  for (auto [u, v] : rel.edges()) {
    out << "  " << u << " -> " << v << ";\n";
  }
  out << "}\n";
  return out.str();
}

inline void write_dot_file(const Relation& rel, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw error("cannot open '" + path + "' for writing");
  out << write_dot(rel);
}

}  // namespace atomlab
