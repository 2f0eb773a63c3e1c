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

#include <stdexcept>
#include <string>

namespace atomlab {

/// Base class of every error thrown by this library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: out-of-range vertices, universe mismatches,
/// empty composition lists.
class domain_error : public error {
 public:
  using error::error;
};

/// A mathematical hypothesis required by an operation does not hold
/// (e.g. a non-reflexive relation passed where reflexivity is assumed).
/// The message names the violated hypothesis.
class contract_error : public error {
 public:
  using error::error;
};

/// The input exceeds a configured size threshold for the requested
/// algorithm.
class size_error : public error {
 public:
  using error::error;
};

/// A group multiplication table failed validation (not a Latin square,
/// no identity, missing inverses, or not associative).
class validation_error : public error {
 public:
  using error::error;
};

/// Text input could not be parsed. Carries the 1-based line number.
class parse_error : public error {
 public:
  parse_error(int line, const std::string& what)
      : error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace atomlab
