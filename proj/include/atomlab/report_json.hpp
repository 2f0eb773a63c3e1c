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

#include <json.hpp>

#include "atomlab/connectivity.hpp"
#include "atomlab/verifier.hpp"

namespace atomlab {

// JSON encodings of the report types. Kept out of the core headers so
// the library proper has no serialization dependency.

inline void to_json(nlohmann::json& j, const Violation& v) {
  j = nlohmann::json{{"vertex", v.vertex},
                     {"j", v.j},
                     {"observed", v.observed},
                     {"required", v.required}};
}

inline void to_json(nlohmann::json& j, const Fingerprint& f) {
  j = nlohmann::json{{"n", f.n}, {"edges", f.edges}, {"hash", f.hash}};
}

inline void to_json(nlohmann::json& j, const CheckResult& r) {
  j = nlohmann::json{{"holds", r.holds},
                     {"violations", r.violations},
                     {"instance", r.instance}};
}

inline void to_json(nlohmann::json& j, const ConnectivityReport& r) {
  j = nlohmann::json{{"kappa", r.kappa}, {"complete", r.complete}};
  if (r.witness_fragment) j["witness"] = r.witness_fragment->members();
  if (r.atom_size) j["atom_size"] = *r.atom_size;
}

/// Published scan-report schema:
///   {mode, n, j_policy, checked, counterexamples, seed, elapsed_ms,
///    version}
/// The timing field is the only run-dependent part; drop it (canonical
/// form) to compare reports across runs and worker counts.
inline nlohmann::json scan_report_json(const ScanReport& r,
                                       bool include_elapsed = true) {
  nlohmann::json j{{"mode", r.mode},
                   {"n", r.n},
                   {"j_policy", r.j_policy},
                   {"checked", r.checked},
                   {"counterexamples", r.counterexamples},
                   {"seed", r.seed},
                   {"version", r.version}};
  if (include_elapsed) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

inline void to_json(nlohmann::json& j, const ScanReport& r) {
  j = scan_report_json(r, true);
}

}  // namespace atomlab
