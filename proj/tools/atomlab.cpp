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

// atomlab: relations, connectivity, atoms, Cayley graphs, and the
// growth-inequality checks, from the command line.
//
// Exit codes: 0 all checks hold, 1 usage/parse/contract error,
// 2 a counterexample or violation was found.

#include <CLI11.hpp>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "atomlab/atomlab.hpp"
#include "atomlab/report_json.hpp"

namespace {

using nlohmann::json;

struct InputOptions {
  std::string file;
  std::string group;
  std::string gens;
  bool reflexive_closure = false;
  std::string dot_path;
};

void add_input_options(CLI::App* cmd, InputOptions& in, bool with_file = true) {
  if (with_file) {
    cmd->add_option("file", in.file, "edge-list input file");
  }
  cmd->add_option("--group", in.group,
                  "group descriptor (Z6, Z2xZ4, D4, Q8, S3, ...)");
  cmd->add_option("--gens", in.gens,
                  "comma-separated generators (names or indices)");
  cmd->add_flag("--reflexive-closure", in.reflexive_closure,
                "add the diagonal to the input relation");
  cmd->add_option("--dot", in.dot_path, "write the relation as Graphviz DOT");
}

// Loads the relation named by the options. Group-descriptor inputs
// build a Cayley graph; cayley_reflexive picks loops on or off, which
// is the natural form for the requested computation.
atomlab::Relation load_relation(const InputOptions& in, bool cayley_reflexive) {
  atomlab::Relation rel;
  if (!in.group.empty()) {
    if (in.gens.empty()) {
      throw atomlab::domain_error("--group requires --gens");
    }
    const atomlab::FiniteGroup group = atomlab::parse_group_descriptor(in.group);
    const atomlab::GeneratorSet gens = atomlab::parse_generators(group, in.gens);
    rel = atomlab::cayley_graph(group, gens, cayley_reflexive);
  } else if (!in.file.empty()) {
    rel = atomlab::read_edge_list_file(in.file);
  } else {
    throw atomlab::domain_error("provide an input file or --group/--gens");
  }
  if (in.reflexive_closure) rel = atomlab::reflexive_closure(rel);
  if (!in.dot_path.empty()) atomlab::write_dot_file(rel, in.dot_path);
  return rel;
}

std::string format_set(const atomlab::VertexSet& set) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  set.for_each([&](int v) {
    if (!first) out << ',';
    out << v;
    first = false;
  });
  out << '}';
  return out.str();
}

void emit(const json& j, bool as_json, const std::string& text) {
  if (as_json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

int cmd_kappa(const InputOptions& in, const std::string& algorithm,
              int threshold, bool as_json) {
  const atomlab::Relation rel = load_relation(in, /*cayley_reflexive=*/true);
  const bool use_bruteforce =
      algorithm == "bruteforce" ||
      (algorithm == "auto" && rel.vertex_count() <= threshold);
  const atomlab::ConnectivityReport report =
      use_bruteforce ? atomlab::kappa_bruteforce(rel, threshold)
                     : atomlab::kappa_maxflow(rel);
  json j(report);
  j["command"] = "kappa";
  j["n"] = rel.vertex_count();
  j["edges"] = rel.edge_count();
  j["algorithm"] = use_bruteforce ? "bruteforce" : "maxflow";

  std::ostringstream text;
  text << "n=" << rel.vertex_count() << " edges=" << rel.edge_count() << '\n';
  text << "kappa=" << report.kappa << " complete="
       << (report.complete ? "true" : "false")
       << " algorithm=" << (use_bruteforce ? "bruteforce" : "maxflow") << '\n';
  if (report.witness_fragment) {
    text << "witness=" << format_set(*report.witness_fragment) << '\n';
  }
  if (report.atom_size) text << "atom_size=" << *report.atom_size << '\n';
  emit(j, as_json, text.str());
  return 0;
}

int cmd_atoms(const InputOptions& in, int threshold, bool as_json) {
  const atomlab::Relation rel = load_relation(in, /*cayley_reflexive=*/true);
  const atomlab::AtomsReport report = atomlab::atoms(rel, threshold);
  json atoms_json = json::array();
  for (const atomlab::Fragment& atom : report.atoms) {
    atoms_json.push_back(atom.members.members());
  }
  const json j{{"command", "atoms"},
               {"n", rel.vertex_count()},
               {"kappa", report.kappa},
               {"atom_size", report.atom_size},
               {"atoms", atoms_json}};

  std::ostringstream text;
  text << "kappa=" << report.kappa << " atom_size=" << report.atom_size
       << " atoms=" << report.atoms.size() << '\n';
  for (const atomlab::Fragment& atom : report.atoms) {
    text << "  " << format_set(atom.members) << '\n';
  }
  emit(j, as_json, text.str());
  return 0;
}

void append_violations(json& j, const atomlab::CheckResult& check) {
  j["holds"] = check.holds;
  j["violations"] = check.violations;
}

int cmd_verify(const InputOptions& in, int vertex, int jmax, bool girth_bound,
               bool as_json) {
  if (girth_bound) {
    const atomlab::Relation rel = load_relation(in, /*cayley_reflexive=*/false);
    const atomlab::GirthBoundResult result = atomlab::check_girth_bound(rel);
    json j{{"command", "verify"},
           {"mode", "girth-bound"},
           {"n", rel.vertex_count()},
           {"girth", result.girth_value},
           {"degree", result.degree},
           {"bound", 1 + result.degree * (result.girth_value - 1)}};
    append_violations(j, result.check);
    std::ostringstream text;
    text << "n=" << rel.vertex_count() << " r=" << result.degree
         << " girth=" << result.girth_value << " bound=1+r(g-1)="
         << 1 + result.degree * (result.girth_value - 1) << '\n'
         << "result: " << (result.check.holds ? "holds" : "VIOLATED") << '\n';
    emit(j, as_json, text.str());
    return result.check.holds ? 0 : 2;
  }

  const atomlab::Relation rel = load_relation(in, /*cayley_reflexive=*/true);
  if (vertex < 0 || vertex >= rel.vertex_count()) {
    throw atomlab::domain_error("--vertex " + std::to_string(vertex) +
                                " outside [0, " +
                                std::to_string(rel.vertex_count()) + ")");
  }
  const atomlab::CheckResult step = atomlab::check_theorem_main(rel, vertex, jmax);
  const atomlab::CheckResult cumulative =
      atomlab::check_corollary_growth(rel, vertex, jmax);
  const atomlab::GrowthProfile profile = atomlab::growth_profile(rel, vertex, jmax);
  const bool holds = step.holds && cumulative.holds;

  json rows = json::array();
  std::ostringstream text;
  text << "vertex=" << vertex << " degree=" << profile.degree
       << " n=" << rel.vertex_count() << '\n';
  text << "  j  |G^j(v)|  eligible  step_req  cum_req  slack\n";
  for (std::size_t j = 1; j < profile.sizes.size(); ++j) {
    const bool eligible = profile.eligible[j];
    const long step_req = profile.sizes[j - 1] + profile.degree - 1;
    const long cum_req = 1 + static_cast<long>(profile.degree - 1) * static_cast<long>(j);
    const long slack =
        eligible ? profile.sizes[j] - std::max(step_req, cum_req) : 0;
    rows.push_back(json{{"j", j},
                        {"size", profile.sizes[j]},
                        {"eligible", eligible},
                        {"step_required", step_req},
                        {"cumulative_required", cum_req}});
    text << "  " << j << "  " << profile.sizes[j] << "        "
         << (eligible ? "yes" : "no ") << "       "
         << (eligible ? std::to_string(step_req) : std::string("-")) << "         "
         << (eligible ? std::to_string(cum_req) : std::string("-")) << "        "
         << (eligible ? std::to_string(slack) : std::string("-")) << '\n';
  }
  text << "result: " << (holds ? "holds" : "VIOLATED") << '\n';

  json j{{"command", "verify"},
         {"mode", "growth"},
         {"n", rel.vertex_count()},
         {"vertex", vertex},
         {"degree", profile.degree},
         {"table", rows}};
  append_violations(j, step.holds ? cumulative : step);
  j["holds"] = holds;
  emit(j, as_json, text.str());
  return holds ? 0 : 2;
}

int cmd_scan(int n, const std::string& mode, std::int64_t samples,
             std::uint64_t seed, const std::vector<int>& j_policy, int threads,
             const std::string& dump_dir, const std::string& output,
             bool as_json) {
  atomlab::ScanOptions options;
  options.n = n;
  options.mode = mode == "random" ? atomlab::ScanMode::kRandom
                                  : atomlab::ScanMode::kExhaustive;
  options.samples = samples;
  options.seed = seed;
  options.j_policy = j_policy;
  options.threads = threads;
  options.dump_dir = dump_dir;
  const atomlab::ScanReport report = atomlab::scan(options);
  const json j = atomlab::scan_report_json(report);
  if (!output.empty()) {
    std::ofstream out(output);
    if (!out) throw atomlab::error("cannot open '" + output + "' for writing");
    out << j.dump(2) << '\n';
  }
  std::ostringstream text;
  text << "mode=" << report.mode << " n=" << report.n
       << " checked=" << report.checked
       << " counterexamples=" << report.counterexamples.size()
       << " seed=" << report.seed << " elapsed_ms=" << report.elapsed_ms
       << '\n';
  for (const std::string& instance : report.counterexamples) {
    text << "counterexample:\n" << instance;
  }
  emit(j, as_json, text.str());
  return report.counterexamples.empty() ? 0 : 2;
}

int cmd_zerosum(const std::string& group_descriptor, const std::string& gens,
                bool as_json) {
  if (group_descriptor.empty()) {
    throw atomlab::domain_error("zerosum requires --group");
  }
  const atomlab::FiniteGroup group =
      atomlab::parse_group_descriptor(group_descriptor);
  const atomlab::GeneratorSet s = atomlab::parse_generators(group, gens);
  const atomlab::ZeroSumWitness witness = atomlab::zero_sum(group, s);
  const std::int64_t bound =
      (group.order() + static_cast<int>(s.members.size()) - 1) /
      static_cast<int>(s.members.size());

  json sequence = json::array();
  std::string joined;
  for (int x : witness.sequence) {
    sequence.push_back(group.name(x));
    if (!joined.empty()) joined += ',';
    joined += group.name(x);
  }
  const json j{{"command", "zerosum"},
               {"group", group_descriptor},
               {"order", group.order()},
               {"s", s.members.size()},
               {"k", witness.k},
               {"bound", bound},
               {"witness", sequence}};
  std::ostringstream text;
  text << "k=" << witness.k << " bound=" << bound << " witness=" << joined
       << '\n';
  emit(j, as_json, text.str());
  return witness.k <= bound ? 0 : 2;
}

int cmd_girth(const InputOptions& in, bool as_json) {
  const atomlab::Relation rel = load_relation(in, /*cayley_reflexive=*/false);
  const std::optional<int> g = atomlab::girth(rel);
  json j{{"command", "girth"}, {"n", rel.vertex_count()}};
  if (g) {
    j["girth"] = *g;
  } else {
    j["girth"] = nullptr;
  }
  std::ostringstream text;
  if (g) {
    text << "girth=" << *g << '\n';
  } else {
    text << "girth=none (acyclic)\n";
  }
  emit(j, as_json, text.str());
  return 0;
}

int cmd_cayley(const std::string& group_descriptor, const std::string& gens,
               bool reflexive, const std::string& output,
               const std::string& dot_path) {
  if (group_descriptor.empty()) {
    throw atomlab::domain_error("cayley requires --group");
  }
  const atomlab::FiniteGroup group =
      atomlab::parse_group_descriptor(group_descriptor);
  const atomlab::GeneratorSet s = atomlab::parse_generators(group, gens);
  const atomlab::Relation rel = atomlab::cayley_graph(group, s, reflexive);
  if (!dot_path.empty()) atomlab::write_dot_file(rel, dot_path);
  if (output.empty()) {
    std::cout << atomlab::write_edge_list(rel);
  } else {
    atomlab::write_edge_list_file(rel, output);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"atomlab: connectivity, atoms, and iterated-image growth "
               "checks for finite relations"};
  app.require_subcommand(1);

  std::function<int()> action;

  // kappa
  InputOptions kappa_in;
  std::string kappa_algorithm = "auto";
  int kappa_threshold = atomlab::kDefaultBruteforceThreshold;
  bool kappa_json = false;
  CLI::App* kappa = app.add_subcommand("kappa", "connectivity of a relation");
  add_input_options(kappa, kappa_in);
  kappa->add_option("--algorithm", kappa_algorithm, "auto|bruteforce|maxflow")
      ->check(CLI::IsMember({"auto", "bruteforce", "maxflow"}));
  kappa->add_option("--bruteforce-threshold", kappa_threshold,
                    "max n for the exhaustive scan");
  kappa->add_flag("--json", kappa_json, "machine-readable output");
  kappa->callback([&] {
    action = [&] {
      return cmd_kappa(kappa_in, kappa_algorithm, kappa_threshold, kappa_json);
    };
  });

  // atoms
  InputOptions atoms_in;
  int atoms_threshold = atomlab::kDefaultBruteforceThreshold;
  bool atoms_json = false;
  CLI::App* atoms_cmd =
      app.add_subcommand("atoms", "enumerate the atoms of a relation");
  add_input_options(atoms_cmd, atoms_in);
  atoms_cmd->add_option("--bruteforce-threshold", atoms_threshold,
                        "max n for the exhaustive scan");
  atoms_cmd->add_flag("--json", atoms_json, "machine-readable output");
  atoms_cmd->callback([&] {
    action = [&] { return cmd_atoms(atoms_in, atoms_threshold, atoms_json); };
  });

  // verify
  InputOptions verify_in;
  int verify_vertex = 0;
  int verify_jmax = -1;
  bool verify_girth_bound = false;
  bool verify_json = false;
  CLI::App* verify = app.add_subcommand(
      "verify", "growth inequalities at a vertex, or the girth bound");
  add_input_options(verify, verify_in);
  verify->add_option("--vertex", verify_vertex, "base vertex (default 0)");
  verify->add_option("--jmax", verify_jmax, "largest exponent (default n)");
  verify->add_flag("--girth-bound", verify_girth_bound,
                   "check |V| >= 1 + r(g-1) on a loopless input");
  verify->add_flag("--json", verify_json, "machine-readable output");
  verify->callback([&] {
    action = [&] {
      return cmd_verify(verify_in, verify_vertex, verify_jmax,
                        verify_girth_bound, verify_json);
    };
  });

  // scan
  int scan_n = 4;
  std::string scan_mode = "exhaustive";
  std::int64_t scan_samples = 10000;
  std::uint64_t scan_seed = 0;
  std::vector<int> scan_j;
  int scan_threads = 0;
  std::string scan_dump_dir = ".";
  std::string scan_output;
  bool scan_json = false;
  CLI::App* scan_cmd = app.add_subcommand(
      "scan", "search reflexive relations for conjecture counterexamples");
  scan_cmd->add_option("--n", scan_n, "vertex count")->required();
  scan_cmd->add_option("--mode", scan_mode, "exhaustive|random")
      ->check(CLI::IsMember({"exhaustive", "random"}));
  scan_cmd->add_option("--samples", scan_samples, "instances in random mode");
  scan_cmd->add_option("--seed", scan_seed, "random-mode seed");
  scan_cmd->add_option("--j", scan_j, "exponents to check (default 1..n)");
  scan_cmd->add_option("--threads", scan_threads,
                       "worker count (default ATOMLAB_THREADS or hardware)");
  scan_cmd->add_option("--dump-dir", scan_dump_dir,
                       "directory for counterexample dumps");
  scan_cmd->add_option("--output", scan_output, "write the JSON report here");
  scan_cmd->add_flag("--json", scan_json, "machine-readable output");
  scan_cmd->callback([&] {
    action = [&] {
      return cmd_scan(scan_n, scan_mode, scan_samples, scan_seed, scan_j,
                      scan_threads, scan_dump_dir, scan_output, scan_json);
    };
  });

  // zerosum
  std::string zerosum_group;
  std::string zerosum_gens;
  bool zerosum_json = false;
  CLI::App* zerosum = app.add_subcommand(
      "zerosum", "shortest zero-sum sequence over a generator set");
  zerosum->add_option("--group", zerosum_group, "group descriptor")->required();
  zerosum->add_option("--gens", zerosum_gens, "generators")->required();
  zerosum->add_flag("--json", zerosum_json, "machine-readable output");
  zerosum->callback([&] {
    action = [&] { return cmd_zerosum(zerosum_group, zerosum_gens, zerosum_json); };
  });

  // girth
  InputOptions girth_in;
  bool girth_json = false;
  CLI::App* girth_cmd =
      app.add_subcommand("girth", "shortest directed cycle of a digraph");
  add_input_options(girth_cmd, girth_in);
  girth_cmd->add_flag("--json", girth_json, "machine-readable output");
  girth_cmd->callback([&] {
    action = [&] { return cmd_girth(girth_in, girth_json); };
  });

  // cayley
  std::string cayley_group;
  std::string cayley_gens;
  bool cayley_reflexive = false;
  std::string cayley_output;
  std::string cayley_dot;
  CLI::App* cayley = app.add_subcommand(
      "cayley", "emit a Cayley graph as an edge list");
  cayley->add_option("--group", cayley_group, "group descriptor")->required();
  cayley->add_option("--gens", cayley_gens, "generators")->required();
  cayley->add_flag("--reflexive", cayley_reflexive, "add loops");
  cayley->add_option("-o,--output", cayley_output, "output file (default stdout)");
  cayley->add_option("--dot", cayley_dot, "write Graphviz DOT here");
  cayley->callback([&] {
    action = [&] {
      return cmd_cayley(cayley_group, cayley_gens, cayley_reflexive,
                        cayley_output, cayley_dot);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    return action();
  } catch (const atomlab::contract_error& e) {
    std::cerr << "hypothesis error: " << e.what() << '\n';
    return 1;
  } catch (const atomlab::parse_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const atomlab::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
