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

#include <sys/wait.h>

#include <catch2/catch_amalgamated.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

#include "atomlab/io.hpp"

namespace {

struct CliResult {
  int code = -1;
  std::string output;  // stdout and stderr combined
};

CliResult run_cli(const std::string& args) {
  const std::string command = std::string(ATOMLAB_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buffer[4096];
  while (std::size_t got = std::fread(buffer, 1, sizeof(buffer), pipe)) {
    result.output.append(buffer, got);
  }
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string data(const std::string& name) {
  return std::string(ATOMLAB_TEST_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("cli kappa") {
  const CliResult cycle = run_cli("kappa " + data("cycle5.rel") + " --reflexive-closure");
  CHECK(cycle.code == 0);
  CHECK(cycle.output.find("kappa=1") != std::string::npos);
  CHECK(cycle.output.find("algorithm=bruteforce") != std::string::npos);

  const CliResult complete = run_cli("kappa " + data("complete3.rel"));
  CHECK(complete.code == 0);
  CHECK(complete.output.find("kappa=2 complete=true") != std::string::npos);

  const CliResult bad = run_cli("kappa " + data("bad.rel"));
  CHECK(bad.code == 1);
  CHECK(bad.output.find("line 3") != std::string::npos);

  SECTION("json and text agree") {
    const CliResult js = run_cli("kappa " + data("complete3.rel") + " --json");
    CHECK(js.code == 0);
    const nlohmann::json parsed = nlohmann::json::parse(js.output);
    CHECK(parsed["kappa"] == 2);
    CHECK(parsed["complete"] == true);
  }

  SECTION("maxflow agrees with the default") {
    const CliResult flow = run_cli("kappa " + data("cycle5.rel") +
                                   " --reflexive-closure --algorithm maxflow");
    CHECK(flow.code == 0);
    CHECK(flow.output.find("kappa=1") != std::string::npos);
    CHECK(flow.output.find("algorithm=maxflow") != std::string::npos);
  }
}

TEST_CASE("cli atoms") {
  const CliResult atoms = run_cli("atoms --group Z5 --gens 1");
  CHECK(atoms.code == 0);
  CHECK(atoms.output.find("kappa=1 atom_size=1 atoms=5") != std::string::npos);
}

TEST_CASE("cli verify") {
  const CliResult good = run_cli("verify --group Z7 --gens 1,2 --vertex 0");
  CHECK(good.code == 0);
  CHECK(good.output.find("result: holds") != std::string::npos);

  const CliResult asym =
      run_cli("verify " + data("path3.rel") + " --reflexive-closure --vertex 0");
  CHECK(asym.code == 1);
  CHECK(asym.output.find("hypothesis error") != std::string::npos);
  CHECK(asym.output.find("point-symmetric") != std::string::npos);

  const CliResult js = run_cli("verify --group Z5 --gens 1 --vertex 0 --json");
  CHECK(js.code == 0);
  const nlohmann::json parsed = nlohmann::json::parse(js.output);
  CHECK(parsed["holds"] == true);
  CHECK(parsed["vertex"] == 0);
  CHECK(parsed["table"].is_array());

  const CliResult girth_bound =
      run_cli("verify --group Z7 --gens 1,2 --girth-bound");
  CHECK(girth_bound.code == 0);
  CHECK(girth_bound.output.find("girth=4") != std::string::npos);
  CHECK(girth_bound.output.find("result: holds") != std::string::npos);
}

TEST_CASE("cli scan") {
  const CliResult small = run_cli("scan --n 3 --mode exhaustive --dump-dir ''");
  CHECK(small.code == 0);
  CHECK(small.output.find("checked=64") != std::string::npos);
  CHECK(small.output.find("counterexamples=0") != std::string::npos);

  const CliResult too_big = run_cli("scan --n 6 --mode exhaustive");
  CHECK(too_big.code == 1);

  SECTION("random mode with a report file") {
    const auto report_path =
        std::filesystem::temp_directory_path() / "atomlab_scan_report.json";
    const CliResult random = run_cli(
        "scan --n 5 --mode random --samples 500 --seed 7 --dump-dir '' "
        "--output " + report_path.string());
    CHECK(random.code == 0);
    std::ifstream in(report_path);
    REQUIRE(in.good());
    const nlohmann::json report = nlohmann::json::parse(in);
    CHECK(report["mode"] == "random");
    CHECK(report["checked"] == 500);
    CHECK(report["seed"] == 7);
    CHECK(report["counterexamples"].empty());
    std::filesystem::remove(report_path);
  }

  SECTION("identical reports across processes and worker counts") {
    auto canonical = [](const std::string& extra) {
      const CliResult run = run_cli(
          "scan --n 6 --mode random --samples 2000 --seed 99 --dump-dir '' "
          "--json " + extra);
      REQUIRE(run.code == 0);
      nlohmann::json j = nlohmann::json::parse(run.output);
      j.erase("elapsed_ms");
      return j;
    };
    const nlohmann::json first = canonical("--threads 1");
    const nlohmann::json second = canonical("--threads 4");
    const nlohmann::json third = canonical("--threads 2");
    CHECK(first == second);
    CHECK(first == third);
  }
}

TEST_CASE("cli zerosum") {
  const CliResult z6 = run_cli("zerosum --group Z6 --gens 2,3");
  CHECK(z6.code == 0);
  CHECK(z6.output.find("k=2 bound=3 witness=3,3") != std::string::npos);

  const CliResult z5 = run_cli("zerosum --group Z5 --gens 2");
  CHECK(z5.code == 0);
  CHECK(z5.output.find("k=5 bound=5") != std::string::npos);

  const CliResult s3 = run_cli("zerosum --group S3 --gens '(12),(123)'");
  CHECK(s3.code == 0);
  CHECK(s3.output.find("k=2 bound=3") != std::string::npos);

  const CliResult with_identity = run_cli("zerosum --group Z6 --gens 0,2");
  CHECK(with_identity.code == 1);
  CHECK(with_identity.output.find("identity") != std::string::npos);
}

TEST_CASE("cli girth and cayley") {
  const CliResult g = run_cli("girth --group Z7 --gens 1,2");
  CHECK(g.code == 0);
  CHECK(g.output.find("girth=4") != std::string::npos);

  const CliResult cayley = run_cli("cayley --group Z5 --gens 1");
  CHECK(cayley.code == 0);
  const atomlab::Relation parsed = atomlab::parse_edge_list(cayley.output);
  CHECK(parsed.vertex_count() == 5);
  CHECK(parsed.edge_count() == 5);

  SECTION("dot export") {
    const auto dot_path =
        std::filesystem::temp_directory_path() / "atomlab_test.dot";
    const CliResult with_dot = run_cli("kappa " + data("cycle5.rel") +
                                       " --reflexive-closure --dot " +
                                       dot_path.string());
    CHECK(with_dot.code == 0);
    std::ifstream in(dot_path);
    REQUIRE(in.good());
    std::string contents((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
    CHECK(contents.find("digraph") != std::string::npos);
    std::filesystem::remove(dot_path);
  }
}

TEST_CASE("cli usage errors") {
  CHECK(run_cli("").code == 1);
  CHECK(run_cli("frobnicate").code == 1);
  CHECK(run_cli("verify --group Z7 --vertex 0").code == 1);  // missing --gens
}
