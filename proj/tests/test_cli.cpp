// Copyright 2026 the qchan authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "qchan/bipartite.hpp"
#include "qchan/cli.hpp"
#include "qchan/quantumness.hpp"

#ifndef _WIN32
#include <sys/wait.h>
#endif

using namespace qchan;
using nlohmann::json;

namespace {

struct CommandResult {
  int exit_code;
  std::string output;
};

// Runs the installed binary named by QCHAN_BIN with the given arguments,
// capturing stdout.
CommandResult run_cli(const std::string& args) {
  const char* bin = std::getenv("QCHAN_BIN");
  REQUIRE(bin != nullptr);
  std::string cmd = "\"" + std::string(bin) + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buf[512];
  while (std::fgets(buf, sizeof(buf), pipe) != nullptr) output += buf;
  int status = pclose(pipe);
  int code = -1;
  if (WIFEXITED(status)) code = WEXITSTATUS(status);
  return {code, output};
}

const char* kAdSpec =
    "{\"kind\": \"named\", \"name\": \"amplitude_damping\", "
    "\"params\": {\"gamma\": 0.36}}";

}  // namespace

//==============================================================================
// analyze
//==============================================================================

TEST_CASE("analyze report carries the closed-form values") {
  AffineChannel ch = amplitude_damping(0.36);
  std::ostringstream out;
  run_analyze(ch, out);
  json j = json::parse(out.str());

  QuantumnessReport report = quantumness(ch);
  ObservationCheck obs = check_observation(ch);
  CHECK(j.at("q").get<double>() == doctest::Approx(report.q).epsilon(1e-15));
  CHECK(j.at("d_g").get<double>() == doctest::Approx(obs.d_g).epsilon(1e-15));
  CHECK(j.at("gap").get<double>() == doctest::Approx(obs.gap).epsilon(1e-15));
  CHECK(j.at("m_eigenvalues").size() == 3);
  CHECK(j.at("optimal_n").size() == 3);
  CHECK_FALSE(j.at("degenerate_top").get<bool>());
  CHECK_FALSE(j.at("flags").at("unital").get<bool>());
  CHECK_FALSE(j.at("flags").at("unitary").get<bool>());
  CHECK_FALSE(j.at("flags").at("entanglement_breaking").get<bool>());
  CHECK_FALSE(j.at("flags").at("semiclassical").get<bool>());
}

TEST_CASE("analyze flags known channel classes") {
  std::ostringstream out;
  run_analyze(identity_channel(), out);
  json j = json::parse(out.str());
  CHECK(j.at("flags").at("unitary").get<bool>());
  CHECK(j.at("flags").at("unital").get<bool>());
  CHECK(j.at("q").get<double>() == doctest::Approx(1.0));

  out.str("");
  run_analyze(completely_dephasing(), out);
  j = json::parse(out.str());
  CHECK(j.at("flags").at("semiclassical").get<bool>());
  CHECK(j.at("flags").at("entanglement_breaking").get<bool>());
  CHECK(j.at("q").get<double>() == doctest::Approx(0.0));
}

//==============================================================================
// sweep
//==============================================================================

TEST_CASE("werner sweep emits exact closed-form rows") {
  SweepSpec spec{"werner", 0.0, 1.0, 0.25};
  std::ostringstream out;
  run_sweep(spec, out);
  CHECK(out.str() ==
        "w,quantumness,avg_fidelity,beats_classical\n"
        "0,0,0.5,0\n"
        "0.25,0.0625,0.625,0\n"
        "0.5,0.25,0.75,1\n"
        "0.75,0.5625,0.875,1\n"
        "1,1,1,1\n");
}

TEST_CASE("amplitude damping sweep labels the optimal axis") {
  SweepSpec spec{"amplitude_damping", 0.0, 1.0, 0.25};
  std::ostringstream out;
  run_sweep(spec, out);
  CHECK(out.str() ==
        "gamma,quantumness,geometric_discord,optimal_n_class\n"
        "0,1,1,xy\n"
        "0.25,0.75,0.6875,z\n"
        "0.5,0.5,0.5,z\n"
        "0.75,0.25,0.25,z\n"
        "1,0,0,z\n");
}

TEST_CASE("sweep output is byte stable") {
  SweepSpec spec{"amplitude_damping", 0.0, 1.0, 0.01};
  std::ostringstream a;
  std::ostringstream b;
  run_sweep(spec, a);
  run_sweep(spec, b);
  CHECK(a.str() == b.str());
  CHECK(a.str().size() > 100);
}

TEST_CASE("sweep validates its spec") {
  std::ostringstream out;
  CHECK_THROWS_AS(run_sweep({"unknown_family", 0, 1, 0.1}, out),
                  InvalidParameter);
  CHECK_THROWS_AS(run_sweep({"werner", 0, 1, 0.0}, out), InvalidParameter);
  CHECK_THROWS_AS(run_sweep({"werner", 0, 1, -0.1}, out), InvalidParameter);
  CHECK_THROWS_AS(run_sweep({"werner", 0.5, 0.2, 0.1}, out), InvalidParameter);
  CHECK_THROWS_AS(run_sweep({"werner", 0, 1, 1e-9}, out), InvalidParameter);
  // Out-of-domain parameters surface as InvalidParameter from the family.
  CHECK_THROWS_AS(run_sweep({"amplitude_damping", -0.5, 1, 0.25}, out),
                  InvalidParameter);
}

//==============================================================================
// verify
//==============================================================================

TEST_CASE("verify passes on a small budget") {
  VerifyOptions opts;
  opts.n_channels = 60;
  opts.mc_samples = 4000;
  opts.resolution = 32;
  std::ostringstream out;
  CHECK(run_verify(opts, out) == 0);
  std::string text = out.str();
  for (const char* suite :
       {"observation1", "unitary_invariance", "oracle_agreement",
        "mc_agreement", "monotonicity", "eb_bounds", "teleport_necessity",
        "pure_state_discord"}) {
    CHECK(text.find(std::string("ok   ") + suite) != std::string::npos);
  }
  CHECK(text.find("all suites passed") != std::string::npos);
  CHECK(text.find("FAIL") == std::string::npos);
}

TEST_CASE("verify fails and dumps the channel when fed an invalid map") {
  VerifyOptions opts;
  opts.n_channels = 30;
  opts.mc_samples = 2000;
  opts.resolution = 16;
  opts.inject_invalid = true;
  std::ostringstream out;
  CHECK(run_verify(opts, out) > 0);
  std::string text = out.str();
  CHECK(text.find("FAIL observation1") != std::string::npos);
  CHECK(text.find("\"lambda\"") != std::string::npos);
  CHECK(text.find("1.3") != std::string::npos);
}

TEST_CASE("verify validates its options") {
  std::ostringstream out;
  VerifyOptions opts;
  opts.n_channels = 0;
  CHECK_THROWS_AS(run_verify(opts, out), InvalidParameter);
  opts = VerifyOptions{};
  opts.mc_samples = 100;
  CHECK_THROWS_AS(run_verify(opts, out), InvalidParameter);
  opts = VerifyOptions{};
  opts.resolution = 8;
  CHECK_THROWS_AS(run_verify(opts, out), InvalidParameter);
}

//==============================================================================
// binary exit codes
//==============================================================================

TEST_CASE("binary analyzes inline and file specs") {
  CommandResult inline_run =
      run_cli(std::string("analyze --channel '") + kAdSpec + "'");
  CHECK(inline_run.exit_code == 0);
  json j = json::parse(inline_run.output);
  CHECK(j.at("q").get<double>() == doctest::Approx(0.64).epsilon(1e-12));

  const char* path = "cli_channel_tmp.json";
  {
    std::ofstream f(path);
    f << kAdSpec;
  }
  CommandResult file_run =
      run_cli(std::string("analyze --channel ") + path);
  CHECK(file_run.exit_code == 0);
  CHECK(file_run.output == inline_run.output);
  std::remove(path);
}

TEST_CASE("binary maps error classes to exit codes") {
  // Input errors: malformed JSON, bad schema, missing file, bad sweep family.
  CHECK(run_cli("analyze --channel '{oops'").exit_code == 1);
  CHECK(run_cli("analyze --channel '{\"kind\": \"viaduct\"}'").exit_code == 1);
  CHECK(run_cli("analyze --channel does_not_exist.json").exit_code == 1);
  CHECK(run_cli("sweep --family nope").exit_code == 1);

  // Usage errors.
  CHECK(run_cli("").exit_code == 64);
  CHECK(run_cli("frobnicate").exit_code == 64);
  CHECK(run_cli("analyze").exit_code == 64);
  CHECK(run_cli("sweep --family werner --bogus-flag").exit_code == 64);
  CHECK(run_cli("verify --channels 0").exit_code == 64);

  // Help is not an error.
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("sweep --help").exit_code == 0);
}

TEST_CASE("binary verify reports invariant violations with exit 2") {
  CommandResult ok_run =
      run_cli("verify --channels 24 --samples 2000 --resolution 16");
  CHECK(ok_run.exit_code == 0);
  CHECK(ok_run.output.find("all suites passed") != std::string::npos);

  CommandResult bad_run = run_cli(
      "verify --channels 24 --samples 2000 --resolution 16 --inject-invalid");
  CHECK(bad_run.exit_code == 2);
  CHECK(bad_run.output.find("FAIL") != std::string::npos);
}

TEST_CASE("binary sweep output matches the library byte for byte") {
  SweepSpec spec{"werner", 0.0, 1.0, 0.05};
  std::ostringstream direct;
  run_sweep(spec, direct);
  CommandResult cli =
      run_cli("sweep --family werner --start 0 --stop 1 --step 0.05");
  CHECK(cli.exit_code == 0);
  CHECK(cli.output == direct.str());
}
