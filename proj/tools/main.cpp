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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qchan/channel_json.hpp"
#include "qchan/cli.hpp"
#include "qchan/errors.hpp"

namespace {

// Inline JSON starts with '{'; anything else is a file path.
std::string read_channel_arg(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return arg;
  std::ifstream in(arg);
  if (!in) throw qchan::Error("cannot open channel file: " + arg);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coherence-based quantumness of qubit channels"};
  app.require_subcommand(1);

  std::string channel_arg;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "JSON report for one channel: q, the spectrum and top "
                 "eigenvector of M, discord of the Choi state, flags");
  analyze->add_option("--channel", channel_arg,
                      "channel spec: a JSON file path or inline JSON")
      ->required();

  qchan::SweepSpec spec;
  CLI::App* sweep =
      app.add_subcommand("sweep", "CSV sweep over a one-parameter family");
  sweep->add_option("--family", spec.family, "amplitude_damping or werner")
      ->required();
  sweep->add_option("--start", spec.start, "first parameter value");
  sweep->add_option("--stop", spec.stop, "last parameter value");
  sweep->add_option("--step", spec.step, "parameter increment");

  qchan::VerifyOptions opts;
  CLI::App* verify =
      app.add_subcommand("verify", "randomized self-checks of the library");
  verify->add_option("--seed", opts.seed, "base seed for all suites");
  verify->add_option("--channels", opts.n_channels, "channels per suite")
      ->check(CLI::Range(1, 1000000));
  verify->add_option("--samples", opts.mc_samples, "Monte Carlo sample count");
  verify->add_option("--resolution", opts.resolution,
                     "basis grid resolution");
  verify->add_flag("--inject-invalid", opts.inject_invalid)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }

  try {
    if (analyze->parsed()) {
      qchan::AffineChannel ch =
          qchan::parse_channel_spec(read_channel_arg(channel_arg));
      qchan::run_analyze(ch, std::cout);
    } else if (sweep->parsed()) {
      qchan::run_sweep(spec, std::cout);
    } else if (verify->parsed()) {
      if (qchan::run_verify(opts, std::cout) > 0) return 2;
    }
  } catch (const qchan::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
