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

#ifndef QCHAN_CLI_HPP_
#define QCHAN_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>

#include "qchan/channels.hpp"

namespace qchan {

// JSON report for one channel: q, the spectrum and top eigenvector of M, the
// Choi-state discord with its gap to q, and structural flags.
void run_analyze(const AffineChannel& ch, std::ostream& out);

// One-parameter family sweeps written as CSV with %.15g values. Families:
//   "amplitude_damping": gamma,quantumness,geometric_discord,optimal_n_class
//   "werner":            w,quantumness,avg_fidelity,beats_classical
// where optimal_n_class is "z" when |n_3| > 1/sqrt 2 and "xy" otherwise.
struct SweepSpec {
  std::string family;
  double start = 0.0;
  double stop = 1.0;
  double step = 0.01;
};

void run_sweep(const SweepSpec& spec, std::ostream& out);

// Randomized self-checks over the whole library. Returns the number of failed
// suites and dumps any offending channel as JSON. inject_invalid smuggles a
// non-contraction into the stream to exercise the failure path.
struct VerifyOptions {
  std::uint64_t seed = 7;
  int n_channels = 1000;
  int mc_samples = 100000;
  int resolution = 64;
  bool inject_invalid = false;
};

int run_verify(const VerifyOptions& opts, std::ostream& out);

}  // namespace qchan

#endif  // QCHAN_CLI_HPP_
