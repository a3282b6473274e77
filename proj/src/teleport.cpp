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

#include "qchan/teleport.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qchan/quantumness.hpp"

namespace qchan {

std::array<CMat4, 4> bell_basis() {
  CVec4 phi;
  phi[0] = 1.0 / std::sqrt(2.0);
  phi[3] = phi[0];
  CMat4 e0 = outer(phi, phi);
  std::array<CMat4, 4> basis;
  for (int i = 0; i < 4; ++i) {
    CMat4 lifted = kron(pauli(i), pauli(0));
    basis[static_cast<std::size_t>(i)] = lifted * e0 * lifted;
  }
  return basis;
}

std::array<double, 4> bell_probabilities(const TwoQubitState& s) {
  CMat4 rho = to_density(s);
  std::array<CMat4, 4> basis = bell_basis();
  std::array<double, 4> p{};
  for (int i = 0; i < 4; ++i) {
    std::size_t k = static_cast<std::size_t>(i);
    p[k] = std::max(std::real(trace(basis[k] * rho)), 0.0);
  }
  return p;
}

std::array<int, 4> descending_relabeling(const std::array<double, 4>& p) {
  std::array<int, 4> idx{0, 1, 2, 3};
  std::stable_sort(idx.begin(), idx.end(),
                   [&p](int a, int b) {
                     return p[static_cast<std::size_t>(a)] >
                            p[static_cast<std::size_t>(b)];
                   });
  return idx;
}

double fidelity(const AffineChannel& ch, const Vec3& r) {
  if (std::abs(norm(r) - 1.0) > 1e-9)
    throw InvalidParameter("fidelity: r must be a unit Bloch vector");
  return 0.5 * (1.0 + dot(r, ch.lambda * r + ch.t));
}

double average_fidelity(const AffineChannel& ch) {
  return 0.5 * (1.0 + trace(ch.lambda) / 3.0);
}

TwoQubitState werner_state(double w) {
  if (w < -1.0 / 3.0 - 1e-12 || w > 1.0 + 1e-12)
    throw InvalidParameter("werner_state: w must lie in [-1/3, 1]");
  return {Vec3(0, 0, 0), Vec3(0, 0, 0), Mat3::diagonal(w, -w, w)};
}

TeleportReport teleport(const TwoQubitState& resource) {
  validate(resource);
  TeleportReport report;
  report.probabilities = bell_probabilities(resource);
  report.relabeling = descending_relabeling(report.probabilities);

  std::array<double, 4> sorted{};
  for (int k = 0; k < 4; ++k)
    sorted[static_cast<std::size_t>(k)] =
        report.probabilities[static_cast<std::size_t>(
            report.relabeling[static_cast<std::size_t>(k)])];
  // The clamp in bell_probabilities can leave the sum a hair off one; the
  // depolarizing constructor tolerates 1e-9, which PSD inputs stay within.
  report.channel = generalized_depolarizing(sorted);
  report.avg_fidelity = (1.0 + 2.0 * sorted[0]) / 3.0;
  report.q = quantumness(report.channel).q;
  report.beats_classical = report.avg_fidelity > 2.0 / 3.0;
  return report;
}

}  // namespace qchan
