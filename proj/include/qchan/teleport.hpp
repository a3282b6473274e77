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

#ifndef QCHAN_TELEPORT_HPP_
#define QCHAN_TELEPORT_HPP_

#include <array>

#include "qchan/bipartite.hpp"
#include "qchan/channels.hpp"

namespace qchan {

// Bell projectors E_i = (sigma_i x 1) |Phi+><Phi+| (sigma_i x 1), i = 0..3:
// a complete orthogonal family of rank-one projectors.
std::array<CMat4, 4> bell_basis();

// p_i = tr(E_i rho), clamped at zero against rounding.
std::array<double, 4> bell_probabilities(const TwoQubitState& s);

// Indices of p in nonincreasing order; ties keep the lower index first.
std::array<int, 4> descending_relabeling(const std::array<double, 4>& p);

// F(psi) = <psi| E(psi) |psi> = (1 + r . (Lambda r + t)) / 2 for the pure
// state with unit Bloch vector r.
double fidelity(const AffineChannel& ch, const Vec3& r);

// Average of F over pure states: (1 + tr Lambda / 3) / 2.
double average_fidelity(const AffineChannel& ch);

// w |Phi+><Phi+| + (1 - w) 1/4; a state for w in [-1/3, 1].
TwoQubitState werner_state(double w);

// Standard teleportation through a two-qubit resource: Alice measures in the
// Bell basis, Bob applies the Pauli correction. The effective channel is the
// generalized depolarizing channel with the Bell-diagonal weights of the
// resource; relabeling the corrections permutes the weights, and sorting them
// so the largest sits on the identity maximizes the fidelity. Then
//   F = (1 + 2 p_(0)) / 3,   Q = (p_(0) - p_(1))^2 + (p_(2) - p_(3))^2
// for the sorted weights, and F > 2/3 requires p_(0) > 1/2, hence Q > 0:
// beating classical teleportation needs a quantumness-generating channel.
struct TeleportReport {
  std::array<double, 4> probabilities;  // in measurement order
  std::array<int, 4> relabeling;        // applied descending sort
  AffineChannel channel;                // after relabeling
  double avg_fidelity;
  double q;
  bool beats_classical;  // avg_fidelity > 2/3, strictly
};

TeleportReport teleport(const TwoQubitState& resource);

}  // namespace qchan

#endif  // QCHAN_TELEPORT_HPP_
