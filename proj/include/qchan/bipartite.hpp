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

#ifndef QCHAN_BIPARTITE_HPP_
#define QCHAN_BIPARTITE_HPP_

#include "qchan/channels.hpp"
#include "qchan/linalg.hpp"
#include "qchan/rng.hpp"

namespace qchan {

// Two-qubit state in Bloch form,
//   rho = (1/4) (1 x 1 + x.sigma x 1 + 1 x y.sigma + sum_ij T_ij sigma_i x sigma_j),
// with A the first factor and B the second.
struct TwoQubitState {
  Vec3 x;       // A marginal
  Vec3 y;       // B marginal
  Mat3 t_corr;  // correlation matrix T_ij
};

CMat4 to_density(const TwoQubitState& s);
TwoQubitState state_from_density(const CMat4& rho);

// Throws ValidationError unless the reconstructed density matrix is PSD to
// within -1e-10.
void validate(const TwoQubitState& s);

// |Phi+> = (|00> + |11>) / sqrt 2 in Bloch form: x = y = 0, T = diag(1,-1,1).
TwoQubitState bell_state();

// (1 x E) rho: x is untouched, y -> Lambda y + t, T -> T Lambda^t + x t^t.
TwoQubitState local_apply_bob(const AffineChannel& ch, const TwoQubitState& s);

// Local rotations R in SO(3) acting on one side: on A, x -> R x and
// T -> R T; on B, y -> R y and T -> T R^t.
TwoQubitState local_rotate_a(const Mat3& rot, const TwoQubitState& s);
TwoQubitState local_rotate_b(const Mat3& rot, const TwoQubitState& s);

// Choi state of the channel: (1 x E) applied to |Phi+><Phi+|. Built directly
// as x = 0, y = t, T_ij = D_ii Lambda_ji with D = diag(1,-1,1).
TwoQubitState choi_state(const AffineChannel& ch);

// Geometric discord of measurements on side B, normalized to [0, 1]:
//   D_G = (1/2) (k_2 + k_3),   K = y y^t + T^t T,
// the sum of the two smallest eigenvalues of K / 2. On a Choi state
// K / 2 = (Lambda Lambda^t + t t^t) / 2 =: N, whose spectrum is reported.
struct DiscordReport {
  double d_g;
  Vec3 n_eigenvalues;  // eigenvalues of K / 2, nonincreasing
  Mat3 k_matrix;
};

DiscordReport geometric_discord_b(const TwoQubitState& s);

// Smallest eigenvalue of the partial transpose on B; negative exactly for
// entangled states.
double ppt_min_eigenvalue(const TwoQubitState& s);

// Discord of the Choi state never exceeds the channel quantumness:
//   D_G(rho_E) <= Q(E) <= 1.
// Equality holds when t = 0 or t is a top eigenvector of N.
struct ObservationCheck {
  double q;
  double d_g;
  double gap;              // q - d_g
  bool inequality_holds;   // d_g <= q + 1e-10 and q <= 1 + 1e-10
  bool equality_expected;  // |t| = 0 or N t parallel to t at the top eigenvalue
};

ObservationCheck check_observation(const AffineChannel& ch);

// rho = G G^dag / tr(G G^dag) for a complex Gaussian G: a full-rank state
// almost surely.
TwoQubitState random_two_qubit_state(Rng& rng);

}  // namespace qchan

#endif  // QCHAN_BIPARTITE_HPP_
