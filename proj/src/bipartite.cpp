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

#include "qchan/bipartite.hpp"

#include <algorithm>
#include <cmath>

#include "qchan/quantumness.hpp"

namespace qchan {

namespace {

constexpr double kPsdTol = -1e-10;

}  // namespace

CMat4 to_density(const TwoQubitState& s) {
  CMat4 rho = 0.25 * kron(pauli(0), pauli(0));
  for (int i = 0; i < 3; ++i) {
    rho = rho + (0.25 * s.x[i]) * kron(pauli(i + 1), pauli(0));
    rho = rho + (0.25 * s.y[i]) * kron(pauli(0), pauli(i + 1));
    for (int j = 0; j < 3; ++j)
      rho = rho + (0.25 * s.t_corr(i, j)) * kron(pauli(i + 1), pauli(j + 1));
  }
  return rho;
}

TwoQubitState state_from_density(const CMat4& rho) {
  TwoQubitState s;
  for (int i = 0; i < 3; ++i) {
    s.x[i] = std::real(trace(rho * kron(pauli(i + 1), pauli(0))));
    s.y[i] = std::real(trace(rho * kron(pauli(0), pauli(i + 1))));
    for (int j = 0; j < 3; ++j)
      s.t_corr(i, j) = std::real(trace(rho * kron(pauli(i + 1), pauli(j + 1))));
  }
  return s;
}

void validate(const TwoQubitState& s) {
  HermEig4 eig = herm_eig4(to_density(s));
  if (eig.values[3] < kPsdTol)
    throw ValidationError("two-qubit state is not positive semidefinite");
}

TwoQubitState bell_state() {
  return {Vec3(0, 0, 0), Vec3(0, 0, 0), Mat3::diagonal(1.0, -1.0, 1.0)};
}

TwoQubitState local_apply_bob(const AffineChannel& ch, const TwoQubitState& s) {
  return {s.x, ch.lambda * s.y + ch.t,
          s.t_corr * transpose(ch.lambda) + outer(s.x, ch.t)};
}

TwoQubitState local_rotate_a(const Mat3& rot, const TwoQubitState& s) {
  return {rot * s.x, s.y, rot * s.t_corr};
}

TwoQubitState local_rotate_b(const Mat3& rot, const TwoQubitState& s) {
  return {s.x, rot * s.y, s.t_corr * transpose(rot)};
}

TwoQubitState choi_state(const AffineChannel& ch) {
  return {Vec3(0, 0, 0), ch.t,
          Mat3::diagonal(1.0, -1.0, 1.0) * transpose(ch.lambda)};
}

DiscordReport geometric_discord_b(const TwoQubitState& s) {
  Mat3 k = outer(s.y, s.y) + transpose(s.t_corr) * s.t_corr;
  SymEig3 eig = sym_eig3(0.5 * k);
  double d_g = std::max(eig.values[1] + eig.values[2], 0.0);
  return {d_g, eig.values, k};
}

double ppt_min_eigenvalue(const TwoQubitState& s) {
  HermEig4 eig = herm_eig4(partial_transpose_second(to_density(s)));
  return eig.values[3];
}

ObservationCheck check_observation(const AffineChannel& ch) {
  QuantumnessReport report = quantumness(ch);
  DiscordReport discord = geometric_discord_b(choi_state(ch));

  ObservationCheck check;
  check.q = report.q;
  check.d_g = discord.d_g;
  check.gap = report.q - discord.d_g;
  check.inequality_holds =
      discord.d_g <= report.q + 1e-10 && report.q <= 1.0 + 1e-10;

  double t_norm = norm(ch.t);
  if (t_norm <= 1e-12) {
    check.equality_expected = true;
  } else {
    Mat3 n = 0.5 * (ch.lambda * transpose(ch.lambda) + outer(ch.t, ch.t));
    Vec3 t_hat = (1.0 / t_norm) * ch.t;
    double top = sym_eig3(n).values[0];
    check.equality_expected = norm(n * t_hat - top * t_hat) <= 1e-9;
  }
  return check;
}

TwoQubitState random_two_qubit_state(Rng& rng) {
  CMat4 g;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      double re = rng.normal();
      double im = rng.normal();
      g(i, j) = cxd(re, im);
    }
  }
  CMat4 rho = g * adjoint(g);
  double tr = std::real(trace(rho));
  rho = (1.0 / tr) * rho;
  return state_from_density(rho);
}

}  // namespace qchan
