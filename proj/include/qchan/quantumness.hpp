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

#ifndef QCHAN_QUANTUMNESS_HPP_
#define QCHAN_QUANTUMNESS_HPP_

#include <cstdint>

#include "qchan/channels.hpp"
#include "qchan/linalg.hpp"

namespace qchan {

// Quantumness of a qubit channel: the coherence a channel is guaranteed to
// generate, averaged over the Bloch ball and minimized over incoherent bases,
//
//   Q(E) = (5/2) min_n (3 / 4 pi) \int_ball |(Lambda r + t) x n|^2 d^3 r.
//
// The ball second moment E[r r^t] = I/5 collapses the integral to
//
//   Q(E) = min_n [tr M - n^t M n],   M = (Lambda Lambda^t + 5 t t^t) / 2,
//
// so Q is the sum of the two smallest eigenvalues of M and the optimal basis
// axis is the top eigenvector. Q lies in [0, 1]; Q = 1 exactly for unitary
// channels and Q = 0 exactly for semiclassical ones (rank-one M).

// M = (Lambda Lambda^t + 5 t t^t) / 2. Symmetric positive semidefinite.
Mat3 quantumness_matrix(const AffineChannel& ch);

struct QuantumnessReport {
  double q;               // sum of the two smallest eigenvalues, clamped at 0
  Vec3 m_eigenvalues;     // eigenvalues of M, nonincreasing
  UnitVector3 optimal_n;  // top eigenvector of M
  Mat3 m_matrix;
  bool degenerate_top;    // top eigenvalue within 1e-9 of the next one
};

QuantumnessReport quantumness(const AffineChannel& ch);

// tr M - n^t M n: the ball average before minimizing over the basis. Equals
// Q(E) at the optimal axis and upper bounds it everywhere else.
double fixed_basis_quantumness(const AffineChannel& ch, const UnitVector3& n);

// Monte Carlo estimate of the defining integral at a fixed basis,
// (5/2) mean |(Lambda r + t) x n|^2 over uniform ball samples, with the
// standard error of the mean. Requires samples >= 1000.
struct McEstimate {
  double value;
  double std_error;
};

McEstimate mc_quantumness(const AffineChannel& ch, const UnitVector3& n,
                          int samples, std::uint64_t seed);

// Exhaustive minimization of the fixed-basis form over a grid of axes,
//   alpha_i = i pi / (res - 1),  i = 0 .. res - 1,
//   beta_j  = j pi / res,       j = 0 .. 2 res - 1.
// An upper bound on Q that converges quadratically in 1/res. Requires
// resolution >= 16.
struct GridMin {
  double value;
  UnitVector3 arg_min;
};

GridMin grid_min_quantumness(const AffineChannel& ch, int resolution);

// Rank-one M within tol: the channel output hugs a single basis axis.
bool is_semiclassical(const AffineChannel& ch, double tol = 1e-9);

// Structural flags plus consistency checks between the closed form and the
// channel classes it characterizes.
struct Classification {
  bool unitary;                // Lambda Lambda^t = I and t = 0 within 1e-10
  bool semiclassical;
  bool unital;
  bool entanglement_breaking;
  bool eb_bound_ok;            // entanglement breaking implies q < 1/2
  bool unital_eb_bound_ok;     // unital and EB implies q <= 1/8 + 1e-10
  bool unitary_q_consistent;   // unitary iff q = 1 within 1e-9
};

Classification classify(const AffineChannel& ch);

// Pure-state variant of the average: sphere samples instead of ball samples,
// normalization 3/2 instead of 5/2, minimized over the same axis grid. For
// unital channels this equals Q(E); with t != 0 the two averages weight the
// displacement differently. Requires samples >= 1000 and resolution >= 16.
double pure_state_quantumness_mc(const AffineChannel& ch, int samples,
                                 int resolution, std::uint64_t seed);

}  // namespace qchan

#endif  // QCHAN_QUANTUMNESS_HPP_
