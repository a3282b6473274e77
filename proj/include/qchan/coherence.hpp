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

// L1 coherence of qubit states and incoherent operations.
//
// A reference basis is the eigenbasis of n.sigma:
//   |n+> = cos(a/2)|0> + e^{i b} sin(a/2)|1>
//   |n-> = e^{-i b} sin(a/2)|0> - cos(a/2)|1>
// against which the squared l1 coherence of rho = (1 + r.sigma)/2 is
// C^2 = 4 |<n-|rho|n+>|^2 = |r x n|^2.

#ifndef QCHAN_COHERENCE_HPP_
#define QCHAN_COHERENCE_HPP_

#include <array>
#include <vector>

#include "qchan/channels.hpp"
#include "qchan/linalg.hpp"
#include "qchan/rng.hpp"

namespace qchan {

class IncoherentBasis {
 public:
  // alpha in [0, pi]; beta is wrapped into [0, 2 pi).
  IncoherentBasis(double alpha, double beta);

  static IncoherentBasis from_axis(const UnitVector3& n);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  const Vec3& n_hat() const { return n_; }

  CVec2 ket_plus() const;
  CVec2 ket_minus() const;

 private:
  double alpha_;
  double beta_;
  Vec3 n_;
};

// |r x n|^2, in [0, 1] for Bloch vectors.
double c_l1_sq(const Vec3& r, const IncoherentBasis& basis);
double c_l1_sq(const Vec3& r, const UnitVector3& n);

// Incoherent operation in the computational basis, built from the five-form
// Kraus family
//   K1 = [[0, b1], [a1, 0]]    K2 = [[a2, 0], [0, b2]]
//   K3 = [[a3, b3], [0, 0]]    K4 = [[0, 0], [a4, b4]]
//   K5 = [[a5, 0], [0, 0]]
// with a_i real, b_i complex, sum a_i^2 = 1 (i = 1..5), sum |b_i|^2 = 1
// (i = 1..4), and a3 b3 + a4 b4 = 0. Each operator maps diagonal states to
// diagonal states, so the whole instrument is incoherent.
class IncoherentOp {
 public:
  // Throws ConstraintViolation when a constraint is off by more than 1e-8.
  IncoherentOp(const std::array<double, 5>& a, const std::array<cxd, 4>& b);

  const std::array<double, 5>& a() const { return a_; }
  const std::array<cxd, 4>& b() const { return b_; }
  std::array<CMat2, 5> kraus() const;

 private:
  std::array<double, 5> a_;
  std::array<cxd, 4> b_;
};

// Constraint-respecting random draw: a uniform on the 4-sphere, b1 and b2
// complex Gaussian, (b3, b4) Gaussian along the null direction of
// (a3, a4), then b normalized.
IncoherentOp random_incoherent_op(Rng& rng);

struct Outcome {
  double p;
  Vec3 r;
};

// Selective application: outcome states K rho K^dag / p with their
// probabilities. Outcomes below p = 1e-14 are dropped.
std::vector<Outcome> apply_incoherent(const IncoherentOp& op, const Vec3& r);

// Coherence amplification factor of the K1/K2 pair acting on a state with
// population split (1 + r3)/2:
//   w = sum_{i=1,2} 2 q_i q'_i / (q_i (1 + r3) + q'_i (1 - r3))
// with q_i = a_i^2 and q'_i = |b_i|^2. Terms whose denominator falls below
// 1e-14 carry vanishing outcome probability and contribute zero. Average
// output coherence equals w times the input coherence, and w <= 1 is the
// strong-monotonicity statement for this family.
double w_factor(double q1, double q2, double q1p, double q2p, double r3);

}  // namespace qchan

#endif  // QCHAN_COHERENCE_HPP_
