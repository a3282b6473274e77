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

#include "qchan/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace qchan {

namespace {

constexpr double kConstraintTol = 1e-8;

double wrap_two_pi(double beta) {
  double b = std::fmod(beta, 2.0 * kPi);
  if (b < 0.0) b += 2.0 * kPi;
  return b;
}

}  // namespace

IncoherentBasis::IncoherentBasis(double alpha, double beta)
    : alpha_(alpha), beta_(wrap_two_pi(beta)) {
  if (alpha < -1e-12 || alpha > kPi + 1e-12)
    throw InvalidParameter("IncoherentBasis: alpha must lie in [0, pi]");
  double sa = std::sin(alpha_);
  n_ = {sa * std::cos(beta_), sa * std::sin(beta_), std::cos(alpha_)};
}

IncoherentBasis IncoherentBasis::from_axis(const UnitVector3& n) {
  double alpha = std::acos(std::clamp(n[2], -1.0, 1.0));
  double beta = std::atan2(n[1], n[0]);
  return IncoherentBasis(alpha, beta);
}

CVec2 IncoherentBasis::ket_plus() const {
  CVec2 k;
  k[0] = std::cos(alpha_ / 2.0);
  k[1] = std::polar(std::sin(alpha_ / 2.0), beta_);
  return k;
}

CVec2 IncoherentBasis::ket_minus() const {
  CVec2 k;
  k[0] = std::polar(std::sin(alpha_ / 2.0), -beta_);
  k[1] = -std::cos(alpha_ / 2.0);
  return k;
}

double c_l1_sq(const Vec3& r, const IncoherentBasis& basis) {
  return norm_sq(cross(r, basis.n_hat()));
}

double c_l1_sq(const Vec3& r, const UnitVector3& n) {
  return norm_sq(cross(r, n.vec()));
}

IncoherentOp::IncoherentOp(const std::array<double, 5>& a,
                           const std::array<cxd, 4>& b)
    : a_(a), b_(b) {
  double sa = 0.0;
  for (double v : a_) sa += v * v;
  double sb = 0.0;
  for (const cxd& v : b_) sb += std::norm(v);
  if (std::abs(sa - 1.0) > kConstraintTol)
    throw ConstraintViolation("IncoherentOp: sum a_i^2 must equal one");
  if (std::abs(sb - 1.0) > kConstraintTol)
    throw ConstraintViolation("IncoherentOp: sum |b_i|^2 must equal one");
  if (std::abs(a_[2] * b_[2] + a_[3] * b_[3]) > kConstraintTol)
    throw ConstraintViolation("IncoherentOp: a3 b3 + a4 b4 must vanish");
}

std::array<CMat2, 5> IncoherentOp::kraus() const {
  return {CMat2{0.0, b_[0], a_[0], 0.0},
          CMat2{a_[1], 0.0, 0.0, b_[1]},
          CMat2{a_[2], b_[2], 0.0, 0.0},
          CMat2{0.0, 0.0, a_[3], b_[3]},
          CMat2{a_[4], 0.0, 0.0, 0.0}};
}

IncoherentOp random_incoherent_op(Rng& rng) {
  for (;;) {
    std::array<double, 5> a{};
    double na = 0.0;
    for (auto& v : a) {
      v = rng.normal();
      na += v * v;
    }
    na = std::sqrt(na);
    if (na < 1e-12) continue;
    for (auto& v : a) v /= na;

    std::array<cxd, 4> b{};
    for (int i = 0; i < 2; ++i) {
      double re = rng.normal();
      double im = rng.normal();
      b[static_cast<std::size_t>(i)] = cxd(re, im);
    }
    double pair_norm = std::hypot(a[2], a[3]);
    if (pair_norm > 1e-12) {
      // One complex amplitude along the null direction of (a3, a4).
      double re = rng.normal();
      double im = rng.normal();
      cxd zeta = cxd(re, im) / pair_norm;
      b[2] = -a[3] * zeta;
      b[3] = a[2] * zeta;
    } else {
      for (int i = 2; i < 4; ++i) {
        double re = rng.normal();
        double im = rng.normal();
        b[static_cast<std::size_t>(i)] = cxd(re, im);
      }
    }
    double nb = 0.0;
    for (const cxd& v : b) nb += std::norm(v);
    nb = std::sqrt(nb);
    if (nb < 1e-12) continue;
    for (auto& v : b) v /= nb;

    return IncoherentOp(a, b);
  }
}

std::vector<Outcome> apply_incoherent(const IncoherentOp& op, const Vec3& r) {
  CMat2 rho = density_from_bloch(r);
  std::vector<Outcome> outcomes;
  for (const CMat2& k : op.kraus()) {
    CMat2 post = k * rho * adjoint(k);
    double p = std::real(trace(post));
    if (p < 1e-14) continue;
    outcomes.push_back({p, bloch_from_density((1.0 / p) * post)});
  }
  return outcomes;
}

double w_factor(double q1, double q2, double q1p, double q2p, double r3) {
  auto in_unit = [](double v) { return v >= -1e-12 && v <= 1.0 + 1e-12; };
  if (!in_unit(q1) || !in_unit(q2) || !in_unit(q1p) || !in_unit(q2p))
    throw InvalidParameter("w_factor: weights must lie in [0, 1]");
  if (q1 + q2 > 1.0 + 1e-12 || q1p + q2p > 1.0 + 1e-12)
    throw InvalidParameter("w_factor: weight pairs must sum to at most one");
  if (r3 < -1.0 - 1e-12 || r3 > 1.0 + 1e-12)
    throw InvalidParameter("w_factor: r3 must lie in [-1, 1]");

  double w = 0.0;
  const double q[2] = {q1, q2};
  const double qp[2] = {q1p, q2p};
  for (int i = 0; i < 2; ++i) {
    double den = q[i] * (1.0 + r3) + qp[i] * (1.0 - r3);
    if (den < 1e-14) continue;  // the outcome probability vanishes with it
    w += 2.0 * q[i] * qp[i] / den;
  }
  return w;
}

}  // namespace qchan
