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

#include "qchan/channels.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace qchan {

namespace {

constexpr double kCompletenessTol = 1e-8;
constexpr double kChoiPsdTol = -1e-8;

}  // namespace

const CMat2& pauli(int i) {
  static const std::array<CMat2, 4> sigma = {
      CMat2{1.0, 0.0, 0.0, 1.0},
      CMat2{0.0, 1.0, 1.0, 0.0},
      CMat2{0.0, cxd(0.0, -1.0), cxd(0.0, 1.0), 0.0},
      CMat2{1.0, 0.0, 0.0, -1.0},
  };
  return sigma[static_cast<std::size_t>(i)];
}

CMat2 density_from_bloch(const Vec3& r) {
  return CMat2{0.5 * (1.0 + r[2]), 0.5 * cxd(r[0], -r[1]),
               0.5 * cxd(r[0], r[1]), 0.5 * (1.0 - r[2])};
}

Vec3 bloch_from_density(const CMat2& rho) {
  Vec3 r;
  for (int i = 0; i < 3; ++i) r[i] = std::real(trace(pauli(i + 1) * rho));
  return r;
}

KrausChannel::KrausChannel(std::vector<CMat2> ops) : ops_(std::move(ops)) {
  if (ops_.empty() || ops_.size() > 8)
    throw InvalidParameter("KrausChannel: expected between 1 and 8 operators");
  CMat2 sum;
  for (const CMat2& k : ops_) sum = sum + adjoint(k) * k;
  if (max_abs_diff(sum, CMat2::identity()) > kCompletenessTol)
    throw CompletenessViolation(
        "KrausChannel: sum K^dag K deviates from the identity");
}

CMat2 KrausChannel::apply_density(const CMat2& rho) const {
  CMat2 out;
  for (const CMat2& k : ops_) out = out + k * rho * adjoint(k);
  return out;
}

Vec3 KrausChannel::apply(const Vec3& r) const {
  return bloch_from_density(apply_density(density_from_bloch(r)));
}

AffineChannel kraus_to_affine(const KrausChannel& ch) {
  AffineChannel out;
  CMat2 image_id = ch.apply_density(CMat2::identity());
  for (int i = 0; i < 3; ++i)
    out.t[i] = 0.5 * std::real(trace(pauli(i + 1) * image_id));
  for (int j = 0; j < 3; ++j) {
    CMat2 image = ch.apply_density(pauli(j + 1));
    for (int i = 0; i < 3; ++i)
      out.lambda(i, j) = 0.5 * std::real(trace(pauli(i + 1) * image));
  }
  return out;
}

Vec3 apply(const AffineChannel& ch, const Vec3& r) {
  return ch.lambda * r + ch.t;
}

AffineChannel compose(const AffineChannel& outer, const AffineChannel& inner) {
  return {outer.lambda * inner.lambda, outer.lambda * inner.t + outer.t};
}

CMat4 choi_density(const AffineChannel& ch) {
  // (1 x E)|beta><beta| in the Pauli product expansion: the Bell correlation
  // matrix diag(1,-1,1) times Lambda^T supplies the sigma_i x sigma_j weights.
  CMat4 rho = 0.25 * kron(pauli(0), pauli(0));
  for (int k = 0; k < 3; ++k)
    rho = rho + (0.25 * ch.t[k]) * kron(pauli(0), pauli(k + 1));
  static const double bell_diag[3] = {1.0, -1.0, 1.0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      rho = rho +
            (0.25 * bell_diag[i] * ch.lambda(j, i)) *
                kron(pauli(i + 1), pauli(j + 1));
  return rho;
}

ChoiMatrix::ChoiMatrix(const CMat4& m) : m_(m) {
  auto eig = herm_eig4(m_);
  if (eig.values[3] < kChoiPsdTol)
    throw NotCompletelyPositive("ChoiMatrix: negative eigenvalue " +
                                std::to_string(eig.values[3]));
  if (std::abs(std::real(trace(m_)) - 1.0) > 1e-8 ||
      std::abs(std::imag(trace(m_))) > 1e-8)
    throw ValidationError("ChoiMatrix: trace must be one");
  CMat2 reduced = partial_trace_second(m_);
  if (max_abs_diff(reduced, 0.5 * CMat2::identity()) > 1e-8)
    throw ValidationError(
        "ChoiMatrix: partial trace over the channel factor must be 1/2");
}

ChoiMatrix affine_to_choi(const AffineChannel& ch) {
  return ChoiMatrix(choi_density(ch));
}

KrausChannel choi_to_kraus(const ChoiMatrix& choi) {
  auto eig = herm_eig4(choi.matrix());
  std::vector<CMat2> ops;
  for (int n = 0; n < 4; ++n) {
    if (eig.values[n] <= 1e-12) continue;
    double w = std::sqrt(2.0 * eig.values[n]);
    CMat2 k;
    for (int i = 0; i < 2; ++i)
      for (int a = 0; a < 2; ++a) k(a, i) = w * eig.vectors(2 * i + a, n);
    ops.push_back(k);
  }
  return KrausChannel(std::move(ops));
}

void validate_affine(const AffineChannel& ch) {
  auto sv = singular_values(ch.lambda);
  if (sv[0] > 1.0 + 1e-10)
    throw ValidationError("channel is not a Bloch-ball contraction");
  auto eig = herm_eig4(choi_density(ch));
  if (eig.values[3] < kChoiPsdTol)
    throw ValidationError("channel is not completely positive");
}

AffineChannel amplitude_damping(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0))
    throw InvalidParameter("amplitude_damping: gamma must lie in [0,1]");
  double s = std::sqrt(1.0 - gamma);
  return {Mat3::diagonal(s, s, 1.0 - gamma), {0.0, 0.0, gamma}};
}

AffineChannel generalized_depolarizing(const std::array<double, 4>& p) {
  double sum = 0.0;
  for (double v : p) {
    if (v < -1e-12)
      throw InvalidParameter(
          "generalized_depolarizing: probabilities must be nonnegative");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw InvalidParameter(
        "generalized_depolarizing: probabilities must sum to one");
  double l1 = p[0] + p[1] - p[2] - p[3];
  double l2 = p[0] - p[1] + p[2] - p[3];
  double l3 = p[0] - p[1] - p[2] + p[3];
  return {Mat3::diagonal(l1, l2, l3), {}};
}

AffineChannel completely_dephasing() {
  return {Mat3::diagonal(0.0, 0.0, 1.0), {}};
}

AffineChannel unitary_channel(const Vec3& axis, double angle) {
  double n = norm(axis);
  if (n < 1e-12)
    throw InvalidParameter("unitary_channel: rotation axis must be nonzero");
  Vec3 u = (1.0 / n) * axis;
  double c = std::cos(angle), s = std::sin(angle);
  // Rodrigues form R = c 1 + s [u]_x + (1-c) u u^T.
  Mat3 r = c * Mat3::identity() + (1.0 - c) * outer(u, u);
  r(0, 1) += -s * u[2];
  r(0, 2) += s * u[1];
  r(1, 0) += s * u[2];
  r(1, 2) += -s * u[0];
  r(2, 0) += -s * u[1];
  r(2, 1) += s * u[0];
  return {r, {}};
}

AffineChannel identity_channel() { return {Mat3::identity(), {}}; }

AffineChannel named_channel(const std::string& name,
                            const std::map<std::string, double>& params) {
  auto expect_keys = [&](std::initializer_list<const char*> keys) {
    if (params.size() != keys.size())
      throw SchemaError("named_channel: wrong parameter set for " + name);
    for (const char* k : keys)
      if (params.find(k) == params.end())
        throw SchemaError("named_channel: missing parameter " +
                          std::string(k) + " for " + name);
  };
  if (name == "amplitude_damping") {
    expect_keys({"gamma"});
    return amplitude_damping(params.at("gamma"));
  }
  if (name == "generalized_depolarizing") {
    expect_keys({"p0", "p1", "p2", "p3"});
    return generalized_depolarizing(
        {params.at("p0"), params.at("p1"), params.at("p2"), params.at("p3")});
  }
  if (name == "dephasing") {
    expect_keys({});
    return completely_dephasing();
  }
  if (name == "unitary") {
    expect_keys({"nx", "ny", "nz", "theta"});
    return unitary_channel({params.at("nx"), params.at("ny"), params.at("nz")},
                           params.at("theta"));
  }
  throw SchemaError("named_channel: unknown family " + name);
}

KrausChannel random_cptp(Rng& rng, int kraus_rank) {
  if (kraus_rank < 1 || kraus_rank > 4)
    throw InvalidParameter("random_cptp: kraus_rank must lie in 1..4");
  const int rows = 2 * kraus_rank;
  for (;;) {
    // Two columns of complex Gaussians, orthonormalized: the stacked Kraus
    // blocks then form an isometry, so completeness holds by construction.
    std::vector<cxd> g(static_cast<std::size_t>(rows) * 2);
    for (auto& v : g) {
      double re = rng.normal();
      double im = rng.normal();
      v = cxd(re, im);
    }
    auto col = [&](int c, int r) -> cxd& {
      return g[static_cast<std::size_t>(2 * r + c)];
    };

    double n0 = 0.0;
    for (int r = 0; r < rows; ++r) n0 += std::norm(col(0, r));
    n0 = std::sqrt(n0);
    if (n0 < 1e-6) continue;
    for (int r = 0; r < rows; ++r) col(0, r) /= n0;

    cxd ip = 0.0;
    for (int r = 0; r < rows; ++r) ip += std::conj(col(0, r)) * col(1, r);
    for (int r = 0; r < rows; ++r) col(1, r) -= ip * col(0, r);
    double n1 = 0.0;
    for (int r = 0; r < rows; ++r) n1 += std::norm(col(1, r));
    n1 = std::sqrt(n1);
    if (n1 < 1e-6) continue;
    for (int r = 0; r < rows; ++r) col(1, r) /= n1;

    std::vector<CMat2> ops;
    ops.reserve(static_cast<std::size_t>(kraus_rank));
    for (int k = 0; k < kraus_rank; ++k)
      ops.push_back(CMat2{col(0, 2 * k), col(1, 2 * k), col(0, 2 * k + 1),
                          col(1, 2 * k + 1)});
    return KrausChannel(std::move(ops));
  }
}

AffineChannel random_pauli_channel(Rng& rng) {
  std::array<double, 4> e{};
  double sum = 0.0;
  for (auto& v : e) {
    v = -std::log1p(-rng.uniform01());
    sum += v;
  }
  for (auto& v : e) v /= sum;
  return generalized_depolarizing(e);
}

AffineChannel random_semiclassical_channel(Rng& rng) {
  Vec3 n = rng.sphere();
  double c = rng.uniform(-1.0, 1.0);
  Vec3 vdir = rng.sphere();
  double vmag = rng.uniform01() * (1.0 - std::abs(c));
  return {outer(n, vmag * vdir), c * n};
}

Mat3 random_rotation(Rng& rng) {
  for (;;) {
    double w = rng.normal();
    double x = rng.normal();
    double y = rng.normal();
    double z = rng.normal();
    double n = std::sqrt(w * w + x * x + y * y + z * z);
    if (n < 1e-12) continue;
    w /= n;
    x /= n;
    y /= n;
    z /= n;
    Mat3 r;
    r(0, 0) = 1.0 - 2.0 * (y * y + z * z);
    r(0, 1) = 2.0 * (x * y - z * w);
    r(0, 2) = 2.0 * (x * z + y * w);
    r(1, 0) = 2.0 * (x * y + z * w);
    r(1, 1) = 1.0 - 2.0 * (x * x + z * z);
    r(1, 2) = 2.0 * (y * z - x * w);
    r(2, 0) = 2.0 * (x * z - y * w);
    r(2, 1) = 2.0 * (y * z + x * w);
    r(2, 2) = 1.0 - 2.0 * (x * x + y * y);
    return r;
  }
}

bool is_unital(const AffineChannel& ch) { return norm(ch.t) <= 1e-10; }

bool is_entanglement_breaking(const AffineChannel& ch) {
  CMat4 pt = partial_transpose_second(choi_density(ch));
  return herm_eig4(pt).values[3] >= -1e-10;
}

std::array<double, 3> singular_values(const Mat3& m) {
  auto eig = sym_eig3(transpose(m) * m);
  std::array<double, 3> sv;
  for (int i = 0; i < 3; ++i) sv[static_cast<std::size_t>(i)] =
      std::sqrt(std::max(0.0, eig.values[i]));
  return sv;
}

}  // namespace qchan
