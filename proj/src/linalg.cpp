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

#include "qchan/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace qchan {

namespace {

constexpr int kMaxSweeps = 64;

// Jacobi tangent for the 2x2 block [[app, r], [r, aqq]], r > 0. Picks the
// smaller-magnitude root so rotations stay below 45 degrees.
double jacobi_tangent(double app, double aqq, double r) {
  double tau = (aqq - app) / (2.0 * r);
  if (std::abs(tau) > 1e150) return 1.0 / (2.0 * tau);
  double s = tau >= 0.0 ? 1.0 : -1.0;
  return s / (std::abs(tau) + std::sqrt(tau * tau + 1.0));
}

}  // namespace

SymEig3 sym_eig3(const Mat3& s) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (std::abs(s(i, j) - s(j, i)) > 1e-12)
        throw InvalidParameter("sym_eig3: matrix is not symmetric");

  Mat3 a = 0.5 * (s + transpose(s));
  Mat3 v = Mat3::identity();
  double scale = std::max(1.0, max_abs(a));

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off =
        std::abs(a(0, 1)) + std::abs(a(0, 2)) + std::abs(a(1, 2));
    if (off <= 1e-14 * scale) break;

    for (int p = 0; p < 3; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        double apq = a(p, q);
        if (std::abs(apq) <= 1e-18 * scale) continue;

        double t = jacobi_tangent(a(p, p), a(q, q), apq);
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double sn = t * c;

        // A <- R^T A R and V <- V R with the (p,q) block of R = [[c, sn],
        // [-sn, c]].
        for (int k = 0; k < 3; ++k) {
          double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - sn * akq;
          a(k, q) = sn * akp + c * akq;
        }
        for (int k = 0; k < 3; ++k) {
          double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - sn * aqk;
          a(q, k) = sn * apk + c * aqk;
        }
        for (int k = 0; k < 3; ++k) {
          double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - sn * vkq;
          v(k, q) = sn * vkp + c * vkq;
        }
      }
    }
  }

  std::array<int, 3> idx{0, 1, 2};
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int i, int j) { return a(i, i) > a(j, j); });

  SymEig3 out;
  for (int j = 0; j < 3; ++j) {
    out.values[j] = a(idx[j], idx[j]);
    for (int i = 0; i < 3; ++i) out.vectors(i, j) = v(i, idx[j]);
  }
  return out;
}

HermEig4 herm_eig4(const CMat4& h) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (std::abs(h(i, j) - std::conj(h(j, i))) > 1e-12)
        throw InvalidParameter("herm_eig4: matrix is not Hermitian");

  CMat4 a = 0.5 * (h + adjoint(h));
  CMat4 v = CMat4::identity();
  double scale = std::max(1.0, max_abs(a));

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) off += std::abs(a(p, q));
    if (off <= 1e-14 * scale) break;

    for (int p = 0; p < 4; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        cxd b = a(p, q);
        double r = std::abs(b);
        if (r <= 1e-18 * scale) continue;

        // Strip the phase of a(p,q), then rotate as in the real case. The
        // combined unitary J has block [[c, sn], [-sn*u, c*u]], u = conj(b)/r.
        cxd u = std::conj(b) / r;
        double t = jacobi_tangent(std::real(a(p, p)), std::real(a(q, q)), r);
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double sn = t * c;

        for (int k = 0; k < 4; ++k) {
          cxd akp = a(k, p), akq = u * a(k, q);
          a(k, p) = c * akp - sn * akq;
          a(k, q) = sn * akp + c * akq;
        }
        for (int k = 0; k < 4; ++k) {
          cxd apk = a(p, k), aqk = std::conj(u) * a(q, k);
          a(p, k) = c * apk - sn * aqk;
          a(q, k) = sn * apk + c * aqk;
        }
        for (int k = 0; k < 4; ++k) {
          cxd vkp = v(k, p), vkq = u * v(k, q);
          v(k, p) = c * vkp - sn * vkq;
          v(k, q) = sn * vkp + c * vkq;
        }
      }
    }
  }

  std::array<int, 4> idx{0, 1, 2, 3};
  std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) {
    return std::real(a(i, i)) > std::real(a(j, j));
  });

  HermEig4 out;
  for (int j = 0; j < 4; ++j) {
    out.values[static_cast<std::size_t>(j)] = std::real(a(idx[j], idx[j]));
    for (int i = 0; i < 4; ++i) out.vectors(i, j) = v(i, idx[j]);
  }
  return out;
}

}  // namespace qchan
