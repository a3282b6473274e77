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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "qchan/linalg.hpp"
#include "qchan/rng.hpp"

using namespace qchan;

namespace {

Mat3 random_symmetric(Rng& rng) {
  Mat3 s;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      double v = rng.uniform(-1.0, 1.0);
      s(i, j) = v;
      s(j, i) = v;
    }
  return s;
}

CMat4 random_hermitian(Rng& rng) {
  CMat4 g;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double re = rng.normal();
      double im = rng.normal();
      g(i, j) = cxd(re, im);
    }
  return 0.5 * (g + adjoint(g));
}

}  // namespace

//==============================================================================
// sym_eig3
//==============================================================================

TEST_CASE("sym_eig3 diagonal matrices pass through") {
  auto e = sym_eig3(Mat3::identity());
  for (int i = 0; i < 3; ++i) CHECK(e.values[i] == doctest::Approx(1.0));

  auto d = sym_eig3(Mat3::diagonal(0.5, 0.5, 0.0));
  CHECK(d.values[0] == doctest::Approx(0.5));
  CHECK(d.values[1] == doctest::Approx(0.5));
  CHECK(d.values[2] == doctest::Approx(0.0));
  // Degenerate pair keeps input order: column 0 stays the x axis.
  CHECK(std::abs(d.vectors(0, 0)) == doctest::Approx(1.0));
}

TEST_CASE("sym_eig3 rank-two block example") {
  // Half of [[3/2,0,1],[0,0,0],[1,0,3/2]]; the 2x2 block 3/4 +- 1/2 gives
  // eigenvalues 5/4, 1/4, 0 with the top eigenvector along (1,0,1)/sqrt(2).
  Mat3 s;
  s(0, 0) = 0.75;
  s(0, 2) = 0.5;
  s(2, 0) = 0.5;
  s(2, 2) = 0.75;
  auto e = sym_eig3(s);
  CHECK(e.values[0] == doctest::Approx(1.25).epsilon(1e-12));
  CHECK(e.values[1] == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(std::abs(e.values[2]) < 1e-12);
  Vec3 top = e.vectors.column(0);
  double overlap = std::abs(dot(top, Vec3{1.0, 0.0, 1.0} * (1.0 / std::sqrt(2.0))));
  CHECK(overlap == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("sym_eig3 rejects asymmetric input") {
  Mat3 s;
  s(0, 1) = 1.0;
  CHECK_THROWS_AS(sym_eig3(s), InvalidParameter);
}

TEST_CASE("sym_eig3 random reconstruction, orthonormality, ordering") {
  Rng rng(12345);
  for (int trial = 0; trial < 10000; ++trial) {
    Mat3 s = random_symmetric(rng);
    auto e = sym_eig3(s);

    CHECK(e.values[0] >= e.values[1]);
    CHECK(e.values[1] >= e.values[2]);

    double trace_gap = std::abs(e.values[0] + e.values[1] + e.values[2] - trace(s));
    CHECK(trace_gap < 1e-10);

    // V diag(e) V^T == S
    Mat3 rec = e.vectors * Mat3::diagonal(e.values[0], e.values[1], e.values[2]) *
               transpose(e.vectors);
    CHECK(max_abs_diff(rec, s) < 1e-9);

    Mat3 gram = transpose(e.vectors) * e.vectors;
    CHECK(max_abs_diff(gram, Mat3::identity()) < 1e-10);

    for (int j = 0; j < 3; ++j) {
      Vec3 v = e.vectors.column(j);
      Vec3 resid = s * v - e.values[j] * v;
      CHECK(norm(resid) < 1e-10);
    }
  }
}

//==============================================================================
// herm_eig4
//==============================================================================

TEST_CASE("herm_eig4 scaled identity") {
  auto e = herm_eig4(0.25 * CMat4::identity());
  for (int i = 0; i < 4; ++i) CHECK(e.values[i] == doctest::Approx(0.25));
}

TEST_CASE("herm_eig4 rank-one projector") {
  CVec4 bell;
  bell[0] = 1.0 / std::sqrt(2.0);
  bell[3] = 1.0 / std::sqrt(2.0);
  auto e = herm_eig4(outer(bell, bell));
  CHECK(e.values[0] == doctest::Approx(1.0).epsilon(1e-12));
  for (int i = 1; i < 4; ++i) CHECK(std::abs(e.values[i]) < 1e-12);

  cxd overlap = 0.0;
  for (int i = 0; i < 4; ++i) overlap += std::conj(e.vectors(i, 0)) * bell[i];
  CHECK(std::abs(overlap) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("herm_eig4 two-level diagonal") {
  CMat4 d;
  d(0, 0) = 0.5;
  d(3, 3) = 0.5;
  auto e = herm_eig4(d);
  CHECK(e.values[0] == doctest::Approx(0.5));
  CHECK(e.values[1] == doctest::Approx(0.5));
  CHECK(std::abs(e.values[2]) < 1e-12);
  CHECK(std::abs(e.values[3]) < 1e-12);
}

TEST_CASE("herm_eig4 rejects non-Hermitian input") {
  CMat4 h;
  h(0, 1) = cxd(0.0, 1.0);
  h(1, 0) = cxd(0.0, 1.0);  // would need -i
  CHECK_THROWS_AS(herm_eig4(h), InvalidParameter);
}

TEST_CASE("herm_eig4 random reconstruction and unitarity") {
  Rng rng(777);
  for (int trial = 0; trial < 2000; ++trial) {
    CMat4 h = random_hermitian(rng);
    auto e = herm_eig4(h);

    for (int i = 0; i + 1 < 4; ++i) CHECK(e.values[i] >= e.values[i + 1]);

    CMat4 diag;
    for (int i = 0; i < 4; ++i) diag(i, i) = e.values[i];
    CMat4 rec = e.vectors * diag * adjoint(e.vectors);
    CHECK(max_abs_diff(rec, h) < 1e-9);

    CMat4 gram = adjoint(e.vectors) * e.vectors;
    CHECK(max_abs_diff(gram, CMat4::identity()) < 1e-10);
  }
}

//==============================================================================
// sampler
//==============================================================================

TEST_CASE("rng streams are deterministic") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    Vec3 va = a.ball();
    Vec3 vb = b.ball();
    CHECK(va[0] == vb[0]);
    CHECK(va[1] == vb[1]);
    CHECK(va[2] == vb[2]);
  }

  Rng s0(7, 0), s1(7, 1);
  CHECK(s0.next_u64() != s1.next_u64());
  CHECK(derive_seed(7, 0) != derive_seed(7, 1));
}

TEST_CASE("uniform01 stays in [0,1)") {
  Rng rng(1);
  for (int i = 0; i < 100000; ++i) {
    double u = rng.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("ball sampler moments") {
  Rng rng(2024);
  const int n = 1000000;
  Vec3 mean;
  Mat3 second;
  int inside_half = 0;
  for (int i = 0; i < n; ++i) {
    Vec3 r = rng.ball();
    double rn = norm(r);
    CHECK(rn <= 1.0 + 1e-12);
    if (rn <= 0.5) ++inside_half;
    mean = mean + r;
    second = second + outer(r, r);
  }
  mean = (1.0 / n) * mean;
  second = (1.0 / n) * second;

  for (int i = 0; i < 3; ++i) CHECK(std::abs(mean[i]) < 3e-3);
  // Second moment of the uniform ball is identity/5.
  CHECK(max_abs_diff(second, Mat3::diagonal(0.2, 0.2, 0.2)) < 2e-3);
  // Radius^3 is uniform, so a fraction (1/2)^3 lands within radius 1/2.
  double frac = static_cast<double>(inside_half) / n;
  CHECK(std::abs(frac - 0.125) < 1e-3);
}

TEST_CASE("sphere sampler is unit norm and centered") {
  Rng rng(5);
  const int n = 100000;
  Vec3 mean;
  for (int i = 0; i < n; ++i) {
    Vec3 v = rng.sphere();
    CHECK(norm(v) == doctest::Approx(1.0).epsilon(1e-12));
    mean = mean + v;
  }
  mean = (1.0 / n) * mean;
  for (int i = 0; i < 3; ++i) CHECK(std::abs(mean[i]) < 0.01);
}
