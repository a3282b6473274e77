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

#include "qchan/quantumness.hpp"

#include <algorithm>
#include <cmath>

#include "qchan/coherence.hpp"
#include "qchan/rng.hpp"

namespace qchan {

namespace {

constexpr double kDegenerateTol = 1e-9;
constexpr double kStructuralTol = 1e-10;

double quadratic_form(const Mat3& m, const Vec3& n) {
  return dot(n, m * n);
}

}  // namespace

Mat3 quantumness_matrix(const AffineChannel& ch) {
  Mat3 g = ch.lambda * transpose(ch.lambda);
  return 0.5 * (g + 5.0 * outer(ch.t, ch.t));
}

QuantumnessReport quantumness(const AffineChannel& ch) {
  Mat3 m = quantumness_matrix(ch);
  SymEig3 eig = sym_eig3(m);
  double q = eig.values[1] + eig.values[2];
  q = std::max(q, 0.0);
  UnitVector3 top(eig.vectors.column(0));
  bool degenerate = eig.values[0] - eig.values[1] <= kDegenerateTol;
  return {q, eig.values, top, m, degenerate};
}

double fixed_basis_quantumness(const AffineChannel& ch, const UnitVector3& n) {
  Mat3 m = quantumness_matrix(ch);
  return std::max(trace(m) - quadratic_form(m, n.vec()), 0.0);
}

McEstimate mc_quantumness(const AffineChannel& ch, const UnitVector3& n,
                          int samples, std::uint64_t seed) {
  if (samples < 1000)
    throw InvalidParameter("mc_quantumness: need at least 1000 samples");
  Rng rng(seed);
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int i = 0; i < samples; ++i) {
    Vec3 r = rng.ball();
    Vec3 out = ch.lambda * r + ch.t;
    double value = norm_sq(cross(out, n.vec()));
    sum += value;
    sum_sq += value * value;
  }
  double count = static_cast<double>(samples);
  double mean = sum / count;
  double var = std::max(sum_sq / count - mean * mean, 0.0);
  const double scale = 2.5;  // the normalization N_C = 5/2
  return {scale * mean, scale * std::sqrt(var / count)};
}

GridMin grid_min_quantumness(const AffineChannel& ch, int resolution) {
  if (resolution < 16)
    throw InvalidParameter("grid_min_quantumness: resolution must be >= 16");
  Mat3 m = quantumness_matrix(ch);
  double tr = trace(m);
  double best = -1.0;
  double best_alpha = 0.0;
  double best_beta = 0.0;
  for (int i = 0; i < resolution; ++i) {
    double alpha = static_cast<double>(i) * kPi /
                   static_cast<double>(resolution - 1);
    for (int j = 0; j < 2 * resolution; ++j) {
      double beta = static_cast<double>(j) * kPi /
                    static_cast<double>(resolution);
      IncoherentBasis basis(alpha, beta);
      double value = tr - quadratic_form(m, basis.n_hat());
      if (best < 0.0 || value < best) {
        best = value;
        best_alpha = alpha;
        best_beta = beta;
      }
    }
  }
  IncoherentBasis arg(best_alpha, best_beta);
  return {std::max(best, 0.0), UnitVector3(arg.n_hat())};
}

bool is_semiclassical(const AffineChannel& ch, double tol) {
  SymEig3 eig = sym_eig3(quantumness_matrix(ch));
  return eig.values[1] + eig.values[2] <= tol;
}

Classification classify(const AffineChannel& ch) {
  QuantumnessReport report = quantumness(ch);
  Mat3 gram = ch.lambda * transpose(ch.lambda);
  bool unitary = max_abs_diff(gram, Mat3::identity()) <= kStructuralTol &&
                 norm(ch.t) <= kStructuralTol;
  bool unital = is_unital(ch);
  bool eb = is_entanglement_breaking(ch);

  Classification c;
  c.unitary = unitary;
  c.semiclassical = is_semiclassical(ch);
  c.unital = unital;
  c.entanglement_breaking = eb;
  c.eb_bound_ok = !eb || report.q < 0.5;
  c.unital_eb_bound_ok = !(eb && unital) || report.q <= 0.125 + 1e-10;
  c.unitary_q_consistent = unitary == (std::abs(report.q - 1.0) <= 1e-9);
  return c;
}

double pure_state_quantumness_mc(const AffineChannel& ch, int samples,
                                 int resolution, std::uint64_t seed) {
  if (samples < 1000)
    throw InvalidParameter("pure_state_quantumness_mc: need >= 1000 samples");
  if (resolution < 16)
    throw InvalidParameter(
        "pure_state_quantumness_mc: resolution must be >= 16");
  Rng rng(seed);
  Mat3 second_moment;
  for (int i = 0; i < samples; ++i) {
    Vec3 r = rng.sphere();
    Vec3 out = ch.lambda * r + ch.t;
    second_moment = second_moment + outer(out, out);
  }
  second_moment = (1.0 / static_cast<double>(samples)) * second_moment;

  // mean |v x n|^2 = tr S - n^t S n for the sampled second moment S; the
  // minimization over the axis grid happens after accumulation.
  double tr = trace(second_moment);
  double best = -1.0;
  for (int i = 0; i < resolution; ++i) {
    double alpha = static_cast<double>(i) * kPi /
                   static_cast<double>(resolution - 1);
    for (int j = 0; j < 2 * resolution; ++j) {
      double beta = static_cast<double>(j) * kPi /
                    static_cast<double>(resolution);
      IncoherentBasis basis(alpha, beta);
      double value = tr - quadratic_form(second_moment, basis.n_hat());
      if (best < 0.0 || value < best) best = value;
    }
  }
  return 1.5 * std::max(best, 0.0);
}

}  // namespace qchan
