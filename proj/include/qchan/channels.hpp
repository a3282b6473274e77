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

// Qubit channel representations and conversions.
//
// Conventions used throughout:
//   * Pauli basis sigma_0..sigma_3 with sigma_3|0> = |0>.
//   * A state is rho = (1 + r.sigma)/2 with Bloch vector |r| <= 1.
//   * A channel acts affinely on Bloch vectors, r -> Lambda r + t, with
//     Lambda_ij = Tr[sigma_i E(sigma_j)]/2 and t_i = Tr[sigma_i E(1)]/2.
//   * The Choi matrix is the trace-one state (1 x E)|beta><beta| with
//     |beta> = (|00> + |11>)/sqrt(2); the channel acts on the second factor.

#ifndef QCHAN_CHANNELS_HPP_
#define QCHAN_CHANNELS_HPP_

#include <array>
#include <map>
#include <string>
#include <vector>

#include "qchan/linalg.hpp"
#include "qchan/rng.hpp"

namespace qchan {

// sigma_0 = 1, sigma_1 = X, sigma_2 = Y, sigma_3 = Z.
const CMat2& pauli(int i);

CMat2 density_from_bloch(const Vec3& r);
Vec3 bloch_from_density(const CMat2& rho);

// Kraus representation. The constructor enforces 1..8 operators and the
// completeness relation sum_i K_i^dag K_i = 1 to within 1e-8.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<CMat2> ops);

  const std::vector<CMat2>& ops() const { return ops_; }

  // sum_i K_i rho K_i^dag
  CMat2 apply_density(const CMat2& rho) const;

  // The same conjugation expressed on Bloch vectors.
  Vec3 apply(const Vec3& r) const;

 private:
  std::vector<CMat2> ops_;
};

// Affine (Lambda, t) representation. Aggregates from this header are valid
// CPTP maps by construction; data from outside goes through validate_affine.
struct AffineChannel {
  Mat3 lambda;
  Vec3 t;
};

AffineChannel kraus_to_affine(const KrausChannel& ch);

Vec3 apply(const AffineChannel& ch, const Vec3& r);

// outer ∘ inner (apply `inner` first).
AffineChannel compose(const AffineChannel& outer, const AffineChannel& inner);

// Choi state of a channel in affine form, without any validation.
CMat4 choi_density(const AffineChannel& ch);

// Validated trace-one Choi matrix: PSD to within -1e-8 (else the map was not
// completely positive), unit trace, and partial trace over the channel
// factor equal to 1/2 (trace preservation).
class ChoiMatrix {
 public:
  explicit ChoiMatrix(const CMat4& m);

  const CMat4& matrix() const { return m_; }

 private:
  CMat4 m_;
};

ChoiMatrix affine_to_choi(const AffineChannel& ch);

// Kraus operators from the Choi eigendecomposition. Eigenvalues below 1e-12
// are dropped. Reshaping convention: an eigenvector v indexed as v[2*i + a]
// (i = input index from the reference side, a = output index) becomes the
// operator K(a, i) = sqrt(2 e) v[2*i + a].
KrausChannel choi_to_kraus(const ChoiMatrix& choi);

// Throws ValidationError unless singular values of Lambda are <= 1 + 1e-10
// and the Choi matrix is PSD to within -1e-8.
void validate_affine(const AffineChannel& ch);

// Named families.
AffineChannel amplitude_damping(double gamma);
AffineChannel generalized_depolarizing(const std::array<double, 4>& p);
AffineChannel completely_dephasing();
AffineChannel unitary_channel(const Vec3& axis, double angle);
AffineChannel identity_channel();

// Dispatch by family name: "amplitude_damping" {gamma},
// "generalized_depolarizing" {p0,p1,p2,p3}, "dephasing" {}, "unitary"
// {nx,ny,nz,theta}. Unknown names or wrong key sets raise SchemaError;
// out-of-domain values raise InvalidParameter.
AffineChannel named_channel(const std::string& name,
                            const std::map<std::string, double>& params);

// Random CPTP channel with the given Kraus rank (1..4): two orthonormalized
// columns of a complex Gaussian (2*rank) x 2 matrix, sliced into rank
// operators. Rank 1 gives a Haar-random unitary.
KrausChannel random_cptp(Rng& rng, int kraus_rank);

// Random Pauli channel (probabilities uniform on the simplex). Unital.
AffineChannel random_pauli_channel(Rng& rng);

// Random measure-and-prepare channel along a random axis n: Lambda = n v^T,
// t = c n with |v| + |c| <= 1, which is CPTP and has zero quantumness.
AffineChannel random_semiclassical_channel(Rng& rng);

// Haar-random rotation (unit quaternion construction).
Mat3 random_rotation(Rng& rng);

// ||t|| <= 1e-10.
bool is_unital(const AffineChannel& ch);

// PPT test on the Choi matrix: for two qubits, separability of the Choi
// state is equivalent to the partial transpose being PSD (within -1e-10).
bool is_entanglement_breaking(const AffineChannel& ch);

// Nonincreasing singular values of a 3x3 matrix.
std::array<double, 3> singular_values(const Mat3& m);

}  // namespace qchan

#endif  // QCHAN_CHANNELS_HPP_
