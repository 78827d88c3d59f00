// Copyright 2026 The rsplib Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RSP_CORE_BLOCH_HPP
#define RSP_CORE_BLOCH_HPP

#include "core/types.hpp"

namespace rsp {

/// Two-qubit state in Bloch form: local vectors x (side A), y (side B) and
/// 3x3 correlation tensor T, i.e.
///   rho = 1/4 [ I(x)I + x.sigma (x) I + I (x) y.sigma + sum_ij T_ij sigma_i (x) sigma_j ].
struct TwoQubitState {
  Vec3 x = Vec3::Zero();
  Vec3 y = Vec3::Zero();
  Mat3 T = Mat3::Zero();
};

struct ValidityReport {
  double min_eigenvalue = 0.0;   // of the reconstructed density matrix
  double trace_error = 0.0;      // |trace - 1|
  double hermiticity_error = 0.0;
  bool valid = false;
};

/// Default tolerance for positive-semidefiniteness checks. Boundary states
/// (e.g. the polarized Werner family at |t| = (1-lambda)/2) sit exactly on
/// the positivity edge.
inline constexpr double kPsdTol = 1e-9;

Mat4c to_density_matrix(const TwoQubitState& state);

ValidityReport validate_state(const TwoQubitState& state, double tol = kPsdTol);

/// Minimum eigenvalue of the partial transpose (transpose on side B).
/// Negative iff entangled; for two qubits the PPT criterion is exact.
double ppt_min_eigenvalue(const TwoQubitState& state);

/// rho(0, 0, -lambda I). Valid for lambda in [-1/3, 1].
TwoQubitState werner(double lambda);

/// rho(t z, t z, -lambda I). Valid for |t| <= (1 - lambda)/2.
TwoQubitState polarized_werner(double lambda, double t);

/// rho(0, 0, diag(t1, t2, t3)); throws std::invalid_argument if the
/// coefficients do not describe a state.
TwoQubitState bell_diagonal(double t1, double t2, double t3);

/// |t1| + |t2| + |t3| <= 1, equivalent to PPT for this family.
bool is_separable_bell_diagonal(double t1, double t2, double t3);

/// For the family rho(t z, t z, -lambda I): entangled iff |t| exceeds
/// (1/2) sqrt(1 - 2 lambda - 3 lambda^2). Requires lambda in [0, 1/3].
double entanglement_threshold(double lambda);

/// 1/4 (sum of the two smallest t_i^2).
double geometric_discord_bell_diagonal(double t1, double t2, double t3);

/// True when x = y = 0 and T is diagonal (within tol); writes diag(T) to t.
bool bell_diagonal_coefficients(const TwoQubitState& state, Vec3* t,
                                double tol = 1e-12);

/// Deterministic right-handed frame with the given plane normal. e1 is built
/// by Gram-Schmidt against the coordinate axis least aligned with beta.
/// Throws std::invalid_argument on a zero vector.
Frame make_frame(const Vec3& beta);

}  // namespace rsp

#endif  // RSP_CORE_BLOCH_HPP
