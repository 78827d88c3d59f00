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

#include "core/bloch.hpp"

#include <cmath>
#include <stdexcept>

namespace rsp {

namespace {

Mat4c kron(const Mat2c& a, const Mat2c& b) {
  Mat4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

double min_eigenvalue_hermitian(const Mat4c& m) {
  Mat4c h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat4c> solver(h);
  return solver.eigenvalues().minCoeff();
}

}  // namespace

Mat4c to_density_matrix(const TwoQubitState& state) {
  const Mat2c id = Mat2c::Identity();
  Mat4c rho = kron(id, id);
  for (int i = 0; i < 3; ++i) {
    rho += state.x(i) * kron(pauli(i), id);
    rho += state.y(i) * kron(id, pauli(i));
    for (int j = 0; j < 3; ++j) rho += state.T(i, j) * kron(pauli(i), pauli(j));
  }
  return 0.25 * rho;
}

ValidityReport validate_state(const TwoQubitState& state, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("validate_state: tol must be > 0");
  const Mat4c rho = to_density_matrix(state);
  ValidityReport report;
  report.trace_error = std::abs(rho.trace() - complexd(1.0, 0.0));
  report.hermiticity_error = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  report.min_eigenvalue = min_eigenvalue_hermitian(rho);
  report.valid = report.min_eigenvalue >= -tol && report.trace_error < 1e-10;
  return report;
}

double ppt_min_eigenvalue(const TwoQubitState& state) {
  const Mat4c rho = to_density_matrix(state);
  Mat4c pt;
  // Transpose on side B: (a,b),(c,d) -> (a,d),(c,b) with index 2a+b.
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) pt(2 * a + b, 2 * c + d) = rho(2 * a + d, 2 * c + b);
  return min_eigenvalue_hermitian(pt);
}

TwoQubitState werner(double lambda) {
  TwoQubitState s;
  s.T = -lambda * Mat3::Identity();
  return s;
}

TwoQubitState polarized_werner(double lambda, double t) {
  TwoQubitState s;
  s.x = Vec3(0, 0, t);
  s.y = Vec3(0, 0, t);
  s.T = -lambda * Mat3::Identity();
  return s;
}

TwoQubitState bell_diagonal(double t1, double t2, double t3) {
  TwoQubitState s;
  s.T = Vec3(t1, t2, t3).asDiagonal();
  if (!validate_state(s).valid)
    throw std::invalid_argument("bell_diagonal: coefficients do not describe a state");
  return s;
}

bool is_separable_bell_diagonal(double t1, double t2, double t3) {
  return std::abs(t1) + std::abs(t2) + std::abs(t3) <= 1.0;
}

double entanglement_threshold(double lambda) {
  const double radicand = 1.0 - 2.0 * lambda - 3.0 * lambda * lambda;
  if (radicand < 0.0)
    throw std::domain_error("entanglement_threshold: requires lambda in [0, 1/3]");
  return 0.5 * std::sqrt(radicand);
}

double geometric_discord_bell_diagonal(double t1, double t2, double t3) {
  double a = t1 * t1, b = t2 * t2, c = t3 * t3;
  return 0.25 * (a + b + c - std::max({a, b, c}));
}

bool bell_diagonal_coefficients(const TwoQubitState& state, Vec3* t, double tol) {
  if (state.x.cwiseAbs().maxCoeff() > tol || state.y.cwiseAbs().maxCoeff() > tol)
    return false;
  Mat3 off = state.T;
  off.diagonal().setZero();
  if (off.cwiseAbs().maxCoeff() > tol) return false;
  if (t) *t = state.T.diagonal();
  return true;
}

Frame make_frame(const Vec3& beta) {
  const double norm = beta.norm();
  if (!(norm > 0.0)) throw std::invalid_argument("make_frame: zero vector");
  Frame f;
  f.beta = beta / norm;
  int least = 0;
  double best = std::abs(f.beta(0));
  for (int i = 1; i < 3; ++i) {
    if (std::abs(f.beta(i)) < best) {
      best = std::abs(f.beta(i));
      least = i;
    }
  }
  Vec3 axis = Vec3::Unit(least);
  Vec3 e1 = axis - axis.dot(f.beta) * f.beta;
  f.e1 = e1.normalized();
  f.e2 = f.beta.cross(f.e1);
  return f;
}

}  // namespace rsp
