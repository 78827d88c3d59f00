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

#ifndef RSP_CORE_TYPES_HPP
#define RSP_CORE_TYPES_HPP

#include <Eigen/Dense>
#include <complex>

namespace rsp {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;
using Mat2c = Eigen::Matrix2cd;
using Mat4c = Eigen::Matrix4cd;
using complexd = std::complex<double>;

/// Orthonormal right-handed triad {beta, e1, e2} with beta x e1 = e2.
/// The unit circle of target directions lives in span{e1, e2}.
struct Frame {
  Vec3 beta;
  Vec3 e1;
  Vec3 e2;

  /// Direction at angle phi on the target circle.
  Vec3 node(double phi) const { return std::cos(phi) * e1 + std::sin(phi) * e2; }

  /// World -> frame-local coordinates (local z axis = beta).
  Mat3 to_local() const {
    Mat3 p;
    p.row(0) = e1.transpose();
    p.row(1) = e2.transpose();
    p.row(2) = beta.transpose();
    return p;
  }

  /// Frame-local -> world coordinates.
  Mat3 to_world() const { return to_local().transpose(); }
};

inline const Mat2c& pauli(int i) {
  static const Mat2c sx = (Mat2c() << 0, 1, 1, 0).finished();
  static const Mat2c sy = (Mat2c() << 0, complexd(0, -1), complexd(0, 1), 0).finished();
  static const Mat2c sz = (Mat2c() << 1, 0, 0, -1).finished();
  static const Mat2c id = Mat2c::Identity();
  switch (i) {
    case 0: return sx;
    case 1: return sy;
    case 2: return sz;
    default: return id;
  }
}

}  // namespace rsp

#endif  // RSP_CORE_TYPES_HPP
