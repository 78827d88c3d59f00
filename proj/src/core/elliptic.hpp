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

#ifndef RSP_CORE_ELLIPTIC_HPP
#define RSP_CORE_ELLIPTIC_HPP

namespace rsp {

/// Complete elliptic integral of the second kind,
///   E(k) = int_0^{pi/2} sqrt(1 - k^2 sin^2 phi) dphi,
/// evaluated by the arithmetic-geometric-mean iteration. Decreasing from
/// E(0) = pi/2 to E(1) = 1. Throws std::domain_error for k outside [0, 1].
double elliptic_E(double k);

}  // namespace rsp

#endif  // RSP_CORE_ELLIPTIC_HPP
