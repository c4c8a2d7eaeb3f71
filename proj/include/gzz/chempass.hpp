// Copyright 2026 The gzz-forge Authors.
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

#ifndef GZZ_CHEMPASS_HPP
#define GZZ_CHEMPASS_HPP

#include <Eigen/Dense>

#include <vector>

#include "gzz/circuit.hpp"
#include "gzz/io.hpp"

namespace gzz {

// (1; cos, sin; -sin, cos; 1)
Eigen::Matrix4cd givens_reference(double phi);

// Two-qubit Givens rotation with two ZZ(-phi) gates and local Cliffords.
Circuit givens_compile(double phi);

// Pairs (0,1), (2,3), ...
HollowSymmetricd nearest_neighbor_pairs(int n);

// Givens layer on all pairs; each ZZ sub-layer becomes one GZZ. n even.
Circuit givens_layer_compile(double phi, int n);

struct DynamicsSpec {
  int n = 0;
  int m = 0;
  std::vector<HollowSymmetricd> a;  // m-1 interaction layers
  std::vector<double> phi;          // m+1 Givens angles
  double theta0 = 0, theta1 = 0;
};

DynamicsSpec dynamics_from_json(const json& j);

// G(phi_0), R_Z(theta_0/1), then G(phi_k) GZZ(A_k) for k = 1..m-1, then G(phi_m).
Circuit dynamics_circuit(const DynamicsSpec& s);

}  // namespace gzz

#endif  // GZZ_CHEMPASS_HPP
