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

#ifndef GZZ_SIMULATE_HPP
#define GZZ_SIMULATE_HPP

#include <Eigen/Dense>

#include "gzz/circuit.hpp"

namespace gzz {

// Basis index x: qubit 0 is the most significant bit.
inline int qubit_bit(std::uint64_t x, int q, int n) { return int((x >> (n - 1 - q)) & 1u); }

struct DiagonalPhases {
  int n = 0;
  Eigen::VectorXd phases;  // radians, index = basis state
};

DiagonalPhases gzz_phases(const HollowSymmetricd& a);
// Phases of a diagonal gate on an n-qubit register; throws for other gates.
Eigen::VectorXd gate_phases(const Gate& g, int n);

// Exact phase vector of a circuit made of diagonal gates and X gates.
// X gates are tracked as basis relabeling; the net X parity must cancel.
DiagonalPhases simulate_diagonal(const Circuit& c);

// Dense unitary, n <= 10.
Eigen::MatrixXcd simulate_dense(const Circuit& c);
// Applies c to each column of `states` in place.
void apply_circuit(const Circuit& c, Eigen::MatrixXcd& states);

// Diagonal of c on inputs whose qubits >= data_qubits are |0>. Also returns
// the largest off-diagonal magnitude, so callers can tell it really is
// diagonal on that subspace.
struct RestrictedDiagonal {
  DiagonalPhases phases;
  double off_diagonal = 0;
  double min_modulus = 1;
};
RestrictedDiagonal restricted_diagonal(const Circuit& c, int data_qubits);

bool equal_up_to_global_phase(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v, double tol);
// min over one global phase of max_x |e^{i a_x} - e^{i(b_x + phi)}|.
double phase_distance(const DiagonalPhases& a, const DiagonalPhases& b);
// Exact comparison (no global freedom), modulo 2 pi.
double phase_distance_strict(const DiagonalPhases& a, const DiagonalPhases& b);
Eigen::MatrixXcd diagonal_matrix(const DiagonalPhases& p);

// [Phase(-a/4), GZZ(A/4), RZ(b_i/2) ...] with a = sum_{i<j} A_ij, b_i = sum_j A_ij.
Circuit gcrz_decompose(const HollowSymmetricd& a);

BitVector gcx_apply(const BinaryMatrix& b, const BitVector& x);
Eigen::MatrixXcd gcx_matrix(const BinaryMatrix& b);

}  // namespace gzz

#endif  // GZZ_SIMULATE_HPP
