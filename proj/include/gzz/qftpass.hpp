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

#ifndef GZZ_QFTPASS_HPP
#define GZZ_QFTPASS_HPP

#include <Eigen/Dense>

#include "gzz/circuit.hpp"

namespace gzz {

// QFT with the output qubits in reversed order (no final swaps), n <= 10.
// with_swaps = true gives the textbook QFT instead.
Eigen::MatrixXcd qft_reference(int n, bool with_swaps = false);

// (n-j+1)-qubit matrix pairing qubits j, j+1 (1-based) with the rest:
// row 0 = 2 pi (0, 0, 2^-2, ..., 2^{-n+j}), row 1 = 2 pi (0, 0, 2^-1, ..., 2^{-n+j+1}).
HollowSymmetricd build_Aj(int n, int j);

// H / CS pairs with one GCR_Z(A_j / 2) per pair, each realized as a GZZ with
// its R_Z corrections merged per qubit.
Circuit qft_compile(int n, bool with_swaps = false);

}  // namespace gzz

#endif  // GZZ_QFTPASS_HPP
