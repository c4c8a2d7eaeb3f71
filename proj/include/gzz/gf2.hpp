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

#ifndef GZZ_GF2_HPP
#define GZZ_GF2_HPP

#include <Eigen/Dense>

#include <cstdint>

namespace gzz {

using BinaryMatrix = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>;
using BitVector = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, 1>;

BinaryMatrix gf2_multiply(const BinaryMatrix& a, const BinaryMatrix& b);
BitVector gf2_apply(const BinaryMatrix& a, const BitVector& x);
int gf2_rank(BinaryMatrix a);
bool gf2_invertible(const BinaryMatrix& a);
// Throws std::invalid_argument on a singular matrix.
BinaryMatrix gf2_inverse(const BinaryMatrix& a);

bool is_lower_unitriangular(const BinaryMatrix& b);
bool is_upper_unitriangular(const BinaryMatrix& b);

// Bit pattern <-> vector, bit q of the integer is entry q.
BitVector bits_from_mask(int n, std::uint64_t mask);
std::uint64_t mask_from_bits(const BitVector& v);

}  // namespace gzz

#endif  // GZZ_GF2_HPP
