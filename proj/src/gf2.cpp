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

#include "gzz/gf2.hpp"

#include <stdexcept>

namespace gzz {

BinaryMatrix gf2_multiply(const BinaryMatrix& a, const BinaryMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("gf2_multiply: shape mismatch");
  BinaryMatrix c = BinaryMatrix::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k)
      if (a(i, k) & 1)
        for (Eigen::Index j = 0; j < b.cols(); ++j) c(i, j) ^= (b(k, j) & 1);
  return c;
}

BitVector gf2_apply(const BinaryMatrix& a, const BitVector& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("gf2_apply: shape mismatch");
  BitVector y = BitVector::Zero(a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) y[i] ^= (a(i, k) & x[k] & 1);
  return y;
}

namespace {

// Gauss-Jordan on [a | aug]; returns rank of a.
int eliminate(BinaryMatrix& a, BinaryMatrix* aug) {
  int rank = 0;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = rank; r < rows; ++r)
      if (a(r, c) & 1) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    a.row(piv).swap(a.row(rank));
    if (aug) aug->row(piv).swap(aug->row(rank));
    for (Eigen::Index r = 0; r < rows; ++r)
      if (r != rank && (a(r, c) & 1)) {
        for (Eigen::Index k = 0; k < cols; ++k) a(r, k) ^= a(rank, k);
        if (aug)
          for (Eigen::Index k = 0; k < aug->cols(); ++k) (*aug)(r, k) ^= (*aug)(rank, k);
      }
    ++rank;
  }
  return rank;
}

}  // namespace

int gf2_rank(BinaryMatrix a) {
  a = a.unaryExpr([](std::uint8_t v) -> std::uint8_t { return v & 1; });
  return eliminate(a, nullptr);
}

bool gf2_invertible(const BinaryMatrix& a) {
  return a.rows() == a.cols() && gf2_rank(a) == a.rows();
}

BinaryMatrix gf2_inverse(const BinaryMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("gf2_inverse: matrix not square");
  BinaryMatrix w = a.unaryExpr([](std::uint8_t v) -> std::uint8_t { return v & 1; });
  BinaryMatrix inv = BinaryMatrix::Identity(a.rows(), a.cols());
  if (eliminate(w, &inv) != a.rows()) throw std::invalid_argument("binary matrix is singular over F2");
  return inv;
}

bool is_lower_unitriangular(const BinaryMatrix& b) {
  if (b.rows() != b.cols()) return false;
  for (Eigen::Index i = 0; i < b.rows(); ++i) {
    if (b(i, i) != 1) return false;
    for (Eigen::Index j = i + 1; j < b.cols(); ++j)
      if (b(i, j) != 0) return false;
  }
  return true;
}

bool is_upper_unitriangular(const BinaryMatrix& b) {
  return is_lower_unitriangular(BinaryMatrix(b.transpose()));
}

BitVector bits_from_mask(int n, std::uint64_t mask) {
  BitVector v(n);
  for (int q = 0; q < n; ++q) v[q] = (mask >> q) & 1u;
  return v;
}

std::uint64_t mask_from_bits(const BitVector& v) {
  std::uint64_t m = 0;
  for (Eigen::Index q = 0; q < v.size(); ++q)
    if (v[q] & 1) m |= std::uint64_t(1) << q;
  return m;
}

}  // namespace gzz
