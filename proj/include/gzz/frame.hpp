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

#ifndef GZZ_FRAME_HPP
#define GZZ_FRAME_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace gzz {

inline Eigen::Index pair_count(int n) { return Eigen::Index(n) * (n - 1) / 2; }

// Row-major position of pair (i, j), i < j, in the strict upper triangle.
inline Eigen::Index pair_index(int n, int i, int j) {
  return Eigen::Index(i) * n - Eigen::Index(i) * (i + 1) / 2 + (j - i - 1);
}

// Real symmetric n x n matrix with vanishing diagonal, stored as its strict
// upper triangle. Everything the LP touches lives in this n(n-1)/2 space.
template <typename Scalar>
class HollowSymmetric {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  HollowSymmetric() = default;
  explicit HollowSymmetric(int n) : n_(n), upper_(Vector::Zero(pair_count(n))) {
    if (n < 0) throw std::invalid_argument("HollowSymmetric: negative dimension");
  }
  HollowSymmetric(int n, Vector upper) : n_(n), upper_(std::move(upper)) {
    if (upper_.size() != pair_count(n))
      throw std::invalid_argument("HollowSymmetric: upper length does not match n(n-1)/2");
  }

  // Reads the strict upper triangle; the diagonal and lower half are ignored.
  template <typename Derived>
  static HollowSymmetric from_dense(const Eigen::MatrixBase<Derived>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("HollowSymmetric: matrix not square");
    HollowSymmetric h(int(m.rows()));
    for (int i = 0; i < h.n_; ++i)
      for (int j = i + 1; j < h.n_; ++j) h.upper_[pair_index(h.n_, i, j)] = m(i, j);
    return h;
  }

  int n() const { return n_; }
  const Vector& upper() const { return upper_; }
  Vector& upper() { return upper_; }

  Scalar operator()(int i, int j) const {
    if (i == j) return Scalar(0);
    return i < j ? upper_[pair_index(n_, i, j)] : upper_[pair_index(n_, j, i)];
  }
  void set(int i, int j, Scalar v) {
    if (i == j) throw std::invalid_argument("HollowSymmetric: diagonal is fixed at zero");
    upper_[i < j ? pair_index(n_, i, j) : pair_index(n_, j, i)] = v;
  }

  Matrix dense() const {
    Matrix m = Matrix::Zero(n_, n_);
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) m(i, j) = m(j, i) = upper_[pair_index(n_, i, j)];
    return m;
  }

  // a = sum_{i<j} A_ij
  Scalar total() const { return upper_.sum(); }
  // b_i = sum_j A_ij
  Vector row_sums() const {
    Vector b = Vector::Zero(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) {
        b[i] += upper_[pair_index(n_, i, j)];
        b[j] += upper_[pair_index(n_, i, j)];
      }
    return b;
  }
  Scalar max_abs() const { return upper_.size() ? upper_.cwiseAbs().maxCoeff() : Scalar(0); }
  bool is_zero() const { return upper_.isZero(Scalar(0)); }

  HollowSymmetric& operator+=(const HollowSymmetric& o) {
    check_same(o);
    upper_ += o.upper_;
    return *this;
  }
  HollowSymmetric& operator-=(const HollowSymmetric& o) {
    check_same(o);
    upper_ -= o.upper_;
    return *this;
  }
  HollowSymmetric& operator*=(Scalar s) {
    upper_ *= s;
    return *this;
  }
  friend HollowSymmetric operator+(HollowSymmetric a, const HollowSymmetric& b) { return a += b; }
  friend HollowSymmetric operator-(HollowSymmetric a, const HollowSymmetric& b) { return a -= b; }
  friend HollowSymmetric operator*(HollowSymmetric a, Scalar s) { return a *= s; }
  friend HollowSymmetric operator*(Scalar s, HollowSymmetric a) { return a *= s; }
  friend bool operator==(const HollowSymmetric& a, const HollowSymmetric& b) {
    return a.n_ == b.n_ && a.upper_ == b.upper_;
  }

  // Entrywise (Hadamard) product.
  HollowSymmetric cwiseProduct(const HollowSymmetric& o) const {
    check_same(o);
    return HollowSymmetric(n_, upper_.cwiseProduct(o.upper_));
  }

 private:
  void check_same(const HollowSymmetric& o) const {
    if (o.n_ != n_) throw std::invalid_argument("HollowSymmetric: dimension mismatch");
  }

  int n_ = 0;
  Vector upper_;
};

using HollowSymmetricd = HollowSymmetric<double>;

// Inner product over strict upper triangles (each pair counted once).
template <typename Scalar>
Scalar inner(const HollowSymmetric<Scalar>& a, const HollowSymmetric<Scalar>& b) {
  if (a.n() != b.n()) throw std::invalid_argument("inner: dimension mismatch");
  return a.upper().dot(b.upper());
}

// Sign vector m with m_n = +1, keyed by the (n-1)-bit pattern b, m = (-1)^b.
// Bit q of the index belongs to qubit q.
struct Encoding {
  int n = 0;
  std::uint64_t index = 0;

  Encoding() = default;
  Encoding(int n_, std::uint64_t index_);

  bool flipped(int q) const { return q < n - 1 && ((index >> q) & 1u); }
  int sign(int q) const { return flipped(q) ? -1 : 1; }
  std::vector<int> signs() const;

  // Canonicalizes through the global sign symmetry if the last sign is -1.
  static Encoding from_signs(const std::vector<int>& m);

  friend bool operator==(const Encoding&, const Encoding&) = default;
};

HollowSymmetricd outer_product(const Encoding& m);
std::vector<Encoding> frame_columns(int n);
long gram_entry(const Encoding& a, const Encoding& b);

struct FrameReport {
  int n = 0;
  int samples = 0;
  bool balanced = false;
  double constant_upper = 0;      // sum_m <M, m m^T>^2 with unit upper-triangle norm
  double constant_frobenius = 0;  // same with the full-matrix Frobenius product
  double spread = 0;              // max - min across samples
};

FrameReport frame_bound_check(int n, int samples, std::uint64_t seed = 1);

}  // namespace gzz

#endif  // GZZ_FRAME_HPP
