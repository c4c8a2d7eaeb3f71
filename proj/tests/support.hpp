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

// Shared test helpers: seeded generators and a gate-by-gate Kronecker oracle
// that does not go through the library simulator.
#ifndef GZZ_TESTS_SUPPORT_HPP
#define GZZ_TESTS_SUPPORT_HPP

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "gzz/frame.hpp"
#include "gzz/gf2.hpp"

namespace gzz::test {

using cd = std::complex<double>;
inline constexpr double pi = std::numbers::pi;

inline HollowSymmetricd random_hollow(int n, std::mt19937_64& rng, double lo = -1, double hi = 1) {
  std::uniform_real_distribution<double> u(lo, hi);
  HollowSymmetricd a(n);
  for (auto& v : a.upper()) v = u(rng);
  return a;
}

inline HollowSymmetricd random_binary_hollow(int n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  HollowSymmetricd a(n);
  for (auto& v : a.upper()) v = coin(rng) ? 1.0 : 0.0;
  return a;
}

inline BinaryMatrix random_lower_unitriangular(int n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  BinaryMatrix b = BinaryMatrix::Identity(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) b(i, j) = coin(rng) ? 1 : 0;
  return b;
}

inline BinaryMatrix fully_directed(int n) {
  BinaryMatrix b = BinaryMatrix::Identity(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) b(i, j) = 1;
  return b;
}

// Bit of qubit q in basis index x, qubit 0 most significant.
inline int bit(std::uint64_t x, int q, int n) { return int((x >> (n - 1 - q)) & 1u); }

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd k(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) k.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return k;
}

// u acting on qubit q of n.
inline Eigen::MatrixXcd on_qubit(const Eigen::Matrix2cd& u, int q, int n) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  for (int k = 0; k < n; ++k) m = kron(m, k == q ? Eigen::MatrixXcd(u) : Eigen::MatrixXcd::Identity(2, 2));
  return m;
}

// Two-qubit u in the (a, b) ordered basis |x_a x_b>, embedded by index mapping.
inline Eigen::MatrixXcd on_pair(const Eigen::Matrix4cd& u, int a, int b, int n) {
  const Eigen::Index dim = Eigen::Index(1) << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  const std::uint64_t ma = std::uint64_t(1) << (n - 1 - a), mb = std::uint64_t(1) << (n - 1 - b);
  for (std::uint64_t x = 0; x < std::uint64_t(dim); ++x) {
    const int in = 2 * bit(x, a, n) + bit(x, b, n);
    const std::uint64_t rest = x & ~(ma | mb);
    for (int out = 0; out < 4; ++out) {
      const std::uint64_t y = rest | ((out >> 1) ? ma : 0) | ((out & 1) ? mb : 0);
      m(Eigen::Index(y), Eigen::Index(x)) = u(out, in);
    }
  }
  return m;
}

inline Eigen::Matrix2cd hadamard() {
  Eigen::Matrix2cd h;
  h << 1, 1, 1, -1;
  return h / std::sqrt(2.0);
}

inline Eigen::Matrix2cd rz(double a) {
  Eigen::Matrix2cd r = Eigen::Matrix2cd::Identity();
  r(1, 1) = std::polar(1.0, a);
  return r;
}

inline Eigen::Matrix4cd cnot() {
  Eigen::Matrix4cd c = Eigen::Matrix4cd::Zero();
  c(0, 0) = c(1, 1) = c(3, 2) = c(2, 3) = 1;
  return c;
}

inline Eigen::Matrix4cd zz(double a) {  // phase a on odd parity
  Eigen::Matrix4cd z = Eigen::Matrix4cd::Identity();
  z(1, 1) = z(2, 2) = std::polar(1.0, a);
  return z;
}

// max_x |e^{i a_x} - e^{i (b_x + phi)}| with phi aligned on entry 0.
inline double aligned_distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  const double phi = a[0] - b[0];
  double d = 0;
  for (Eigen::Index x = 0; x < a.size(); ++x) d = std::max(d, std::abs(std::polar(1.0, a[x]) - std::polar(1.0, b[x] + phi)));
  return d;
}

}  // namespace gzz::test

#endif  // GZZ_TESTS_SUPPORT_HPP
