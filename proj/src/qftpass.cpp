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

#include "gzz/qftpass.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "gzz/simulate.hpp"

namespace gzz {

namespace {

std::uint64_t reverse_bits(std::uint64_t v, int n) {
  std::uint64_t r = 0;
  for (int i = 0; i < n; ++i) r |= ((v >> i) & 1u) << (n - 1 - i);
  return r;
}

}  // namespace

Eigen::MatrixXcd qft_reference(int n, bool with_swaps) {
  if (n < 1 || n > 10) throw std::invalid_argument("qft_reference: n must be in [1, 10]");
  const std::uint64_t dim = std::uint64_t(1) << n;
  const double norm = std::pow(2.0, -0.5 * n);
  Eigen::MatrixXcd u(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::uint64_t x = 0; x < dim; ++x)
    for (std::uint64_t y = 0; y < dim; ++y) {
      // x*y mod 2^n keeps the angle small and exact
      const double ang = 2 * std::numbers::pi * double((x * y) & (dim - 1)) / double(dim);
      const std::uint64_t row = with_swaps ? y : reverse_bits(y, n);
      u(Eigen::Index(row), Eigen::Index(x)) = norm * std::polar(1.0, ang);
    }
  return u;
}

HollowSymmetricd build_Aj(int n, int j) {
  if (j < 1 || j > n - 2) throw std::invalid_argument("build_Aj: need 1 <= j <= n-2");
  const int m = n - j + 1;
  HollowSymmetricd a(m);
  for (int k = 2; k < m; ++k) {
    a.set(0, k, 2 * std::numbers::pi * std::ldexp(1.0, -k));
    a.set(1, k, 2 * std::numbers::pi * std::ldexp(1.0, -(k - 1)));
  }
  return a;
}

Circuit qft_compile(int n, bool with_swaps) {
  if (n < 1) throw std::invalid_argument("qft_compile: n must be positive");
  Circuit c(n);
  std::vector<double> pending(std::size_t(n), 0.0);
  double global = 0;
  auto flush = [&](int q) {
    double& p = pending[std::size_t(q)];
    if (p != 0) c.add(gates::rz(Angle::rad(p), q));
    p = 0;
  };
  auto hadamard = [&](int q) {
    flush(q);
    c.add(gates::h(q));
  };

  for (int k = 0; k < n; k += 2) {
    hadamard(k);
    if (k + 1 == n) break;
    c.add(gates::cs(k, k + 1));
    hadamard(k + 1);
    if (k + 2 >= n) break;
    // The pair's remaining controlled rotations all commute past H_{k+1}.
    HollowSymmetricd half = build_Aj(n, k + 1);
    half *= 0.5;
    HollowSymmetricd full(n);
    for (int a = 0; a < half.n(); ++a)
      for (int b = a + 1; b < half.n(); ++b)
        if (half(a, b) != 0) full.set(k + a, k + b, half(a, b));
    global -= full.total() / 4;
    HollowSymmetricd quarter = full;
    quarter *= 0.25;
    c.add(gates::gzz(quarter));
    const Eigen::VectorXd b = full.row_sums();
    for (int q = 0; q < n; ++q) pending[std::size_t(q)] += b[q] / 2;
  }
  for (int q = 0; q < n; ++q) flush(q);
  if (global != 0) c.add(gates::phase(Angle::rad(global)));
  if (with_swaps)
    for (int q = 0; q < n / 2; ++q) {
      const int r = n - 1 - q;
      c.add(gates::cx(q, r)).add(gates::cx(r, q)).add(gates::cx(q, r));
    }
  return c;
}

}  // namespace gzz
