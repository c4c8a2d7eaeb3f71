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

#include "gzz/frame.hpp"

#include <algorithm>
#include <bit>
#include <random>

namespace gzz {

Encoding::Encoding(int n_, std::uint64_t index_) : n(n_), index(index_) {
  if (n < 1 || n > 64) throw std::invalid_argument("Encoding: n out of range");
  if (n < 64 && (index >> (n - 1)) != 0) throw std::invalid_argument("Encoding: index out of range");
}

std::vector<int> Encoding::signs() const {
  std::vector<int> m(n);
  for (int q = 0; q < n; ++q) m[q] = sign(q);
  return m;
}

Encoding Encoding::from_signs(const std::vector<int>& m) {
  const int n = int(m.size());
  if (n < 1) throw std::invalid_argument("Encoding: empty sign vector");
  const bool negate = m.back() < 0;
  std::uint64_t idx = 0;
  for (int q = 0; q + 1 < n; ++q) {
    if (m[q] != 1 && m[q] != -1) throw std::invalid_argument("Encoding: signs must be +-1");
    if ((m[q] < 0) != negate) idx |= std::uint64_t(1) << q;
  }
  return Encoding(n, idx);
}

HollowSymmetricd outer_product(const Encoding& m) {
  HollowSymmetricd out(m.n);
  auto& u = out.upper();
  Eigen::Index k = 0;
  for (int i = 0; i < m.n; ++i)
    for (int j = i + 1; j < m.n; ++j) u[k++] = double(m.sign(i) * m.sign(j));
  return out;
}

std::vector<Encoding> frame_columns(int n) {
  if (n < 2) throw std::invalid_argument("frame_columns: n must be at least 2");
  if (n > 30) throw std::invalid_argument("frame_columns: n too large to enumerate");
  std::vector<Encoding> cols;
  cols.reserve(std::size_t(1) << (n - 1));
  for (std::uint64_t b = 0; b < (std::uint64_t(1) << (n - 1)); ++b) cols.emplace_back(n, b);
  return cols;
}

long gram_entry(const Encoding& a, const Encoding& b) {
  if (a.n != b.n) throw std::invalid_argument("gram_entry: mismatched n");
  const long n = a.n;
  const long d = std::popcount(a.index ^ b.index);  // last bit is 0 for both
  return n * (n - 1) / 2 - 2 * d * (n - d);
}

FrameReport frame_bound_check(int n, int samples, std::uint64_t seed) {
  if (n < 2 || n > 12) throw std::invalid_argument("frame_bound_check: n must be in [2, 12]");
  FrameReport rep;
  rep.n = n;
  rep.samples = samples;

  const auto cols = frame_columns(n);
  std::vector<HollowSymmetricd> outer;
  outer.reserve(cols.size());
  for (const auto& m : cols) outer.push_back(outer_product(m));

  // Balance: sum over all columns vanishes entrywise. Entries are +-1, so the
  // double sums are exact integers.
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(pair_count(n));
  for (const auto& o : outer) sum += o.upper();
  rep.balanced = sum.isZero(0.0);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  double lo = 0, hi = 0;
  for (int s = 0; s < samples; ++s) {
    HollowSymmetricd m(n);
    for (Eigen::Index k = 0; k < m.upper().size(); ++k) m.upper()[k] = gauss(rng);
    m.upper().normalize();
    double c = 0;
    for (const auto& o : outer) {
      const double ip = inner(m, o);
      c += ip * ip;
    }
    if (s == 0) lo = hi = c;
    lo = std::min(lo, c);
    hi = std::max(hi, c);
    rep.constant_upper += c / samples;
  }
  rep.spread = hi - lo;
  // <M, mm^T>_F = 2 <.,.>_upper and ||M||_F^2 = 2 ||M||_upper^2.
  rep.constant_frobenius = 2.0 * rep.constant_upper;
  return rep;
}

}  // namespace gzz
