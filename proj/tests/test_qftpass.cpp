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

#include <gtest/gtest.h>

#include <algorithm>

#include "gzz/qftpass.hpp"
#include "gzz/simulate.hpp"
#include "gzz/solver.hpp"
#include "support.hpp"

using namespace gzz;
using test::cd;

namespace {

// Textbook QFT (H then controlled phases 2pi/2^k, then swaps) built from
// Kronecker products only.
Eigen::MatrixXcd textbook_qft(int n) {
  const Eigen::Index dim = Eigen::Index(1) << n;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  for (int q = 0; q < n; ++q) {
    u = test::on_qubit(test::hadamard(), q, n) * u;
    for (int r = q + 1; r < n; ++r) {
      Eigen::MatrixXcd cp = Eigen::MatrixXcd::Identity(dim, dim);
      for (Eigen::Index x = 0; x < dim; ++x)
        if (test::bit(std::uint64_t(x), q, n) && test::bit(std::uint64_t(x), r, n))
          cp(x, x) = std::polar(1.0, 2 * test::pi / double(1 << (r - q + 1)));
      u = cp * u;
    }
  }
  for (int q = 0; q < n / 2; ++q) {
    const int r = n - 1 - q;
    Eigen::MatrixXcd sw = test::on_pair(test::cnot(), q, r, n);
    u = sw * test::on_pair(test::cnot(), r, q, n) * sw * u;
  }
  return u;
}

}  // namespace

TEST(QftReference, SmallCases) {
  EXPECT_LT((qft_reference(1) - Eigen::MatrixXcd(test::hadamard())).cwiseAbs().maxCoeff(), 1e-15);

  // n=2: entries i^{xy}/2 with the output index bit-reversed
  Eigen::MatrixXcd u = qft_reference(2);
  const int rev[4] = {0, 2, 1, 3};
  const cd powers[4] = {1, cd(0, 1), -1, cd(0, -1)};
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) EXPECT_LT(std::abs(u(rev[y], x) - 0.5 * powers[(x * y) % 4]), 1e-15);
}

TEST(QftReference, UnitaryConstantModulus) {
  for (int n = 1; n <= 7; ++n) {
    Eigen::MatrixXcd u = qft_reference(n);
    const Eigen::Index dim = u.rows();
    EXPECT_LT((u.adjoint() * u - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((u.cwiseAbs().array() - std::pow(2.0, -0.5 * n)).abs().maxCoeff(), 1e-15);
  }
  EXPECT_THROW(qft_reference(0), std::invalid_argument);
  EXPECT_THROW(qft_reference(11), std::invalid_argument);
}

TEST(QftReference, MatchesTextbookCircuit) {
  for (int n = 1; n <= 5; ++n)
    EXPECT_TRUE(equal_up_to_global_phase(qft_reference(n, true), textbook_qft(n), 1e-12)) << n;
}

TEST(BuildAj, Entries) {
  HollowSymmetricd a = build_Aj(4, 1);
  ASSERT_EQ(a.n(), 4);
  EXPECT_DOUBLE_EQ(a(0, 1), 0);
  EXPECT_DOUBLE_EQ(a(0, 2), 2 * test::pi / 4);
  EXPECT_DOUBLE_EQ(a(0, 3), 2 * test::pi / 8);
  EXPECT_DOUBLE_EQ(a(1, 2), 2 * test::pi / 2);
  EXPECT_DOUBLE_EQ(a(1, 3), 2 * test::pi / 4);
  EXPECT_DOUBLE_EQ(a(2, 3), 0);

  for (int n = 3; n <= 10; ++n) {
    HollowSymmetricd last = build_Aj(n, n - 2);
    ASSERT_EQ(last.n(), 3);
    EXPECT_DOUBLE_EQ(last(0, 2), 2 * test::pi / 4);
    EXPECT_DOUBLE_EQ(last(1, 2), 2 * test::pi / 2);
    EXPECT_DOUBLE_EQ(last(0, 1), 0);
  }
  EXPECT_THROW(build_Aj(4, 0), std::invalid_argument);
  EXPECT_THROW(build_Aj(4, 3), std::invalid_argument);
}

TEST(QftCompile, SmallCircuits) {
  Circuit c1 = qft_compile(1);
  ASSERT_EQ(c1.size(), 1u);
  EXPECT_EQ(c1.gates()[0].op, Op::H);

  Circuit c2 = qft_compile(2);
  ASSERT_EQ(c2.size(), 3u);
  EXPECT_EQ(c2.gates()[0].op, Op::H);
  EXPECT_EQ(c2.gates()[1].op, Op::CS);
  EXPECT_EQ(c2.gates()[2].op, Op::H);
}

TEST(QftCompile, EquivalentToReference) {
  for (int n = 1; n <= 7; ++n) {
    EXPECT_TRUE(equal_up_to_global_phase(simulate_dense(qft_compile(n)), qft_reference(n), 1e-9)) << n;
    EXPECT_TRUE(equal_up_to_global_phase(simulate_dense(qft_compile(n, true)), qft_reference(n, true), 1e-9)) << n;
  }
}

TEST(QftCompile, Census) {
  for (int n = 2; n <= 12; ++n) {
    Census c = census(qft_compile(n));
    EXPECT_EQ(c.count(Op::CS), n / 2) << n;  // ceil((n-1)/2)
    EXPECT_EQ(c.gzz, (n - 1) / 2) << n;
    EXPECT_EQ(c.count(Op::H), n) << n;
    EXPECT_EQ(c.two_qubit, n / 2);
  }
  Census c5 = census(qft_compile(5));
  EXPECT_EQ(c5.count(Op::CS), 2);
  EXPECT_EQ(c5.gzz, 2);
  EXPECT_EQ(c5.count(Op::H), 5);
}

TEST(QftCompile, RzPushedToBoundaries) {
  // each correction sits right before its qubit's next Hadamard, or at the end
  for (int n = 3; n <= 8; ++n) {
    Circuit c = qft_compile(n);
    const auto& g = c.gates();
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (g[k].op != Op::RZ) continue;
      const int q = g[k].q[0];
      for (std::size_t l = k + 1; l < g.size(); ++l) {
        const std::vector<int> s = g[l].support(n);
        if (std::find(s.begin(), s.end(), q) == s.end()) continue;
        EXPECT_EQ(g[l].op, Op::H) << n;
        break;
      }
    }
  }
}

TEST(QftCompile, LpOnA1) {
  for (int n = 3; n <= 10; ++n) {
    HollowSymmetricd a = build_Aj(n, 1);
    HollowSymmetricd j(a.n(), Eigen::VectorXd::Ones(pair_count(a.n())));
    Decomposition d = solve_lp(hadamard_quotient(a, j));
    EXPECT_LT((d.reconstruct().upper() - a.upper()).cwiseAbs().maxCoeff(), 1e-8) << n;
    for (const Term& t : d.terms) EXPECT_GT(t.lambda, 0.0);
  }
}
