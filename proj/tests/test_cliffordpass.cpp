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

#include <random>

#include "gzz/cliffordpass.hpp"
#include "gzz/simulate.hpp"
#include "support.hpp"

using namespace gzz;
using test::bit;

namespace {

// Lower-triangular B of the n=5 worked example: the first fan-out skips
// qubit 2, the second skips qubit 3 (1-based).
BinaryMatrix worked_example() {
  BinaryMatrix e = BinaryMatrix::Identity(5, 5);
  e(2, 0) = e(3, 0) = e(4, 0) = 1;
  e(3, 1) = e(4, 1) = 1;
  e(3, 2) = e(4, 2) = 1;
  e(4, 3) = 1;
  return e;
}

// prod CZ^{A_ij}: phase pi per edge with both endpoints set.
Eigen::VectorXd cz_product_phases(const HollowSymmetricd& a) {
  const int n = a.n();
  Eigen::VectorXd p = Eigen::VectorXd::Zero(Eigen::Index(1) << n);
  for (std::uint64_t x = 0; x < std::uint64_t(p.size()); ++x)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (a(i, j) != 0 && bit(x, i, n) && bit(x, j, n)) p[Eigen::Index(x)] += test::pi;
  return p;
}

BruhatLayers random_bruhat(int n, std::mt19937_64& rng, bool worst_case) {
  std::uniform_int_distribution<int> coin(0, 1), s4(0, 3);
  BruhatLayers l;
  l.n = n;
  l.x = l.z = l.h = BitVector::Zero(n);
  l.s1.assign(std::size_t(n), 0);
  l.s2 = l.s1;
  for (int q = 0; q < n; ++q) {
    l.x[q] = std::uint8_t(coin(rng));
    l.z[q] = std::uint8_t(coin(rng));
    l.h[q] = std::uint8_t(coin(rng));
    l.s1[std::size_t(q)] = s4(rng);
    l.s2[std::size_t(q)] = s4(rng);
  }
  l.cx1 = worst_case ? test::fully_directed(n) : test::random_lower_unitriangular(n, rng);
  l.cx2 = worst_case ? BinaryMatrix(test::fully_directed(n).transpose())
                     : BinaryMatrix(test::random_lower_unitriangular(n, rng).transpose());
  l.cz1 = worst_case ? HollowSymmetricd(n, Eigen::VectorXd::Ones(pair_count(n))) : test::random_binary_hollow(n, rng);
  l.cz2 = worst_case ? HollowSymmetricd(n, Eigen::VectorXd::Ones(pair_count(n))) : test::random_binary_hollow(n, rng);
  return l;
}

}  // namespace

TEST(CzLayer, EmptyIsIdentity) { EXPECT_TRUE(compile_cz_layer(HollowSymmetricd(4)).empty()); }

TEST(CzLayer, SingleEdge) {
  HollowSymmetricd a(2);
  a.set(0, 1, 1);
  Eigen::Vector4d want(0, 0, 0, test::pi);
  EXPECT_LT(phase_distance_strict(simulate_diagonal(compile_cz_layer(a)), DiagonalPhases{2, want}), 1e-12);
}

TEST(CzLayer, RandomLayersOneGzz) {
  std::mt19937_64 rng(1);
  for (int n = 2; n <= 8; ++n)
    for (int t = 0; t < 10; ++t) {
      HollowSymmetricd a = test::random_binary_hollow(n, rng);
      if (a.is_zero()) a.set(0, n - 1, 1);
      Circuit c = compile_cz_layer(a);
      EXPECT_EQ(census(c).gzz, 1);
      EXPECT_LT(phase_distance_strict(simulate_diagonal(c), DiagonalPhases{n, cz_product_phases(a)}), 1e-12);
      for (const Gate& g : c.gates())
        EXPECT_TRUE(g.op == Op::GZZ || g.op == Op::Phase || g.op == Op::S || g.op == Op::Sdg ||
                    (g.op == Op::RZ && g.angle == Angle::pi_units(1)));
    }
}

TEST(CzLayer, RejectsNonBinary) {
  HollowSymmetricd a(3);
  a.set(0, 1, 0.5);
  EXPECT_THROW(compile_cz_layer(a), std::invalid_argument);
}

TEST(GraphState, Amplitudes) {
  Eigen::VectorXcd plus = simulate_dense(graph_state_circuit(HollowSymmetricd(3))).col(0);
  EXPECT_LT((plus - Eigen::VectorXcd::Constant(8, 1 / std::sqrt(8.0))).cwiseAbs().maxCoeff(), 1e-10);

  HollowSymmetricd e(2);
  e.set(0, 1, 1);
  Eigen::VectorXcd s2 = simulate_dense(graph_state_circuit(e)).col(0);
  Eigen::Vector4cd want(0.5, 0.5, 0.5, -0.5);
  const test::cd ph = want[0] / s2[0];
  EXPECT_LT((s2 * ph - want).cwiseAbs().maxCoeff(), 1e-10);

  HollowSymmetricd path(3);
  path.set(0, 1, 1);
  path.set(1, 2, 1);
  Eigen::VectorXcd s3 = simulate_dense(graph_state_circuit(path)).col(0);
  const test::cd ph3 = (1 / std::sqrt(8.0)) / s3[0];
  for (std::uint64_t x = 0; x < 8; ++x) {
    const int sign = ((bit(x, 0, 3) & bit(x, 1, 3)) ^ (bit(x, 1, 3) & bit(x, 2, 3))) ? -1 : 1;
    EXPECT_LT(std::abs(s3[Eigen::Index(x)] * ph3 - sign / std::sqrt(8.0)), 1e-10);
  }
}

TEST(Tables, IdentityHasNoFanOuts) {
  CZTables t = cx_layer_to_tables(BinaryMatrix::Identity(4, 4));
  for (Eigen::Index j = 0; j < t.tcz.cols(); ++j) EXPECT_EQ(t.tcz.col(j).cast<int>().sum(), 0);
}

TEST(Tables, FullyDirectedShape) {
  const int n = 5;
  CZTables t = cx_layer_to_tables(test::fully_directed(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j + 1 < n; ++j) EXPECT_EQ(t.tcz(i, j), i >= j ? 1 : 0);
  // H before and after each fan-out on its targets
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) EXPECT_EQ(t.th(i, k), (i > 0 && (k == 0 || k == i)) ? 1 : 0);
}

TEST(Tables, WorkedExampleSkips) {
  CZTables t = cx_layer_to_tables(worked_example());
  EXPECT_EQ(t.tcz(1, 0), 0);  // fan-out 1 skips qubit 2
  EXPECT_EQ(t.tcz(2, 1), 0);  // fan-out 2 skips qubit 3
  EXPECT_EQ(t.tcz(2, 0), 1);
  EXPECT_EQ(t.tcz(3, 1), 1);
}

TEST(Tables, RejectsNonUnitDiagonal) {
  BinaryMatrix b = BinaryMatrix::Identity(3, 3);
  b(1, 1) = 0;
  EXPECT_THROW(cx_layer_to_tables(b), std::invalid_argument);
  BinaryMatrix mixed = BinaryMatrix::Identity(3, 3);
  mixed(1, 0) = mixed(0, 2) = 1;
  EXPECT_THROW(cx_layer_to_tables(mixed), std::invalid_argument);
}

TEST(Tables, RoundTripDense) {
  std::mt19937_64 rng(2);
  for (int n = 2; n <= 6; ++n)
    for (int t = 0; t < 10; ++t) {
      BinaryMatrix b = test::random_lower_unitriangular(n, rng);
      Eigen::MatrixXcd want = gcx_matrix(b);
      CZTables tb = cx_layer_to_tables(b);
      EXPECT_TRUE(equal_up_to_global_phase(simulate_dense(tables_circuit(tb)), want, 1e-9));
      EXPECT_TRUE(equal_up_to_global_phase(simulate_dense(tables_circuit(move_hadamards(tb))), want, 1e-9));
      // upper-triangular input goes through the qubit flip
      BinaryMatrix up = b.transpose();
      EXPECT_TRUE(equal_up_to_global_phase(simulate_dense(tables_circuit(cx_layer_to_tables(up))), gcx_matrix(up), 1e-9));
    }
}

TEST(MoveHadamards, FullyDirectedUnchanged) {
  for (int n = 2; n <= 7; ++n) {
    CZTables t = cx_layer_to_tables(test::fully_directed(n));
    EXPECT_EQ(move_hadamards(t).th, t.th) << n;
  }
}

TEST(MoveHadamards, WorkedExample) {
  CZTables t = move_hadamards(cx_layer_to_tables(worked_example()));
  // qubit 2 (row 1): pair cancels
  EXPECT_EQ(t.th.row(1).cast<int>().sum(), 0);
  // qubit 3 (row 2): second H moves from layer 2 to layer 1
  EXPECT_EQ(t.th(2, 0), 1);
  EXPECT_EQ(t.th(2, 1), 1);
  EXPECT_EQ(t.th(2, 2), 0);
  // qubits 4, 5 stay blocked
  EXPECT_EQ(t.th(3, 3), 1);
  EXPECT_EQ(t.th(4, 4), 1);
}

TEST(MoveHadamards, SingleFanOutTrace) {
  // Verbatim trace: qubit 1's H has no CZ on either side and goes to the last
  // layer; the others stop directly after the fan-out.
  BinaryMatrix b = BinaryMatrix::Identity(4, 4);
  b(1, 0) = b(2, 0) = b(3, 0) = 1;
  CZTables t = move_hadamards(cx_layer_to_tables(b));
  EXPECT_EQ(t.th(1, 3), 1);
  EXPECT_EQ(t.th(1, 1), 0);
  EXPECT_EQ(t.th(2, 1), 1);
  EXPECT_EQ(t.th(3, 1), 1);
  EXPECT_EQ(t.th(2, 2), 0);
  EXPECT_EQ(t.th(3, 3), 0);
  EXPECT_TRUE(equal_up_to_global_phase(simulate_dense(tables_circuit(t)), gcx_matrix(b), 1e-9));
}

TEST(MoveCz, WorkedExample) {
  CzGrouping g = move_cz(move_hadamards(cx_layer_to_tables(worked_example())));
  ASSERT_EQ(g.groups.size(), 3u);
  EXPECT_TRUE(g.groups[0].split);
  EXPECT_EQ(g.groups[0].edges.size(), 1u);
  EXPECT_EQ(g.groups[1].support(), (std::vector<int>{0, 1, 2, 3, 4}));
  EXPECT_EQ(g.groups[2].edges.size(), 1u);

  Census c = census(compile_cx_layer(worked_example()));
  EXPECT_EQ(c.encoding_cost, 12);
  EXPECT_EQ(census(fanout_circuit(worked_example())).encoding_cost, 13);
}

TEST(MoveCz, FullyDirectedFive) {
  Census c = census(compile_cx_layer(test::fully_directed(5)));
  EXPECT_EQ(c.count(Op::CZ), 2);
  EXPECT_EQ(c.gzz, 2);
}

TEST(MoveCz, EmptyTables) {
  EXPECT_TRUE(move_cz(move_hadamards(cx_layer_to_tables(BinaryMatrix::Identity(4, 4)))).groups.empty());
}

TEST(CompileCx, EquivalentToGcx) {
  std::mt19937_64 rng(3);
  for (int n = 3; n <= 6; ++n)
    for (int t = 0; t < 50; ++t) {
      BinaryMatrix b = test::random_lower_unitriangular(n, rng);
      if (t % 2) b.transposeInPlace();
      Eigen::MatrixXcd want = gcx_matrix(b);
      EXPECT_TRUE(equal_up_to_global_phase(simulate_dense(compile_cx_layer(b)), want, 1e-9));
      EXPECT_TRUE(equal_up_to_global_phase(simulate_dense(fanout_circuit(b)), want, 1e-9));
      const CZTables tb = move_hadamards(cx_layer_to_tables(b));
      EXPECT_TRUE(equal_up_to_global_phase(simulate_dense(grouping_circuit(move_cz(tb, true))), want, 1e-9));
    }
}

TEST(CompileCx, NeverWorseThanOneGzzPerFanOut) {
  std::mt19937_64 rng(4);
  for (int n = 3; n <= 9; ++n)
    for (int t = 0; t < 100; ++t) {
      BinaryMatrix b = test::random_lower_unitriangular(n, rng);
      EXPECT_LE(census(compile_cx_layer(b)).encoding_cost, census(fanout_circuit(b)).encoding_cost);
    }
}

TEST(FullyDirectedCost, Formula) {
  DirectedCost c2 = fully_directed_cost(2);
  EXPECT_EQ(c2.cz, 1);
  EXPECT_EQ(c2.gzz, 0);
  EXPECT_EQ(c2.encoding_cost, 1);
  DirectedCost c5 = fully_directed_cost(5);
  EXPECT_EQ(c5.cz, 2);
  EXPECT_EQ(c5.gzz, 2);
  EXPECT_EQ(c5.encoding_cost, 2 + 10 + 3);
  for (int n = 2; n <= 9; ++n) {
    Census c = census(compile_cx_layer(test::fully_directed(n)));
    DirectedCost d = fully_directed_cost(n);
    EXPECT_EQ(c.count(Op::CZ), d.cz) << n;
    EXPECT_EQ(c.gzz, d.gzz) << n;
    EXPECT_EQ(c.encoding_cost, d.encoding_cost) << n;
  }
  const double n = 400;
  EXPECT_NEAR(double(fully_directed_cost(400).encoding_cost) / (n * n * n), 1.0 / 12, 2e-3);
}

TEST(CliffordCounts, OddEven) {
  CliffordCounts c5 = clifford_layer_counts(5);
  EXPECT_EQ(c5.gzz, 6);
  EXPECT_EQ(c5.cz, 4);
  CliffordCounts c4 = clifford_layer_counts(4);
  EXPECT_EQ(c4.gzz, 4);
  EXPECT_EQ(c4.cz, 4);
  CliffordCounts c2 = clifford_layer_counts(2);
  EXPECT_EQ(c2.gzz, 2);
  EXPECT_EQ(c2.cz, 2);
  for (int n = 2; n <= 9; ++n) EXPECT_EQ(clifford_layer_counts(n).multi_qubit_total(), 2 * n);
}

TEST(Clifford, CompiledEqualsReference) {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 5; ++n)
    for (int t = 0; t < 5; ++t)
      for (bool worst : {false, true}) {
        BruhatLayers l = random_bruhat(n, rng, worst);
        EXPECT_TRUE(equal_up_to_global_phase(simulate_dense(compile_clifford(l)),
                                             simulate_dense(clifford_reference(l)), 1e-9));
      }
}

TEST(Clifford, WorstCaseCensus) {
  std::mt19937_64 rng(6);
  for (int n = 2; n <= 9; ++n) {
    Census c = census(compile_clifford(random_bruhat(n, rng, true)));
    CliffordCounts want = clifford_layer_counts(n);
    EXPECT_EQ(c.gzz, want.gzz) << n;
    EXPECT_EQ(c.count(Op::CZ), want.cz) << n;
  }
}

TEST(Clifford, FromJson) {
  json j = json::parse(R"({"n": 3, "x": "100", "h": [1, 0, 1],
                           "cx1": {"n": 3, "rows": ["100", "110", "011"]},
                           "cz2": {"n": 3, "upper": [1, 0, 1]}, "s1": [1, 2, 3]})");
  BruhatLayers l = bruhat_from_json(j);
  EXPECT_EQ(l.n, 3);
  EXPECT_EQ(l.x[0], 1);
  EXPECT_EQ(l.h[2], 1);
  EXPECT_EQ(l.cx1(2, 1), 1);
  EXPECT_EQ(l.cz2(1, 2), 1);
  EXPECT_TRUE(equal_up_to_global_phase(simulate_dense(compile_clifford(l)), simulate_dense(clifford_reference(l)),
                                       1e-9));
  EXPECT_THROW(bruhat_from_json(json::parse(R"({"n": 2, "s1": [1]})")), std::invalid_argument);
}
