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
#include <bit>
#include <numeric>
#include <random>

#include "gzz/schedule.hpp"
#include "gzz/simulate.hpp"
#include "support.hpp"

using namespace gzz;

namespace {

// Sum of Hamming distances along all-plus -> tour -> all-plus.
long tour_flips(const Schedule& s) {
  long total = 0;
  std::uint64_t cur = 0;
  for (const Step& st : s.steps) {
    total += std::popcount(cur ^ st.encoding);
    cur = st.encoding;
  }
  return total + std::popcount(cur);
}

// The target GZZ exponent A = J o sum lambda m m^T.
HollowSymmetricd target(const Decomposition& d, const HollowSymmetricd& j) { return j.cwiseProduct(d.reconstruct()); }

Decomposition random_decomposition(int n, int terms, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> idx(0, (std::uint64_t(1) << (n - 1)) - 1);
  std::uniform_real_distribution<double> lam(0.1, 1.0);
  Decomposition d;
  d.n = n;
  for (int k = 0; k < terms; ++k) d.terms.push_back({idx(rng), lam(rng)});
  return d;
}

}  // namespace

TEST(OrderEncodings, AllPlusNeedsNoFlips) {
  Decomposition d;
  d.n = 4;
  d.terms.push_back({0, 0.5});
  Schedule s = order_encodings(d);
  EXPECT_EQ(s.x_gate_count, 0);
  EXPECT_EQ(s.x_layers(), 2);
}

TEST(OrderEncodings, OneSignFlipped) {
  Decomposition d;
  d.n = 3;
  d.terms.push_back({0, 0.5});
  d.terms.push_back({2, 0.25});
  Schedule s = order_encodings(d);
  EXPECT_EQ(s.x_gate_count, 2);
  EXPECT_EQ(s.x_layers(), 3);
}

TEST(OrderEncodings, DropsZeroLengthAndMergesRepeats) {
  Decomposition d;
  d.n = 3;
  d.terms = {{1, 0.0}, {2, 0.25}, {2, 0.5}};
  Schedule s = order_encodings(d);
  ASSERT_EQ(s.steps.size(), 1u);
  EXPECT_EQ(s.steps[0].encoding, 2u);
  EXPECT_DOUBLE_EQ(s.steps[0].duration, 0.75);
}

TEST(OrderEncodings, FlipCountTelescopes) {
  std::mt19937_64 rng(1);
  for (int n = 2; n <= 8; ++n) {
    Decomposition d = random_decomposition(n, 3 * n, rng);
    for (auto h : {TourHeuristic::index_order, TourHeuristic::nearest_neighbor, TourHeuristic::nn_2opt}) {
      Schedule s = order_encodings(d, h);
      EXPECT_EQ(s.x_gate_count, tour_flips(s));
      std::uint64_t cur = 0;
      for (const Step& st : s.steps) {
        cur ^= st.flip;
        EXPECT_EQ(cur, st.encoding);
      }
      EXPECT_EQ(cur ^ s.trailing_flip, 0u);
    }
  }
}

TEST(OrderEncodings, HeuristicsOrdered) {
  std::mt19937_64 rng(2);
  for (int n = 3; n <= 10; ++n)
    for (int t = 0; t < 10; ++t) {
      Decomposition d = random_decomposition(n, n * (n - 1) / 2, rng);
      const long idx = order_encodings(d, TourHeuristic::index_order).x_gate_count;
      const long nn = order_encodings(d, TourHeuristic::nearest_neighbor).x_gate_count;
      const long opt = order_encodings(d, TourHeuristic::nn_2opt).x_gate_count;
      EXPECT_LE(opt, nn);
      EXPECT_LE(nn, idx);
    }
}

TEST(EmitGzz, EmptyIsIdentity) {
  Decomposition d;
  d.n = 3;
  EXPECT_TRUE(emit_gzz_circuit(d, HollowSymmetricd(3)).empty());
}

TEST(EmitGzz, SinglePairArithmetic) {
  HollowSymmetricd a(2), j(2);
  a.upper()[0] = test::pi / 4;
  j.upper()[0] = 2 * test::pi * 500;
  Decomposition d = solve_lp(hadamard_quotient(a, j));
  Circuit c = emit_gzz_circuit(d, j);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.gates()[0].op, Op::Evolve);
  EXPECT_NEAR(c.gates()[0].time, (test::pi / 4) / j.upper()[0], 1e-15);
}

TEST(EmitGzz, ReproducesTargetPhases) {
  std::mt19937_64 rng(3);
  for (int n = 2; n <= 8; ++n)
    for (int t = 0; t < 10; ++t) {
      HollowSymmetricd a = test::random_hollow(n, rng, -test::pi, test::pi);
      HollowSymmetricd j = test::random_hollow(n, rng, 0.2, 1.0);
      Decomposition d = solve_lp(hadamard_quotient(a, j));
      for (EmitForm form : {EmitForm::merged, EmitForm::raw}) {
        Circuit c = emit_gzz_circuit(order_encodings(d), j, form);
        EXPECT_LT(phase_distance(simulate_diagonal(c), gzz_phases(a)), 1e-9) << n;
      }
    }
}

TEST(EmitGzz, OrderIndependence) {
  std::mt19937_64 rng(4);
  for (int n = 3; n <= 7; ++n) {
    HollowSymmetricd j = test::random_hollow(n, rng, 0.2, 1.0);
    Decomposition d = random_decomposition(n, 6, rng);
    // make indices unique so every permutation is a distinct schedule
    std::sort(d.terms.begin(), d.terms.end(), [](auto& a, auto& b) { return a.index < b.index; });
    d.terms.erase(std::unique(d.terms.begin(), d.terms.end(), [](auto& a, auto& b) { return a.index == b.index; }),
                  d.terms.end());
    const DiagonalPhases want = gzz_phases(target(d, j));
    std::vector<std::size_t> order(d.terms.size());
    std::iota(order.begin(), order.end(), std::size_t(0));
    for (int k = 0; k < 5; ++k) {
      std::shuffle(order.begin(), order.end(), rng);
      Circuit c = emit_gzz_circuit(schedule_in_order(d, order), j);
      EXPECT_LT(phase_distance(simulate_diagonal(c), want), 1e-9);
    }
  }
}

TEST(EmitGzz, MergedFormStructure) {
  std::mt19937_64 rng(5);
  Decomposition d = random_decomposition(5, 6, rng);
  Schedule s = order_encodings(d);
  Circuit merged = emit_gzz_circuit(s, test::random_hollow(5, rng, 0.2, 1.0));
  long x = 0, ev = 0;
  for (const Gate& g : merged.gates()) {
    x += g.op == Op::X;
    ev += g.op == Op::Evolve;
  }
  EXPECT_EQ(x, s.x_gate_count);
  EXPECT_EQ(ev, long(s.steps.size()));
}

TEST(Schedule, JsonRoundTrip) {
  std::mt19937_64 rng(6);
  Schedule s = order_encodings(random_decomposition(6, 8, rng));
  json j = to_json(s);
  EXPECT_EQ(j["x_gates"], s.x_gate_count);
  Schedule back = schedule_from_json(j);
  ASSERT_EQ(back.steps.size(), s.steps.size());
  for (std::size_t k = 0; k < s.steps.size(); ++k) {
    EXPECT_EQ(back.steps[k].flip, s.steps[k].flip);
    EXPECT_EQ(back.steps[k].encoding, s.steps[k].encoding);
    EXPECT_EQ(back.steps[k].duration, s.steps[k].duration);
  }
  EXPECT_EQ(back.x_gate_count, s.x_gate_count);
}
