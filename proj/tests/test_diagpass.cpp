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
#include <random>

#include "gzz/diagpass.hpp"
#include "gzz/simulate.hpp"
#include "support.hpp"

using namespace gzz;

namespace {

// 1-based qubit list -> mask
std::uint64_t mask(std::initializer_list<int> qs) {
  std::uint64_t m = 0;
  for (int q : qs) m |= std::uint64_t(1) << (q - 1);
  return m;
}

// Supports s1..s7 of the n=5 worked example.
const std::vector<std::uint64_t> kExample = {mask({1, 2}),    mask({3, 4}),    mask({4, 5}),      mask({2, 5}),
                                             mask({1, 2, 3}), mask({3, 4, 5}), mask({2, 3, 4, 5})};

PhasePolynomial poly_of(int n, const std::vector<std::uint64_t>& ys, double alpha) {
  PhasePolynomial p;
  p.n = n;
  for (auto y : ys) p.coeffs[y] = alpha;
  return p;
}

// parity of y & x with y's bit q = qubit q and x's qubit 0 most significant
int chi(std::uint64_t y, std::uint64_t x, int n) {
  int s = 0;
  for (int q = 0; q < n; ++q)
    if ((y >> q) & 1u) s ^= test::bit(x, q, n);
  return s;
}

double max_compile_error(const PhasePolynomial& p, const DiagOptions& o) {
  DiagonalCompilation c = compile_diagonal(p, o);
  RestrictedDiagonal r = restricted_diagonal(c.circuit, c.data_qubits);
  return std::max(r.off_diagonal, phase_distance(r.phases, p.phases()));
}

}  // namespace

TEST(PhasePoly, SingleParity) {
  std::vector<double> f(8);
  for (std::uint64_t x = 0; x < 8; ++x) f[x] = chi(mask({1, 2}), x, 3);
  PhasePolynomial p = phase_poly_from_table(f);
  ASSERT_EQ(p.coeffs.size(), 1u);
  EXPECT_NEAR(p.coeffs.begin()->second, 1.0, 1e-12);
  EXPECT_EQ(p.coeffs.begin()->first, mask({1, 2}));
  EXPECT_NEAR(p.global, 0.0, 1e-12);
}

TEST(PhasePoly, Constant) {
  PhasePolynomial p = phase_poly_from_table(std::vector<double>(16, 0.3));
  for (const auto& [y, a] : p.coeffs) EXPECT_NEAR(a, 0.0, 1e-12);
  EXPECT_NEAR(p.global, 0.3, 1e-12);
}

TEST(PhasePoly, RandomRoundTrip) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int n = 1; n <= 8; ++n) {
    std::vector<double> f(std::size_t(1) << n);
    for (auto& v : f) v = u(rng);
    PhasePolynomial p = phase_poly_from_table(f);
    // independent evaluation of global + sum alpha_y chi_y(x)
    for (std::uint64_t x = 0; x < f.size(); ++x) {
      double v = p.global;
      for (const auto& [y, a] : p.coeffs) v += a * chi(y, x, n);
      EXPECT_NEAR(v, f[x], 1e-12);
      EXPECT_NEAR(p.evaluate(x), f[x], 1e-12);
    }
  }
}

TEST(PhasePoly, FromJson) {
  PhasePolynomial p = phase_poly_from_json(json::parse(R"({"n": 4, "terms": [{"y": "0111", "alpha": 0.25}]})"));
  ASSERT_EQ(p.coeffs.size(), 1u);
  EXPECT_EQ(p.coeffs.begin()->first, mask({2, 3, 4}));
  PhasePolynomial q = phase_poly_from_json(json{{"n", 2}, {"table", {0.0, 0.0, 0.0, 0.5}}});
  EXPECT_NEAR(q.evaluate(3), 0.5, 1e-12);
  EXPECT_NEAR(q.evaluate(1), 0.0, 1e-12);
}

TEST(TermCircuit, ThreeQubitParity) {
  Circuit c = term_circuit(3, mask({1, 2, 3}), 0.5, 0);
  Eigen::MatrixXcd u = simulate_dense(c);
  for (std::uint64_t x = 0; x < 8; ++x)
    for (std::uint64_t y = 0; y < 8; ++y) {
      const test::cd want = x == y ? std::polar(1.0, test::pi * chi(mask({1, 2, 3}), x, 3)) : test::cd(0);
      EXPECT_LT(std::abs(u(Eigen::Index(y), Eigen::Index(x)) - want), 1e-12);
    }
}

TEST(TermCircuit, AnchorFreedomAndCensus) {
  const std::uint64_t y = mask({1, 3, 4});
  Eigen::MatrixXcd first = simulate_dense(term_circuit(4, y, 0.3, 0));
  for (int anchor : {2, 3}) {
    Circuit c = term_circuit(4, y, 0.3, anchor);
    EXPECT_LT((simulate_dense(c) - first).cwiseAbs().maxCoeff(), 1e-12);
    Census cs = census(c);
    EXPECT_EQ(cs.count(Op::H), 4);
    EXPECT_EQ(cs.gzz, 2);  // one per CZ fan
  }
  EXPECT_THROW(term_circuit(4, y, 0.3, 1), std::invalid_argument);
}

TEST(Parallelize, SmallTrace) {
  std::vector<Layer> l = parallelize_supports({mask({1, 2}), mask({3, 4}), mask({1, 3})}, true);
  ASSERT_EQ(l.size(), 2u);
  EXPECT_EQ(l[0].size(), 2u);
  EXPECT_EQ(l[1], (Layer{mask({1, 3})}));
}

TEST(Parallelize, WorkedExample) {
  std::vector<Layer> l = parallelize_supports(kExample, true);
  int twos = 0, ones = 0;
  std::uint64_t seen = 0;
  std::size_t total = 0;
  for (const Layer& layer : l) {
    std::uint64_t used = 0;
    for (auto s : layer) {
      EXPECT_EQ(used & s, 0u);
      used |= s;
      seen |= std::uint64_t(1) << (std::find(kExample.begin(), kExample.end(), s) - kExample.begin());
    }
    total += layer.size();
    twos += layer.size() == 2;
    ones += layer.size() == 1;
  }
  EXPECT_EQ(twos, 3);
  EXPECT_EQ(ones, 1);
  EXPECT_EQ(total, kExample.size());
  EXPECT_EQ(seen, 0x7Fu);
  // the lone support is s7
  for (const Layer& layer : l)
    if (layer.size() == 1) EXPECT_EQ(layer[0], mask({2, 3, 4, 5}));
}

TEST(Parallelize, PairwiseIntersectingGivesSingletons) {
  std::vector<Layer> l = parallelize_supports({mask({1, 2, 3}), mask({1, 4, 5}), mask({2, 4, 6}), mask({3, 5, 6})});
  EXPECT_EQ(l.size(), 4u);
}

TEST(Parallelize, ComplementPairing) {
  for (int n = 6; n <= 8; ++n) {
    std::vector<std::uint64_t> s;
    const std::uint64_t full = (std::uint64_t(1) << n) - 1;
    for (std::uint64_t m = 1; m < full; ++m)
      if (std::popcount(m) >= 3 && std::popcount(full ^ m) >= 3) s.push_back(m);
    std::vector<Layer> l = parallelize_supports(s);
    EXPECT_EQ(l.size(), s.size() / 2) << n;
    for (const Layer& layer : l) {
      ASSERT_EQ(layer.size(), 2u);
      EXPECT_EQ(layer[0] | layer[1], full);
    }
  }
}

TEST(OrderLayers, WorkedExampleWeights) {
  const Layer u1 = {mask({1, 2}), mask({3, 4, 5})};
  const Layer u2 = {mask({1, 2, 3}), mask({4, 5})};
  const Layer u3 = {mask({2, 5}), mask({3, 4})};
  EXPECT_EQ(match_layers(u1, u2).shared, 4);
  EXPECT_EQ(match_layers(u1, u3).shared, 3);
  EXPECT_EQ(match_layers(u2, u3).shared, 2);

  LayerOrder o = order_layers({u1, u2, u3});
  // u2, u1, u3 or its reverse
  EXPECT_EQ(o.order[1], 0);
  EXPECT_EQ(o.shared_support, 7);
  EXPECT_EQ(o.shared_support_cz(), 14);
  ASSERT_EQ(o.links.size(), 2u);
}

TEST(OrderLayers, Trivial) {
  LayerOrder one = order_layers({{mask({1, 2, 3})}});
  EXPECT_EQ(one.order, std::vector<int>{0});
  EXPECT_EQ(one.shared_support, 0);
  const Layer a = {mask({1, 2, 3}), mask({4, 5, 6})}, b = {mask({1, 4, 7}), mask({2, 3, 5})};
  EXPECT_EQ(order_layers({a, b}).shared_support, order_layers({b, a}).shared_support);
}

TEST(PlaceHadamards, WorkedExampleAnchors) {
  const Layer u1 = {mask({1, 2}), mask({3, 4, 5})};
  const Layer u2 = {mask({1, 2, 3}), mask({4, 5})};
  const Layer u3 = {mask({2, 5}), mask({3, 4})};
  LayerOrder o = order_layers({u1, u2, u3});
  std::vector<Layer> all = {u1, u2, u3}, ordered;
  for (int k : o.order) ordered.push_back(all[std::size_t(k)]);
  Placement p = place_hadamards(5, ordered, o.links, true);
  EXPECT_EQ(p.ancillas, 0);
  EXPECT_EQ(p.hadamards, 4);
  // the s1-s5-s4 chain sits on x2, the s6-s3-s2 chain on x4
  for (std::size_t k = 0; k < ordered.size(); ++k)
    for (std::size_t i = 0; i < ordered[k].size(); ++i) {
      const std::uint64_t s = ordered[k][i];
      const bool first_chain = s == mask({1, 2}) || s == mask({1, 2, 3}) || s == mask({2, 5});
      EXPECT_EQ(p.anchors[k][i], first_chain ? 1 : 3);
    }
}

TEST(PlaceHadamards, SingleLayer) {
  std::vector<Layer> one = {{mask({1, 2, 3}), mask({4, 5, 6})}};
  Placement p = place_hadamards(6, one, {}, true);
  EXPECT_EQ(p.ancillas, 0);
  EXPECT_EQ(p.hadamards, 4);
  EXPECT_TRUE((mask({1, 2, 3}) >> p.anchors[0][0]) & 1u);
  EXPECT_TRUE((mask({4, 5, 6}) >> p.anchors[0][1]) & 1u);
}

TEST(PlaceHadamards, EmptyIntersectionsUseAncillas) {
  std::vector<Layer> w = {{mask({1, 2, 3}), mask({4, 5, 6})},
                          {mask({1, 4, 7}), mask({2, 5, 8})},
                          {mask({3, 6, 7}), mask({8, 9, 10})}};
  LayerOrder o = order_layers(w);
  std::vector<Layer> ordered;
  for (int k : o.order) ordered.push_back(w[std::size_t(k)]);
  Placement with = place_hadamards(10, ordered, o.links, true);
  EXPECT_EQ(with.ancillas, 2);
  EXPECT_EQ(with.hadamards, 4);
  Placement without = place_hadamards(10, ordered, o.links, false);
  EXPECT_EQ(without.ancillas, 0);
  EXPECT_GT(without.hadamards, 4);

  std::vector<std::uint64_t> ys;
  for (const Layer& l : w) ys.insert(ys.end(), l.begin(), l.end());
  for (bool anc : {true, false}) {
    DiagOptions opt;
    opt.use_ancillas = anc;
    EXPECT_LT(max_compile_error(poly_of(10, ys, 0.37), opt), 1e-10);
  }
}

TEST(CompileDiagonal, WorkedExample) {
  DiagOptions o;
  o.allow_size2 = true;
  PhasePolynomial p = poly_of(5, kExample, 0.5);
  DiagonalCompilation c = compile_diagonal(p, o);
  EXPECT_EQ(c.report.gzz, 6);
  EXPECT_EQ(c.report.encoding_cost, 29);
  EXPECT_EQ(c.report.ancillas, 0);
  EXPECT_EQ(c.report.shared_support_cz, 14);
  EXPECT_EQ(c.report.baseline_cost, 32);  // 2 * sum C(|s|, 2)

  // recount: naive fan CZs minus edges actually present in the emitted GZZs
  long naive = 0, edges = 0;
  for (auto y : kExample) naive += 2 * (std::popcount(y) - 1);
  for (const Gate& g : c.circuit.gates())
    if (g.op == Op::GZZ)
      for (double v : g.a->upper()) edges += v != 0;
  EXPECT_EQ(c.report.cz_canceled, naive - edges);
  EXPECT_EQ(c.report.cz_canceled, 8);

  EXPECT_LT(max_compile_error(p, o), 1e-10);
  // no rotation survives at alpha = 1/2: every HZH became X
  EXPECT_EQ(census(c.circuit).count(Op::RX), 0);
}

TEST(CompileDiagonal, ChainedCensus) {
  // the three width-2 layers of the worked example alone
  DiagOptions o;
  o.allow_size2 = true;
  std::vector<std::uint64_t> ys(kExample.begin(), kExample.end() - 1);
  DiagonalCompilation c = compile_diagonal(poly_of(5, ys, 0.5), o);
  EXPECT_EQ(c.report.gzz, 3 + 1);
  EXPECT_EQ(c.report.hadamards, 4);
}

TEST(CompileDiagonal, EasyTermsOnly) {
  PhasePolynomial p;
  p.n = 4;
  p.coeffs = {{mask({1}), 0.1}, {mask({1, 2}), 0.2}, {mask({2, 4}), -0.3}, {mask({3}), 0.05}};
  DiagonalCompilation c = compile_diagonal(p);
  EXPECT_EQ(c.report.gzz, 1);
  EXPECT_EQ(c.report.hard_terms, 0);
  for (const Gate& g : c.circuit.gates()) EXPECT_TRUE(g.op == Op::GZZ || g.op == Op::RZ || g.op == Op::Phase);
  EXPECT_LT(max_compile_error(p, {}), 1e-10);
}

TEST(CompileDiagonal, RandomRoundTrip) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int n = 3; n <= 7; ++n)
    for (int t = 0; t < 50; ++t) {
      std::vector<double> f(std::size_t(1) << n);
      for (auto& v : f) v = u(rng);
      PhasePolynomial p = phase_poly_from_table(f);
      DiagOptions o;
      o.use_ancillas = t % 2 == 0;
      EXPECT_LT(max_compile_error(p, o), 1e-10) << n << " " << t;
    }
}
