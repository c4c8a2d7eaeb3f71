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

#include "gzz/chempass.hpp"

#include <cmath>
#include <stdexcept>

#include "gzz/io.hpp"

namespace gzz {

Eigen::Matrix4cd givens_reference(double phi) {
  Eigen::Matrix4cd g = Eigen::Matrix4cd::Identity();
  g(1, 1) = g(2, 2) = std::cos(phi);
  g(1, 2) = std::sin(phi);
  g(2, 1) = -std::sin(phi);
  return g;
}

namespace {

// Local layers of the compiled rotation, per pair (a, b); `zz` is called at
// the two entangling slots.
template <class ZZ>
void givens_skeleton(Circuit& c, const std::vector<std::pair<int, int>>& pairs, ZZ zz) {
  auto each = [&](auto f) {
    for (auto [a, b] : pairs) f(a, b);
  };
  each([&](int a, int b) { c.add(gates::s(a)).add(gates::s(b)); });
  each([&](int, int b) { c.add(gates::h(b)); });
  // S-dagger here and S after the second ZZ on the second qubit: the other
  // order conjugates R_X into R_Y(+phi) and yields G(-phi).
  each([&](int a, int b) { c.add(gates::sx(a)).add(gates::sdg(b)); });
  each([&](int a, int b) { c.add(gates::h(a)).add(gates::h(b)); });
  zz();
  each([&](int a, int b) { c.add(gates::h(a)).add(gates::h(b)); });
  zz();
  each([&](int a, int b) { c.add(gates::sxdg(a)).add(gates::s(b)); });
  each([&](int, int b) { c.add(gates::h(b)); });
  each([&](int a, int b) { c.add(gates::sdg(a)).add(gates::sdg(b)); });
}

std::vector<std::pair<int, int>> pairs_of(int n) {
  std::vector<std::pair<int, int>> p;
  for (int q = 0; q + 1 < n; q += 2) p.emplace_back(q, q + 1);
  return p;
}

}  // namespace

Circuit givens_compile(double phi) {
  Circuit c(2);
  givens_skeleton(c, pairs_of(2), [&] { c.add(gates::zz(Angle::rad(-phi), 0, 1)); });
  return c;
}

HollowSymmetricd nearest_neighbor_pairs(int n) {
  HollowSymmetricd a(n);
  for (int q = 0; q + 1 < n; q += 2) a.set(q, q + 1, 1);
  return a;
}

Circuit givens_layer_compile(double phi, int n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("givens layer: n must be even and at least 2");
  // ZZ(-phi) on every pair == GZZ(phi/2 A_NN) up to a global phase.
  HollowSymmetricd a = nearest_neighbor_pairs(n);
  a *= phi / 2;
  Circuit c(n);
  givens_skeleton(c, pairs_of(n), [&] { c.add(gates::gzz(a)); });
  return c;
}

DynamicsSpec dynamics_from_json(const json& j) {
  DynamicsSpec s;
  s.n = j.at("n").get<int>();
  s.m = j.at("m").get<int>();
  for (const auto& a : j.value("A", json::array())) s.a.push_back(hollow_from_json(a));
  s.phi = j.at("phi").get<std::vector<double>>();
  const auto theta = j.value("theta", std::vector<double>{0, 0});
  if (theta.size() != 2) throw std::invalid_argument("dynamics: 'theta' must hold two angles");
  s.theta0 = theta[0];
  s.theta1 = theta[1];
  return s;
}

Circuit dynamics_circuit(const DynamicsSpec& s) {
  if (s.m < 1) throw std::invalid_argument("dynamics: m must be at least 1");
  if (int(s.a.size()) != s.m - 1) throw std::invalid_argument("dynamics: need m-1 interaction matrices");
  if (int(s.phi.size()) != s.m + 1) throw std::invalid_argument("dynamics: need m+1 Givens angles");
  for (const auto& a : s.a)
    if (a.n() != s.n) throw std::invalid_argument("dynamics: interaction matrix size differs from n");
  Circuit c(s.n);
  c.append(givens_layer_compile(s.phi[0], s.n));
  for (int q = 0; q < s.n; ++q) c.add(gates::rz(Angle::rad(q % 2 == 0 ? s.theta0 : s.theta1), q));
  for (int k = 1; k < s.m; ++k) {
    c.append(givens_layer_compile(s.phi[std::size_t(k)], s.n));
    c.add(gates::gzz(s.a[std::size_t(k - 1)]));
  }
  c.append(givens_layer_compile(s.phi[std::size_t(s.m)], s.n));
  return c;
}

}  // namespace gzz
