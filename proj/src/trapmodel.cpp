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

#include "gzz/trapmodel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gzz {

TrapParams TrapParams::yb171_paper(int N) {
  TrapParams p;
  p.N = N;
  p.mF.assign(std::size_t(N), 1);
  return p;
}

void TrapParams::validate() const {
  if (N < 1) throw std::invalid_argument("trap: N must be at least 1");
  if (!(omega_z > 0)) throw std::invalid_argument("trap: omega_z must be positive");
  if (!(B1 >= 0)) throw std::invalid_argument("trap: B1 must be non-negative");
  if (!(mass > 0) || !(charge > 0)) throw std::invalid_argument("trap: mass and charge must be positive");
  if (!mF.empty() && int(mF.size()) != N) throw std::invalid_argument("trap: mF needs one entry per ion");
  for (int v : mF)
    if (v < -1 || v > 1) throw std::invalid_argument("trap: mF entries must be -1, 0 or +1");
}

json to_json(const TrapParams& p) {
  json j;
  j["N"] = p.N;
  j["mass"] = p.mass;
  j["charge"] = p.charge;
  j["omega_z"] = p.omega_z;
  j["B1"] = p.B1;
  j["mu"] = p.mu;
  j["mF"] = p.mF;
  j["f0"] = p.f0;
  j["rabi"] = p.rabi;
  return j;
}

TrapParams trap_params_from_json(const json& j) {
  TrapParams p;
  if (j.contains("preset")) {
    if (j.at("preset").get<std::string>() != "yb171-paper")
      throw std::invalid_argument("trap: unknown preset " + j.at("preset").dump());
    p = TrapParams::yb171_paper(j.at("N").get<int>());
  }
  p.N = j.value("N", p.N);
  p.mass = j.value("mass", p.mass);
  p.charge = j.value("charge", p.charge);
  p.omega_z = j.value("omega_z", p.omega_z);
  p.B1 = j.value("B1", p.B1);
  p.mu = j.value("mu", p.mu);
  p.f0 = j.value("f0", p.f0);
  p.rabi = j.value("rabi", p.rabi);
  if (j.contains("mF")) p.mF = j.at("mF").get<std::vector<int>>();
  p.validate();
  return p;
}

double length_scale(const TrapParams& p) {
  return std::cbrt(constants::coulomb * p.charge * p.charge / (p.mass * p.omega_z * p.omega_z));
}

namespace {

Eigen::VectorXd gradient(const Eigen::VectorXd& u) {
  const Eigen::Index n = u.size();
  Eigen::VectorXd g = u;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) continue;
      const double d = u[i] - u[j];
      g[i] -= (d > 0 ? 1.0 : -1.0) / (d * d);
    }
  return g;
}

bool ordered(const Eigen::VectorXd& u) {
  for (Eigen::Index i = 1; i < u.size(); ++i)
    if (!(u[i] > u[i - 1])) return false;
  return true;
}

}  // namespace

Eigen::MatrixXd hessian_scaled(const Eigen::VectorXd& u) {
  const Eigen::Index n = u.size();
  Eigen::MatrixXd h = Eigen::MatrixXd::Identity(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) continue;
      const double c = 2.0 / std::pow(std::abs(u[i] - u[j]), 3);
      h(i, j) = -c;
      h(i, i) += c;
    }
  return h;
}

Eigen::VectorXd equilibrium_scaled(int N) {
  if (N < 1) throw std::invalid_argument("equilibrium: N must be at least 1");
  Eigen::VectorXd u = Eigen::VectorXd::LinSpaced(N, -0.25 * N, 0.25 * N);
  if (N == 1) u[0] = 0;
  double gn = gradient(u).cwiseAbs().maxCoeff();
  for (int it = 0; it < 200 && gn > 1e-13; ++it) {
    const Eigen::VectorXd g = gradient(u);
    const Eigen::VectorXd step = hessian_scaled(u).ldlt().solve(g);
    double t = 1;
    for (int halve = 0; halve < 60; ++halve, t /= 2) {
      const Eigen::VectorXd cand = u - t * step;
      if (!ordered(cand)) continue;
      const double cn = gradient(cand).cwiseAbs().maxCoeff();
      if (cn < gn || halve == 59) {
        u = cand;
        gn = cn;
        break;
      }
    }
  }
  if (!(gn <= 1e-10)) throw std::runtime_error("equilibrium: Newton iteration did not converge");
  return u;
}

Eigen::VectorXd equilibrium_positions(const TrapParams& p) {
  p.validate();
  return equilibrium_scaled(p.N) * length_scale(p);
}

Eigen::MatrixXd hessian(const TrapParams& p, const Eigen::VectorXd& zbar) {
  p.validate();
  const Eigen::MatrixXd h = p.mass * p.omega_z * p.omega_z * hessian_scaled(zbar / length_scale(p));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() <= 0) throw std::runtime_error("hessian: equilibrium is not stable");
  return h;
}

HollowSymmetricd coupling_matrix(const TrapParams& p) {
  p.validate();
  const Eigen::VectorXd u = equilibrium_scaled(p.N);
  const Eigen::MatrixXd hs = hessian_scaled(u);
  Eigen::LDLT<Eigen::MatrixXd> ldlt(hs);
  if (ldlt.info() != Eigen::Success || !ldlt.isPositive())
    throw std::runtime_error("coupling_matrix: Hessian is singular or indefinite");
  const Eigen::MatrixXd hinv = ldlt.solve(Eigen::MatrixXd::Identity(p.N, p.N));
  const double g = p.mu * p.B1 / 2;
  const double scale = g * g / (constants::hbar * p.mass * p.omega_z * p.omega_z);
  HollowSymmetricd j(p.N);
  for (int a = 0; a < p.N; ++a)
    for (int b = a + 1; b < p.N; ++b) {
      const int ma = p.mF.empty() ? 1 : p.mF[std::size_t(a)];
      const int mb = p.mF.empty() ? 1 : p.mF[std::size_t(b)];
      j.set(a, b, scale * hinv(a, b) * ma * mb);
    }
  return j;
}

double transition_frequency(int mF, double B, double mu, double f0) {
  if (mF < -1 || mF > 1) throw std::invalid_argument("transition_frequency: mF must be -1, 0 or +1");
  return 2 * std::numbers::pi * f0 + mF * mu * B / constants::hbar;
}

}  // namespace gzz
