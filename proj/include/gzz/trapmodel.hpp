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

#ifndef GZZ_TRAPMODEL_HPP
#define GZZ_TRAPMODEL_HPP

#include <Eigen/Dense>

#include <vector>

#include "gzz/frame.hpp"
#include "gzz/io.hpp"

namespace gzz {

namespace constants {
inline constexpr double hbar = 1.054571817e-34;           // J s
inline constexpr double coulomb = 8.9875517923e9;         // N m^2 / C^2
inline constexpr double elementary_charge = 1.602176634e-19;
inline constexpr double atomic_mass = 1.66053906660e-27;  // kg
inline constexpr double bohr_magneton = 9.2740100783e-24; // J / T
}  // namespace constants

struct TrapParams {
  int N = 1;
  double mass = 171 * constants::atomic_mass;
  double charge = constants::elementary_charge;
  double omega_z = 2 * 3.14159265358979323846 * 1e5;
  double B1 = 100;                        // T / m
  double mu = constants::bohr_magneton;   // J / T
  std::vector<int> mF;                    // empty: all +1
  double f0 = 12.642812118466e9;          // Hz, 171Yb+ hyperfine splitting
  double rabi = 2 * 3.14159265358979323846 * 1e5;  // rad/s, metadata only

  // Reference 171Yb+ setup for N ions.
  static TrapParams yb171_paper(int N);
  void validate() const;
};

json to_json(const TrapParams& p);
TrapParams trap_params_from_json(const json& j);

// l^3 = K q^2 / (M omega^2)
double length_scale(const TrapParams& p);

// Equilibrium of sum u_i^2 / 2 + sum_{i<j} 1 / |u_i - u_j| (units of l).
// Damped Newton; throws std::runtime_error on non-convergence.
Eigen::VectorXd equilibrium_scaled(int N);
Eigen::VectorXd equilibrium_positions(const TrapParams& p);  // metres

// Dimensionless Hessian at u; the physical one is M omega^2 times this.
Eigen::MatrixXd hessian_scaled(const Eigen::VectorXd& u);
Eigen::MatrixXd hessian(const TrapParams& p, const Eigen::VectorXd& zbar);  // J / m^2

// J = (1/hbar) (mu B1 / 2)^2 H^{-1}, hollowed and masked by mF mF^T (rad/s).
HollowSymmetricd coupling_matrix(const TrapParams& p);

// omega(mF, B) = 2 pi f0 + mF mu B / hbar, first order only.
double transition_frequency(int mF, double B, double mu = constants::bohr_magneton,
                            double f0 = 12.642812118466e9);

}  // namespace gzz

#endif  // GZZ_TRAPMODEL_HPP
