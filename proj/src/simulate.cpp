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

#include "gzz/simulate.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace gzz {

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

void check_cap(int n, int cap, const char* who) {
  if (n > cap) throw std::invalid_argument(std::string(who) + ": register of " + std::to_string(n) +
                                           " qubits exceeds cap of " + std::to_string(cap));
}

// sum_{i<j} A_ij z_i z_j for every basis state.
Eigen::VectorXd zz_form(const HollowSymmetricd& a, double scale) {
  const int n = a.n();
  const std::uint64_t dim = std::uint64_t(1) << n;
  Eigen::VectorXd out(dim);
  std::vector<int> z(n);
  for (std::uint64_t x = 0; x < dim; ++x) {
    for (int q = 0; q < n; ++q) z[q] = qubit_bit(x, q, n) ? -1 : 1;
    double s = 0;
    Eigen::Index k = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++k) s += a.upper()[k] * z[i] * z[j];
    out[Eigen::Index(x)] = scale * s;
  }
  return out;
}

Eigen::VectorXd xx_form(const HollowSymmetricd& a) {
  const int n = a.n();
  const std::uint64_t dim = std::uint64_t(1) << n;
  Eigen::VectorXd out(dim);
  std::vector<int> b(n);
  for (std::uint64_t x = 0; x < dim; ++x) {
    for (int q = 0; q < n; ++q) b[q] = qubit_bit(x, q, n);
    double s = 0;
    Eigen::Index k = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++k)
        if (b[i] & b[j]) s += a.upper()[k];
    out[Eigen::Index(x)] = s;
  }
  return out;
}

Eigen::Matrix2cd single_qubit_matrix(const Gate& g) {
  const cd i(0, 1);
  Eigen::Matrix2cd m;
  switch (g.op) {
    case Op::H: m << 1, 1, 1, -1; return m / std::sqrt(2.0);
    case Op::X: m << 0, 1, 1, 0; return m;
    case Op::S: m << 1, 0, 0, i; return m;
    case Op::Sdg: m << 1, 0, 0, -i; return m;
    case Op::SX: m << cd(1, 1), cd(1, -1), cd(1, -1), cd(1, 1); return m / 2.0;
    case Op::SXdg: m << cd(1, -1), cd(1, 1), cd(1, 1), cd(1, -1); return m / 2.0;
    case Op::RZ: m << 1, 0, 0, std::exp(i * g.angle.radians()); return m;
    case Op::RX: {
      const double t = g.angle.radians() / 2;
      m << std::cos(t), -i * std::sin(t), -i * std::sin(t), std::cos(t);
      return m;
    }
    case Op::RY: {
      const double t = g.angle.radians() / 2;
      m << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
      return m;
    }
    default: throw std::logic_error("not a single-qubit gate");
  }
}

std::uint64_t apply_bits(const BinaryMatrix& b, std::uint64_t x, int n) {
  std::uint64_t y = 0;
  for (int i = 0; i < n; ++i) {
    int v = 0;
    for (int k = 0; k < n; ++k) v ^= (b(i, k) & 1) & qubit_bit(x, k, n);
    if (v) y |= std::uint64_t(1) << (n - 1 - i);
  }
  return y;
}

}  // namespace

DiagonalPhases gzz_phases(const HollowSymmetricd& a) {
  check_cap(a.n(), 24, "gzz_phases");
  return {a.n(), zz_form(a, 1.0)};
}

Eigen::VectorXd gate_phases(const Gate& g, int n) {
  const std::uint64_t dim = std::uint64_t(1) << n;
  Eigen::VectorXd p = Eigen::VectorXd::Zero(Eigen::Index(dim));
  const double al = g.angle.radians();
  auto each = [&](auto&& f) {
    for (std::uint64_t x = 0; x < dim; ++x) p[Eigen::Index(x)] = f(x);
  };
  switch (g.op) {
    case Op::S: each([&](auto x) { return qubit_bit(x, g.q[0], n) * kPi / 2; }); break;
    case Op::Sdg: each([&](auto x) { return -qubit_bit(x, g.q[0], n) * kPi / 2; }); break;
    case Op::RZ: each([&](auto x) { return qubit_bit(x, g.q[0], n) * al; }); break;
    case Op::CZ:
      each([&](auto x) { return qubit_bit(x, g.q[0], n) * qubit_bit(x, g.q[1], n) * kPi; });
      break;
    case Op::CS:
      each([&](auto x) { return qubit_bit(x, g.q[0], n) * qubit_bit(x, g.q[1], n) * kPi / 2; });
      break;
    case Op::CRZ:
      each([&](auto x) { return qubit_bit(x, g.q[0], n) * qubit_bit(x, g.q[1], n) * al; });
      break;
    case Op::ZZ:
      each([&](auto x) { return (qubit_bit(x, g.q[0], n) ^ qubit_bit(x, g.q[1], n)) * al; });
      break;
    case Op::GZZ: p = zz_form(*g.a, 1.0); break;
    case Op::Evolve: p = zz_form(*g.a, g.time); break;
    case Op::GCRZ: p = xx_form(*g.a); break;
    case Op::Phase: p.setConstant(al); break;
    default:
      throw std::invalid_argument("gate " + std::string(op_name(g.op)) + " is not diagonal");
  }
  return p;
}

DiagonalPhases simulate_diagonal(const Circuit& c) {
  const int n = c.n();
  check_cap(n, 24, "simulate_diagonal");
  const std::uint64_t dim = std::uint64_t(1) << n;
  Eigen::VectorXd phi = Eigen::VectorXd::Zero(Eigen::Index(dim));
  std::uint64_t flip = 0;  // U|x> = e^{i phi(x)} |x ^ flip>
  for (const auto& g : c.gates()) {
    if (g.op == Op::X) {
      flip ^= std::uint64_t(1) << (n - 1 - g.q[0]);
      continue;
    }
    if (!op_is_diagonal(g.op))
      throw std::invalid_argument("simulate_diagonal: gate " + std::string(op_name(g.op)) + " is not diagonal");
    const Eigen::VectorXd gp = gate_phases(g, n);
    if (flip == 0) {
      phi += gp;
    } else {
      for (std::uint64_t x = 0; x < dim; ++x) phi[Eigen::Index(x)] += gp[Eigen::Index(x ^ flip)];
    }
  }
  if (flip != 0) throw std::invalid_argument("simulate_diagonal: X gates do not cancel; circuit is not diagonal");
  return {n, phi};
}

void apply_circuit(const Circuit& c, Eigen::MatrixXcd& st) {
  const int n = c.n();
  const Eigen::Index dim = Eigen::Index(1) << n;
  if (st.rows() != dim) throw std::invalid_argument("apply_circuit: state dimension mismatch");
  for (const auto& g : c.gates()) {
    if (op_is_diagonal(g.op)) {
      const Eigen::VectorXd p = gate_phases(g, n);
      const Eigen::VectorXcd d = p.unaryExpr([](double v) { return std::polar(1.0, v); });
      st = d.asDiagonal() * st;
      continue;
    }
    switch (g.op) {
      case Op::CX: {
        const Eigen::Index cm = Eigen::Index(1) << (n - 1 - g.q[0]);
        const Eigen::Index tm = Eigen::Index(1) << (n - 1 - g.q[1]);
        for (Eigen::Index x = 0; x < dim; ++x)
          if ((x & cm) && !(x & tm)) st.row(x).swap(st.row(x | tm));
        break;
      }
      case Op::GCX: {
        Eigen::MatrixXcd out(st.rows(), st.cols());
        for (Eigen::Index x = 0; x < dim; ++x)
          out.row(Eigen::Index(apply_bits(*g.b, std::uint64_t(x), n))) = st.row(x);
        st = std::move(out);
        break;
      }
      default: {
        const Eigen::Matrix2cd m = single_qubit_matrix(g);
        const Eigen::Index mask = Eigen::Index(1) << (n - 1 - g.q[0]);
        for (Eigen::Index x = 0; x < dim; ++x) {
          if (x & mask) continue;
          const Eigen::RowVectorXcd a = st.row(x), b = st.row(x | mask);
          st.row(x) = m(0, 0) * a + m(0, 1) * b;
          st.row(x | mask) = m(1, 0) * a + m(1, 1) * b;
        }
      }
    }
  }
}

Eigen::MatrixXcd simulate_dense(const Circuit& c) {
  check_cap(c.n(), 10, "simulate_dense");
  const Eigen::Index dim = Eigen::Index(1) << c.n();
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  apply_circuit(c, u);
  return u;
}

RestrictedDiagonal restricted_diagonal(const Circuit& c, int data) {
  const int n = c.n();
  if (data > n || data < 0) throw std::invalid_argument("restricted_diagonal: bad data-qubit count");
  check_cap(n, 16, "restricted_diagonal");
  const Eigen::Index dim = Eigen::Index(1) << n;
  const Eigen::Index k = Eigen::Index(1) << data;
  const int shift = n - data;  // ancillas are the low bits
  Eigen::MatrixXcd st = Eigen::MatrixXcd::Zero(dim, k);
  for (Eigen::Index x = 0; x < k; ++x) st(x << shift, x) = 1;
  apply_circuit(c, st);

  RestrictedDiagonal out;
  out.phases.n = data;
  out.phases.phases.resize(k);
  for (Eigen::Index x = 0; x < k; ++x) {
    const cd d = st(x << shift, x);
    out.phases.phases[x] = std::arg(d);
    out.min_modulus = std::min(out.min_modulus, std::abs(d));
    st(x << shift, x) = 0;
    out.off_diagonal = std::max(out.off_diagonal, st.col(x).cwiseAbs().maxCoeff());
  }
  return out;
}

bool equal_up_to_global_phase(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v, double tol) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) return false;
  if (u.size() == 0) return true;
  Eigen::Index r = 0, c = 0;
  v.cwiseAbs().maxCoeff(&r, &c);
  cd ph(1, 0);
  if (std::abs(v(r, c)) > 0 && std::abs(u(r, c)) > 0) {
    ph = u(r, c) / v(r, c);
    ph /= std::abs(ph);
  }
  return (u - ph * v).cwiseAbs().maxCoeff() <= tol;
}

double phase_distance(const DiagonalPhases& a, const DiagonalPhases& b) {
  if (a.phases.size() != b.phases.size()) throw std::invalid_argument("phase_distance: size mismatch");
  cd acc(0, 0);
  for (Eigen::Index x = 0; x < a.phases.size(); ++x) acc += std::polar(1.0, a.phases[x] - b.phases[x]);
  const double phi = std::abs(acc) > 0 ? std::arg(acc) : 0.0;
  double worst = 0;
  for (Eigen::Index x = 0; x < a.phases.size(); ++x)
    worst = std::max(worst, std::abs(std::polar(1.0, a.phases[x] - b.phases[x] - phi) - 1.0));
  return worst;
}

double phase_distance_strict(const DiagonalPhases& a, const DiagonalPhases& b) {
  if (a.phases.size() != b.phases.size()) throw std::invalid_argument("phase_distance: size mismatch");
  double worst = 0;
  for (Eigen::Index x = 0; x < a.phases.size(); ++x)
    worst = std::max(worst, std::abs(std::polar(1.0, a.phases[x] - b.phases[x]) - 1.0));
  return worst;
}

Eigen::MatrixXcd diagonal_matrix(const DiagonalPhases& p) {
  const Eigen::VectorXcd d = p.phases.unaryExpr([](double v) { return std::polar(1.0, v); });
  return d.asDiagonal();
}

Circuit gcrz_decompose(const HollowSymmetricd& a) {
  const int n = a.n();
  Circuit c(n);
  if (a.is_zero()) return c;
  c.add(gates::phase(Angle::rad(-a.total() / 4)));
  c.add(gates::gzz(a * 0.25));
  const Eigen::VectorXd b = a.row_sums();
  for (int i = 0; i < n; ++i)
    if (b[i] != 0) c.add(gates::rz(Angle::rad(b[i] / 2), i));
  return c;
}

BitVector gcx_apply(const BinaryMatrix& b, const BitVector& x) {
  if (!gf2_invertible(b)) throw std::invalid_argument("gcx_apply: matrix is singular over F2");
  return gf2_apply(b, x);
}

Eigen::MatrixXcd gcx_matrix(const BinaryMatrix& b) {
  if (!gf2_invertible(b)) throw std::invalid_argument("gcx_matrix: matrix is singular over F2");
  const int n = int(b.rows());
  check_cap(n, 10, "gcx_matrix");
  const Eigen::Index dim = Eigen::Index(1) << n;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index x = 0; x < dim; ++x) u(Eigen::Index(apply_bits(b, std::uint64_t(x), n)), x) = 1;
  return u;
}

}  // namespace gzz
