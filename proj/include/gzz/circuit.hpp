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

#ifndef GZZ_CIRCUIT_HPP
#define GZZ_CIRCUIT_HPP

#include <array>
#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gzz/frame.hpp"
#include "gzz/gf2.hpp"

namespace gzz {

// Either a plain radian value or an exact-ish multiple of pi. Clifford angles
// stay in pi units so S-power bookkeeping never drifts.
struct Angle {
  double coeff = 0;
  bool pi = false;

  static Angle rad(double v) { return {v, false}; }
  static Angle pi_units(double c) { return {c, true}; }
  double radians() const;

  friend bool operator==(const Angle&, const Angle&) = default;
};

enum class Op {
  H, X, S, Sdg, SX, SXdg, RZ, RX, RY,  // one qubit
  CX, CZ, CS, CRZ, ZZ,                 // two qubits
  GZZ, GCRZ, GCX, Evolve,              // register-wide
  Phase,
};

std::string_view op_name(Op op);
int op_arity(Op op);  // 1, 2, or 0 for register-wide / phase
bool op_is_diagonal(Op op);

struct Gate {
  Op op = Op::H;
  std::array<int, 2> q{-1, -1};  // 0-based
  Angle angle;
  double time = 0;  // Evolve only
  std::shared_ptr<const HollowSymmetricd> a;  // GZZ, GCRZ, Evolve (J)
  std::shared_ptr<const BinaryMatrix> b;      // GCX
  std::string ref;  // optional "@file" origin kept for printing

  // Qubits the gate acts on nontrivially.
  std::vector<int> support(int n) const;
};

namespace gates {
Gate h(int q);
Gate x(int q);
Gate s(int q);
Gate sdg(int q);
Gate sx(int q);
Gate sxdg(int q);
Gate rz(Angle a, int q);
Gate rx(Angle a, int q);
Gate ry(Angle a, int q);
Gate cx(int control, int target);
Gate cz(int a, int b);
Gate cs(int a, int b);
Gate crz(Angle a, int i, int j);
Gate zz(Angle a, int i, int j);
Gate gzz(HollowSymmetricd a);
Gate gcrz(HollowSymmetricd a);
Gate gcx(BinaryMatrix b);
Gate evolve(HollowSymmetricd j, double t);
Gate phase(Angle a);
}  // namespace gates

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int n) : n_(n) {}

  int n() const { return n_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  Circuit& add(Gate g);
  Circuit& append(const Circuit& other);
  Circuit reversed() const;
  // Same gates acting on a larger register (extra qubits idle).
  Circuit widened(int n) const;

 private:
  int n_ = 0;
  std::vector<Gate> gates_;
};

struct Census {
  std::map<Op, int> counts;
  int gzz = 0;            // GZZ + Evolve-free multi-qubit diagonal gates (GZZ, GCRZ)
  int two_qubit = 0;      // CX, CZ, CS, CRZ, ZZ
  long encoding_cost = 0; // sum of C(k,2) over GZZ/GCRZ supports + 1 per two-qubit gate
  int count(Op op) const {
    auto it = counts.find(op);
    return it == counts.end() ? 0 : it->second;
  }
};

Census census(const Circuit& c);

// Text form, one gate per line, 1-based qubits:
//   QUBITS 5
//   H 3 / CZ 1 2 / RZ 0.25pi 1 / GZZ @a.json / GCX @b.bin / EVOLVE @j.json 1.5e-4 / PHASE 0.125pi
// Matrix payloads may also be inline JSON.
std::string to_text(const Circuit& c);
Circuit parse_circuit(std::string_view text, const std::filesystem::path& base_dir = {});

std::string format_double(double v);
std::string format_angle(const Angle& a);
Angle parse_angle(std::string_view s);

}  // namespace gzz

#endif  // GZZ_CIRCUIT_HPP
