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

#include "gzz/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "gzz/io.hpp"

namespace gzz {

double Angle::radians() const { return pi ? coeff * std::numbers::pi : coeff; }

namespace {

struct OpInfo {
  Op op;
  std::string_view name;
  int arity;
  bool diagonal;
};

constexpr OpInfo kOps[] = {
    {Op::H, "H", 1, false},      {Op::X, "X", 1, false},       {Op::S, "S", 1, true},
    {Op::Sdg, "SDG", 1, true},   {Op::SX, "SX", 1, false},     {Op::SXdg, "SXDG", 1, false},
    {Op::RZ, "RZ", 1, true},     {Op::RX, "RX", 1, false},     {Op::RY, "RY", 1, false},
    {Op::CX, "CX", 2, false},    {Op::CZ, "CZ", 2, true},      {Op::CS, "CS", 2, true},
    {Op::CRZ, "CRZ", 2, true},   {Op::ZZ, "ZZ", 2, true},      {Op::GZZ, "GZZ", 0, true},
    {Op::GCRZ, "GCRZ", 0, true}, {Op::GCX, "GCX", 0, false},   {Op::Evolve, "EVOLVE", 0, true},
    {Op::Phase, "PHASE", 0, true},
};

const OpInfo& info(Op op) {
  for (const auto& i : kOps)
    if (i.op == op) return i;
  throw std::logic_error("unknown op");
}

bool has_angle(Op op) {
  return op == Op::RZ || op == Op::RX || op == Op::RY || op == Op::CRZ || op == Op::ZZ ||
         op == Op::Phase;
}

Gate one(Op op, int q) {
  Gate g;
  g.op = op;
  g.q = {q, -1};
  return g;
}

Gate two(Op op, int a, int b) {
  if (a == b) throw std::invalid_argument("two-qubit gate needs distinct qubits");
  Gate g;
  g.op = op;
  g.q = {a, b};
  return g;
}

}  // namespace

std::string_view op_name(Op op) { return info(op).name; }
int op_arity(Op op) { return info(op).arity; }
bool op_is_diagonal(Op op) { return info(op).diagonal; }

std::vector<int> Gate::support(int n) const {
  switch (op_arity(op)) {
    case 1: return {q[0]};
    case 2: return {q[0], q[1]};
    default: break;
  }
  std::vector<int> s;
  if (op == Op::Phase) return s;
  for (int i = 0; i < n; ++i) {
    bool touched = false;
    for (int j = 0; j < n && !touched; ++j) {
      if (i == j) continue;
      if (a) touched = (*a)(i, j) != 0.0;
      if (b) touched = ((*b)(i, j) & 1) || ((*b)(j, i) & 1);
    }
    if (touched) s.push_back(i);
  }
  return s;
}

namespace gates {
Gate h(int q) { return one(Op::H, q); }
Gate x(int q) { return one(Op::X, q); }
Gate s(int q) { return one(Op::S, q); }
Gate sdg(int q) { return one(Op::Sdg, q); }
Gate sx(int q) { return one(Op::SX, q); }
Gate sxdg(int q) { return one(Op::SXdg, q); }
Gate rz(Angle a, int q) {
  Gate g = one(Op::RZ, q);
  g.angle = a;
  return g;
}
Gate rx(Angle a, int q) {
  Gate g = one(Op::RX, q);
  g.angle = a;
  return g;
}
Gate ry(Angle a, int q) {
  Gate g = one(Op::RY, q);
  g.angle = a;
  return g;
}
Gate cx(int control, int target) { return two(Op::CX, control, target); }
Gate cz(int a, int b) { return two(Op::CZ, a, b); }
Gate cs(int a, int b) { return two(Op::CS, a, b); }
Gate crz(Angle a, int i, int j) {
  Gate g = two(Op::CRZ, i, j);
  g.angle = a;
  return g;
}
Gate zz(Angle a, int i, int j) {
  Gate g = two(Op::ZZ, i, j);
  g.angle = a;
  return g;
}
Gate gzz(HollowSymmetricd a) {
  Gate g;
  g.op = Op::GZZ;
  g.a = std::make_shared<const HollowSymmetricd>(std::move(a));
  return g;
}
Gate gcrz(HollowSymmetricd a) {
  Gate g;
  g.op = Op::GCRZ;
  g.a = std::make_shared<const HollowSymmetricd>(std::move(a));
  return g;
}
Gate gcx(BinaryMatrix b) {
  if (!gf2_invertible(b)) throw std::invalid_argument("GCX: matrix is not invertible over F2");
  Gate g;
  g.op = Op::GCX;
  g.b = std::make_shared<const BinaryMatrix>(std::move(b));
  return g;
}
Gate evolve(HollowSymmetricd j, double t) {
  Gate g;
  g.op = Op::Evolve;
  g.a = std::make_shared<const HollowSymmetricd>(std::move(j));
  g.time = t;
  return g;
}
Gate phase(Angle a) {
  Gate g;
  g.op = Op::Phase;
  g.angle = a;
  return g;
}
}  // namespace gates

Circuit& Circuit::add(Gate g) {
  const int ar = op_arity(g.op);
  for (int k = 0; k < ar; ++k)
    if (g.q[k] < 0 || g.q[k] >= n_)
      throw std::invalid_argument("gate " + std::string(op_name(g.op)) + ": qubit index out of range");
  if (g.a && g.a->n() != n_)
    throw std::invalid_argument("gate " + std::string(op_name(g.op)) + ": matrix size differs from register");
  if (g.b && g.b->rows() != n_)
    throw std::invalid_argument("GCX: matrix size differs from register");
  gates_.push_back(std::move(g));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.n_ != n_) throw std::invalid_argument("append: register size mismatch");
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  return *this;
}

Circuit Circuit::reversed() const {
  Circuit r(n_);
  r.gates_.assign(gates_.rbegin(), gates_.rend());
  return r;
}

Circuit Circuit::widened(int n) const {
  if (n < n_) throw std::invalid_argument("widened: cannot shrink a register");
  Circuit w(n);
  for (Gate g : gates_) {
    if (g.a) {
      HollowSymmetricd big(n);
      for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) big.set(i, j, (*g.a)(i, j));
      g.a = std::make_shared<const HollowSymmetricd>(std::move(big));
      g.ref.clear();
    }
    if (g.b) {
      BinaryMatrix big = BinaryMatrix::Identity(n, n);
      big.topLeftCorner(n_, n_) = *g.b;
      g.b = std::make_shared<const BinaryMatrix>(std::move(big));
      g.ref.clear();
    }
    w.add(std::move(g));
  }
  return w;
}

Census census(const Circuit& c) {
  Census out;
  for (const auto& g : c.gates()) {
    ++out.counts[g.op];
    if (op_arity(g.op) == 2) {
      ++out.two_qubit;
      ++out.encoding_cost;
    } else if (g.op == Op::GZZ || g.op == Op::GCRZ) {
      ++out.gzz;
      const long k = long(g.support(c.n()).size());
      out.encoding_cost += k * (k - 1) / 2;
    }
  }
  return out;
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_angle(const Angle& a) {
  return a.pi ? format_double(a.coeff) + "pi" : format_double(a.coeff);
}

namespace {

double parse_double(std::string_view s) {
  double v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw std::invalid_argument("malformed number '" + std::string(s) + "'");
  return v;
}

int parse_qubit(std::string_view s, int n) {
  int v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw std::invalid_argument("malformed qubit index '" + std::string(s) + "'");
  if (v < 1 || v > n) throw std::invalid_argument("qubit index " + std::string(s) + " out of range");
  return v - 1;
}

// Splits on whitespace, but keeps a brace-balanced JSON token together.
std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    if (line[i] == '{' || line[i] == '[') {
      int depth = 0;
      bool in_str = false;
      for (; j < line.size(); ++j) {
        const char c = line[j];
        if (in_str) {
          if (c == '\\') ++j;
          else if (c == '"') in_str = false;
          continue;
        }
        if (c == '"') in_str = true;
        else if (c == '{' || c == '[') ++depth;
        else if (c == '}' || c == ']') {
          if (--depth == 0) {
            ++j;
            break;
          }
        }
      }
      if (depth != 0) throw std::invalid_argument("unbalanced inline JSON");
    } else {
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    }
    out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

json load_payload(const std::string& tok, const std::filesystem::path& base, bool* from_text_rows) {
  if (from_text_rows) *from_text_rows = false;
  if (!tok.empty() && tok[0] == '@') {
    const std::filesystem::path p = base / tok.substr(1);
    const std::string body = read_file(p);
    try {
      return json::parse(body);
    } catch (const json::parse_error&) {
      if (!from_text_rows) throw std::invalid_argument(p.string() + ": not JSON");
      *from_text_rows = true;
      return to_json(binary_from_text(body));
    }
  }
  return json::parse(tok);
}

}  // namespace

Angle parse_angle(std::string_view s) {
  if (s.size() >= 2 && s.substr(s.size() - 2) == "pi") {
    std::string_view c = s.substr(0, s.size() - 2);
    if (c.empty() || c == "+") return Angle::pi_units(1);
    if (c == "-") return Angle::pi_units(-1);
    if (c.back() == '*') c.remove_suffix(1);
    return Angle::pi_units(parse_double(c));
  }
  return Angle::rad(parse_double(s));
}

std::string to_text(const Circuit& c) {
  std::ostringstream out;
  out << "QUBITS " << c.n() << '\n';
  for (const auto& g : c.gates()) {
    out << op_name(g.op);
    switch (g.op) {
      case Op::GZZ:
      case Op::GCRZ:
        out << ' ' << (g.ref.empty() ? to_json(*g.a).dump() : "@" + g.ref);
        break;
      case Op::GCX:
        out << ' ' << (g.ref.empty() ? to_json(*g.b).dump() : "@" + g.ref);
        break;
      case Op::Evolve:
        out << ' ' << (g.ref.empty() ? to_json(*g.a).dump() : "@" + g.ref) << ' '
            << format_double(g.time);
        break;
      default:
        if (has_angle(g.op)) out << ' ' << format_angle(g.angle);
        for (int k = 0; k < op_arity(g.op); ++k) out << ' ' << g.q[k] + 1;
    }
    out << '\n';
  }
  return out.str();
}

Circuit parse_circuit(std::string_view text, const std::filesystem::path& base_dir) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int n = -1;
  Circuit c;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    auto tok = tokenize(line);
    if (tok.empty()) continue;
    try {
      std::string name = tok[0];
      std::transform(name.begin(), name.end(), name.begin(), [](unsigned char ch) { return std::toupper(ch); });
      if (name == "QUBITS") {
        if (n >= 0 || tok.size() != 2) throw std::invalid_argument("QUBITS must appear once with one value");
        n = parse_qubit(tok[1], 1 << 20) + 1;
        c = Circuit(n);
        continue;
      }
      if (n < 0) throw std::invalid_argument("missing QUBITS header");
      const OpInfo* oi = nullptr;
      for (const auto& i : kOps)
        if (i.name == name) oi = &i;
      if (!oi) throw std::invalid_argument("unknown gate '" + tok[0] + "'");

      Gate g;
      g.op = oi->op;
      std::size_t at = 1;
      auto need = [&](std::size_t k) {
        if (tok.size() != k) throw std::invalid_argument("wrong operand count for " + name);
      };
      switch (g.op) {
        case Op::GZZ:
        case Op::GCRZ: {
          need(2);
          g.a = std::make_shared<const HollowSymmetricd>(hollow_from_json(load_payload(tok[1], base_dir, nullptr)));
          if (tok[1][0] == '@') g.ref = tok[1].substr(1);
          break;
        }
        case Op::GCX: {
          need(2);
          bool rows = false;
          auto b = binary_from_json(load_payload(tok[1], base_dir, &rows));
          if (!gf2_invertible(b)) throw std::invalid_argument("GCX matrix is singular over F2");
          g.b = std::make_shared<const BinaryMatrix>(std::move(b));
          if (tok[1][0] == '@') g.ref = tok[1].substr(1);
          break;
        }
        case Op::Evolve: {
          need(3);
          g.a = std::make_shared<const HollowSymmetricd>(hollow_from_json(load_payload(tok[1], base_dir, nullptr)));
          if (tok[1][0] == '@') g.ref = tok[1].substr(1);
          g.time = parse_double(tok[2]);
          break;
        }
        default: {
          need(std::size_t(1 + (has_angle(g.op) ? 1 : 0) + oi->arity));
          if (has_angle(g.op)) g.angle = parse_angle(tok[at++]);
          for (int k = 0; k < oi->arity; ++k) g.q[k] = parse_qubit(tok[at++], n);
          if (oi->arity == 2 && g.q[0] == g.q[1]) throw std::invalid_argument("repeated qubit");
        }
      }
      c.add(std::move(g));
    } catch (const std::exception& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (n < 0) throw std::invalid_argument("missing QUBITS header");
  return c;
}

}  // namespace gzz
