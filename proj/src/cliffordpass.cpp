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

#include "gzz/cliffordpass.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <optional>
#include <set>
#include <stdexcept>

namespace gzz {

namespace {

void add_s_power(Circuit& c, int q, int p) {
  switch (((p % 4) + 4) % 4) {
    case 1: c.add(gates::s(q)); break;
    case 2: c.add(gates::rz(Angle::pi_units(1), q)); break;
    case 3: c.add(gates::sdg(q)); break;
    default: break;
  }
}

void check_binary(const HollowSymmetricd& a, const char* who) {
  for (double v : a.upper())
    if (v != 0 && v != 1) throw std::invalid_argument(std::string(who) + ": CZ layer entries must be 0 or 1");
}

// Global phase, GZZ and S powers of a CZ layer, S powers not yet emitted.
struct CzParts {
  long edges = 0;
  HollowSymmetricd gzz;
  std::vector<int> degree;
};

CzParts cz_parts(const HollowSymmetricd& a) {
  check_binary(a, "compile_cz_layer");
  CzParts p;
  const int n = a.n();
  p.degree.assign(std::size_t(n), 0);
  p.gzz = HollowSymmetricd(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (a(i, j) != 0) {
        ++p.edges;
        ++p.degree[std::size_t(i)];
        ++p.degree[std::size_t(j)];
        p.gzz.set(i, j, std::numbers::pi / 4);
      }
  return p;
}

void emit_cz_parts(Circuit& c, const CzParts& p) {
  if (p.edges == 0) return;
  c.add(gates::phase(Angle::pi_units(-double(p.edges) / 4)));
  c.add(gates::gzz(p.gzz));
}

bool is_identity(const BinaryMatrix& b) {
  return b.size() == 0 || b == BinaryMatrix::Identity(b.rows(), b.cols());
}

bool lower_unitriangular(const BinaryMatrix& b) {
  for (Eigen::Index i = 0; i < b.rows(); ++i) {
    if (b(i, i) != 1) return false;
    for (Eigen::Index j = i + 1; j < b.cols(); ++j)
      if (b(i, j) != 0) return false;
  }
  return true;
}

BinaryMatrix flip_qubits(const BinaryMatrix& b) {
  return b.reverse();  // P B P with P the exchange matrix
}

std::vector<int> column_support(const BinaryMatrix& m, Eigen::Index col) {
  std::vector<int> s;
  for (Eigen::Index q = 0; q < m.rows(); ++q)
    if (m(q, col)) s.push_back(int(q));
  return s;
}

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Relabels qubits back when the tables were built on the flipped register.
int label(const CZTables& t, int q) { return t.reversed ? t.n - 1 - q : q; }

}  // namespace

Circuit compile_cz_layer(const HollowSymmetricd& a) {
  const CzParts p = cz_parts(a);
  Circuit c(a.n());
  emit_cz_parts(c, p);
  for (int q = 0; q < a.n(); ++q) add_s_power(c, q, p.degree[std::size_t(q)]);
  return c;
}

Circuit graph_state_circuit(const HollowSymmetricd& a) {
  Circuit c(a.n());
  for (int q = 0; q < a.n(); ++q) c.add(gates::h(q));
  return c.append(compile_cz_layer(a));
}

std::vector<int> CzGroup::support() const {
  std::set<int> s;
  for (auto [a, b] : edges) {
    s.insert(a);
    s.insert(b);
  }
  return {s.begin(), s.end()};
}

CZTables cx_layer_to_tables(const BinaryMatrix& b0) {
  if (b0.rows() != b0.cols() || b0.rows() < 1)
    throw std::invalid_argument("cx layer: matrix must be square and non-empty");
  CZTables t;
  t.n = int(b0.rows());
  BinaryMatrix b = b0;
  if (!lower_unitriangular(b)) {
    b = flip_qubits(b0);
    if (!lower_unitriangular(b))
      throw std::invalid_argument("cx layer: matrix must be lower or upper triangular with unit diagonal");
    t.reversed = true;
  }
  const int n = t.n;
  t.tcz = BinaryMatrix::Zero(n, std::max(n - 1, 0));
  for (int j = 0; j + 1 < n; ++j) {
    bool any = false;
    for (int i = j + 1; i < n; ++i)
      if (b(i, j)) {
        t.tcz(i, j) = 1;
        any = true;
      }
    if (any) t.tcz(j, j) = 1;  // a control with no targets is no gate at all
  }
  t.th = BinaryMatrix::Zero(n, n);
  for (int i = 1; i < n; ++i) {
    t.th(i, 0) = 1;
    t.th(i, i) = 1;
  }
  return t;
}

CZTables move_hadamards(const CZTables& in) {
  CZTables t = in;
  const int n = t.n;
  int hmax = 0;
  for (int i = 1; i < n; ++i) {
    t.th(i, i) = 0;
    int c = 0;
    for (int j = 0; j < i; ++j)
      if (t.tcz(i, j)) c = j + 1;
    if (c == 0) {
      t.th(i, 0) = 0;  // never a target: both Hadamards cancel
    } else if (c == i) {
      bool later = false;
      for (int j = i; j + 1 < n; ++j) later = later || t.tcz(i, j);
      if (later) t.th(i, i) = 1;
      else t.th(i, n - 1) = 1;
    } else {
      hmax = std::max(hmax, c);
      t.th(i, hmax) = 1;
    }
  }
  return t;
}

namespace {

struct Piece {
  std::vector<std::pair<int, int>> edges;
  int slot = 0;
};

long run_cost(const std::vector<std::pair<int, int>>& edges) {
  if (edges.size() <= 1) return long(edges.size());
  std::vector<int> q;
  for (auto [a, b] : edges) {
    q.push_back(a);
    q.push_back(b);
  }
  std::sort(q.begin(), q.end());
  const long k = long(std::unique(q.begin(), q.end()) - q.begin());
  return k * (k - 1) / 2;
}

// Cuts a pool into contiguous runs, cheapest encoding cost first, then fewest
// groups. Each run sits at the slot of its first piece. Without min_cost the
// whole pool becomes one group.
void flush_pool(const std::vector<Piece>& pool, bool min_cost, std::vector<CzGroup>& out) {
  if (pool.empty()) return;
  if (!min_cost) {
    CzGroup g;
    g.slot = pool.front().slot;
    for (const Piece& p : pool) g.edges.insert(g.edges.end(), p.edges.begin(), p.edges.end());
    out.push_back(std::move(g));
    return;
  }
  const std::size_t m = pool.size();
  std::vector<std::pair<long, int>> best(m + 1, {0, 0});
  std::vector<std::size_t> cut(m + 1, 0);
  for (std::size_t j = 1; j <= m; ++j) {
    best[j] = {std::numeric_limits<long>::max(), 0};
    std::vector<std::pair<int, int>> run;
    for (std::size_t i = j; i-- > 0;) {
      run.insert(run.end(), pool[i].edges.begin(), pool[i].edges.end());
      std::pair<long, int> c{best[i].first + run_cost(run), best[i].second + 1};
      if (c < best[j]) {
        best[j] = c;
        cut[j] = i;
      }
    }
  }
  std::vector<CzGroup> runs;
  for (std::size_t j = m; j > 0; j = cut[j]) {
    CzGroup g;
    g.slot = pool[cut[j]].slot;
    for (std::size_t i = cut[j]; i < j; ++i) g.edges.insert(g.edges.end(), pool[i].edges.begin(), pool[i].edges.end());
    runs.push_back(std::move(g));
  }
  out.insert(out.end(), runs.rbegin(), runs.rend());
}

}  // namespace

CzGrouping move_cz(const CZTables& t, bool min_cost) {
  CzGrouping out;
  out.tables = t;
  const int n = t.n;
  std::vector<std::vector<int>> hcol(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) hcol[std::size_t(k)] = column_support(t.th, k);

  // Pools hold pieces that may share one GZZ; flush_pool decides which do.
  std::vector<std::vector<Piece>> pools;
  std::optional<Piece> carry;       // remainder moved right past a Hadamard
  std::optional<std::size_t> open;  // pool still accepting columns

  auto reachable = [&](int from_slot, int to_col, const std::vector<int>& supp) {
    for (int k = from_slot + 1; k <= to_col; ++k)
      if (!intersect(hcol[std::size_t(k)], supp).empty()) return false;
    return true;
  };

  for (int i = 0; i + 1 < n; ++i) {
    CzGroup col;
    col.slot = i;
    for (int q = i + 1; q < n; ++q)
      if (t.tcz(q, i)) col.edges.emplace_back(i, q);

    if (carry) {
      carry->slot = i;
      pools.push_back({std::move(*carry)});
      if (!col.edges.empty()) pools.back().push_back({col.edges, i});
      carry.reset();
      open = pools.size() - 1;
      continue;
    }
    if (col.edges.empty()) continue;

    const std::vector<int> supp = col.support();
    if (!intersect(hcol[std::size_t(i)], supp).empty()) {
      const std::vector<int> right = intersect(hcol[std::size_t(i + 1)], supp);
      if (right.size() == 1 && right[0] != i) {
        const int h = right[0];
        CzGroup piece;
        piece.slot = i;
        piece.split = true;
        piece.edges.emplace_back(i, h);
        out.groups.push_back(piece);
        Piece rest;
        for (auto e : col.edges)
          if (e.second != h) rest.edges.push_back(e);
        if (!rest.edges.empty()) carry = std::move(rest);
        open.reset();
        continue;
      }
      pools.push_back({{col.edges, i}});
      open = pools.size() - 1;
      continue;
    }
    if (open && reachable(pools[*open].front().slot, i, supp)) {
      pools[*open].push_back({col.edges, i});
      continue;
    }
    pools.push_back({{col.edges, i}});
    open = pools.size() - 1;
  }
  if (carry) {
    // Last column split: the remainder lands after H col n-1.
    carry->slot = n - 1;
    pools.push_back({std::move(*carry)});
  }
  for (const auto& pool : pools) flush_pool(pool, min_cost, out.groups);
  std::stable_sort(out.groups.begin(), out.groups.end(),
                   [](const CzGroup& a, const CzGroup& b) { return a.slot < b.slot; });
  return out;
}

namespace {

// Forward time order realizes GCX(B^-1); every gate used is its own transpose,
// so the reversed sequence is GCX(B).
Circuit emit_tables(const CZTables& t, const std::vector<CzGroup>& groups) {
  Circuit fwd(t.n);
  std::size_t g = 0;
  for (int k = 0; k < t.n; ++k) {
    for (int q = 0; q < t.n; ++q)
      if (t.th(q, k)) fwd.add(gates::h(label(t, q)));
    for (; g < groups.size() && groups[g].slot == k; ++g) {
      const auto& e = groups[g].edges;
      if (e.empty()) continue;
      if (e.size() == 1) {
        fwd.add(gates::cz(label(t, e[0].first), label(t, e[0].second)));
        continue;
      }
      HollowSymmetricd a(t.n);
      for (auto [x, y] : e) a.set(label(t, x), label(t, y), 1);
      fwd.append(compile_cz_layer(a));
    }
  }
  return fwd.reversed();
}

}  // namespace

Circuit tables_circuit(const CZTables& t) {
  Circuit fwd(t.n);
  for (int k = 0; k < t.n; ++k) {
    for (int q = 0; q < t.n; ++q)
      if (t.th(q, k)) fwd.add(gates::h(label(t, q)));
    if (k + 1 < t.n)
      for (int q = k + 1; q < t.n; ++q)
        if (t.tcz(q, k)) fwd.add(gates::cz(label(t, k), label(t, q)));
  }
  return fwd.reversed();
}

Circuit grouping_circuit(const CzGrouping& g) { return emit_tables(g.tables, g.groups); }

Circuit compile_cx_layer(const BinaryMatrix& b) {
  if (is_identity(b)) return Circuit(int(b.rows()));
  const CZTables t = move_hadamards(cx_layer_to_tables(b));
  Circuit pooled = grouping_circuit(move_cz(t));
  // Pooling sparse fan-outs can widen a GZZ past the cost of keeping them apart.
  if (census(pooled).encoding_cost <= census(fanout_circuit(b)).encoding_cost) return pooled;
  return grouping_circuit(move_cz(t, true));
}

Circuit fanout_circuit(const BinaryMatrix& b) {
  const CZTables t = cx_layer_to_tables(b);
  std::vector<CzGroup> groups;
  for (int j = 0; j + 1 < t.n; ++j) {
    CzGroup g;
    g.slot = j;
    for (int q = j + 1; q < t.n; ++q)
      if (t.tcz(q, j)) g.edges.emplace_back(j, q);
    groups.push_back(g);
  }
  return emit_tables(t, groups);
}

DirectedCost fully_directed_cost(int n) {
  if (n < 1) throw std::invalid_argument("fully_directed_cost: n must be positive");
  DirectedCost d;
  d.gzz = (n - 1) / 2;
  d.cz = n / 2;  // ceil((n-1)/2)
  d.encoding_cost = d.cz;
  for (int i = 0; i < d.gzz; ++i) {
    const long k = n - 2 * i;
    d.encoding_cost += k * (k - 1) / 2;
  }
  return d;
}

CliffordCounts clifford_layer_counts(int n) {
  if (n < 1) throw std::invalid_argument("clifford_layer_counts: n must be positive");
  return {2 * ((n - 1) / 2) + 2, 2 * (n / 2)};
}

namespace {

BitVector bits_field(const json& j, const char* key, int n) {
  if (!j.contains(key)) return BitVector::Zero(n);
  const auto& v = j.at(key);
  BitVector out = BitVector::Zero(n);
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (int(s.size()) != n) throw std::invalid_argument(std::string("clifford: '") + key + "' needs n bits");
    for (int q = 0; q < n; ++q) {
      if (s[std::size_t(q)] != '0' && s[std::size_t(q)] != '1')
        throw std::invalid_argument(std::string("clifford: '") + key + "' must be a 0/1 string");
      out[q] = s[std::size_t(q)] == '1';
    }
    return out;
  }
  const auto vec = v.get<std::vector<int>>();
  if (int(vec.size()) != n) throw std::invalid_argument(std::string("clifford: '") + key + "' needs n entries");
  for (int q = 0; q < n; ++q) out[q] = std::uint8_t(vec[std::size_t(q)] & 1);
  return out;
}

std::vector<int> powers_field(const json& j, const char* key, int n) {
  if (!j.contains(key)) return std::vector<int>(std::size_t(n), 0);
  auto v = j.at(key).get<std::vector<int>>();
  if (int(v.size()) != n) throw std::invalid_argument(std::string("clifford: '") + key + "' needs n entries");
  return v;
}

BinaryMatrix cx_field(const json& j, const char* key, int n) {
  if (!j.contains(key)) return BinaryMatrix::Identity(n, n);
  BinaryMatrix b = binary_from_json(j.at(key));
  if (b.rows() != n || b.cols() != n) throw std::invalid_argument(std::string("clifford: '") + key + "' must be n x n");
  return b;
}

HollowSymmetricd cz_field(const json& j, const char* key, int n) {
  if (!j.contains(key)) return HollowSymmetricd(n);
  HollowSymmetricd a = hollow_from_json(j.at(key));
  if (a.n() != n) throw std::invalid_argument(std::string("clifford: '") + key + "' has the wrong size");
  check_binary(a, "clifford");
  return a;
}

void check_layers(const BruhatLayers& l) {
  if (l.n < 1) throw std::invalid_argument("clifford: n must be positive");
  auto sz = [&](Eigen::Index s) { return s == l.n; };
  if (!sz(l.x.size()) || !sz(l.z.size()) || !sz(l.h.size()) || int(l.s1.size()) != l.n ||
      int(l.s2.size()) != l.n || l.cz1.n() != l.n || l.cz2.n() != l.n || !sz(l.cx1.rows()) || !sz(l.cx2.rows()))
    throw std::invalid_argument("clifford: layer sizes disagree with n");
}

}  // namespace

BruhatLayers bruhat_from_json(const json& j) {
  BruhatLayers l;
  l.n = j.at("n").get<int>();
  if (l.n < 1) throw std::invalid_argument("clifford: n must be positive");
  l.x = bits_field(j, "x", l.n);
  l.z = bits_field(j, "z", l.n);
  l.h = bits_field(j, "h", l.n);
  l.cx1 = cx_field(j, "cx1", l.n);
  l.cx2 = cx_field(j, "cx2", l.n);
  l.cz1 = cz_field(j, "cz1", l.n);
  l.cz2 = cz_field(j, "cz2", l.n);
  l.s1 = powers_field(j, "s1", l.n);
  l.s2 = powers_field(j, "s2", l.n);
  return l;
}

Circuit compile_clifford(const BruhatLayers& l) {
  check_layers(l);
  Circuit c(l.n);
  for (int q = 0; q < l.n; ++q)
    if (l.x[q]) c.add(gates::x(q));
  for (int q = 0; q < l.n; ++q)
    if (l.z[q]) c.add(gates::rz(Angle::pi_units(1), q));
  auto half = [&](const BinaryMatrix& cx, const HollowSymmetricd& cz, const std::vector<int>& s) {
    c.append(compile_cx_layer(cx));
    const CzParts p = cz_parts(cz);
    emit_cz_parts(c, p);
    // CZ-layer S powers and the S layer merge into one power per qubit.
    for (int q = 0; q < l.n; ++q) add_s_power(c, q, p.degree[std::size_t(q)] + s[std::size_t(q)]);
  };
  half(l.cx1, l.cz1, l.s1);
  for (int q = 0; q < l.n; ++q)
    if (l.h[q]) c.add(gates::h(q));
  half(l.cx2, l.cz2, l.s2);
  return c;
}

Circuit clifford_reference(const BruhatLayers& l) {
  check_layers(l);
  Circuit c(l.n);
  for (int q = 0; q < l.n; ++q)
    if (l.x[q]) c.add(gates::x(q));
  for (int q = 0; q < l.n; ++q)
    if (l.z[q]) c.add(gates::rz(Angle::pi_units(1), q));
  auto half = [&](const BinaryMatrix& cx, const HollowSymmetricd& cz, const std::vector<int>& s) {
    if (!is_identity(cx)) c.add(gates::gcx(cx));
    for (int i = 0; i < l.n; ++i)
      for (int j = i + 1; j < l.n; ++j)
        if (cz(i, j) != 0) c.add(gates::cz(i, j));
    for (int q = 0; q < l.n; ++q) add_s_power(c, q, s[std::size_t(q)]);
  };
  half(l.cx1, l.cz1, l.s1);
  for (int q = 0; q < l.n; ++q)
    if (l.h[q]) c.add(gates::h(q));
  half(l.cx2, l.cz2, l.s2);
  return c;
}

}  // namespace gzz
