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

#include "gzz/diagpass.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gzz/cliffordpass.hpp"

namespace gzz {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

std::uint64_t reverse_bits(std::uint64_t v, int n) {
  std::uint64_t r = 0;
  for (int i = 0; i < n; ++i) r |= ((v >> i) & 1u) << (n - 1 - i);
  return r;
}

std::vector<int> qubits_of(std::uint64_t m) {
  std::vector<int> q;
  for (int b = 0; m; ++b, m >>= 1)
    if (m & 1u) q.push_back(b);
  return q;
}

int lowest(std::uint64_t m) { return std::countr_zero(m); }

// Into (-1/2, 1/2].
double reduce_turns(double a) {
  double r = a - std::round(a);
  if (r <= -0.5) r += 1;
  return r;
}

bool support_before(std::uint64_t a, std::uint64_t b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa > pb;
  return qubits_of(a) < qubits_of(b);
}

}  // namespace

int parity_weight(std::uint64_t y) { return std::popcount(y); }

double PhasePolynomial::evaluate(std::uint64_t basis_index) const {
  const std::uint64_t x = reverse_bits(basis_index, n);
  double f = global;
  for (const auto& [y, a] : coeffs)
    if (std::popcount(y & x) & 1) f += a;
  return f;
}

std::vector<double> PhasePolynomial::table() const {
  std::vector<double> t(std::size_t(1) << n);
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = evaluate(x);
  return t;
}

DiagonalPhases PhasePolynomial::phases() const {
  DiagonalPhases p{n, Eigen::VectorXd(Eigen::Index(1) << n)};
  for (Eigen::Index x = 0; x < p.phases.size(); ++x) p.phases[x] = kTwoPi * evaluate(std::uint64_t(x));
  return p;
}

PhasePolynomial phase_poly_from_table(const std::vector<double>& f) {
  if (f.empty() || !std::has_single_bit(f.size())) throw std::invalid_argument("phase table: length must be a power of two");
  const int n = std::countr_zero(f.size());
  if (n > 16) throw std::invalid_argument("phase table: at most 16 qubits");
  std::vector<double> c = f;
  for (std::size_t len = 1; len < c.size(); len <<= 1)
    for (std::size_t i = 0; i < c.size(); i += 2 * len)
      for (std::size_t j = i; j < i + len; ++j) {
        const double a = c[j], b = c[j + len];
        c[j] = a + b;
        c[j + len] = a - b;
      }
  PhasePolynomial p;
  p.n = n;
  p.global = f[0];
  const double scale = std::ldexp(1.0, -n);
  // (-1)^{y.x} = 1 - 2 chi_y(x), so the 0/1 coefficient is -2 times the Walsh one.
  for (std::size_t y = 1; y < c.size(); ++y) {
    const double alpha = -2 * scale * c[y];
    if (std::abs(alpha) > 1e-12) p.coeffs[reverse_bits(y, n)] = alpha;
  }
  return p;
}

PhasePolynomial phase_poly_from_json(const json& j) {
  if (j.contains("table")) {
    PhasePolynomial p = phase_poly_from_table(j.at("table").get<std::vector<double>>());
    if (j.contains("n") && j.at("n").get<int>() != p.n) throw std::invalid_argument("phases: 'n' disagrees with table length");
    return p;
  }
  PhasePolynomial p;
  p.n = j.at("n").get<int>();
  if (p.n < 1 || p.n > 62) throw std::invalid_argument("phases: n out of range");
  p.global = j.value("global", 0.0);
  for (const auto& t : j.at("terms")) {
    const std::string y = t.at("y").get<std::string>();
    if (int(y.size()) != p.n) throw std::invalid_argument("phases: parity string length differs from n");
    std::uint64_t m = 0;
    for (int q = 0; q < p.n; ++q) {
      if (y[std::size_t(q)] == '1') m |= std::uint64_t(1) << q;
      else if (y[std::size_t(q)] != '0') throw std::invalid_argument("phases: parity must be a 0/1 string");
    }
    const double a = t.at("alpha").get<double>();
    if (m == 0) p.global += a;
    else p.coeffs[m] += a;
  }
  return p;
}

Circuit term_circuit(int n, std::uint64_t y, double alpha, int anchor) {
  if (anchor < 0 || anchor >= n || !((y >> anchor) & 1u))
    throw std::invalid_argument("term_circuit: anchor must lie in the support");
  if (std::popcount(y) < 2 || (n < 64 && (y >> n) != 0))
    throw std::invalid_argument("term_circuit: parity needs at least two qubits of the register");
  HollowSymmetricd fan(n);
  for (int q : qubits_of(y))
    if (q != anchor) fan.set(anchor, q, 1);
  const Circuit cz = compile_cz_layer(fan);
  Circuit c(n);
  c.add(gates::h(anchor)).append(cz).add(gates::h(anchor));
  c.add(gates::rz(Angle::rad(kTwoPi * alpha), anchor));
  c.add(gates::h(anchor)).append(cz).add(gates::h(anchor));
  return c;
}

std::vector<Layer> parallelize_supports(std::vector<std::uint64_t> s, bool allow_size2) {
  for (auto m : s)
    if (std::popcount(m) < (allow_size2 ? 2 : 3))
      throw std::invalid_argument("parallelize_supports: support too small for this mode");
  std::sort(s.begin(), s.end(), support_before);
  s.erase(std::unique(s.begin(), s.end()), s.end());
  std::vector<Layer> out;
  std::vector<char> used(s.size(), 0);
  for (std::size_t seed = 0; seed < s.size(); ++seed) {
    if (used[seed]) continue;
    used[seed] = 1;
    Layer layer{s[seed]};
    std::uint64_t occupied = s[seed];
    // Sorted by size, so the first disjoint candidate maximizes the union.
    for (std::size_t k = seed + 1; k < s.size(); ++k)
      if (!used[k] && (s[k] & occupied) == 0) {
        used[k] = 1;
        layer.push_back(s[k]);
        occupied |= s[k];
      }
    out.push_back(std::move(layer));
  }
  return out;
}

LayerMatch match_layers(const Layer& a, const Layer& b) {
  if (a.size() != b.size()) throw std::invalid_argument("match_layers: layers differ in size");
  const int r = int(a.size());
  auto overlap = [&](int i, int j) { return std::popcount(a[std::size_t(i)] & b[std::size_t(j)]); };
  LayerMatch best;
  if (r <= 7) {
    std::vector<int> perm(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) perm[std::size_t(i)] = i;
    best.shared = -1;
    do {
      int s = 0;
      for (int i = 0; i < r; ++i) s += overlap(i, perm[std::size_t(i)]);
      if (s > best.shared) best = {perm, s};
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  }
  // Large layers: greedy by overlap.
  best.match.assign(std::size_t(r), -1);
  std::vector<char> taken(std::size_t(r), 0);
  for (int round = 0; round < r; ++round) {
    int bi = -1, bj = -1, bv = -1;
    for (int i = 0; i < r; ++i) {
      if (best.match[std::size_t(i)] >= 0) continue;
      for (int j = 0; j < r; ++j)
        if (!taken[std::size_t(j)] && overlap(i, j) > bv) bi = i, bj = j, bv = overlap(i, j);
    }
    best.match[std::size_t(bi)] = bj;
    taken[std::size_t(bj)] = 1;
    best.shared += bv;
  }
  return best;
}

LayerOrder order_layers(const std::vector<Layer>& layers) {
  const int k = int(layers.size());
  if (k == 0) throw std::invalid_argument("order_layers: no layers");
  std::vector<std::vector<int>> w(std::size_t(k), std::vector<int>(std::size_t(k), 0));
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      w[std::size_t(a)][std::size_t(b)] = w[std::size_t(b)][std::size_t(a)] =
          match_layers(layers[std::size_t(a)], layers[std::size_t(b)]).shared;
  auto weight = [&](const std::vector<int>& p) {
    int s = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) s += w[std::size_t(p[i])][std::size_t(p[i + 1])];
    return s;
  };
  auto at = [&](const std::vector<int>& p, int i, int j) {
    return w[std::size_t(p[std::size_t(i)])][std::size_t(p[std::size_t(j)])];
  };

  std::vector<int> best;
  int best_w = -1;
  for (int start = 0; start < k; ++start) {
    std::vector<int> p{start};
    std::vector<char> used(std::size_t(k), 0);
    used[std::size_t(start)] = 1;
    while (int(p.size()) < k) {
      int nxt = -1;
      for (int c = 0; c < k; ++c)
        if (!used[std::size_t(c)] && (nxt < 0 || w[std::size_t(p.back())][std::size_t(c)] > w[std::size_t(p.back())][std::size_t(nxt)]))
          nxt = c;
      used[std::size_t(nxt)] = 1;
      p.push_back(nxt);
    }
    // 2-opt on an open path: reversing p[i..j] swaps edges (i-1,i),(j,j+1).
    for (bool improved = true; improved;) {
      improved = false;
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
          int before = 0, after = 0;
          if (i > 0) before += at(p, i - 1, i), after += at(p, i - 1, j);
          if (j + 1 < k) before += at(p, j, j + 1), after += at(p, i, j + 1);
          if (after > before) {
            std::reverse(p.begin() + i, p.begin() + j + 1);
            improved = true;
          }
        }
    }
    const int pw = weight(p);
    if (pw > best_w) best = p, best_w = pw;
  }
  LayerOrder o;
  o.order = best;
  o.shared_support = best_w;
  for (int i = 0; i + 1 < k; ++i)
    o.links.push_back(match_layers(layers[std::size_t(best[std::size_t(i)])], layers[std::size_t(best[std::size_t(i + 1)])]));
  return o;
}

Placement place_hadamards(int n, const std::vector<Layer>& ordered, const std::vector<LayerMatch>& links,
                          bool use_ancillas) {
  Placement pl;
  if (ordered.empty()) return pl;
  const std::size_t r = ordered[0].size();
  if (links.size() + 1 != ordered.size()) throw std::invalid_argument("place_hadamards: need one link per consecutive pair");
  pl.anchors.assign(ordered.size(), std::vector<int>(r, -1));
  for (std::size_t c = 0; c < r; ++c) {
    std::vector<std::size_t> idx{c};
    for (const auto& l : links) idx.push_back(std::size_t(l.match[idx.back()]));
    auto assign = [&](std::size_t from, std::size_t to, int anchor) {
      for (std::size_t k = from; k < to; ++k) pl.anchors[k][idx[k]] = anchor;
      pl.hadamards += 2;
    };
    if (use_ancillas) {
      std::uint64_t common = ~std::uint64_t(0);
      for (std::size_t k = 0; k < idx.size(); ++k) common &= ordered[k][idx[k]];
      assign(0, idx.size(), common ? lowest(common) : n + pl.ancillas++);
      continue;
    }
    // Without ancillas the chain breaks wherever the running overlap empties.
    std::size_t seg = 0;
    std::uint64_t running = ordered[0][idx[0]];
    for (std::size_t k = 1; k < idx.size(); ++k) {
      const std::uint64_t next = running & ordered[k][idx[k]];
      if (next) {
        running = next;
        continue;
      }
      assign(seg, k, lowest(running));
      seg = k;
      running = ordered[k][idx[k]];
    }
    assign(seg, idx.size(), lowest(running));
  }
  return pl;
}

namespace {

struct Item {
  enum Kind { H, X, RX, CZ } kind;
  int a = 0, b = -1;
  double angle = 0;
  bool removed = false;
};

// Places each CZ edge in the latest diagonal slot it can commute to (never
// earlier than the last H / X / RX on its qubits); identical edges meeting in
// one window cancel. Every slot then becomes one GZZ.
struct Scheduler {
  int width;
  std::vector<int> barrier, lastdiag;
  std::vector<std::vector<Item>> moments;
  std::vector<std::map<std::pair<int, int>, int>> slots;  // edge -> multiplicity mod 2
  std::map<std::pair<int, int>, int> where;                // edge -> slot holding it
  int latest = -1;

  explicit Scheduler(int w) : width(w), barrier(std::size_t(w), 0), lastdiag(std::size_t(w), -1) {}

  void nondiag(const Item& it) {
    const std::size_t q = std::size_t(it.a);
    const int m = std::max(barrier[q], lastdiag[q]) + 1;
    barrier[q] = m;
    if (int(moments.size()) <= m) moments.resize(std::size_t(m) + 1);
    moments[std::size_t(m)].push_back(it);
  }

  void edge(int a, int b) {
    const auto key = std::minmax(a, b);
    const int lo = std::max(barrier[std::size_t(a)], barrier[std::size_t(b)]);
    if (auto w = where.find(key); w != where.end() && w->second >= lo) {
      slots[std::size_t(w->second)].erase(key);
      where.erase(w);
      return;
    }
    const int s = latest >= lo ? latest : lo;
    if (int(slots.size()) <= s) slots.resize(std::size_t(s) + 1);
    slots[std::size_t(s)][key] = 1;
    where[key] = s;
    latest = std::max(latest, s);
    lastdiag[std::size_t(a)] = std::max(lastdiag[std::size_t(a)], s);
    lastdiag[std::size_t(b)] = std::max(lastdiag[std::size_t(b)], s);
  }

  void emit(Circuit& c, long& edges) const {
    const std::size_t end = std::max(moments.size(), slots.size());
    for (std::size_t m = 0; m < end; ++m) {
      if (m < moments.size())
        for (const auto& it : moments[m]) {
          if (it.kind == Item::H) c.add(gates::h(it.a));
          else if (it.kind == Item::X) c.add(gates::x(it.a));
          else c.add(gates::rx(Angle::rad(it.angle), it.a));
        }
      if (m < slots.size() && !slots[m].empty()) {
        HollowSymmetricd a(width);
        for (const auto& [e, v] : slots[m]) a.set(e.first, e.second, 1);
        edges += long(slots[m].size());
        c.append(compile_cz_layer(a));
      }
    }
  }
};

void cancel_hadamards(std::vector<Item>& items, int width) {
  std::vector<std::vector<std::size_t>> stack(static_cast<std::size_t>(width));
  for (std::size_t i = 0; i < items.size(); ++i) {
    Item& it = items[i];
    if (it.kind == Item::H) {
      auto& st = stack[std::size_t(it.a)];
      if (!st.empty() && items[st.back()].kind == Item::H) {
        items[st.back()].removed = true;
        it.removed = true;
        st.pop_back();
        continue;
      }
    }
    stack[std::size_t(it.a)].push_back(i);
    if (it.kind == Item::CZ) stack[std::size_t(it.b)].push_back(i);
  }
}

}  // namespace

json to_json(const DiagReport& r) {
  json j;
  j["gzz"] = r.gzz;
  j["encoding_cost"] = r.encoding_cost;
  j["ancillas"] = r.ancillas;
  j["cz_canceled"] = r.cz_canceled;
  j["shared_support_cz"] = r.shared_support_cz;
  j["baseline_cost"] = r.baseline_cost;
  j["hadamards"] = r.hadamards;
  j["easy_terms"] = r.easy_terms;
  j["hard_terms"] = r.hard_terms;
  json layers = json::object();
  for (const auto& [rr, ls] : r.layers) {
    json arr = json::array();
    for (const auto& l : ls) {
      json lj = json::array();
      for (auto s : l) lj.push_back(qubits_of(s));
      arr.push_back(lj);
    }
    layers[std::to_string(rr)] = arr;
  }
  j["layers"] = layers;
  return j;
}

DiagonalCompilation compile_diagonal(const PhasePolynomial& p, const DiagOptions& opts) {
  const int n = p.n;
  DiagReport rep;
  double global = kTwoPi * p.global;

  // Easy terms: R_Z singles, ZZ pairs folded into one GZZ.
  HollowSymmetricd easy(n);
  std::vector<double> rz(std::size_t(n), 0.0);
  std::map<std::uint64_t, double> hard;
  for (const auto& [y, a0] : p.coeffs) {
    const double a = reduce_turns(a0);
    if (std::abs(a) <= opts.tol) continue;
    const int w = std::popcount(y);
    if (w == 1) {
      rz[std::size_t(lowest(y))] += kTwoPi * a;
      ++rep.easy_terms;
    } else if (w == 2 && !opts.allow_size2) {
      // ZZ(beta) = e^{i beta/2} exp(-i beta/2 Z Z)
      const auto q = qubits_of(y);
      easy.set(q[0], q[1], easy(q[0], q[1]) - std::numbers::pi * a);
      global += std::numbers::pi * a;
      ++rep.easy_terms;
    } else {
      hard[y] = a;
      ++rep.hard_terms;
    }
  }

  // Hard terms grouped by layer width, widest first.
  std::vector<std::uint64_t> supports;
  for (const auto& [y, a] : hard) supports.push_back(y);
  const std::vector<Layer> layers = parallelize_supports(supports, opts.allow_size2);
  std::map<int, std::vector<Layer>, std::greater<int>> by_r;
  for (const auto& l : layers) by_r[int(l.size())].push_back(l);

  std::vector<Item> items;
  long naive_cz = 0;
  for (const auto& [y, a] : hard) {
    naive_cz += 2L * (std::popcount(y) - 1);
    rep.baseline_cost += 2L * std::popcount(y) * (std::popcount(y) - 1) / 2;
  }
  for (auto& [r, group] : by_r) {
    const LayerOrder ord = order_layers(group);
    std::vector<Layer> ordered;
    for (int k : ord.order) ordered.push_back(group[std::size_t(k)]);
    const Placement pl = place_hadamards(n, ordered, ord.links, opts.use_ancillas);
    rep.ancillas = std::max(rep.ancillas, pl.ancillas);
    rep.shared_support_cz += ord.shared_support_cz();
    rep.layers[r] = ordered;
    for (std::size_t k = 0; k < ordered.size(); ++k) {
      const Layer& l = ordered[k];
      const auto& anc = pl.anchors[k];
      auto fans = [&] {
        for (std::size_t i = 0; i < l.size(); ++i)
          for (int q : qubits_of(l[i]))
            if (q != anc[i]) items.push_back({Item::CZ, anc[i], q});
      };
      for (std::size_t i = 0; i < l.size(); ++i) items.push_back({Item::H, anc[i]});
      fans();
      for (std::size_t i = 0; i < l.size(); ++i) {
        const double a = hard.at(l[i]);
        // H R_Z(t) H = e^{i t/2} R_X(t); at a = 1/2 that is exactly X.
        if (a == 0.5) items.push_back({Item::X, anc[i]});
        else {
          items.push_back({Item::RX, anc[i], -1, kTwoPi * a});
          global += std::numbers::pi * a;
        }
      }
      fans();
      for (std::size_t i = 0; i < l.size(); ++i) items.push_back({Item::H, anc[i]});
    }
  }

  const int width = n + rep.ancillas;
  cancel_hadamards(items, width);
  Scheduler sched(width);
  for (const auto& it : items) {
    if (it.removed) continue;
    if (it.kind == Item::CZ) sched.edge(it.a, it.b);
    else sched.nondiag(it);
  }

  Circuit c(width);
  if (std::remainder(global, kTwoPi) != 0) c.add(gates::phase(Angle::rad(std::remainder(global, kTwoPi))));
  if (!easy.is_zero()) {
    HollowSymmetricd wide(width);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) wide.set(i, j, easy(i, j));
    c.add(gates::gzz(wide));
  }
  for (int q = 0; q < n; ++q)
    if (rz[std::size_t(q)] != 0) c.add(gates::rz(Angle::rad(rz[std::size_t(q)]), q));
  long emitted = 0;
  sched.emit(c, emitted);
  rep.cz_canceled = naive_cz - emitted;

  const Census cen = census(c);
  rep.gzz = cen.gzz;
  rep.encoding_cost = cen.encoding_cost;
  rep.hadamards = cen.count(Op::H);
  if (!easy.is_zero()) {
    const auto es = gates::gzz(easy).support(n);
    const long k = long(es.size());
    rep.baseline_cost += k * (k - 1) / 2;
  }
  return {std::move(c), n, std::move(rep)};
}

}  // namespace gzz
