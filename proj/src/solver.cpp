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

#include "gzz/solver.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace gzz {

using Eigen::Index;
using Eigen::VectorXd;

double Decomposition::total_time() const {
  double t = 0;
  for (const auto& term : terms) t += term.lambda;
  return t;
}

int Decomposition::encoding_cost() const {
  return int(std::count_if(terms.begin(), terms.end(), [](const Term& t) { return t.lambda > 0; }));
}

HollowSymmetricd Decomposition::reconstruct() const {
  HollowSymmetricd out(n);
  for (const auto& t : terms) out.upper() += t.lambda * outer_product(Encoding(n, t.index)).upper();
  return out;
}

json to_json(const Decomposition& d) {
  json j;
  j["n"] = d.n;
  j["terms"] = json::array();
  for (const auto& t : d.terms) j["terms"].push_back({{"index", t.index}, {"lambda", t.lambda}});
  j["total_time"] = d.total_time();
  j["encoding_cost"] = d.encoding_cost();
  return j;
}

Decomposition decomposition_from_json(const json& j) {
  Decomposition d;
  d.n = j.at("n").get<int>();
  if (d.n < 1) throw std::invalid_argument("decomposition JSON: n must be positive");
  for (const auto& t : j.at("terms")) {
    Term term{t.at("index").get<std::uint64_t>(), t.at("lambda").get<double>()};
    if (term.lambda < 0) throw std::invalid_argument("decomposition JSON: negative lambda");
    Encoding(d.n, term.index);  // range check
    d.terms.push_back(term);
  }
  return d;
}

FrameColumns::FrameColumns(int n) : n_(n) {
  if (n < 2 || n > 30) throw std::invalid_argument("FrameColumns: n out of range");
}

void FrameColumns::column(Index j, Eigen::Ref<VectorXd> out) const {
  const Encoding m(n_, std::uint64_t(j));
  Index k = 0;
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b) out[k++] = double(m.sign(a) * m.sign(b));
}

void FrameColumns::price(const VectorXd& y, Eigen::Ref<VectorXd> out) const {
  const int n = n_;
  Eigen::MatrixXd Y = Eigen::MatrixXd::Zero(n, n);
  Index k = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b, ++k) Y(a, b) = Y(b, a) = y[k];

  std::vector<double> m(std::size_t(n), 1.0);
  VectorXd r(n);
  double v = 0;
  auto reset = [&]() {
    r = Y * Eigen::Map<const VectorXd>(m.data(), n);
    v = 0;
    for (int a = 0; a < n; ++a) v += m[std::size_t(a)] * r[a];
    v /= 2;
  };
  reset();
  const std::uint64_t cols = std::uint64_t(1) << (n - 1);
  out[0] = v;
  for (std::uint64_t step = 1; step < cols; ++step) {
    const int q = std::countr_zero(step);
    const std::uint64_t g = step ^ (step >> 1);
    const double mq = m[std::size_t(q)];
    m[std::size_t(q)] = -mq;
    if ((step & 1023u) == 0) {
      reset();  // bound the drift of the incremental update
    } else {
      v -= 2 * mq * r[q];
      r -= 2 * mq * Y.col(q);
    }
    out[Index(g)] = v;
  }
}

HollowSymmetricd hadamard_quotient(const HollowSymmetricd& a, const HollowSymmetricd& j) {
  if (a.n() != j.n()) throw std::invalid_argument("hadamard_quotient: dimension mismatch");
  HollowSymmetricd m(a.n());
  for (int p = 0; p < a.n(); ++p)
    for (int q = p + 1; q < a.n(); ++q) {
      const double av = a(p, q), jv = j(p, q);
      if (av == 0) continue;
      if (jv == 0)
        throw std::invalid_argument("hadamard_quotient: A(" + std::to_string(p + 1) + "," +
                                    std::to_string(q + 1) + ") is nonzero but J vanishes there");
      m.set(p, q, av / jv);
    }
  return m;
}

namespace {

void check_dims(const HollowSymmetricd& m, const SolveOptions& o) {
  if (m.n() > o.max_n)
    throw std::invalid_argument("solver: n = " + std::to_string(m.n()) + " exceeds the cap of " +
                                std::to_string(o.max_n));
}

double residual(const HollowSymmetricd& m, const Decomposition& d) {
  if (m.n() < 2) return 0;
  return (m.upper() - d.reconstruct().upper()).cwiseAbs().maxCoeff();
}

SimplexOptions simplex_options(const SolveOptions& o) {
  SimplexOptions so;
  so.rule = o.pivot_rule;
  so.feas_tol = o.feas_tol;
  return so;
}

}  // namespace

Decomposition solve_lp(const HollowSymmetricd& m, const SolveOptions& opts, LpStats* stats) {
  check_dims(m, opts);
  Decomposition d;
  d.n = m.n();
  const double s = m.max_abs();
  if (m.n() < 2 || s == 0) return d;

  // Work on M / max|M| so tolerances are relative.
  const FrameColumns cols(m.n());
  const Index nc = cols.cols();
  const VectorXd b = m.upper() / s;
  const LpResult r = solve_bounded_lp(cols, b, VectorXd::Ones(nc), VectorXd::Zero(nc),
                                      VectorXd::Constant(nc, kInf), simplex_options(opts));
  if (r.status != LpStatus::optimal)
    throw std::runtime_error("solve_lp: simplex stopped (" + to_string(r.status) + ")");
  for (Index j = 0; j < nc; ++j)
    if (r.x[j] > 1e-13) d.terms.push_back({std::uint64_t(j), r.x[j] * s});
  const double res = residual(m, d);
  if (stats) *stats = {r.iterations, r.bland_iterations, res};
  if (res > opts.feas_tol * std::max(1.0, s))
    throw std::runtime_error("solve_lp: reconstruction residual " + std::to_string(res) + " above tolerance");
  return d;
}

namespace {

struct Node {
  std::vector<signed char> fix;  // -1 free, 0 off, 1 on
  double bound;
};

struct Relaxation {
  bool feasible = false;
  VectorXd x;        // scaled lambda
  double value = 0;  // objective incl. the constant from fixed-on columns
};

}  // namespace

MipResult solve_mip(const HollowSymmetricd& m, const SolveOptions& opts) {
  check_dims(m, opts);
  if (opts.alpha < 0 || opts.alpha > 1) throw std::invalid_argument("solve_mip: alpha must lie in [0, 1]");
  MipResult out;
  out.decomposition.n = m.n();
  const double s = m.max_abs();
  const double eu = opts.eps_u.value_or(1.5 * s);
  const double el = opts.eps_l;
  out.report.eps_l = el;
  out.report.eps_u = eu;
  if (m.n() < 2 || s == 0) return out;
  if (!(el >= 0 && el < eu)) throw std::invalid_argument("solve_mip: need 0 <= eps_l < eps_u");

  const FrameColumns cols(m.n());
  const Index nc = cols.cols();
  const VectorXd b = m.upper() / s;
  const double elS = el / s, euS = eu / s;
  const double a = opts.alpha;
  const double tol = 1e-9;
  const double free_cost = a * s + (std::isfinite(euS) ? (1 - a) / euS : 0.0);
  const SimplexOptions so = simplex_options(opts);

  auto relax = [&](const std::vector<signed char>& fix) {
    VectorXd lo = VectorXd::Zero(nc), hi(nc), c(nc);
    double constant = 0;
    for (Index j = 0; j < nc; ++j) {
      switch (fix[std::size_t(j)]) {
        case 0: hi[j] = 0; c[j] = 0; break;
        case 1: lo[j] = elS; hi[j] = euS; c[j] = a * s; constant += 1 - a; break;
        default: hi[j] = euS; c[j] = free_cost;
      }
    }
    Relaxation rx;
    const LpResult r = solve_bounded_lp(cols, b, c, lo, hi, so);
    if (r.status != LpStatus::optimal) return rx;
    rx.feasible = true;
    rx.x = r.x;
    rx.value = r.objective + constant;
    return rx;
  };

  // Objective of a relaxation point if it is already integral, else nullopt.
  auto integral_value = [&](const VectorXd& x) -> std::optional<double> {
    double obj = 0;
    for (Index j = 0; j < nc; ++j) {
      if (x[j] <= tol) continue;
      if (x[j] < elS - tol || x[j] > euS + tol) return std::nullopt;
      obj += a * s * x[j] + (1 - a);
    }
    return obj;
  };

  std::optional<double> best;
  VectorXd best_x;
  std::vector<Node> open;
  const std::vector<signed char> root_fix(std::size_t(nc), -1);
  open.push_back({root_fix, -kInf});
  long nodes = 0;
  double global_bound = -kInf;
  MipStatus status = MipStatus::optimal;

  while (!open.empty()) {
    // Depth-first until an incumbent exists, best-bound afterwards.
    std::size_t pick = open.size() - 1;
    if (best) {
      for (std::size_t i = 0; i < open.size(); ++i)
        if (open[i].bound < open[pick].bound) pick = i;
      global_bound = open[pick].bound;
      for (const auto& nd : open) global_bound = std::min(global_bound, nd.bound);
      if (*best - global_bound <= opts.mip_rel_gap * std::abs(*best)) {
        status = MipStatus::gap_reached;
        break;
      }
    }
    if (nodes >= opts.node_limit) {
      status = MipStatus::node_limit;
      break;
    }
    Node node = std::move(open[pick]);
    open.erase(open.begin() + std::ptrdiff_t(pick));
    ++nodes;
    if (best && node.bound >= *best - 1e-12 * std::abs(*best)) continue;

    const Relaxation rx = relax(node.fix);
    if (!rx.feasible) continue;
    if (best && rx.value >= *best - 1e-12 * std::abs(*best)) continue;

    if (auto v = integral_value(rx.x); v && (!best || *v < *best)) {
      best = v;
      best_x = rx.x;
    }

    // Branching variable: violators of the semicontinuous bound first, then
    // the most fractional b = lambda / eps_u among free columns.
    Index br = -1;
    double score = -1;
    bool violator = false;
    for (Index j = 0; j < nc; ++j) {
      if (node.fix[std::size_t(j)] != -1 || rx.x[j] <= tol) continue;
      const bool v = rx.x[j] < elS - tol;
      const double frac = std::isfinite(euS) ? rx.x[j] / euS : 1.0;
      if (!v && frac >= 1 - tol) continue;
      const double sc = 0.5 - std::abs(frac - 0.5);
      if ((v && !violator) || (v == violator && sc > score)) {
        br = j;
        score = sc;
        violator = v;
      }
    }
    if (br < 0) continue;  // relaxation is exact at this node

    Node off{node.fix, rx.value}, on{node.fix, rx.value};
    off.fix[std::size_t(br)] = 0;
    on.fix[std::size_t(br)] = 1;
    // The child pushed last is explored first while diving.
    if (rx.x[br] >= elS / 2) {
      open.push_back(std::move(off));
      open.push_back(std::move(on));
    } else {
      open.push_back(std::move(on));
      open.push_back(std::move(off));
    }
  }

  if (!best) {
    if (status == MipStatus::node_limit)
      throw Infeasible("solve_mip: node limit reached before any feasible solution was found");
    throw Infeasible("solve_mip: no decomposition with every lambda in [eps_l, eps_u]; widen the interval");
  }
  if (open.empty()) global_bound = *best;
  for (const auto& nd : open) global_bound = std::min(global_bound, nd.bound);

  for (Index j = 0; j < nc; ++j)
    if (best_x[j] > tol) out.decomposition.terms.push_back({std::uint64_t(j), std::clamp(best_x[j] * s, el, eu)});

  out.report.status = status;
  out.report.objective = *best;
  out.report.bound = std::min(global_bound, *best);
  out.report.gap = *best != 0 ? (*best - out.report.bound) / std::abs(*best) : 0;
  out.report.nodes = nodes;
  const double res = residual(m, out.decomposition);
  if (res > opts.feas_tol * std::max(1.0, s) + 2 * tol * s)
    throw std::runtime_error("solve_mip: reconstruction residual " + std::to_string(res) + " above tolerance");
  return out;
}

Truncation truncate(const Decomposition& d, const HollowSymmetricd& j, double eps) {
  if (j.n() != d.n) throw std::invalid_argument("truncate: J dimension differs from decomposition");
  const int n = d.n;
  Truncation t;
  t.kept.n = n;
  HollowSymmetricd dropped(n);
  for (const auto& term : d.terms) {
    if (term.lambda <= eps && term.lambda > 0) {
      t.dropped_time += term.lambda;
      dropped.upper() += term.lambda * outer_product(Encoding(n, term.index)).upper();
    } else {
      t.kept.terms.push_back(term);
    }
  }
  t.bound = 0.5 * j.upper().cwiseAbs().sum() * t.dropped_time;
  if (n <= 16) {
    // delta(x) = sum_{i<j} J_ij (sum_C lambda m_i m_j) z_i z_j
    const HollowSymmetricd w = j.cwiseProduct(dropped);
    double worst = 0;
    std::vector<int> z(static_cast<std::size_t>(n));
    for (std::uint64_t x = 0; x < (std::uint64_t(1) << n); ++x) {
      for (int q = 0; q < n; ++q) z[std::size_t(q)] = (x >> q) & 1u ? -1 : 1;
      double delta = 0;
      Index k = 0;
      for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q, ++k) delta += w.upper()[k] * z[std::size_t(p)] * z[std::size_t(q)];
      worst = std::max(worst, std::abs(std::sin(delta / 2)));
    }
    t.exact = worst;
  }
  return t;
}

NaiveCost naive_cost(const HollowSymmetricd& a, const HollowSymmetricd& j) {
  const HollowSymmetricd m = hadamard_quotient(a, j);
  NaiveCost c;
  for (Index k = 0; k < m.upper().size(); ++k)
    if (m.upper()[k] != 0) {
      c.total_time += std::abs(m.upper()[k]);
      ++c.encoding_cost;
    }
  return c;
}

}  // namespace gzz
