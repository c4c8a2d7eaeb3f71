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

#include "gzz/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace gzz {

std::string to_string(LpStatus s) {
  switch (s) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::infeasible: return "infeasible";
    case LpStatus::unbounded: return "unbounded";
    case LpStatus::iteration_limit: return "iteration limit";
  }
  return "?";
}

namespace {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

class Engine {
 public:
  Engine(const ColumnSource& a, const VectorXd& b, const VectorXd& c, const VectorXd& lo,
         const VectorXd& hi, const SimplexOptions& o)
      : a_(a), b_(b), opts_(o), m_(a.rows()), n_(a.cols()) {
    const Index tot = n_ + m_;
    lo_.resize(tot);
    hi_.resize(tot);
    cost_ = VectorXd::Zero(tot);
    lo_.head(n_) = lo;
    hi_.head(n_) = hi;
    real_cost_ = c;
    x_ = VectorXd::Zero(tot);
    x_.head(n_) = lo;
    at_upper_.assign(std::size_t(tot), 0);
    pos_.assign(std::size_t(tot), -1);
    basis_.resize(std::size_t(m_));
    price_buf_.resize(n_);
    col_.resize(m_);

    // Artificial start: residual of the all-at-lower point.
    VectorXd r = b_;
    for (Index j = 0; j < n_; ++j)
      if (lo[j] != 0) {
        a_.column(j, col_);
        r -= lo[j] * col_;
      }
    sign_.resize(m_);
    for (Index i = 0; i < m_; ++i) {
      sign_[i] = r[i] >= 0 ? 1.0 : -1.0;
      lo_[n_ + i] = 0;
      hi_[n_ + i] = kInf;
      x_[n_ + i] = std::abs(r[i]);
      basis_[std::size_t(i)] = n_ + i;
      pos_[std::size_t(n_ + i)] = i;
    }
    binv_ = sign_.asDiagonal();
    max_iter_ = o.max_iterations > 0 ? o.max_iterations : 50 * (n_ + m_) + 1000;
  }

  LpResult run() {
    LpResult res;
    // Phase 1: minimize the sum of artificials.
    cost_.head(n_).setZero();
    cost_.tail(m_).setOnes();
    LpStatus st = iterate();
    res.iterations = iters_;
    if (st != LpStatus::optimal) {
      res.status = st == LpStatus::unbounded ? LpStatus::infeasible : st;
      return finish(res);
    }
    const double infeas = x_.tail(m_).sum();
    if (infeas > opts_.feas_tol * (1.0 + b_.cwiseAbs().maxCoeff())) {
      res.status = LpStatus::infeasible;
      return finish(res);
    }
    // Phase 2: artificials pinned at zero; the ones still basic are degenerate.
    for (Index i = 0; i < m_; ++i) {
      hi_[n_ + i] = 0;
      if (pos_[std::size_t(n_ + i)] < 0) x_[n_ + i] = 0;
    }
    cost_.head(n_) = real_cost_;
    cost_.tail(m_).setZero();
    refactor();
    st = iterate();
    res.status = st;
    return finish(res);
  }

 private:
  void column(Index j, Eigen::Ref<VectorXd> out) const {
    if (j < n_) {
      a_.column(j, out);
    } else {
      out.setZero();
      out[j - n_] = sign_[j - n_];
    }
  }

  void refactor() {
    MatrixXd bm(m_, m_);
    for (Index i = 0; i < m_; ++i) column(basis_[std::size_t(i)], bm.col(i));
    Eigen::PartialPivLU<MatrixXd> lu(bm);
    binv_ = lu.inverse();
    VectorXd r = b_;
    for (Index j = 0; j < n_ + m_; ++j)
      if (pos_[std::size_t(j)] < 0 && x_[j] != 0) {
        column(j, col_);
        r -= x_[j] * col_;
      }
    const VectorXd xb = binv_ * r;
    for (Index i = 0; i < m_; ++i) x_[basis_[std::size_t(i)]] = xb[i];
    since_refactor_ = 0;
  }

  LpStatus iterate() {
    bool bland = opts_.rule == PivotRule::bland;
    int stall = 0;
    VectorXd y(m_), cb(m_), w(m_);
    while (true) {
      if (iters_ >= max_iter_) return LpStatus::iteration_limit;
      if (since_refactor_ >= opts_.refactor_every) refactor();

      for (Index i = 0; i < m_; ++i) cb[i] = cost_[basis_[std::size_t(i)]];
      y.noalias() = binv_.transpose() * cb;
      a_.price(y, price_buf_);

      // Pricing.
      Index q = -1;
      double best = 0;
      int dir = 0;
      for (Index j = 0; j < n_ + m_; ++j) {
        if (pos_[std::size_t(j)] >= 0 || !(lo_[j] < hi_[j])) continue;
        const double dj = cost_[j] - (j < n_ ? price_buf_[j] : sign_[j - n_] * y[j - n_]);
        int dj_dir = 0;
        if (!at_upper_[std::size_t(j)] && dj < -opts_.opt_tol) dj_dir = 1;
        else if (at_upper_[std::size_t(j)] && dj > opts_.opt_tol) dj_dir = -1;
        if (!dj_dir) continue;
        if (bland) {
          q = j;
          dir = dj_dir;
          break;
        }
        if (std::abs(dj) > best) {
          best = std::abs(dj);
          q = j;
          dir = dj_dir;
        }
      }
      if (q < 0) {
        refactor();
        return LpStatus::optimal;
      }

      column(q, col_);
      w.noalias() = binv_ * col_;

      // Ratio test; the entering variable's own bound flip competes too.
      double t_best = hi_[q] - lo_[q];
      Index leave = -1;
      double leave_delta = 0;
      for (Index i = 0; i < m_; ++i) {
        const Index k = basis_[std::size_t(i)];
        const double delta = -dir * w[i];
        double t;
        if (delta < -opts_.pivot_tol) t = (x_[k] - lo_[k]) / -delta;
        else if (delta > opts_.pivot_tol && hi_[k] < kInf) t = (hi_[k] - x_[k]) / delta;
        else continue;
        t = std::max(t, 0.0);
        const double eps = 1e-12 * std::max(1.0, std::abs(t_best) < kInf ? std::abs(t_best) : 1.0);
        bool take = false;
        if (t < t_best - eps) {
          take = true;
        } else if (t <= t_best + eps && leave >= 0) {
          take = bland ? k < basis_[std::size_t(leave)] : std::abs(w[i]) > std::abs(w[leave]);
        }
        if (take) {
          t_best = t;
          leave = i;
          leave_delta = delta;
        }
      }
      if (leave < 0 && !(t_best < kInf)) return LpStatus::unbounded;

      ++iters_;
      ++since_refactor_;
      if (bland) ++bland_iters_;
      const double t = t_best;
      if (t > 1e-12) {
        stall = 0;
        if (opts_.rule == PivotRule::dantzig) bland = false;
      } else if (++stall > opts_.stall_limit) {
        bland = true;
      }

      for (Index i = 0; i < m_; ++i) x_[basis_[std::size_t(i)]] -= dir * t * w[i];
      if (leave < 0) {
        at_upper_[std::size_t(q)] = dir > 0;
        x_[q] = dir > 0 ? hi_[q] : lo_[q];
        continue;
      }
      x_[q] += dir * t;
      const Index k = basis_[std::size_t(leave)];
      x_[k] = leave_delta < 0 ? lo_[k] : hi_[k];
      at_upper_[std::size_t(k)] = leave_delta > 0;
      pos_[std::size_t(k)] = -1;
      basis_[std::size_t(leave)] = q;
      pos_[std::size_t(q)] = leave;
      at_upper_[std::size_t(q)] = 0;

      const Eigen::RowVectorXd r = binv_.row(leave) / w[leave];
      binv_.noalias() -= w * r;
      binv_.row(leave) = r;
    }
  }

  LpResult& finish(LpResult& res) {
    res.iterations = iters_;
    res.bland_iterations = bland_iters_;
    res.x = x_.head(n_);
    for (Index j = 0; j < n_; ++j) res.x[j] = std::clamp(res.x[j], lo_[j], hi_[j]);
    res.objective = real_cost_.dot(res.x);
    return res;
  }

  const ColumnSource& a_;
  const VectorXd& b_;
  SimplexOptions opts_;
  Index m_, n_;
  VectorXd lo_, hi_, cost_, real_cost_, x_, sign_, price_buf_, col_;
  std::vector<char> at_upper_;
  std::vector<Index> pos_;
  std::vector<Index> basis_;
  MatrixXd binv_;
  long iters_ = 0, bland_iters_ = 0, max_iter_ = 0;
  int since_refactor_ = 0;
};

}  // namespace

LpResult solve_bounded_lp(const ColumnSource& a, const Eigen::VectorXd& b, const Eigen::VectorXd& c,
                          const Eigen::VectorXd& lo, const Eigen::VectorXd& hi,
                          const SimplexOptions& opts) {
  const Index n = a.cols();
  if (b.size() != a.rows() || c.size() != n || lo.size() != n || hi.size() != n)
    throw std::invalid_argument("solve_bounded_lp: dimension mismatch");
  for (Index j = 0; j < n; ++j)
    if (!std::isfinite(lo[j]) || hi[j] < lo[j])
      throw std::invalid_argument("solve_bounded_lp: bad bounds");
  Engine e(a, b, c, lo, hi, opts);
  return e.run();
}

}  // namespace gzz
