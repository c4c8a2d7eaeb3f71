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

#ifndef GZZ_SIMPLEX_HPP
#define GZZ_SIMPLEX_HPP

#include <Eigen/Dense>

#include <limits>
#include <string>

namespace gzz {

// Column oracle for an equality-constrained LP whose matrix is never stored.
class ColumnSource {
 public:
  virtual ~ColumnSource() = default;
  virtual Eigen::Index rows() const = 0;
  virtual Eigen::Index cols() const = 0;
  virtual void column(Eigen::Index j, Eigen::Ref<Eigen::VectorXd> out) const = 0;
  // out[j] = y . a_j for every column.
  virtual void price(const Eigen::VectorXd& y, Eigen::Ref<Eigen::VectorXd> out) const = 0;
};

enum class PivotRule { bland, dantzig };  // dantzig falls back to Bland on stalling

struct SimplexOptions {
  double feas_tol = 1e-9;
  double opt_tol = 1e-9;
  double pivot_tol = 1e-9;
  PivotRule rule = PivotRule::dantzig;
  int refactor_every = 64;
  int stall_limit = 40;     // degenerate pivots before switching to Bland
  long max_iterations = 0;  // 0: derived from problem size
};

enum class LpStatus { optimal, infeasible, unbounded, iteration_limit };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Eigen::VectorXd x;  // structural variables only
  double objective = 0;
  long iterations = 0;
  long bland_iterations = 0;
};

std::string to_string(LpStatus s);

// min c.x  s.t.  A x = b,  lo <= x <= hi   (lo finite; hi may be +inf).
// Two-phase bounded revised simplex with an explicit basis inverse,
// product-form updates and periodic refactorization.
LpResult solve_bounded_lp(const ColumnSource& a, const Eigen::VectorXd& b, const Eigen::VectorXd& c,
                          const Eigen::VectorXd& lo, const Eigen::VectorXd& hi,
                          const SimplexOptions& opts = {});

inline constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace gzz

#endif  // GZZ_SIMPLEX_HPP
