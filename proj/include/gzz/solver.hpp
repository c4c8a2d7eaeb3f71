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

#ifndef GZZ_SOLVER_HPP
#define GZZ_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gzz/frame.hpp"
#include "gzz/io.hpp"
#include "gzz/simplex.hpp"

namespace gzz {

// Raised when no decomposition exists under the requested bounds.
class Infeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Term {
  std::uint64_t index = 0;  // encoding index
  double lambda = 0;        // seconds (or the units of M)
};

struct Decomposition {
  int n = 0;
  std::vector<Term> terms;

  double total_time() const;
  int encoding_cost() const;
  // sum_m lambda_m m m^T
  HollowSymmetricd reconstruct() const;
};

json to_json(const Decomposition& d);
Decomposition decomposition_from_json(const json& j);

struct SolveOptions {
  double feas_tol = 1e-9;
  PivotRule pivot_rule = PivotRule::dantzig;
  double eps_l = 27e-6;
  std::optional<double> eps_u;  // default 1.5 max|M_ij|
  double alpha = 0.5;
  double mip_rel_gap = 0.6;
  long node_limit = 20000;
  int max_n = 14;
};

// The frame {m m^T} as implicit LP columns over the strict upper triangle.
class FrameColumns final : public ColumnSource {
 public:
  explicit FrameColumns(int n);
  Eigen::Index rows() const override { return pair_count(n_); }
  Eigen::Index cols() const override { return Eigen::Index(1) << (n_ - 1); }
  void column(Eigen::Index j, Eigen::Ref<Eigen::VectorXd> out) const override;
  // Gray-code walk: O(n) per column instead of O(n^2).
  void price(const Eigen::VectorXd& y, Eigen::Ref<Eigen::VectorXd> out) const override;

 private:
  int n_;
};

// M_ij = A_ij / J_ij; a nonzero A_ij over a vanishing J_ij is an error.
HollowSymmetricd hadamard_quotient(const HollowSymmetricd& a, const HollowSymmetricd& j);

struct LpStats {
  long iterations = 0;
  long bland_iterations = 0;
  double residual = 0;
};

Decomposition solve_lp(const HollowSymmetricd& m, const SolveOptions& opts = {}, LpStats* stats = nullptr);

enum class MipStatus { optimal, gap_reached, node_limit };

struct MipReport {
  MipStatus status = MipStatus::optimal;
  double objective = 0;  // alpha * 1'lambda + (1 - alpha) * 1'b
  double bound = 0;      // best lower bound
  double gap = 0;        // (objective - bound) / |objective|
  long nodes = 0;
  double eps_l = 0, eps_u = 0;
};

struct MipResult {
  Decomposition decomposition;
  MipReport report;
};

// Throws Infeasible when the bounds admit no solution, or when the node
// limit is hit before any incumbent is found.
MipResult solve_mip(const HollowSymmetricd& m, const SolveOptions& opts = {});

struct Truncation {
  Decomposition kept;
  double dropped_time = 0;
  double bound = 0;             // 1/4 sum_{i!=j} |J_ij| sum_C lambda
  std::optional<double> exact;  // max_x |sin(delta(x) / 2)|, n <= 16
};

Truncation truncate(const Decomposition& d, const HollowSymmetricd& j, double eps);

// Sequential ZZ gates: time sum |A_ij / J_ij|, one encoding per nonzero pair.
struct NaiveCost {
  double total_time = 0;
  int encoding_cost = 0;
};
NaiveCost naive_cost(const HollowSymmetricd& a, const HollowSymmetricd& j);

}  // namespace gzz

#endif  // GZZ_SOLVER_HPP
