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

#ifndef GZZ_SCHEDULE_HPP
#define GZZ_SCHEDULE_HPP

#include <cstdint>
#include <vector>

#include "gzz/circuit.hpp"
#include "gzz/solver.hpp"

namespace gzz {

enum class TourHeuristic { index_order, nearest_neighbor, nn_2opt };

struct Step {
  std::uint64_t flip = 0;      // X layer applied before this evolution; bit q = qubit q
  std::uint64_t encoding = 0;  // encoding in effect during the evolution
  double duration = 0;
};

struct Schedule {
  int n = 0;
  std::vector<Step> steps;
  std::uint64_t trailing_flip = 0;
  long x_gate_count = 0;

  int x_layers() const { return int(steps.size()) + 1; }
};

// Tour starts and ends in the all-plus encoding; zero-length terms are dropped
// and repeated encodings merged.
Schedule order_encodings(const Decomposition& d, TourHeuristic h = TourHeuristic::nn_2opt);
// Schedule for an explicit visiting order (indices into d.terms).
Schedule schedule_in_order(const Decomposition& d, const std::vector<std::size_t>& order);

json to_json(const Schedule& s);
Schedule schedule_from_json(const json& j);

enum class EmitForm {
  merged,  // X^{s1} E X^{s1^s2} E ... X^{sk}
  raw,     // X^{s} E X^{s} per step, adjacent layers not combined
};

Circuit emit_gzz_circuit(const Schedule& s, const HollowSymmetricd& j, EmitForm form = EmitForm::merged);
Circuit emit_gzz_circuit(const Decomposition& d, const HollowSymmetricd& j,
                         TourHeuristic h = TourHeuristic::nn_2opt);

}  // namespace gzz

#endif  // GZZ_SCHEDULE_HPP
