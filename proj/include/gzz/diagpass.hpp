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

#ifndef GZZ_DIAGPASS_HPP
#define GZZ_DIAGPASS_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "gzz/circuit.hpp"
#include "gzz/io.hpp"
#include "gzz/simulate.hpp"

namespace gzz {

// f(x) = global + sum_y alpha_y chi_y(x), phases in turns (U|x> = e^{2 pi i f(x)}).
// Parity masks use bit q for qubit q; tables are indexed like the simulator
// (qubit 0 most significant).
struct PhasePolynomial {
  int n = 0;
  std::map<std::uint64_t, double> coeffs;
  double global = 0;

  double evaluate(std::uint64_t basis_index) const;
  std::vector<double> table() const;
  DiagonalPhases phases() const;  // radians
};

PhasePolynomial phase_poly_from_table(const std::vector<double>& f);
PhasePolynomial phase_poly_from_json(const json& j);  // {"n", "table"} or {"n", "terms": [{"y": "0111", "alpha"}]}

int parity_weight(std::uint64_t y);
// U_{i,y}: H_i, CZ fan to i, H_i, R_Z(2 pi alpha)_i, H_i, CZ fan, H_i. |y| >= 2.
Circuit term_circuit(int n, std::uint64_t y, double alpha, int anchor);

using Layer = std::vector<std::uint64_t>;  // pairwise disjoint supports

// Greedy parallelization; seeds and ties go largest support first, then
// lexicographic in sorted qubit order.
std::vector<Layer> parallelize_supports(std::vector<std::uint64_t> supports, bool allow_size2 = false);

// Best pairing of the supports of two layers of equal size; match[i] is the
// index in b paired with a[i].
struct LayerMatch {
  std::vector<int> match;
  int shared = 0;  // sum |s_i ∩ s'_match[i]|
};
LayerMatch match_layers(const Layer& a, const Layer& b);

struct LayerOrder {
  std::vector<int> order;
  std::vector<LayerMatch> links;  // links[k] pairs order[k] with order[k+1]
  int shared_support = 0;         // sum of consecutive S values
  int shared_support_cz() const { return 2 * shared_support; }
};
// Maximizes the path sum of shared support sizes (nearest neighbour from every
// start, then 2-opt).
LayerOrder order_layers(const std::vector<Layer>& layers);

struct Placement {
  // anchors[k][i]: anchor of support i of ordered layer k; >= n is an ancilla.
  std::vector<std::vector<int>> anchors;
  int ancillas = 0;
  int hadamards = 0;  // surviving H gates: two per chain segment
};
Placement place_hadamards(int n, const std::vector<Layer>& ordered, const std::vector<LayerMatch>& links,
                          bool use_ancillas);

struct DiagOptions {
  bool allow_size2 = false;
  bool use_ancillas = true;
  double tol = 1e-12;
};

struct DiagReport {
  int gzz = 0;
  long encoding_cost = 0;
  int ancillas = 0;
  long cz_canceled = 0;         // naive per-term CZ count minus emitted CZ pairs
  long shared_support_cz = 0;   // 2 * sum of consecutive shared supports
  long baseline_cost = 0;       // two GZZ per hard term, no pooling
  int hadamards = 0;
  int easy_terms = 0;
  int hard_terms = 0;
  std::map<int, std::vector<Layer>> layers;  // r -> ordered layers
};
json to_json(const DiagReport& r);

struct DiagonalCompilation {
  Circuit circuit;  // data qubits first, ancillas after
  int data_qubits = 0;
  DiagReport report;
};

DiagonalCompilation compile_diagonal(const PhasePolynomial& p, const DiagOptions& opts = {});

}  // namespace gzz

#endif  // GZZ_DIAGPASS_HPP
