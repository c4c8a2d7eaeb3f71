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

#ifndef GZZ_CLIFFORDPASS_HPP
#define GZZ_CLIFFORDPASS_HPP

#include <utility>
#include <vector>

#include "gzz/circuit.hpp"
#include "gzz/io.hpp"

namespace gzz {

// Binary HollowSymmetric -> e^{-i pi a/4} GZZ(pi/4 A) prod S_i^{b_i mod 4}.
Circuit compile_cz_layer(const HollowSymmetricd& a);
// H on every qubit followed by the CZ layer of A.
Circuit graph_state_circuit(const HollowSymmetricd& a);

// Table form of a directed CX layer. Columns are time steps read as
// H col 0, CZ col 0, H col 1, ..., CZ col n-2, H col n-1.
struct CZTables {
  int n = 0;
  BinaryMatrix tcz;       // n x (n-1); column j: control j plus its targets (all zero if none)
  BinaryMatrix th;        // n x n
  bool reversed = false;  // qubit order was flipped to make B lower triangular
};

// B lower (or upper) unitriangular over F2.
CZTables cx_layer_to_tables(const BinaryMatrix& b);
// Cancel / shift Hadamards toward the right.
CZTables move_hadamards(const CZTables& t);

struct CzGroup {
  std::vector<std::pair<int, int>> edges;  // CZ pairs, 0-based
  int slot = 0;                            // emitted right after H col `slot`
  bool split = false;                      // two-qubit piece peeled off a column
  std::vector<int> support() const;
};

struct CzGrouping {
  CZTables tables;
  std::vector<CzGroup> groups;  // ordered by slot
};

// Split columns with one Hadamard on the right, pool the rest.
// min_cost cuts each pool where separate GZZ gates are cheaper than one.
CzGrouping move_cz(const CZTables& t, bool min_cost = false);

// Literal H/CZ circuit of the tables (one fan-out per CZ column).
Circuit tables_circuit(const CZTables& t);
// Compiled circuit of a grouping: groups with one edge become CZ gates,
// larger ones compile_cz_layer output.
Circuit grouping_circuit(const CzGrouping& g);

// cx_layer_to_tables -> move_hadamards -> move_cz -> grouping_circuit; falls
// back to the min_cost grouping if pooling costs more than fanout_circuit.
Circuit compile_cx_layer(const BinaryMatrix& b);
// One GZZ per fan-out, no pooling; the uncompiled baseline.
Circuit fanout_circuit(const BinaryMatrix& b);

struct DirectedCost {
  long encoding_cost = 0;
  int cz = 0;
  int gzz = 0;
};
DirectedCost fully_directed_cost(int n);

struct CliffordCounts {
  int gzz = 0;
  int cz = 0;
  int multi_qubit_total() const { return gzz + cz; }
};
CliffordCounts clifford_layer_counts(int n);

// -X-Z-CX-CZ-S-H-CX-CZ-S- in time order. Empty members mean identity layers.
struct BruhatLayers {
  int n = 0;
  BitVector x, z, h;
  BinaryMatrix cx1, cx2;
  HollowSymmetricd cz1, cz2;
  std::vector<int> s1, s2;  // S powers
};

BruhatLayers bruhat_from_json(const json& j);
Circuit compile_clifford(const BruhatLayers& l);
// Same layers with literal CX / CZ / GCX gates, for verification.
Circuit clifford_reference(const BruhatLayers& l);

}  // namespace gzz

#endif  // GZZ_CLIFFORDPASS_HPP
