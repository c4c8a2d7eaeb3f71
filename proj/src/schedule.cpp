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

#include "gzz/schedule.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace gzz {

namespace {

long hamming(std::uint64_t a, std::uint64_t b) { return std::popcount(a ^ b); }

// Cost of 0 -> path... -> 0.
long tour_cost(const std::vector<std::uint64_t>& enc, const std::vector<std::size_t>& path) {
  long c = 0;
  std::uint64_t prev = 0;
  for (auto i : path) {
    c += hamming(prev, enc[i]);
    prev = enc[i];
  }
  return c + hamming(prev, 0);
}

std::vector<std::size_t> nearest_neighbor(const std::vector<std::uint64_t>& enc) {
  std::vector<std::size_t> path;
  std::vector<char> used(enc.size(), 0);
  std::uint64_t cur = 0;
  for (std::size_t step = 0; step < enc.size(); ++step) {
    std::size_t best = enc.size();
    for (std::size_t i = 0; i < enc.size(); ++i)
      if (!used[i] && (best == enc.size() || hamming(cur, enc[i]) < hamming(cur, enc[best]))) best = i;
    used[best] = 1;
    path.push_back(best);
    cur = enc[best];
  }
  return path;
}

// 2-opt with both endpoints pinned to the all-plus encoding.
void two_opt(const std::vector<std::uint64_t>& enc, std::vector<std::size_t>& path) {
  const std::size_t k = path.size();
  auto at = [&](std::ptrdiff_t i) -> std::uint64_t {
    return (i < 0 || i >= std::ptrdiff_t(k)) ? 0 : enc[path[std::size_t(i)]];
  };
  bool improved = true;
  while (improved) {
    improved = false;
    for (std::ptrdiff_t i = 0; i < std::ptrdiff_t(k); ++i)
      for (std::ptrdiff_t j = i + 1; j < std::ptrdiff_t(k); ++j) {
        const long before = hamming(at(i - 1), at(i)) + hamming(at(j), at(j + 1));
        const long after = hamming(at(i - 1), at(j)) + hamming(at(i), at(j + 1));
        if (after < before) {
          std::reverse(path.begin() + i, path.begin() + j + 1);
          improved = true;
        }
      }
  }
}

// Positive-duration terms, one per encoding.
Decomposition normalized(const Decomposition& d) {
  std::map<std::uint64_t, double> acc;
  std::vector<std::uint64_t> first_seen;
  for (const auto& t : d.terms) {
    if (!(t.lambda > 0)) continue;
    if (!acc.count(t.index)) first_seen.push_back(t.index);
    acc[t.index] += t.lambda;
  }
  Decomposition out;
  out.n = d.n;
  for (auto idx : first_seen) out.terms.push_back({idx, acc[idx]});
  return out;
}

std::string flip_string(std::uint64_t mask, int n) {
  std::string s(std::size_t(n), '0');
  for (int q = 0; q < n; ++q)
    if ((mask >> q) & 1u) s[std::size_t(q)] = '1';
  return s;
}

std::uint64_t parse_flip(const std::string& s, int n) {
  if (int(s.size()) != n) throw std::invalid_argument("schedule JSON: flip string length differs from n");
  std::uint64_t m = 0;
  for (int q = 0; q < n; ++q) {
    if (s[std::size_t(q)] == '1') m |= std::uint64_t(1) << q;
    else if (s[std::size_t(q)] != '0') throw std::invalid_argument("schedule JSON: flip must be a 0/1 string");
  }
  return m;
}

}  // namespace

Schedule schedule_in_order(const Decomposition& d, const std::vector<std::size_t>& order) {
  Schedule s;
  s.n = d.n;
  std::uint64_t prev = 0;
  for (auto i : order) {
    const Term& t = d.terms.at(i);
    if (!(t.lambda > 0)) continue;
    s.steps.push_back({prev ^ t.index, t.index, t.lambda});
    s.x_gate_count += hamming(prev, t.index);
    prev = t.index;
  }
  s.trailing_flip = prev;
  s.x_gate_count += hamming(prev, 0);
  return s;
}

Schedule order_encodings(const Decomposition& d0, TourHeuristic h) {
  const Decomposition d = normalized(d0);
  std::vector<std::uint64_t> enc;
  for (const auto& t : d.terms) enc.push_back(t.index);
  std::vector<std::size_t> path(enc.size());
  std::iota(path.begin(), path.end(), std::size_t(0));
  if (h != TourHeuristic::index_order) {
    std::vector<std::size_t> identity = path;
    std::sort(identity.begin(), identity.end(), [&](auto a, auto b) { return enc[a] < enc[b]; });
    path = nearest_neighbor(enc);
    // Greedy can lose to plain index order on adversarial inputs; never
    // return something worse than the trivial tour.
    if (tour_cost(enc, identity) < tour_cost(enc, path)) path = identity;
    if (h == TourHeuristic::nn_2opt) two_opt(enc, path);
  } else {
    std::sort(path.begin(), path.end(), [&](auto a, auto b) { return enc[a] < enc[b]; });
  }
  return schedule_in_order(d, path);
}

json to_json(const Schedule& s) {
  json j;
  j["n"] = s.n;
  j["steps"] = json::array();
  for (const auto& st : s.steps) j["steps"].push_back({{"flip", flip_string(st.flip, s.n)}, {"t", st.duration}});
  j["trailing_flip"] = flip_string(s.trailing_flip, s.n);
  j["x_gates"] = s.x_gate_count;
  return j;
}

Schedule schedule_from_json(const json& j) {
  Schedule s;
  s.n = j.at("n").get<int>();
  std::uint64_t cur = 0;
  for (const auto& st : j.at("steps")) {
    const std::uint64_t f = parse_flip(st.at("flip").get<std::string>(), s.n);
    cur ^= f;
    s.steps.push_back({f, cur, st.at("t").get<double>()});
    s.x_gate_count += std::popcount(f);
  }
  s.trailing_flip = j.contains("trailing_flip") ? parse_flip(j.at("trailing_flip").get<std::string>(), s.n) : cur;
  if (s.trailing_flip != cur) throw std::invalid_argument("schedule JSON: flips do not return to the all-plus encoding");
  s.x_gate_count += std::popcount(s.trailing_flip);
  return s;
}

Circuit emit_gzz_circuit(const Schedule& s, const HollowSymmetricd& j, EmitForm form) {
  if (j.n() != s.n) throw std::invalid_argument("emit_gzz_circuit: J dimension differs from schedule");
  Circuit c(s.n);
  auto layer = [&](std::uint64_t mask) {
    for (int q = 0; q < s.n; ++q)
      if ((mask >> q) & 1u) c.add(gates::x(q));
  };
  if (form == EmitForm::merged) {
    for (const auto& st : s.steps) {
      layer(st.flip);
      c.add(gates::evolve(j, st.duration));
    }
    layer(s.trailing_flip);
  } else {
    for (const auto& st : s.steps) {
      layer(st.encoding);
      c.add(gates::evolve(j, st.duration));
      layer(st.encoding);
    }
  }
  return c;
}

Circuit emit_gzz_circuit(const Decomposition& d, const HollowSymmetricd& j, TourHeuristic h) {
  return emit_gzz_circuit(order_encodings(d, h), j);
}

}  // namespace gzz
