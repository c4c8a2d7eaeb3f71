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

#include "gzz/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gzz {

json to_json(const HollowSymmetricd& a) {
  json j;
  j["n"] = a.n();
  j["upper"] = std::vector<double>(a.upper().data(), a.upper().data() + a.upper().size());
  return j;
}

HollowSymmetricd hollow_from_json(const json& j) {
  if (j.contains("matrix")) {
    const auto& rows = j.at("matrix");
    const int n = int(rows.size());
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i) {
      if (int(rows[i].size()) != n) throw std::invalid_argument("matrix JSON: ragged rows");
      for (int k = 0; k < n; ++k) m(i, k) = rows[i][k].get<double>();
    }
    return HollowSymmetricd::from_dense(m);
  }
  const int n = j.at("n").get<int>();
  const auto up = j.at("upper").get<std::vector<double>>();
  if (Eigen::Index(up.size()) != pair_count(n))
    throw std::invalid_argument("hollow-symmetric JSON: upper has " + std::to_string(up.size()) +
                                " entries, expected " + std::to_string(pair_count(n)));
  return HollowSymmetricd(n, Eigen::Map<const Eigen::VectorXd>(up.data(), Eigen::Index(up.size())));
}

json to_json(const BinaryMatrix& b) {
  json j;
  j["n"] = b.rows();
  std::vector<std::string> rows;
  for (Eigen::Index i = 0; i < b.rows(); ++i) {
    std::string r;
    for (Eigen::Index k = 0; k < b.cols(); ++k) r += (b(i, k) & 1) ? '1' : '0';
    rows.push_back(r);
  }
  j["rows"] = rows;
  return j;
}

BinaryMatrix binary_from_json(const json& j) {
  const json& rows = j.is_array() ? j : j.at("rows");
  const Eigen::Index n = Eigen::Index(rows.size());
  BinaryMatrix b(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (rows[i].is_string()) {
      const auto s = rows[i].get<std::string>();
      if (Eigen::Index(s.size()) != n) throw std::invalid_argument("binary matrix JSON: ragged rows");
      for (Eigen::Index k = 0; k < n; ++k) {
        if (s[k] != '0' && s[k] != '1') throw std::invalid_argument("binary matrix JSON: expected 0/1");
        b(i, k) = s[k] == '1';
      }
    } else {
      if (Eigen::Index(rows[i].size()) != n) throw std::invalid_argument("binary matrix JSON: ragged rows");
      for (Eigen::Index k = 0; k < n; ++k) {
        const int v = rows[i][k].get<int>();
        if (v != 0 && v != 1) throw std::invalid_argument("binary matrix JSON: expected 0/1");
        b(i, k) = std::uint8_t(v);
      }
    }
  }
  if (j.is_object() && j.contains("n") && j.at("n").get<Eigen::Index>() != n)
    throw std::invalid_argument("binary matrix JSON: n does not match rows");
  return b;
}

BinaryMatrix binary_from_text(const std::string& text) {
  std::vector<std::string> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string r;
    for (char c : line)
      if (c == '0' || c == '1') r += c;
      else if (c == '#') break;
      else if (!std::isspace(static_cast<unsigned char>(c)))
        throw std::invalid_argument("binary matrix text: unexpected character");
    if (!r.empty()) rows.push_back(r);
  }
  return binary_from_json(json(rows));
}

std::string binary_to_text(const BinaryMatrix& b) {
  std::string out;
  for (Eigen::Index i = 0; i < b.rows(); ++i) {
    for (Eigen::Index k = 0; k < b.cols(); ++k) out += (b(i, k) & 1) ? '1' : '0';
    out += '\n';
  }
  return out;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << content;
}

json read_json(const std::filesystem::path& p) {
  try {
    return json::parse(read_file(p));
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(p.string() + ": " + e.what());
  }
}

}  // namespace gzz
