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

#ifndef GZZ_IO_HPP
#define GZZ_IO_HPP

#include <filesystem>
#include <string>

#include <json.hpp>

#include "gzz/frame.hpp"
#include "gzz/gf2.hpp"

namespace gzz {

using json = nlohmann::json;

// {"n": int, "upper": [...]}; a full "matrix" array is accepted on input.
json to_json(const HollowSymmetricd& a);
HollowSymmetricd hollow_from_json(const json& j);

// {"n": int, "rows": ["101", ...]}; also accepts a nested 0/1 array.
json to_json(const BinaryMatrix& b);
BinaryMatrix binary_from_json(const json& j);
// Plain text: one row of 0/1 characters per line.
BinaryMatrix binary_from_text(const std::string& text);
std::string binary_to_text(const BinaryMatrix& b);

std::string read_file(const std::filesystem::path& p);
void write_file(const std::filesystem::path& p, const std::string& content);
json read_json(const std::filesystem::path& p);

}  // namespace gzz

#endif  // GZZ_IO_HPP
