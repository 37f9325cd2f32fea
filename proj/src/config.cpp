// Copyright 2026 The coinf Authors
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

#include "coinf/config.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <string_view>

#include <fmt/format.h>

#include "coinf/report.hpp"

namespace coinf {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

FullParamsd ParseParams(std::istream& in) {
  FullParamsd p;
  std::map<std::string, int, std::less<>> seen;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = Trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(fmt::format("line {}: expected 'key = value'", line_no), line_no);
    }
    const auto key = Trim(line.substr(0, eq));
    const auto value = Trim(line.substr(eq + 1));
    auto member = FindParamField<double>(key);
    if (member == nullptr) {
      throw ConfigError(fmt::format("line {}: unknown parameter '{}'", line_no, key), line_no);
    }
    if (auto it = seen.find(key); it != seen.end()) {
      throw ConfigError(fmt::format("line {}: parameter '{}' already set on line {}", line_no,
                                    key, it->second),
                        line_no);
    }
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), x);
    if (value.empty() || ec != std::errc() || ptr != value.data() + value.size()) {
      throw ConfigError(
          fmt::format("line {}: value '{}' for '{}' is not a number", line_no, value, key),
          line_no);
    }
    p.*member = x;
    seen.emplace(std::string(key), line_no);
  }
  for (const auto& [key, member] : kFullParamFields<double>) {
    if (key == "epsilon") continue;
    if (!seen.contains(key)) {
      throw ConfigError(fmt::format("missing parameter '{}'", key));
    }
  }
  Validate(p);
  return p;
}

FullParamsd ReadParamsFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open parameter file '" + path.string() + "'");
  try {
    return ParseParams(in);
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what(), e.line());
  }
}

std::string FormatParams(const FullParamsd& p) {
  std::string out;
  for (const auto& [key, member] : kFullParamFields<double>) {
    out += fmt::format("{} = {}\n", key, FormatNumber(p.*member));
  }
  return out;
}

}  // namespace coinf
