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

#ifndef COINF_CONFIG_HPP_
#define COINF_CONFIG_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>

#include "coinf/params.hpp"

namespace coinf {

/// Reads a flat `key = value` parameter file. Keys are the FullParams field
/// names; `#` starts a comment. Every key except `epsilon` (default 1e-3) is
/// required. Throws ConfigError (with line number where one applies) on
/// malformed lines, unknown or duplicate keys, bad numbers or missing keys,
/// and ParameterError if the values are outside the model domain.
FullParamsd ParseParams(std::istream& in);
FullParamsd ReadParamsFile(const std::filesystem::path& path);

/// Writes every key in canonical order at 17 significant digits; the output
/// parses back to identical values.
std::string FormatParams(const FullParamsd& p);

}  // namespace coinf

#endif  // COINF_CONFIG_HPP_
