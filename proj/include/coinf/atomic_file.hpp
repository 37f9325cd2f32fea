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

#ifndef COINF_ATOMIC_FILE_HPP_
#define COINF_ATOMIC_FILE_HPP_

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace coinf {

/// Writes every file to a temporary sibling first and renames them into place
/// only after all temporaries were written. On failure the temporaries are
/// removed and std::runtime_error is thrown; no target is touched.
void WriteFilesAtomically(
    const std::vector<std::pair<std::filesystem::path, std::string>>& files);

inline void WriteFileAtomically(const std::filesystem::path& path, const std::string& content) {
  WriteFilesAtomically({{path, content}});
}

}  // namespace coinf

#endif  // COINF_ATOMIC_FILE_HPP_
