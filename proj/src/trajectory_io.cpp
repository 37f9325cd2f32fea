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

#include "coinf/trajectory_io.hpp"

#include <fmt/format.h>

namespace coinf {
namespace {

template <typename Vector>
std::string ToCsv(const Trajectory<Vector>& traj, std::string_view header) {
  std::string out(header);
  out += '\n';
  for (std::size_t k = 0; k < traj.size(); ++k) {
    out += fmt::format("{:.17g}", traj.times()[k]);
    for (Eigen::Index i = 0; i < traj.states()[k].size(); ++i) {
      out += fmt::format(",{:.17g}", traj.states()[k](i));
    }
    out += '\n';
  }
  return out;
}

}  // namespace

std::string TrajectoryCsv(const Trajectory<State2d>& traj) { return ToCsv(traj, "t,S,I"); }

std::string TrajectoryCsv(const Trajectory<State3d>& traj) { return ToCsv(traj, "t,S,U,V"); }

}  // namespace coinf
