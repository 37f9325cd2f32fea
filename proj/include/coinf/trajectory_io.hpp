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

#ifndef COINF_TRAJECTORY_IO_HPP_
#define COINF_TRAJECTORY_IO_HPP_

#include <string>

#include "coinf/dynamics.hpp"
#include "coinf/integrator.hpp"

namespace coinf {

/// CSV with header `t,S,I`, 17 significant digits.
std::string TrajectoryCsv(const Trajectory<State2d>& traj);
/// CSV with header `t,S,U,V`, 17 significant digits.
std::string TrajectoryCsv(const Trajectory<State3d>& traj);

}  // namespace coinf

#endif  // COINF_TRAJECTORY_IO_HPP_
