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

#ifndef COINF_RENDER_HPP_
#define COINF_RENDER_HPP_

#include <filesystem>
#include <string>

#include "coinf/sweep.hpp"

namespace coinf {

/// Binary PPM (P6). Axis names, ranges and the legend go into header
/// comments. Each cell is a `cell_px` square (0: about 400 px per side);
/// larger axis_y values are at the top.
std::string RenderPpm(const RegionGrid& grid, int cell_px = 0);

/// SVG with the same cell layout plus axis labels, ranges and a legend.
std::string RenderSvg(const RegionGrid& grid, int cell_px = 0);

/// Writes PPM or SVG according to the extension (.ppm / .svg). Throws
/// std::invalid_argument for other extensions and std::runtime_error if the
/// file cannot be written.
void Render(const RegionGrid& grid, const std::filesystem::path& path);

/// Encoded image for `path`'s extension, without writing it.
std::string RenderForPath(const RegionGrid& grid, const std::filesystem::path& path);

}  // namespace coinf

#endif  // COINF_RENDER_HPP_
