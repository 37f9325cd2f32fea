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

#include "coinf/render.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

#include "coinf/atomic_file.hpp"

namespace coinf {
namespace {

constexpr std::array<std::pair<ColorCode, std::string_view>, 7> kLegend = {{
    {ColorCode::kYellow, "disease-free"},
    {ColorCode::kOrange, "endemic primary infection"},
    {ColorCode::kGray, "conditional coinfection (bistable)"},
    {ColorCode::kRed, "endemic coinfection"},
    {ColorCode::kBlack, "extinction"},
    {ColorCode::kBlue, "threshold boundary"},
    {ColorCode::kMagenta, "tangent (R = 1)"},
}};

int AutoCellSize(const RegionGrid& grid, int cell_px) {
  if (cell_px > 0) return cell_px;
  return std::max(1, 400 / std::max(grid.nx(), grid.ny()));
}

std::string HexColor(ColorCode c) {
  const Rgb rgb = ToRgb(c);
  return fmt::format("#{:02x}{:02x}{:02x}", rgb.r, rgb.g, rgb.b);
}

}  // namespace

std::string RenderPpm(const RegionGrid& grid, int cell_px) {
  const int px = AutoCellSize(grid, cell_px);
  const int width = grid.nx() * px;
  const int height = grid.ny() * px;
  const auto& spec = grid.spec();
  std::string out = "P6\n";
  out += fmt::format("# x: {} [{}, {}]\n", spec.axis_x, spec.range_x.lo, spec.range_x.hi);
  out += fmt::format("# y: {} [{}, {}] (top = {})\n", spec.axis_y, spec.range_y.lo,
                     spec.range_y.hi, spec.range_y.hi);
  for (const auto& [code, text] : kLegend) {
    out += fmt::format("# {}: {}\n", ToString(code), text);
  }
  out += fmt::format("{} {}\n255\n", width, height);

  const std::size_t header = out.size();
  out.resize(header + static_cast<std::size_t>(width) * height * 3);
  for (int row = 0; row < height; ++row) {
    const int j = grid.ny() - 1 - row / px;
    for (int col = 0; col < width; ++col) {
      const Rgb rgb = ToRgb(grid.at(col / px, j).color);
      const std::size_t k = header + (static_cast<std::size_t>(row) * width + col) * 3;
      out[k] = static_cast<char>(rgb.r);
      out[k + 1] = static_cast<char>(rgb.g);
      out[k + 2] = static_cast<char>(rgb.b);
    }
  }
  return out;
}

std::string RenderSvg(const RegionGrid& grid, int cell_px) {
  const int px = AutoCellSize(grid, cell_px);
  const int map_w = grid.nx() * px;
  const int map_h = grid.ny() * px;
  constexpr int left = 70, top = 20, bottom = 60, legend_w = 260;
  const int width = left + map_w + 20 + legend_w;
  const int height = top + std::max(map_h, 20 * static_cast<int>(kLegend.size())) + bottom;
  const auto& spec = grid.spec();

  std::string out = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" "
      "shape-rendering=\"crispEdges\" font-family=\"sans-serif\" font-size=\"12\">\n",
      width, height);
  // One rectangle per horizontal run of equal colour.
  for (int j = 0; j < grid.ny(); ++j) {
    const int y = top + (grid.ny() - 1 - j) * px;
    int i = 0;
    while (i < grid.nx()) {
      const ColorCode c = grid.at(i, j).color;
      int run = 1;
      while (i + run < grid.nx() && grid.at(i + run, j).color == c) ++run;
      out += fmt::format(
          "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\" data-label=\"{}\"/>\n",
          left + i * px, y, run * px, px, HexColor(c), ToString(c));
      i += run;
    }
  }
  out += fmt::format(
      "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\"/>\n",
      left, top, map_w, map_h);
  const int axis_y = top + map_h;
  out += fmt::format("<text x=\"{}\" y=\"{}\">{}</text>\n", left, axis_y + 16, spec.range_x.lo);
  out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"end\">{}</text>\n", left + map_w,
                     axis_y + 16, spec.range_x.hi);
  out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n",
                     left + map_w / 2, axis_y + 36, spec.axis_x);
  out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"end\">{}</text>\n", left - 6,
                     axis_y, spec.range_y.lo);
  out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"end\">{}</text>\n", left - 6,
                     top + 12, spec.range_y.hi);
  out += fmt::format(
      "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" transform=\"rotate(-90 {} {})\">{}</text>\n",
      left - 40, top + map_h / 2, left - 40, top + map_h / 2, spec.axis_y);
  const int legend_x = left + map_w + 20;
  for (std::size_t k = 0; k < kLegend.size(); ++k) {
    const int y = top + 20 * static_cast<int>(k);
    out += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"14\" height=\"14\" fill=\"{}\"/>\n",
                       legend_x, y, HexColor(kLegend[k].first));
    out += fmt::format("<text x=\"{}\" y=\"{}\">{}</text>\n", legend_x + 20, y + 12,
                       kLegend[k].second);
  }
  out += "</svg>\n";
  return out;
}

std::string RenderForPath(const RegionGrid& grid, const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (ext == ".ppm") return RenderPpm(grid);
  if (ext == ".svg") return RenderSvg(grid);
  throw std::invalid_argument("image path must end in .ppm or .svg: '" + path.string() + "'");
}

void Render(const RegionGrid& grid, const std::filesystem::path& path) {
  WriteFileAtomically(path, RenderForPath(grid, path));
}

}  // namespace coinf
