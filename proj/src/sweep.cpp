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

#include "coinf/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include <fmt/format.h>

#include "coinf/report.hpp"

namespace coinf {
namespace {

constexpr std::array<std::pair<ColorCode, Rgb>, 7> kPalette = {{
    {ColorCode::kYellow, {255, 221, 0}},
    {ColorCode::kOrange, {255, 140, 0}},
    {ColorCode::kGray, {150, 150, 150}},
    {ColorCode::kRed, {204, 0, 0}},
    {ColorCode::kBlack, {0, 0, 0}},
    {ColorCode::kBlue, {40, 90, 220}},
    {ColorCode::kMagenta, {200, 0, 200}},
}};

}  // namespace

void ValidateSpec(const SweepSpec& spec) {
  for (const auto& axis : {spec.axis_x, spec.axis_y}) {
    if (FindParamField<double>(axis) == nullptr) {
      throw SpecError("unknown sweep axis '" + axis + "'");
    }
  }
  if (spec.axis_x == spec.axis_y) throw SpecError("sweep axes must differ");
  for (const auto& range : {spec.range_x, spec.range_y}) {
    if (!(std::isfinite(range.lo) && std::isfinite(range.hi) && range.hi > range.lo)) {
      throw SpecError(fmt::format("sweep range [{}, {}] must have positive length", range.lo,
                                  range.hi));
    }
  }
  if (spec.res_x < 2 || spec.res_y < 2) {
    throw SpecError("sweep resolution must be at least 2 cells per axis");
  }
}

double CellCentre(const Interval& range, int res, int i) {
  return range.lo + (range.hi - range.lo) * (i + 0.5) / res;
}

ColorCode ColorFor(ScenarioLabel label, bool coinfection_active) {
  switch (label) {
    case ScenarioLabel::kDiseaseFreeGlobal:
      return ColorCode::kYellow;
    case ScenarioLabel::kEndemicGlobal:
    case ScenarioLabel::kEndemicLocal:
      return coinfection_active ? ColorCode::kRed : ColorCode::kOrange;
    case ScenarioLabel::kBistable:
      return ColorCode::kGray;
    case ScenarioLabel::kExtinction:
      return ColorCode::kBlack;
    case ScenarioLabel::kBoundary:
      return ColorCode::kBlue;
    case ScenarioLabel::kDegenerateTangent:
      return ColorCode::kMagenta;
  }
  return ColorCode::kBlue;
}

Rgb ToRgb(ColorCode color) {
  for (const auto& [code, rgb] : kPalette) {
    if (code == color) return rgb;
  }
  return {0, 0, 0};
}

std::optional<ColorCode> FromRgb(const Rgb& rgb) {
  for (const auto& [code, value] : kPalette) {
    if (value == rgb) return code;
  }
  return std::nullopt;
}

std::string_view ToString(ColorCode color) {
  switch (color) {
    case ColorCode::kYellow:
      return "yellow";
    case ColorCode::kOrange:
      return "orange";
    case ColorCode::kGray:
      return "gray";
    case ColorCode::kRed:
      return "red";
    case ColorCode::kBlack:
      return "black";
    case ColorCode::kBlue:
      return "blue";
    case ColorCode::kMagenta:
      return "magenta";
  }
  return "?";
}

SweepCell EvaluateCell(const SweepSpec& spec, int i, int j) {
  FullParamsd p = spec.base;
  SweepCell cell;
  cell.x = CellCentre(spec.range_x, spec.res_x, i);
  cell.y = CellCentre(spec.range_y, spec.res_y, j);
  p.*FindParamField<double>(spec.axis_x) = cell.x;
  p.*FindParamField<double>(spec.axis_y) = cell.y;
  Scenario sc;
  try {
    sc = Classify(p);
  } catch (const ParameterError& e) {
    throw ParameterError(fmt::format("sweep cell {}={}, {}={}: {}", spec.axis_x, cell.x,
                                     spec.axis_y, cell.y, e.what()));
  }
  cell.label = sc.label;
  cell.nu_star = sc.reduced.nu_star;
  cell.color = ColorFor(sc.label, sc.coinfection_active);
  cell.thresholds = sc.thresholds;
  return cell;
}

RegionGrid::RegionGrid(SweepSpec spec, std::vector<SweepCell> cells)
    : spec_(std::move(spec)), cells_(std::move(cells)) {
  if (cells_.size() != static_cast<std::size_t>(spec_.res_x) * spec_.res_y) {
    throw SpecError("cell count does not match sweep resolution");
  }
}

RegionGrid RunSweep(const SweepSpec& spec, unsigned threads) {
  ValidateSpec(spec);
  const int nx = spec.res_x;
  const int ny = spec.res_y;
  std::vector<SweepCell> cells(static_cast<std::size_t>(nx) * ny);

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(ny));
  const int block = std::max(1, ny / static_cast<int>(4 * threads));

  std::atomic<int> next_row{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const int first = next_row.fetch_add(block);
      if (first >= ny) return;
      const int last = std::min(ny, first + block);
      try {
        for (int j = first; j < last; ++j) {
          for (int i = 0; i < nx; ++i) {
            cells[static_cast<std::size_t>(j) * nx + i] = EvaluateCell(spec, i, j);
          }
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next_row.store(ny);
        return;
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return RegionGrid(spec, std::move(cells));
}

std::string GridCsv(const RegionGrid& grid) {
  std::string out = fmt::format("{},{},label,nu_star,S1,Abar,Bbar,R\n", grid.spec().axis_x,
                                grid.spec().axis_y);
  for (const auto& c : grid.cells()) {
    out += fmt::format("{},{},{},{},{},{},{},{}\n", FormatNumber(c.x), FormatNumber(c.y),
                       ToString(c.label), FormatNumber(c.nu_star),
                       FormatOptional(c.thresholds.s1_star),
                       FormatOptional(c.thresholds.a_bar_thr),
                       FormatNumber(c.thresholds.b_bar_thr),
                       FormatOptional(c.thresholds.r_script));
  }
  return out;
}

bool AggregationReport::MonotoneInEpsilon() const {
  std::vector<const AggregationRow*> sorted;
  for (const auto& row : rows) {
    if (!row.converged) return false;
    sorted.push_back(&row);
  }
  std::sort(sorted.begin(), sorted.end(),
            [](const auto* a, const auto* b) { return a->epsilon > b->epsilon; });
  for (std::size_t k = 1; k < sorted.size(); ++k) {
    if (!(sorted[k]->distance < sorted[k - 1]->distance)) return false;
  }
  return true;
}

AggregationReport ValidateAggregation(const FullParamsd& p, std::span<const double> epsilons,
                                      double horizon, const std::optional<State3d>& initial,
                                      const Tolerances& tol) {
  if (!(horizon > 0.0)) throw std::invalid_argument("horizon must be positive");
  const Scenario sc = Classify(p);

  const Equilibriumd* reference = nullptr;
  for (auto kind : {EquilibriumKind::kInterior, EquilibriumKind::kDiseaseFree,
                    EquilibriumKind::kOrigin}) {
    for (const auto& e : sc.equilibria) {
      if (e.kind == kind && e.stability == Stability::kStable) {
        reference = &e;
        break;
      }
    }
    if (reference != nullptr) break;
  }
  if (reference == nullptr) {
    throw DomainError(fmt::format("scenario {} has no stable hyperbolic equilibrium",
                                  ToString(sc.label)));
  }

  AggregationReport report;
  report.label = sc.label;
  report.nu_star = sc.reduced.nu_star;
  report.reduced_equilibrium = reference->location;
  report.target = LiftToFastEquilibrium(reference->location, sc.reduced.nu_star);
  const State3d& target = report.target;
  const State3d start =
      initial.value_or(State3d(1.05 * target(idx::S), 0.9 * target(idx::U) + 0.02,
                               1.1 * target(idx::V) + 0.02));
  const double target_norm = target.norm();

  for (double eps : epsilons) {
    if (!(eps > 0.0 && eps <= 1.0)) throw ParameterError("epsilon must lie in (0, 1]");
    FullParamsd q = p;
    q.epsilon = eps;
    IntegratorOptions opts;
    opts.tol = tol;
    opts.stop_at_steady_state = true;
    AggregationRow row;
    row.epsilon = eps;
    try {
      const auto traj = Integrate(
          [&q](double, const State3d& y) { return RhsComplete(y, q); }, start, 0.0,
          horizon / eps, opts);
      row.terminal = traj.back();
      row.converged = traj.stats().steady_state;
    } catch (const IntegrationError&) {
      row.terminal.setConstant(std::numeric_limits<double>::quiet_NaN());
      row.converged = false;
    }
    row.distance = (row.terminal - target).norm();
    row.relative_distance = target_norm > 0.0 ? row.distance / target_norm : row.distance;
    report.rows.push_back(row);
  }
  return report;
}

std::string AggregationCsv(const AggregationReport& report) {
  std::string out = "epsilon,distance,relative_distance,converged,S,U,V\n";
  for (const auto& row : report.rows) {
    out += fmt::format("{},{},{},{},{},{},{}\n", FormatNumber(row.epsilon),
                       FormatNumber(row.distance), FormatNumber(row.relative_distance),
                       row.converged ? "true" : "false", FormatNumber(row.terminal(idx::S)),
                       FormatNumber(row.terminal(idx::U)), FormatNumber(row.terminal(idx::V)));
  }
  return out;
}

}  // namespace coinf
