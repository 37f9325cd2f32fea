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

#ifndef COINF_SWEEP_HPP_
#define COINF_SWEEP_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coinf/dynamics.hpp"
#include "coinf/equilibria.hpp"
#include "coinf/integrator.hpp"
#include "coinf/params.hpp"

namespace coinf {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Two-parameter classification map. Each axis interval is split into `res`
/// equal cells and the classifier is evaluated at the cell centres, so the
/// default (0, 10] ranges never evaluate lambda = 0.
struct SweepSpec {
  FullParamsd base;
  std::string axis_x = "delta";
  std::string axis_y = "lambda";
  Interval range_x{0.0, 10.0};
  Interval range_y{0.0, 10.0};
  int res_x = 200;
  int res_y = 200;
};

/// Throws SpecError for unknown axis names, identical axes, empty or
/// reversed ranges, or fewer than two cells per axis.
void ValidateSpec(const SweepSpec& spec);

/// Centre of cell `i` out of `res` along `range`.
double CellCentre(const Interval& range, int res, int i);

enum class ColorCode { kYellow, kOrange, kGray, kRed, kBlack, kBlue, kMagenta };

struct Rgb {
  std::uint8_t r, g, b;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

/// Disease-free: yellow. Endemic without coinfection: orange. Bistable: gray.
/// Endemic with coinfection: red. Extinction black, boundary blue, tangent
/// magenta.
ColorCode ColorFor(ScenarioLabel label, bool coinfection_active);
Rgb ToRgb(ColorCode color);
std::string_view ToString(ColorCode color);
/// Inverse of ToRgb; empty for colours outside the palette.
std::optional<ColorCode> FromRgb(const Rgb& rgb);

struct SweepCell {
  double x = 0.0;
  double y = 0.0;
  ScenarioLabel label = ScenarioLabel::kBoundary;
  ColorCode color = ColorCode::kBlue;
  double nu_star = 0.0;
  Thresholdsd thresholds;
};

/// Classifies one cell; `i` indexes axis_x, `j` indexes axis_y.
SweepCell EvaluateCell(const SweepSpec& spec, int i, int j);

class RegionGrid {
 public:
  RegionGrid(SweepSpec spec, std::vector<SweepCell> cells);

  const SweepSpec& spec() const { return spec_; }
  int nx() const { return spec_.res_x; }
  int ny() const { return spec_.res_y; }
  const SweepCell& at(int i, int j) const { return cells_[static_cast<std::size_t>(j) * nx() + i]; }
  /// Row-major with axis_y outermost.
  const std::vector<SweepCell>& cells() const { return cells_; }

 private:
  SweepSpec spec_;
  std::vector<SweepCell> cells_;
};

/// Evaluates every cell on a pool of `threads` workers (0: hardware
/// concurrency). Rows are handed out in blocks and written by index, so the
/// result does not depend on scheduling.
RegionGrid RunSweep(const SweepSpec& spec, unsigned threads = 0);

/// Header `<axis_x>,<axis_y>,label,nu_star,S1,Abar,Bbar,R`, one row per cell,
/// axis_y outermost; absent thresholds are empty fields.
std::string GridCsv(const RegionGrid& grid);

inline constexpr Tolerances kSettleTolerances{1e-12, 1e-14};

struct AggregationRow {
  double epsilon = 0.0;
  State3d terminal = State3d::Zero();
  double distance = 0.0;           ///< Euclidean, to the lifted equilibrium
  double relative_distance = 0.0;  ///< distance / |lifted equilibrium|
  bool converged = false;          ///< steady state reached within the horizon
};

struct AggregationReport {
  ScenarioLabel label = ScenarioLabel::kBoundary;
  State2d reduced_equilibrium = State2d::Zero();
  double nu_star = 0.0;
  State3d target = State3d::Zero();  ///< (S*, (1 - nu*) I*, nu* I*)
  std::vector<AggregationRow> rows;  ///< in the order the epsilons were given

  /// Distances strictly decrease as epsilon decreases (over converged rows;
  /// false if any row is inconclusive).
  bool MonotoneInEpsilon() const;
};

/// Integrates the complete model for each epsilon over slow time [0, horizon]
/// (fast time horizon / epsilon) and measures how far its terminal state is
/// from the aggregated system's stable hyperbolic equilibrium lifted to the
/// fast equilibrium. The reference is the stable interior equilibrium when
/// there is one, otherwise a stable E1* or E0*. Throws DomainError when the
/// aggregated system has no stable hyperbolic equilibrium.
///
/// Default start: (1.05 S*, 0.9 (1 - nu*) I* + 0.02, 1.1 nu* I* + 0.02).
/// The default tolerances are tight enough for the steady-state test to fire
/// near stiff equilibria.
AggregationReport ValidateAggregation(const FullParamsd& p, std::span<const double> epsilons,
                                      double horizon,
                                      const std::optional<State3d>& initial = std::nullopt,
                                      const Tolerances& tol = kSettleTolerances);

/// Header `epsilon,distance,relative_distance,converged,S,U,V`.
std::string AggregationCsv(const AggregationReport& report);

}  // namespace coinf

#endif  // COINF_SWEEP_HPP_
