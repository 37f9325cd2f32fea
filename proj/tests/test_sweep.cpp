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

#include <doctest.h>

#include <algorithm>
#include <random>

#include "coinf/sweep.hpp"
#include "fixtures.hpp"

namespace coinf {
namespace {

using testing::EndemicCoinfectionParams;

SweepSpec SmallSpec(int nx, int ny) {
  SweepSpec spec;
  spec.base = EndemicCoinfectionParams();
  spec.res_x = nx;
  spec.res_y = ny;
  return spec;
}

TEST_CASE("cell centres") {
  const Interval range{0.0, 10.0};
  CHECK(CellCentre(range, 200, 0) == doctest::Approx(0.025));
  CHECK(CellCentre(range, 200, 199) == doctest::Approx(9.975));
  CHECK(CellCentre(range, 2, 1) == doctest::Approx(7.5));
}

TEST_CASE("sweep definition validation") {
  CHECK_NOTHROW(ValidateSpec(SweepSpec{}));
  auto bad = [](auto mutate) {
    SweepSpec s;
    mutate(s);
    return s;
  };
  CHECK_THROWS_AS(ValidateSpec(bad([](auto& s) { s.axis_x = "kappa"; })), SpecError);
  CHECK_THROWS_AS(ValidateSpec(bad([](auto& s) { s.axis_y = s.axis_x; })), SpecError);
  CHECK_THROWS_AS(ValidateSpec(bad([](auto& s) { s.range_x = {1.0, 1.0}; })), SpecError);
  CHECK_THROWS_AS(ValidateSpec(bad([](auto& s) { s.range_y = {2.0, 1.0}; })), SpecError);
  CHECK_THROWS_AS(ValidateSpec(bad([](auto& s) { s.res_x = 1; })), SpecError);
  CHECK_THROWS_AS(RunSweep(bad([](auto& s) { s.axis_y = "nope"; })), SpecError);
}

TEST_CASE("colour mapping") {
  CHECK(ColorFor(ScenarioLabel::kDiseaseFreeGlobal, true) == ColorCode::kYellow);
  CHECK(ColorFor(ScenarioLabel::kEndemicGlobal, false) == ColorCode::kOrange);
  CHECK(ColorFor(ScenarioLabel::kEndemicLocal, false) == ColorCode::kOrange);
  CHECK(ColorFor(ScenarioLabel::kEndemicLocal, true) == ColorCode::kRed);
  CHECK(ColorFor(ScenarioLabel::kBistable, true) == ColorCode::kGray);
  CHECK(ColorFor(ScenarioLabel::kExtinction, false) == ColorCode::kBlack);
  CHECK(ColorFor(ScenarioLabel::kBoundary, false) == ColorCode::kBlue);
  CHECK(ColorFor(ScenarioLabel::kDegenerateTangent, false) == ColorCode::kMagenta);
  for (auto c : {ColorCode::kYellow, ColorCode::kOrange, ColorCode::kGray, ColorCode::kRed,
                 ColorCode::kBlack, ColorCode::kBlue, ColorCode::kMagenta}) {
    CHECK(FromRgb(ToRgb(c)) == c);
  }
  CHECK_FALSE(FromRgb(Rgb{1, 2, 3}));
}

TEST_CASE("uniform 2x2 grid") {
  auto spec = SmallSpec(2, 2);
  spec.range_x = {1.0, 2.0};  // delta >= lambda throughout
  spec.range_y = {0.2, 0.8};
  const auto grid = RunSweep(spec);
  REQUIRE(grid.cells().size() == 4);
  for (const auto& cell : grid.cells()) {
    CHECK(cell.label == ScenarioLabel::kDiseaseFreeGlobal);
    CHECK(cell.color == ColorCode::kYellow);
    CHECK(cell.nu_star == 0.0);
  }
  CHECK(grid.at(1, 0).x == doctest::Approx(1.75));
  CHECK(grid.at(0, 1).y == doctest::Approx(0.65));
}

TEST_CASE("sweep over other parameters") {
  auto spec = SmallSpec(3, 4);
  spec.axis_x = "m";
  spec.axis_y = "c_SS";
  spec.range_x = {1.0, 40.0};
  spec.range_y = {1.0, 5.0};
  const auto grid = RunSweep(spec);
  CHECK(grid.at(2, 0).label == ScenarioLabel::kExtinction);
  CHECK(grid.at(2, 0).color == ColorCode::kBlack);
  CHECK(grid.at(0, 0).label != ScenarioLabel::kExtinction);
}

TEST_CASE("result does not depend on evaluation order or worker count") {
  auto spec = SmallSpec(17, 13);
  spec.range_x = {0.0, 4.0};
  spec.range_y = {0.0, 4.0};
  std::vector<std::pair<int, int>> order;
  for (int j = 0; j < spec.res_y; ++j) {
    for (int i = 0; i < spec.res_x; ++i) order.emplace_back(i, j);
  }
  std::mt19937_64 rng(61);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<SweepCell> cells(order.size());
  for (const auto& [i, j] : order) {
    cells[static_cast<std::size_t>(j) * spec.res_x + i] = EvaluateCell(spec, i, j);
  }
  const RegionGrid shuffled(spec, cells);
  const std::string expected = GridCsv(shuffled);
  CHECK(GridCsv(RunSweep(spec, 1)) == expected);
  CHECK(GridCsv(RunSweep(spec, 3)) == expected);
  CHECK(GridCsv(RunSweep(spec, 64)) == expected);
}

TEST_CASE("grid CSV layout") {
  auto spec = SmallSpec(2, 2);
  const auto csv = GridCsv(RunSweep(spec));
  const auto header_end = csv.find('\n');
  CHECK(csv.substr(0, header_end) == "delta,lambda,label,nu_star,S1,Abar,Bbar,R");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
  // First row: delta = 2.5, lambda = 2.5, so nu* = 0.
  const auto row_end = csv.find('\n', header_end + 1);
  const auto row = csv.substr(header_end + 1, row_end - header_end - 1);
  CHECK(row.rfind("2.5,2.5,DiseaseFreeGlobal,0,", 0) == 0);

  spec.axis_x = "m";
  spec.axis_y = "c_SS";
  spec.range_x = {30.0, 40.0};
  spec.range_y = {1.0, 5.0};
  const auto extinct = GridCsv(RunSweep(spec));
  CHECK(extinct.find("Extinction,0.5,,") != std::string::npos);
}

TEST_CASE("reference map: disease-free cells with lambda above delta") {
  auto spec = SmallSpec(40, 40);
  const auto grid = RunSweep(spec);
  int count = 0;
  for (const auto& cell : grid.cells()) {
    if (cell.y > cell.x && cell.color == ColorCode::kYellow) ++count;
  }
  CHECK(count > 0);
}

TEST_CASE("labels are constant along rays through the origin") {
  const auto base = EndemicCoinfectionParams();
  for (double ratio : {0.1, 0.3, 0.5, 0.69, 0.7, 0.9, 1.5}) {
    auto p = base;
    p.lambda = 1.0;
    p.delta = ratio;
    const auto reference = Classify(p).label;
    for (double k : {0.05, 0.5, 3.0, 9.5}) {
      p.lambda = k;
      p.delta = ratio * k;
      CHECK(Classify(p).label == reference);
    }
  }
}

TEST_CASE("aggregation: endemic coinfection set") {
  const std::vector<double> eps = {1e-1, 1e-2, 1e-3};
  const auto report = ValidateAggregation(EndemicCoinfectionParams(2.0, 1.0), eps, 200.0);
  REQUIRE(report.rows.size() == 3);
  CHECK(report.label == ScenarioLabel::kEndemicLocal);
  CHECK(report.MonotoneInEpsilon());
  for (const auto& row : report.rows) CHECK(row.converged);
  CHECK(report.target(idx::U) == doctest::Approx(0.67384433751566344).epsilon(1e-12));
  // Oracle: exact equilibria of the complete field (Newton, 30 digits).
  CHECK(report.rows[1].relative_distance == doctest::Approx(0.10414785672071092).epsilon(1e-6));
  CHECK(report.rows[2].relative_distance == doctest::Approx(0.010178157249023902).epsilon(1e-6));
  const double ratio = report.rows[1].distance / report.rows[2].distance;
  CHECK(ratio > 2.0);
  CHECK(ratio < 50.0);
  const auto csv = AggregationCsv(report);
  CHECK(csv.rfind("epsilon,distance,relative_distance,converged,S,U,V\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}

TEST_CASE("aggregation: no coinfection when delta >= lambda") {
  const std::vector<double> eps = {1e-2};
  auto p = EndemicCoinfectionParams(1.0, 1.5);
  p.m = 3;  // endemic primary infection, so U stays positive
  const auto report = ValidateAggregation(p, eps, 200.0);
  REQUIRE(report.rows.size() == 1);
  CHECK(report.nu_star == 0.0);
  CHECK(report.rows[0].terminal(idx::V) < 1e-8);
  CHECK(report.rows[0].terminal(idx::U) > 0.1);
}

TEST_CASE("aggregation: errors") {
  const std::vector<double> eps = {1e-2};
  auto p = EndemicCoinfectionParams(2.0, 1.0);
  p.m = p.r;
  CHECK_THROWS_AS(ValidateAggregation(p, eps, 100.0), DomainError);
  const std::vector<double> bad_eps = {0.0};
  CHECK_THROWS_AS(ValidateAggregation(EndemicCoinfectionParams(2.0, 1.0), bad_eps, 100.0), ParameterError);
}

TEST_CASE("aggregation: integrator failure is reported, not thrown") {
  const std::vector<double> eps = {1e-2};
  const auto report = ValidateAggregation(EndemicCoinfectionParams(2.0, 1.0), eps, 200.0, std::nullopt,
                                          Tolerances{1e-300, 1e-300});
  REQUIRE(report.rows.size() == 1);
  CHECK_FALSE(report.rows[0].converged);
  CHECK(std::isnan(report.rows[0].distance));
  CHECK_FALSE(report.MonotoneInEpsilon());
}

}  // namespace
}  // namespace coinf
