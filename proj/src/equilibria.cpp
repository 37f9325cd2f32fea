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

#include "coinf/equilibria.hpp"

#include <stdexcept>
#include <string>

namespace coinf {
namespace {

constexpr std::array<std::pair<ScenarioLabel, std::string_view>, 7> kLabelNames = {{
    {ScenarioLabel::kExtinction, "Extinction"},
    {ScenarioLabel::kDiseaseFreeGlobal, "DiseaseFreeGlobal"},
    {ScenarioLabel::kEndemicGlobal, "EndemicGlobal"},
    {ScenarioLabel::kEndemicLocal, "EndemicLocal"},
    {ScenarioLabel::kBistable, "Bistable"},
    {ScenarioLabel::kDegenerateTangent, "DegenerateTangent"},
    {ScenarioLabel::kBoundary, "Boundary"},
}};

}  // namespace

std::string_view ToString(EquilibriumKind kind) {
  switch (kind) {
    case EquilibriumKind::kOrigin:
      return "origin";
    case EquilibriumKind::kDiseaseFree:
      return "disease_free";
    case EquilibriumKind::kInterior:
      return "interior";
  }
  return "?";
}

std::string_view ToString(Stability stability) {
  switch (stability) {
    case Stability::kStable:
      return "stable";
    case Stability::kSaddle:
      return "saddle";
    case Stability::kUnstable:
      return "unstable";
    case Stability::kNonhyperbolic:
      return "nonhyperbolic";
  }
  return "?";
}

std::string_view ToString(ScenarioLabel label) {
  for (const auto& [value, name] : kLabelNames) {
    if (value == label) return name;
  }
  return "?";
}

ScenarioLabel ParseScenarioLabel(std::string_view text) {
  for (const auto& [value, name] : kLabelNames) {
    if (name == text) return value;
  }
  throw std::invalid_argument("unknown scenario label '" + std::string(text) + "'");
}

std::vector<Equilibriumd> Scenario::interior() const {
  std::vector<Equilibriumd> out;
  for (const auto& e : equilibria) {
    if (e.kind == EquilibriumKind::kInterior) out.push_back(e);
  }
  return out;
}

Scenario Classify(const FullParamsd& p) {
  Scenario sc;
  sc.reduced = Reduce(p);
  sc.thresholds = ComputeThresholds(sc.reduced);
  sc.coinfection_active = sc.reduced.nu_star > 0.0;
  const auto& rp = sc.reduced;
  const auto& th = sc.thresholds;

  sc.equilibria.push_back(MakeEquilibrium(State2d(0.0, 0.0), EquilibriumKind::kOrigin, rp));
  if (!th.s1_star) {
    sc.label = ScenarioLabel::kExtinction;
    return sc;
  }
  const double s1 = *th.s1_star;
  sc.equilibria.push_back(MakeEquilibrium(State2d(s1, 0.0), EquilibriumKind::kDiseaseFree, rp));

  if (!th.a_bar_thr) {
    sc.label = ScenarioLabel::kDiseaseFreeGlobal;
    return sc;
  }
  for (const auto& e : InteriorEquilibria(th, rp)) sc.equilibria.push_back(e);

  const double a = *th.a_bar_thr;
  const double b = th.b_bar_thr;
  if (NearlyEqual(s1, a)) {
    sc.label = ScenarioLabel::kBoundary;
  } else if (a > s1 && a >= b) {
    sc.label = NearlyEqual(a, b) ? ScenarioLabel::kBoundary : ScenarioLabel::kDiseaseFreeGlobal;
  } else if (s1 > a) {
    const bool below_b = s1 < b && !NearlyEqual(s1, b);
    sc.label = below_b ? ScenarioLabel::kEndemicGlobal : ScenarioLabel::kEndemicLocal;
  } else if (s1 < a && a < b && !NearlyEqual(a, b) && th.r_script) {
    // R >= 1 only says the nullclines cross. Both crossings may sit in
    // (0, S1*), where Psi < 0; then there is no interior equilibrium and E1*
    // attracts everything, as for R < 1.
    const auto n_interior = static_cast<std::size_t>(sc.equilibria.size() - 2);
    const double R = *th.r_script;
    if (std::abs(R - 1.0) <= kTangentTolerance) {
      sc.label = n_interior == 1 ? ScenarioLabel::kDegenerateTangent
                                 : ScenarioLabel::kDiseaseFreeGlobal;
    } else if (R > 1.0 && n_interior == 2) {
      sc.label = ScenarioLabel::kBistable;
    } else {
      sc.label = ScenarioLabel::kDiseaseFreeGlobal;
    }
  } else {
    sc.label = ScenarioLabel::kBoundary;
  }
  return sc;
}

}  // namespace coinf
