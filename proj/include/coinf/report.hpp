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

#ifndef COINF_REPORT_HPP_
#define COINF_REPORT_HPP_

#include <optional>
#include <string>

#include "coinf/equilibria.hpp"
#include "coinf/params.hpp"

namespace coinf {

/// 17 significant digits, shortest `%g` layout.
std::string FormatNumber(double x);
/// Empty string for an absent value.
std::string FormatOptional(const std::optional<double>& x);

/// Flat `key = value` report of the aggregated coefficients and thresholds.
std::string FormatReducedReport(const FullParamsd& p, const ReducedParamsd& rp,
                                const Thresholdsd& th);

/// Flat `key = value` record: label, nu*, thresholds (empty when absent),
/// then `eq<k>.S`, `.I`, `.kind`, `.stability`, `.re1`, `.re2` per equilibrium.
std::string FormatScenario(const Scenario& sc);

}  // namespace coinf

#endif  // COINF_REPORT_HPP_
