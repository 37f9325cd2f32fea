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

#include "coinf/report.hpp"

#include <fmt/format.h>

namespace coinf {

std::string FormatNumber(double x) { return fmt::format("{:.17g}", x); }

std::string FormatOptional(const std::optional<double>& x) {
  return x ? FormatNumber(*x) : std::string();
}

std::string FormatReducedReport(const FullParamsd& p, const ReducedParamsd& rp,
                                const Thresholdsd& th) {
  const auto primary = PrimarySubmodel(p);
  const bool same = rp.a_bar == primary.a_bar && rp.c_bar_SI == primary.c_bar_SI &&
                    rp.c_bar_IS == primary.c_bar_IS && rp.c_bar_II == primary.c_bar_II &&
                    rp.beta_bar == primary.beta_bar && rp.gamma_bar == primary.gamma_bar &&
                    rp.mu_bar == primary.mu_bar;
  std::string out;
  if (same) out += "# reduced = primary submodel\n";
  auto line = [&out](std::string_view key, const std::string& value) {
    out += fmt::format("{} = {}\n", key, value);
  };
  line("nu_star", FormatNumber(rp.nu_star));
  line("r", FormatNumber(rp.r));
  line("m", FormatNumber(rp.m));
  line("c_SS", FormatNumber(rp.c_SS));
  line("a_bar", FormatNumber(rp.a_bar));
  line("c_bar_SI", FormatNumber(rp.c_bar_SI));
  line("c_bar_IS", FormatNumber(rp.c_bar_IS));
  line("c_bar_II", FormatNumber(rp.c_bar_II));
  line("beta_bar", FormatNumber(rp.beta_bar));
  line("gamma_bar", FormatNumber(rp.gamma_bar));
  line("mu_bar", FormatNumber(rp.mu_bar));
  line("reduced_is_primary_submodel", same ? "true" : "false");
  line("S1", FormatOptional(th.s1_star));
  line("Abar", FormatOptional(th.a_bar_thr));
  line("Bbar", FormatNumber(th.b_bar_thr));
  line("R", FormatOptional(th.r_script));
  line("invasion_margin", FormatNumber(th.invasion_margin));
  return out;
}

std::string FormatScenario(const Scenario& sc) {
  std::string out;
  auto line = [&out](std::string_view key, std::string_view value) {
    out += fmt::format("{} = {}\n", key, value);
  };
  line("label", ToString(sc.label));
  line("coinfection_active", sc.coinfection_active ? "true" : "false");
  line("nu_star", FormatNumber(sc.reduced.nu_star));
  line("S1", FormatOptional(sc.thresholds.s1_star));
  line("Abar", FormatOptional(sc.thresholds.a_bar_thr));
  line("Bbar", FormatNumber(sc.thresholds.b_bar_thr));
  line("R", FormatOptional(sc.thresholds.r_script));
  line("equilibria", fmt::format("{}", sc.equilibria.size()));
  for (std::size_t k = 0; k < sc.equilibria.size(); ++k) {
    const auto& e = sc.equilibria[k];
    line(fmt::format("eq{}.S", k), FormatNumber(e.location(idx::S)));
    line(fmt::format("eq{}.I", k), FormatNumber(e.location(idx::I)));
    line(fmt::format("eq{}.kind", k), ToString(e.kind));
    line(fmt::format("eq{}.stability", k), ToString(e.stability));
    line(fmt::format("eq{}.re1", k), FormatNumber(e.eigenvalues[0].real()));
    line(fmt::format("eq{}.re2", k), FormatNumber(e.eigenvalues[1].real()));
  }
  return out;
}

}  // namespace coinf
