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

#include "coinf/cli.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <limits>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "coinf/atomic_file.hpp"
#include "coinf/config.hpp"
#include "coinf/dynamics.hpp"
#include "coinf/equilibria.hpp"
#include "coinf/integrator.hpp"
#include "coinf/render.hpp"
#include "coinf/report.hpp"
#include "coinf/sweep.hpp"
#include "coinf/trajectory_io.hpp"

namespace coinf {
namespace {

namespace fs = std::filesystem;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::vector<double> ParseNumberList(const std::string& text, std::size_t expected,
                                    std::string_view flag) {
  std::vector<double> values;
  std::string_view rest(text);
  while (true) {
    const auto comma = rest.find(',');
    const auto token = rest.substr(0, comma);
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), x);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw UsageError(fmt::format("{}: '{}' is not a number", flag, token));
    }
    values.push_back(x);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (expected != 0 && values.size() != expected) {
    throw UsageError(fmt::format("{} expects {} comma-separated values", flag, expected));
  }
  return values;
}

std::pair<std::string, std::string> ParseNamePair(const std::string& text, std::string_view flag) {
  const auto comma = text.find(',');
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos) {
    throw UsageError(fmt::format("{} expects two comma-separated names", flag));
  }
  return {text.substr(0, comma), text.substr(comma + 1)};
}

struct Common {
  std::string params;
  std::string out = ".";
};

void WriteOutputs(const Common& common,
                  const std::vector<std::pair<std::string, std::string>>& named) {
  const fs::path dir(common.out);
  fs::create_directories(dir);
  std::vector<std::pair<fs::path, std::string>> files;
  for (const auto& [name, content] : named) files.emplace_back(dir / name, content);
  WriteFilesAtomically(files);
}

int CmdReduce(const Common& common, std::ostream& out) {
  const auto p = ReadParamsFile(common.params);
  const auto rp = Reduce(p);
  const auto report = FormatReducedReport(p, rp, ComputeThresholds(rp));
  WriteOutputs(common, {{"reduced.txt", report}});
  out << report;
  return 0;
}

int CmdClassify(const Common& common, std::ostream& out) {
  const auto p = ReadParamsFile(common.params);
  const auto report = FormatScenario(Classify(p));
  WriteOutputs(common, {{"scenario.txt", report}});
  out << report;
  return 0;
}

struct SimulateOptions {
  std::string system = "reduced";
  std::string init;
  double horizon = 100.0;
  std::string tol = "1e-8,1e-10";
  int samples = 0;
  long max_steps = IntegratorOptions{}.max_steps;
};

IntegratorOptions MakeIntegratorOptions(const SimulateOptions& o) {
  const auto tol = ParseNumberList(o.tol, 2, "--tol");
  if (!(tol[0] > 0.0 && tol[1] > 0.0)) throw UsageError("--tol values must be positive");
  if (!(o.horizon > 0.0)) throw UsageError("--horizon must be positive");
  if (o.samples < 0 || o.samples == 1) throw UsageError("--samples must be 0 or at least 2");
  if (o.max_steps < 1) throw UsageError("--max-steps must be positive");
  IntegratorOptions opts;
  opts.tol = {tol[0], tol[1]};
  opts.max_steps = o.max_steps;
  for (int k = 0; k < o.samples; ++k) {
    opts.sample_times.push_back(o.horizon * k / (o.samples - 1));
  }
  return opts;
}

void CheckInitialState(const std::vector<double>& y0) {
  for (double v : y0) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw UsageError("--init components must be >= 0");
  }
}

const Equilibriumd& Nearest(const Scenario& sc, const State2d& s) {
  return *std::min_element(sc.equilibria.begin(), sc.equilibria.end(),
                           [&s](const auto& a, const auto& b) {
                             return (a.location - s).norm() < (b.location - s).norm();
                           });
}

int CmdSimulate(const Common& common, const SimulateOptions& o, std::ostream& out) {
  const auto p = ReadParamsFile(common.params);
  const auto opts = MakeIntegratorOptions(o);
  const Scenario sc = Classify(p);
  std::string csv;
  State2d terminal_slow;
  if (o.system == "reduced") {
    const auto y0 = ParseNumberList(o.init, 2, "--init");
    CheckInitialState(y0);
    const auto& rp = sc.reduced;
    const auto traj =
        Integrate([&rp](double, const State2d& y) { return RhsPrimary(y, rp); },
                  State2d(y0[0], y0[1]), 0.0, o.horizon, opts);
    csv = TrajectoryCsv(traj);
    terminal_slow = traj.back();
    out << fmt::format("terminal t={} S={} I={}\n", FormatNumber(traj.times().back()),
                       FormatNumber(terminal_slow(idx::S)), FormatNumber(terminal_slow(idx::I)));
  } else if (o.system == "complete") {
    const auto y0 = ParseNumberList(o.init, 3, "--init");
    CheckInitialState(y0);
    const auto traj =
        Integrate([&p](double, const State3d& y) { return RhsComplete(y, p); },
                  State3d(y0[0], y0[1], y0[2]), 0.0, o.horizon, opts);
    csv = TrajectoryCsv(traj);
    const State3d& y = traj.back();
    terminal_slow = ToSlowFast(y).slow;
    out << fmt::format("terminal tau={} S={} U={} V={}\n", FormatNumber(traj.times().back()),
                       FormatNumber(y(idx::S)), FormatNumber(y(idx::U)),
                       FormatNumber(y(idx::V)));
  } else {
    throw UsageError("--system must be 'complete' or 'reduced'");
  }
  const auto& e = Nearest(sc, terminal_slow);
  out << fmt::format("scenario {}; nearest equilibrium {} ({}) at S={} I={}, distance {}\n",
                     ToString(sc.label), ToString(e.kind), ToString(e.stability),
                     FormatNumber(e.location(idx::S)), FormatNumber(e.location(idx::I)),
                     FormatNumber((e.location - terminal_slow).norm()));
  WriteOutputs(common, {{"trajectory.csv", csv}});
  return 0;
}

struct SweepOptions {
  std::string axes = "delta,lambda";
  std::string range_x = "0,10";
  std::string range_y = "0,10";
  std::string res = "200,200";
  std::string image = "grid.ppm";
  unsigned threads = 0;
};

int CmdSweep(const Common& common, const SweepOptions& o, std::ostream& out) {
  SweepSpec spec;
  spec.base = ReadParamsFile(common.params);
  std::tie(spec.axis_x, spec.axis_y) = ParseNamePair(o.axes, "--axes");
  const auto rx = ParseNumberList(o.range_x, 2, "--range-x");
  const auto ry = ParseNumberList(o.range_y, 2, "--range-y");
  const auto res = ParseNumberList(o.res, 2, "--res");
  spec.range_x = {rx[0], rx[1]};
  spec.range_y = {ry[0], ry[1]};
  for (double n : res) {
    if (n != std::floor(n) || n > 100000) throw UsageError("--res expects integer cell counts");
  }
  spec.res_x = static_cast<int>(res[0]);
  spec.res_y = static_cast<int>(res[1]);
  const fs::path image_name(o.image);
  if (image_name.has_parent_path()) throw UsageError("--image is a file name inside --out");

  const auto grid = RunSweep(spec, o.threads);
  const auto image = RenderForPath(grid, image_name);
  WriteOutputs(common, {{"grid.csv", GridCsv(grid)}, {image_name.string(), image}});

  std::array<int, 7> counts{};
  for (const auto& c : grid.cells()) ++counts[static_cast<std::size_t>(c.color)];
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] > 0) {
      out << fmt::format("{}: {} cells\n", ToString(static_cast<ColorCode>(k)), counts[k]);
    }
  }
  return 0;
}

struct ValidateOptions {
  std::string eps = "0.1,0.01,0.001";
  double horizon = 200.0;
};

int CmdValidate(const Common& common, const ValidateOptions& o, std::ostream& out) {
  const auto p = ReadParamsFile(common.params);
  const auto eps = ParseNumberList(o.eps, 0, "--eps");
  if (!(o.horizon > 0.0)) throw UsageError("--horizon must be positive");
  const auto report = ValidateAggregation(p, eps, o.horizon);
  const auto csv = AggregationCsv(report);
  WriteOutputs(common, {{"validation.csv", csv}});
  out << fmt::format("scenario {}; target S={} U={} V={}\n", ToString(report.label),
                     FormatNumber(report.target(idx::S)), FormatNumber(report.target(idx::U)),
                     FormatNumber(report.target(idx::V)));
  out << csv;
  out << "monotone_in_epsilon = " << (report.MonotoneInEpsilon() ? "true" : "false") << '\n';
  return 0;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-timescale coinfection model: aggregation, equilibria and outcome maps",
               "coinf"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&common](CLI::App* sub) {
    sub->add_option("--params", common.params, "Parameter file (key = value)")->required();
    sub->add_option("--out", common.out, "Output directory");
  };

  auto* reduce = app.add_subcommand("reduce", "Aggregated coefficients and thresholds");
  add_common(reduce);
  auto* classify = app.add_subcommand("classify", "Equilibria, stability and outcome label");
  add_common(classify);

  SimulateOptions sim;
  auto* simulate = app.add_subcommand("simulate", "Integrate the complete or reduced system");
  add_common(simulate);
  simulate->add_option("--system", sim.system, "complete | reduced");
  simulate->add_option("--init", sim.init, "S,U,V (complete) or S,I (reduced)")->required();
  simulate->add_option("--horizon", sim.horizon, "Final time (system's own time variable)");
  simulate->add_option("--tol", sim.tol, "Relative,absolute tolerance");
  simulate->add_option("--samples", sim.samples, "Evenly spaced output times (0: every step)");
  simulate->add_option("--max-steps", sim.max_steps, "Step budget (accepted + rejected)");

  SweepOptions sw;
  auto* sweep = app.add_subcommand("sweep", "Outcome map over two parameters");
  add_common(sweep);
  sweep->add_option("--axes", sw.axes, "x,y parameter names");
  sweep->add_option("--range-x", sw.range_x, "a,b");
  sweep->add_option("--range-y", sw.range_y, "a,b");
  sweep->add_option("--res", sw.res, "n,m cells");
  sweep->add_option("--image", sw.image, "Image file name (.ppm or .svg)");
  sweep->add_option("--threads", sw.threads, "Worker threads (0: all cores)");

  ValidateOptions val;
  auto* validate = app.add_subcommand("validate", "Complete vs aggregated equilibrium");
  add_common(validate);
  validate->add_option("--eps", val.eps, "Comma-separated epsilons");
  validate->add_option("--horizon", val.horizon, "Slow-time horizon");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*reduce) return CmdReduce(common, out);
    if (*classify) return CmdClassify(common, out);
    if (*simulate) return CmdSimulate(common, sim, out);
    if (*sweep) return CmdSweep(common, sw, out);
    if (*validate) return CmdValidate(common, val, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return 2;
  } catch (const ParameterError& e) {
    err << "parameter error: " << e.what() << '\n';
    return 2;
  } catch (const SpecError& e) {
    err << "sweep spec error: " << e.what() << '\n';
    return 2;
  } catch (const IntegrationError& e) {
    err << fmt::format("integration failed (time reached {}): {}\n",
                       FormatNumber(e.time_reached()), e.what());
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace coinf
